#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace pgpart {

enum class Side : std::uint8_t { A, B };

constexpr Side other(Side s) { return s == Side::A ? Side::B : Side::A; }
constexpr char side_char(Side s) { return s == Side::A ? 'A' : 'B'; }

class PartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two-coloring of a vertex set with both classes nonempty.
class Partition {
 public:
  explicit Partition(std::vector<Side> sides);

  /// Class A is exactly the given vertices; everything else is B.
  static Partition from_class_a(int n, std::span<const int> a_vertices);

  int size() const { return static_cast<int>(sides_.size()); }
  Side side(int v) const { return sides_[v]; }
  const std::vector<Side>& sides() const { return sides_; }
  int count(Side s) const;
  std::vector<int> members(Side s) const;
  Partition swapped() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Side> sides_;
};

}  // namespace pgpart
