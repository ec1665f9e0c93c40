#include "pgpart/partition.hpp"

#include <algorithm>

namespace pgpart {

Partition::Partition(std::vector<Side> sides) : sides_(std::move(sides)) {
  const auto a = std::count(sides_.begin(), sides_.end(), Side::A);
  if (a == 0 || a == static_cast<std::ptrdiff_t>(sides_.size()))
    throw PartitionError("partition classes must both be nonempty");
}

Partition Partition::from_class_a(int n, std::span<const int> a_vertices) {
  std::vector<Side> sides(n, Side::B);
  for (int v : a_vertices) {
    if (v < 0 || v >= n) throw PartitionError("vertex out of range");
    sides[v] = Side::A;
  }
  return Partition(std::move(sides));
}

int Partition::count(Side s) const { return static_cast<int>(std::count(sides_.begin(), sides_.end(), s)); }

std::vector<int> Partition::members(Side s) const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (sides_[v] == s) out.push_back(v);
  return out;
}

Partition Partition::swapped() const {
  auto s = sides_;
  for (auto& x : s) x = other(x);
  return Partition(std::move(s));
}

}  // namespace pgpart
