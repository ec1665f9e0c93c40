#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgpart {

/// Largest field order with precomputed tables.
inline constexpr int kMaxFieldOrder = 1 << 14;

/// Element of GF(p^h) in polynomial basis, packed as the base-p integer
/// code = c_0 + c_1 p + ... + c_{h-1} p^{h-1}. Zero is code 0, one is code 1,
/// and the prime subfield is exactly the codes below p.
struct FieldElement {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SquareSet;

/// GF(p^h) with log/antilog tables. Immutable after construction.
class Field {
 public:
  Field(int p, int h);

  int p() const { return p_; }
  int h() const { return h_; }
  int q() const { return q_; }

  /// Monic irreducible modulus, low degree first, length h+1.
  const std::vector<int>& modulus() const { return modulus_; }
  FieldElement generator() const { return generator_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement element(std::uint32_t code) const;
  FieldElement from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(FieldElement a) const;
  std::vector<FieldElement> elements() const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const { return {neg_[a.code]}; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.code == 0 || b.code == 0) return {0};
    return {exp_[log_[a.code] + log_[b.code]]};
  }
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  /// Discrete log to base generator(); a must be nonzero.
  std::uint32_t log(FieldElement a) const;

  /// True iff a = b^2 for some nonzero b (so zero is never a square here).
  bool is_square(FieldElement a) const;
  SquareSet square_set() const;

  /// Absolute trace onto GF(p), returned as an integer in [0, p).
  int trace(FieldElement a) const;

  std::string to_string(FieldElement a) const { return std::to_string(a.code); }

 private:
  int p_;
  int h_;
  int q_;
  std::vector<int> modulus_;
  FieldElement generator_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<std::uint32_t> neg_;
};

Field make_field(int p, int h);

/// Field of order q, for q a prime power in range.
Field make_field_of_order(int q);

class SquareSet {
 public:
  SquareSet(std::vector<FieldElement> members, std::vector<bool> mask)
      : members_(std::move(members)), mask_(std::move(mask)) {}

  bool contains(FieldElement a) const { return a.code < mask_.size() && mask_[a.code]; }
  const std::vector<FieldElement>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<FieldElement> members_;
  std::vector<bool> mask_;
};

// Integer helpers shared by the field and plane code.
bool is_prime(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n);

struct PrimePower {
  int p;
  int h;
};
/// Decomposes q = p^h, or returns nothing if q is not a prime power.
std::optional<PrimePower> as_prime_power(std::int64_t q);

/// Exact integer square root of q if q is a perfect square.
std::optional<int> exact_sqrt(std::int64_t q);

namespace poly {

/// Polynomials over GF(p), low degree first, no trailing zeros (zero is empty).
using Poly = std::vector<int>;

void trim(Poly& a);
Poly mod(Poly a, const Poly& m, int p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, int p);
/// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, int p);
/// Least monic irreducible of degree h, ordered by coefficients from x^{h-1} down.
Poly least_irreducible(int p, int h);

}  // namespace poly

}  // namespace pgpart
