#include "pgpart/field.hpp"

#include <cmath>
#include <string>

namespace pgpart {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<PrimePower> as_prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  int h = 0;
  for (std::int64_t r = q; r > 1; r /= factors[0]) ++h;
  return PrimePower{static_cast<int>(factors[0]), h};
}

std::optional<int> exact_sqrt(std::int64_t q) {
  if (q < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(q))));
  while (r * r > q) --r;
  while ((r + 1) * (r + 1) <= q) ++r;
  if (r * r != q) return std::nullopt;
  return static_cast<int>(r);
}

namespace poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

static int inv_mod_p(int a, int p) {
  // p is prime, so a^(p-2) is the inverse.
  long long r = 1, b = a % p;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<int>(r);
}

Poly mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  const int lead_inv = inv_mod_p(m.back(), p);
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int c = static_cast<int>(1LL * a.back() * lead_inv % p);
    for (int i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<int>((a[shift + i] - 1LL * c * m[i] % p + p) % p);
    }
    trim(a);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<int>((r[i + j] + 1LL * a[i] * b[j]) % p);
  return mod(std::move(r), m, p);
}

// Monic polynomial of degree deg whose lower coefficients are the base-p
// digits of index, so index order is the high-degree-first lexicographic order.
static Poly monic_from_index(std::int64_t index, int deg, int p) {
  Poly f(deg + 1, 0);
  f[deg] = 1;
  for (int i = 0; i < deg; ++i) {
    f[i] = static_cast<int>(index % p);
    index /= p;
  }
  return f;
}

bool is_irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  for (int k = 1; 2 * k <= deg; ++k) {
    std::int64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      if (mod(f, monic_from_index(idx, k, p), p).empty()) return false;
    }
  }
  return true;
}

Poly least_irreducible(int p, int h) {
  std::int64_t count = 1;
  for (int i = 0; i < h; ++i) count *= p;
  for (std::int64_t idx = 0; idx < count; ++idx) {
    Poly f = monic_from_index(idx, h, p);
    if (is_irreducible(f, p)) return f;
  }
  throw FieldError("no irreducible polynomial found");
}

}  // namespace poly

namespace {

poly::Poly to_poly(std::uint32_t code, int p, int h) {
  poly::Poly a(h, 0);
  for (int i = 0; i < h; ++i) {
    a[i] = static_cast<int>(code % p);
    code /= p;
  }
  poly::trim(a);
  return a;
}

std::uint32_t to_code(const poly::Poly& a, int p) {
  std::uint32_t code = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) code = code * p + static_cast<std::uint32_t>(*it);
  return code;
}

}  // namespace

Field::Field(int p, int h) : p_(p), h_(h) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (h < 1) throw FieldError("extension degree must be at least 1");
  std::int64_t order = 1;
  for (int i = 0; i < h; ++i) {
    order *= p;
    if (order > kMaxFieldOrder)
      throw FieldError("field order exceeds supported maximum " + std::to_string(kMaxFieldOrder));
  }
  q_ = static_cast<int>(order);
  modulus_ = poly::least_irreducible(p, h);

  // Smallest element of multiplicative order q-1, found with slow polynomial arithmetic.
  const auto slow_pow = [&](std::uint32_t code, std::int64_t e) {
    poly::Poly r{1}, b = to_poly(code, p_, h_);
    for (; e > 0; e >>= 1) {
      if (e & 1) r = poly::mulmod(r, b, modulus_, p_);
      b = poly::mulmod(b, b, modulus_, p_);
    }
    return to_code(r, p_);
  };
  const std::int64_t group = q_ - 1;
  const auto divisors = prime_factors(group);
  std::uint32_t gen = 0;
  for (std::uint32_t c = 1; c < static_cast<std::uint32_t>(q_); ++c) {
    bool primitive = true;
    for (auto r : divisors) {
      if (slow_pow(c, group / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = c;
      break;
    }
  }
  if (gen == 0) throw FieldError("no primitive element found");
  generator_ = {gen};

  exp_.assign(2 * static_cast<std::size_t>(group), 0);
  log_.assign(q_, 0);
  const auto g = to_poly(gen, p_, h_);
  poly::Poly cur{1};
  for (std::int64_t i = 0; i < group; ++i) {
    const auto code = to_code(cur, p_);
    exp_[i] = code;
    exp_[i + group] = code;
    log_[code] = static_cast<std::uint32_t>(i);
    cur = poly::mulmod(cur, g, modulus_, p_);
  }

  neg_.assign(q_, 0);
  for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(q_); ++c) {
    std::uint32_t r = 0, place = 1, x = c;
    for (int i = 0; i < h_; ++i) {
      const std::uint32_t d = x % p_;
      x /= p_;
      r += ((p_ - d) % p_) * place;
      place *= p_;
    }
    neg_[c] = r;
  }
}

FieldElement Field::element(std::uint32_t code) const {
  if (code >= static_cast<std::uint32_t>(q_))
    throw FieldError("element code " + std::to_string(code) + " out of range for GF(" + std::to_string(q_) + ")");
  return {code};
}

FieldElement Field::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > h_) throw FieldError("too many coefficients");
  std::uint32_t code = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (*it < 0 || *it >= p_) throw FieldError("coefficient out of range");
    code = code * p_ + static_cast<std::uint32_t>(*it);
  }
  return {code};
}

std::vector<int> Field::coeffs(FieldElement a) const {
  std::vector<int> out(h_, 0);
  for (int i = 0; i < h_; ++i) {
    out[i] = static_cast<int>(a.code % p_);
    a.code /= p_;
  }
  return out;
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out(q_);
  for (int i = 0; i < q_; ++i) out[i] = {static_cast<std::uint32_t>(i)};
  return out;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (p_ == 2) return {a.code ^ b.code};
  if (h_ == 1) return {(a.code + b.code) % p_};
  std::uint32_t r = 0, place = 1;
  for (int i = 0; i < h_; ++i) {
    r += ((a.code % p_ + b.code % p_) % p_) * place;
    a.code /= p_;
    b.code /= p_;
    place *= p_;
  }
  return {r};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::inv(FieldElement a) const {
  if (a.code == 0) throw FieldError("inverse of zero");
  const std::uint32_t group = q_ - 1;
  return {exp_[(group - log_[a.code]) % group]};
}

FieldElement Field::div(FieldElement a, FieldElement b) const {
  if (b.code == 0) throw FieldError("division by zero");
  return mul(a, inv(b));
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  const std::uint64_t group = q_ - 1;
  return {exp_[(static_cast<std::uint64_t>(log_[a.code]) * (e % group)) % group]};
}

std::uint32_t Field::log(FieldElement a) const {
  if (a.code == 0) throw FieldError("log of zero");
  return log_[a.code];
}

bool Field::is_square(FieldElement a) const {
  if (a.code == 0) return false;
  if (p_ == 2) return true;
  return log_[a.code] % 2 == 0;
}

SquareSet Field::square_set() const {
  std::vector<bool> mask(q_, false);
  for (std::uint32_t c = 1; c < static_cast<std::uint32_t>(q_); ++c) {
    const auto s = mul({c}, {c});
    mask[s.code] = true;
  }
  std::vector<FieldElement> members;
  for (std::uint32_t c = 1; c < static_cast<std::uint32_t>(q_); ++c)
    if (mask[c]) members.push_back({c});
  return SquareSet(std::move(members), std::move(mask));
}

int Field::trace(FieldElement a) const {
  FieldElement sum = zero(), frob = a;
  for (int i = 0; i < h_; ++i) {
    sum = add(sum, frob);
    frob = pow(frob, static_cast<std::uint64_t>(p_));
  }
  if (sum.code >= static_cast<std::uint32_t>(p_)) throw FieldError("trace left the prime subfield");
  return static_cast<int>(sum.code);
}

Field make_field(int p, int h) { return Field(p, h); }

Field make_field_of_order(int q) {
  auto pp = as_prime_power(q);
  if (!pp) throw FieldError(std::to_string(q) + " is not a prime power");
  return Field(pp->p, pp->h);
}

}  // namespace pgpart
