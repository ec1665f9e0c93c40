#include <doctest.h>

#include <random>

#include "pgpart/field.hpp"

using namespace pgpart;

namespace {

FieldElement el(const Field& f, std::uint32_t code) { return f.element(code); }

// Schoolbook product of two codes, reduced by the modulus; independent of the log tables.
std::uint32_t slow_mul(const Field& f, FieldElement a, FieldElement b) {
  const auto pa = f.coeffs(a), pb = f.coeffs(b);
  poly::Poly x(pa.begin(), pa.end()), y(pb.begin(), pb.end());
  poly::trim(x);
  poly::trim(y);
  const auto r = poly::mulmod(x, y, f.modulus(), f.p());
  return f.from_coeffs(r).code;
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("prime field GF(3)") {
  const Field f = make_field(3, 1);
  CHECK(f.q() == 3);
  CHECK(f.modulus() == std::vector<int>{0, 1});
  CHECK(f.add(el(f, 2), el(f, 2)).code == 1);
  CHECK(f.mul(el(f, 2), el(f, 2)).code == 1);
  CHECK(f.neg(el(f, 1)).code == 2);
}

TEST_CASE("least irreducible moduli") {
  CHECK(make_field(2, 2).modulus() == std::vector<int>{1, 1, 1});  // x^2+x+1
  CHECK(make_field(3, 2).modulus() == std::vector<int>{1, 0, 1});  // x^2+1
  CHECK(make_field(2, 3).modulus() == std::vector<int>{1, 1, 0, 1});  // x^3+x+1
  // Over GF(5) every monic quadratic below the chosen one has a root.
  const auto m = make_field(5, 2).modulus();
  for (int a = 0; a < 5; ++a) CHECK((a * a + m[1] * a + m[0]) % 5 != 0);
  for (int c = 0; c < m[0] + 5 * m[1]; ++c) {
    bool has_root = false;
    for (int a = 0; a < 5; ++a) has_root |= (a * a + (c / 5) * a + c % 5) % 5 == 0;
    CHECK(has_root);
  }
}

TEST_CASE("arithmetic examples") {
  const Field f5 = make_field(5, 1);
  CHECK(f5.mul(el(f5, 2), el(f5, 3)).code == 1);
  const Field f4 = make_field(2, 2);
  const FieldElement x = el(f4, 2);
  CHECK(f4.mul(x, x).code == 3);  // x+1
  const Field f7 = make_field(7, 1);
  CHECK(f7.inv(el(f7, 3)).code == 5);
  CHECK(f7.div(el(f7, 1), el(f7, 3)).code == 5);
  CHECK(f7.sub(el(f7, 2), el(f7, 5)).code == 4);
}

TEST_CASE("division by zero throws") {
  const Field f = make_field(7, 1);
  CHECK_THROWS_AS(f.inv(f.zero()), FieldError);
  CHECK_THROWS_AS(f.div(f.one(), f.zero()), FieldError);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(make_field(4, 1), FieldError);
  CHECK_THROWS_AS(make_field(3, 0), FieldError);
  CHECK_THROWS_AS(make_field(2, 15), FieldError);
  CHECK_THROWS_AS(make_field_of_order(6), FieldError);
  CHECK_THROWS_AS(make_field_of_order(1), FieldError);
  CHECK_NOTHROW(make_field(2, 14));
}

TEST_CASE("tables agree with schoolbook multiplication") {
  for (auto [p, h] : {std::pair{2, 4}, std::pair{3, 3}, std::pair{5, 2}, std::pair{7, 2}, std::pair{2, 6}}) {
    const Field f = make_field(p, h);
    for (auto a : f.elements())
      for (auto b : f.elements()) REQUIRE(f.mul(a, b).code == slow_mul(f, a, b));
  }
}

TEST_CASE("multiplicative group order and generator") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81, 121, 128, 243, 256, 343, 512, 625, 1024, 2187, 16384}) {
    const Field f = make_field_of_order(q);
    CHECK(f.q() == q);
    std::mt19937 rng(q);
    const bool all = q <= 512;
    const int samples = all ? q - 1 : 1000;
    for (int k = 0; k < samples; ++k) {
      const auto a = all ? f.element(k + 1) : f.element(1 + rng() % (q - 1));
      REQUIRE(f.pow(a, q - 1) == f.one());
    }
    // The generator has order exactly q-1.
    for (auto r : prime_factors(q - 1)) CHECK(f.pow(f.generator(), (q - 1) / r) != f.one());
  }
}

TEST_CASE("square sets") {
  auto codes = [](const SquareSet& s) {
    std::vector<std::uint32_t> out;
    for (auto e : s.members()) out.push_back(e.code);
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(codes(make_field(5, 1).square_set()) == std::vector<std::uint32_t>{1, 4});
  CHECK(codes(make_field(7, 1).square_set()) == std::vector<std::uint32_t>{1, 2, 4});
  CHECK(codes(make_field(2, 2).square_set()) == std::vector<std::uint32_t>{1, 2, 3});
  CHECK_FALSE(make_field(5, 1).square_set().contains({0}));
}

TEST_CASE("Euler criterion for odd q") {
  for (int q : {3, 5, 7, 9, 11, 13, 25, 27, 49, 81, 125}) {
    const Field f = make_field_of_order(q);
    const auto s = f.square_set();
    CHECK(static_cast<int>(s.size()) == (q - 1) / 2);
    for (std::uint32_t c = 1; c < static_cast<std::uint32_t>(q); ++c) {
      const auto x = f.element(c);
      REQUIRE(s.contains(x) == (f.pow(x, (q - 1) / 2) == f.one()));
      REQUIRE(f.is_square(x) == s.contains(x));
    }
  }
}

TEST_CASE("trace") {
  const Field f4 = make_field(2, 2);
  CHECK(f4.trace(f4.zero()) == 0);
  CHECK(f4.trace(f4.element(2)) == 1);
  const Field f8 = make_field(2, 3);
  int ones = 0;
  for (auto a : f8.elements()) ones += f8.trace(a);
  CHECK(ones == 4);
  for (int q : {4, 8, 9, 16, 25, 27, 32, 49, 64}) {
    const Field f = make_field_of_order(q);
    for (auto a : f.elements())
      for (auto b : f.elements()) REQUIRE(f.trace(f.add(a, b)) == (f.trace(a) + f.trace(b)) % f.p());
  }
  const Field big = make_field(3, 7);
  std::mt19937 rng(5);
  for (int k = 0; k < 2000; ++k) {
    const auto a = big.element(rng() % big.q()), b = big.element(rng() % big.q());
    REQUIRE(big.trace(big.add(a, b)) == (big.trace(a) + big.trace(b)) % 3);
    REQUIRE(big.trace(a) < 3);
  }
}

TEST_CASE("log inverts pow") {
  const Field f = make_field(3, 4);
  for (auto a : f.elements()) {
    if (a.code == 0) continue;
    CHECK(f.pow(f.generator(), f.log(a)) == a);
  }
}

TEST_CASE("integer helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(16381));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_factors(360) == std::vector<std::int64_t>{2, 3, 5});
  CHECK(as_prime_power(27)->p == 3);
  CHECK(as_prime_power(27)->h == 3);
  CHECK_FALSE(as_prime_power(12));
  CHECK(exact_sqrt(49) == 7);
  CHECK_FALSE(exact_sqrt(50));
}

TEST_CASE("irreducibility by exhaustion") {
  CHECK(poly::is_irreducible({1, 1, 1}, 2));
  CHECK_FALSE(poly::is_irreducible({1, 0, 1}, 2));  // (x+1)^2
  CHECK(poly::is_irreducible({2, 0, 1}, 5));
  CHECK(poly::least_irreducible(3, 2) == poly::Poly{1, 0, 1});
}

}
