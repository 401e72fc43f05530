#include <doctest.h>

#include <random>

#include "diffops/errors.hpp"
#include "diffops/ore.hpp"
#include "test_util.hpp"

using namespace diffops;

namespace {

UniPoly R(std::vector<std::int64_t> roots) { return UniPoly::from_roots(roots); }
GradedOp W(std::int64_t i, const UniPoly& p) { return GradedOp::homogeneous(i, p); }
GradedOp X(std::int64_t i) { return GradedOp::x_power(i); }
const GradedOp H = GradedOp::h();

GradedOp ad_power(const GradedOp& r, GradedOp u, int times) {
  for (int k = 0; k < times; ++k) u = op_commutator(r, u);
  return u;
}

}  // namespace

TEST_CASE("UniPoly basics") {
  const UniPoly p = R({-2, 1});
  CHECK(p.to_string() == "h^2 + h - 2");
  CHECK(p.evaluate(1) == 0);
  CHECK(p.shifted(2) == R({0, 3}));
  CHECK(shift_poly(UniPoly::h(), 5) == R({5}));
  CHECK(shift_poly(p, 0) == p);
  CHECK(UniPoly().degree() == -1);
  CHECK((p * UniPoly::constant(3)).monic() == p);
  const auto qr = divmod(R({1, 2, 3}), R({2}));
  CHECK(qr.quotient == R({1, 3}));
  CHECK(qr.remainder.is_zero());
}

TEST_CASE("gcd_monic examples") {
  CHECK(gcd_monic(R({-2, 1}), R({0, 3})).is_one());
  CHECK(gcd_monic(R({1, -1}), R({1})) == R({1}));
  CHECK(gcd_monic(R({1, -1, -3}), R({4, 2, 0})).is_one());
  CHECK(gcd_monic(UniPoly(), R({2}) * UniPoly::constant(5)) == R({2}));
}

TEST_CASE("random shifts invert and gcd divides both") {
  std::mt19937 rng(8);
  for (int k = 0; k < 50; ++k) {
    const UniPoly p = testutil::random_uni(rng, 5);
    const UniPoly q = testutil::random_uni(rng, 5);
    const std::int64_t a = static_cast<std::int64_t>(rng() % 13) - 6;
    CHECK(shift_poly(shift_poly(p, a), -a) == p);
    if (q.is_zero()) continue;
    const UniPoly g = gcd_monic(p * q, q);
    CHECK(divmod(q, g).remainder.is_zero());
    if (!q.is_zero()) CHECK(g == q.monic());
  }
}

TEST_CASE("op_mul examples") {
  CHECK(op_commutator(H, X(1)) == X(1));
  const GradedOp w2 = W(-2, R({-2, 1}));
  CHECK(op_mul(X(2), w2) == W(0, R({0, 3})));
  CHECK(op_mul(w2, w2) == W(-4, R({-2, 1, -4, -1})));
  CHECK(op_mul(GradedOp::scalar(1), w2) == w2);
}

TEST_CASE("op_apply examples") {
  const GradedOp w2 = W(-2, R({-2, 1}));
  CHECK(op_apply(w2, LaurentPoly::monomial(2)) == LaurentPoly::monomial(0, -2));
  CHECK(op_apply(H, LaurentPoly::monomial(5)) == LaurentPoly::monomial(5, 5));
  // (h+1)x^-1 is d/dx
  const GradedOp d = W(-1, R({-1}));
  for (std::int64_t n = 0; n <= 4; ++n) {
    const LaurentPoly expect = n == 0 ? LaurentPoly() : LaurentPoly::monomial(n - 1, n);
    CHECK(op_apply(d, LaurentPoly::monomial(n)) == expect);
  }
}

TEST_CASE("op_commutator examples") {
  for (std::int64_t n = -3; n <= 3; ++n) CHECK(op_commutator(H, X(n)) == W(n, UniPoly::constant(n)));
  CHECK(op_commutator(X(1), X(2)).is_zero());
  const GradedOp w2 = W(-2, R({-2, 1}));
  CHECK(op_commutator(X(2), w2) == W(0, UniPoly({2, -4})));
}

TEST_CASE("op_order examples and ad-nesting") {
  CHECK(op_order(X(3)) == 0);
  CHECK(op_order(H) == 1);
  const GradedOp w3 = W(-3, R({1, -1, -3}));
  CHECK(op_order(w3) == 3);
  CHECK_FALSE(ad_power(X(2), w3, 3).is_zero());
  CHECK(ad_power(X(2), w3, 4).is_zero());
  CHECK_THROWS_AS(op_order(GradedOp()), InputError);
}

TEST_CASE("ring axioms on random operators") {
  std::mt19937 rng(17);
  for (int k = 0; k < 60; ++k) {
    const auto a = testutil::random_op(rng, 4, 3, 2);
    const auto b = testutil::random_op(rng, 4, 3, 2);
    const auto c = testutil::random_op(rng, 4, 3, 2);
    CHECK(op_mul(op_mul(a, b), c) == op_mul(a, op_mul(b, c)));
    CHECK(op_mul(a, b + c) == op_mul(a, b) + op_mul(a, c));
    CHECK(op_mul(a + b, c) == op_mul(a, c) + op_mul(b, c));
    CHECK(op_mul(a, GradedOp::scalar(1)) == a);
    CHECK(op_mul(GradedOp::scalar(1), a) == a);
    CHECK(op_commutator(a, b) == -op_commutator(b, a));
    const auto jacobi = op_commutator(a, op_commutator(b, c)) + op_commutator(b, op_commutator(c, a)) +
                        op_commutator(c, op_commutator(a, b));
    CHECK(jacobi.is_zero());
    const GradedOp ab = op_mul(a, b);
    for (const auto& [d, p] : ab.components()) {
      bool ok = false;
      for (const auto& [i, pi] : a.components()) ok = ok || b.components().count(d - i);
      CHECK(ok);
    }
  }
}

TEST_CASE("module axiom and order additivity") {
  std::mt19937 rng(23);
  for (int k = 0; k < 40; ++k) {
    const auto u = testutil::random_op(rng, 3, 3, 2);
    const auto v = testutil::random_op(rng, 3, 3, 2);
    LaurentPoly f;
    for (int n = -2; n <= 3; ++n) f.add_term(n, static_cast<long>(rng() % 7) - 3);
    CHECK(op_apply(op_mul(u, v), f) == op_apply(u, op_apply(v, f)));

    const std::int64_t i = static_cast<std::int64_t>(rng() % 9) - 4;
    const std::int64_t j = static_cast<std::int64_t>(rng() % 9) - 4;
    UniPoly p = testutil::random_uni(rng, 3), q = testutil::random_uni(rng, 3);
    if (p.is_zero() || q.is_zero()) continue;
    CHECK(op_order(op_mul(W(i, p), W(j, q))) == op_order(W(i, p)) + op_order(W(j, q)));
  }
}

TEST_CASE("ad-nesting characterizes the order") {
  std::mt19937 rng(31);
  for (int k = 0; k < 40; ++k) {
    const auto u = testutil::random_op(rng, 4, 3, 2);
    if (u.is_zero()) continue;
    const int ord = op_order(u);
    for (std::int64_t m : {1, 2, 3}) {
      CHECK_FALSE(ad_power(X(m), u, ord).is_zero());
      CHECK(ad_power(X(m), u, ord + 1).is_zero());
    }
  }
}

TEST_CASE("the action is faithful on enough sample points") {
  std::mt19937 rng(41);
  for (int k = 0; k < 40; ++k) {
    const auto u = testutil::random_op(rng, 3, 3, 3);
    if (u.is_zero()) continue;
    const std::int64_t reach = op_order(u) + std::max(std::abs(u.min_degree()), std::abs(u.max_degree())) + 1;
    bool seen_nonzero = false;
    for (std::int64_t n = -reach; n <= reach; ++n) {
      seen_nonzero = seen_nonzero || !op_apply(u, LaurentPoly::monomial(n)).is_zero();
    }
    CHECK(seen_nonzero);
  }
}

TEST_CASE("printing") {
  CHECK(W(-2, R({-2, 1})).to_string() == "(h^2 + h - 2)*x^-2");
  CHECK(H.to_string() == "h");
  CHECK(W(1, R({1})).to_string() == "(h - 1)*x");
  CHECK(X(3).to_string() == "x^3");
  CHECK((W(-1, R({1})) + H).to_string() == "(h - 1)*x^-1 + h");
  CHECK(GradedOp().to_string() == "0");
  CHECK(LaurentPoly::monomial(-1, -2).to_string() == "-2*x^-1");
}

TEST_CASE("operator literals round-trip") {
  std::mt19937 rng(51);
  for (int k = 0; k < 50; ++k) {
    const auto u = testutil::random_op(rng, 4, 3, 3);
    CHECK(parse_op(u.to_string()) == u);
  }
  CHECK(parse_op("(h^2+h-2)*x^-2") == W(-2, R({-2, 1})));
  CHECK(parse_op("x*h") == W(1, R({1})));
  CHECK_THROWS_AS(parse_op("y"), ParseError);
  CHECK_THROWS_AS(parse_op("h x"), ParseError);
}
