// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic throughout.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "diffops/cli.hpp"
#include "diffops/jacobian.hpp"
#include "diffops/parse.hpp"
#include "diffops/semigroup.hpp"

using namespace diffops;

namespace {

struct Check {
  bool ok = true;
  std::string first_failure;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

UniPoly R(std::vector<std::int64_t> roots) { return UniPoly::from_roots(roots); }
GradedOp W(std::int64_t i, const UniPoly& p) { return GradedOp::homogeneous(i, p); }

const NumericalSemigroup& cusp() {
  static const NumericalSemigroup s({2, 3});
  return s;
}

// w_{-i} = (h - 1)(h + 1)...(h + i - 2)(h + i) x^{-i} for i >= 3
UniPoly stated_negative(std::int64_t i) {
  std::vector<std::int64_t> roots{1};
  for (std::int64_t r = -1; r >= -(i - 2); --r) roots.push_back(r);
  roots.push_back(-i);
  return R(roots);
}

// x^i w_{-i} = (h - i - 1)(h - i + 1)...(h - 2)h
UniPoly stated_right(std::int64_t i) {
  std::vector<std::int64_t> roots{i + 1, 0};
  for (std::int64_t r = i - 1; r >= 2; --r) roots.push_back(r);
  return R(roots);
}

nlohmann::json cli_json(const std::vector<std::string>& args, int* code) {
  std::ostringstream out, err;
  *code = run_cli(args, out, err);
  if (*code != 0) return {};
  return nlohmann::json::parse(out.str());
}

Check criterion1() {
  Check c;
  int code = 0;
  const auto j = cli_json({"semigroup", "--gens", "2,3", "pieces", "--degrees", "-6..6"}, &code);
  c.expect(code == 0, "cli exit code");
  if (code != 0) return c;
  std::map<std::int64_t, std::string> ops;
  for (const auto& p : j["result"]["pieces"]) ops[p["degree"].get<std::int64_t>()] = p["operator"];
  c.expect(ops.size() == 13, "13 pieces");
  c.expect(ops[0] == "1", "w_0 = 1");
  c.expect(ops[1] == W(1, R({1})).to_string(), "w_1 = (h-1)x");
  for (std::int64_t i = 2; i <= 6; ++i) c.expect(ops[i] == "x^" + std::to_string(i), "w_i = x^i");
  c.expect(ops[-1] == W(-1, R({-1, 1})).to_string(), "w_-1");
  c.expect(ops[-2] == W(-2, R({-2, 1})).to_string(), "w_-2");
  for (std::int64_t i = 3; i <= 6; ++i) {
    c.expect(ops[-i] == W(-i, stated_negative(i)).to_string(), "w_-" + std::to_string(i));
    c.expect(parse_op(ops[-i]) == dop_generator(cusp(), -i), "operator literal round-trip");
  }
  return c;
}

Check criterion2() {
  Check c;
  const GradedOp w2 = W(-2, R({-2, 1}));
  c.expect(op_mul(w2, GradedOp::x_power(2)) == W(0, R({-2, 1})), "w_-2 x^2");
  c.expect(op_mul(GradedOp::x_power(2), w2) == W(0, R({0, 3})), "x^2 w_-2");
  for (std::int64_t i = 3; i <= 6; ++i) {
    const GradedOp w = dop_generator(cusp(), -i);
    c.expect(op_mul(w, GradedOp::x_power(i)) == W(0, stated_negative(i)), "w_-i x^i");
    c.expect(op_mul(GradedOp::x_power(i), w) == W(0, stated_right(i)), "x^i w_-i");
  }
  return c;
}

Check criterion3() {
  Check c;
  c.expect(gcd_monic(R({-2, 1}), R({0, 3})).is_one(), "gcd at i = 2");
  for (std::int64_t i = 3; i <= 6; ++i) {
    c.expect(gcd_monic(stated_negative(i), stated_right(i)).is_one(), "gcd at i = " + std::to_string(i));
  }
  const auto v = simplicity_verdict(cusp(), 5, 8);
  c.expect(v.outcome == SimplicityOutcome::SimpleProven, "simplicity_verdict SimpleProven");
  c.expect(v.certificates.size() == 5, "five certificates");
  for (const auto& cert : v.certificates) {
    c.expect(gcd_monic(cert.left, cert.right).is_one(), "certificate gcd recomputes to 1");
  }
  return c;
}

Check criterion4() {
  Check c;
  const GradedOp w2 = dop_generator(cusp(), -2), w3 = dop_generator(cusp(), -3);
  GradedOp p = w2;
  for (std::int64_t i = 1; i <= 3; ++i) {
    c.expect(p == dop_generator(cusp(), -2 * i), "w_-2i = w_-2^i");
    c.expect(op_mul(w3, p) == dop_generator(cusp(), -3 - 2 * i), "w_-3-2i = w_-3 w_-2^i");
    p = op_mul(p, w2);
  }
  c.expect(op_mul(w3, dop_generator(cusp(), 3)) == W(0, R({-3, -1, 1})), "w_-3 w_3");
  return c;
}

Check criterion5() {
  Check c;
  std::vector<std::int64_t> degs;
  bool basis_ok = true;
  for (const auto& p : der_pieces(cusp(), -10, 10)) {
    degs.push_back(p.degree);
    basis_ok = basis_ok && p.basis == op_mul(GradedOp::x_power(p.degree), GradedOp::h());
  }
  std::vector<std::int64_t> expect;
  for (std::int64_t i = 0; i <= 10; ++i) expect.push_back(i);
  c.expect(degs == expect, "Der nonzero exactly in degrees >= 0");
  c.expect(basis_ok, "basis x^i h");
  const auto w = delta_vs_dop(cusp());
  c.expect(w.has_value() && *w == W(-1, R({-1, 1})), "delta_vs_dop(<2,3>) = w_-1");
  c.expect(!delta_vs_dop(NumericalSemigroup({1})).has_value(), "delta_vs_dop(<1>) = none");
  return c;
}

Check criterion6() {
  Check c;
  const SIdeal maximal(cusp(), {2, 3});
  c.expect(is_der_stable(cusp(), maximal).stable, "S\\{0} der-stable");
  auto v = is_dop_stable(cusp(), maximal);
  c.expect(!v.stable && v.witness && v.witness->exponent == 2 && v.witness->value == -2,
           "S\\{0} dop witness -2 at x^2");
  const SIdeal a1 = jacobian_ideal_monomial(cusp());
  c.expect(a1.generators() == std::vector<std::int64_t>{3, 4}, "computed Jacobian ideal {3,4}+S");
  c.expect(is_der_stable(cusp(), a1).stable, "{3,4}+S der-stable");
  v = is_dop_stable(cusp(), a1);
  c.expect(!v.stable && v.witness && v.witness->exponent == 3 && v.witness->value == -3,
           "{3,4}+S dop witness -3 at x^3");
  int code = 0;
  const auto j = cli_json({"semigroup", "--gens", "2,3", "stable", "--gens", "3,4", "--kind", "dop"}, &code);
  bool warned = false;
  if (code == 0) {
    for (const auto& w : j["warnings"]) warned = warned || w.get<std::string>().find("{2}+S") != std::string::npos;
  }
  c.expect(warned, "report carries the Jacobian-ideal discrepancy warning");
  return c;
}

Check criterion7() {
  Check c;
  auto pres = [](const std::string& ideal, std::uint32_t p) {
    const auto r = make_ring({"x", "y"}, p);
    return AffinePresentation(r, parse_poly_list(ideal, r));
  };
  const auto cusp_pres = pres("y^2 - x^3", 0);
  const auto d = rank_and_minors(cusp_pres);
  c.expect(d.rank == 1, "cusp rank 1");
  c.expect(check_minor_support(d), "minor support check");
  c.expect(!is_regular(cusp_pres), "cusp not regular");
  c.expect(is_regular(pres("x^2 + y^2 - 1", 0)), "circle over Q regular");
  c.expect(is_regular(pres("x*y - 1", 0)), "hyperbola regular");
  c.expect(!is_regular(pres("x^2 + y^2 - 1", 2)), "circle over F_2 not regular");
  const auto sp = present_algebra(cusp());
  const auto& ring = sp.presentation.ring();
  c.expect(sp.presentation.gb().basis() == parse_poly_list("u^3 - v^2", ring), "relation u^3 - v^2");
  c.expect(jacobian_ideal_monomial(cusp()).generators() == std::vector<std::int64_t>{3, 4},
           "jacobian_ideal_monomial = {3,4}+S");
  return c;
}

Check criterion8() {
  Check c;
  std::mt19937 rng(20241016);
  std::uniform_int_distribution<int> deg(-4, 4), hdeg(0, 3), coef(-5, 5);
  for (int k = 0; k < 20; ++k) {
    const std::int64_t d = deg(rng);
    std::vector<mpq_class> q(hdeg(rng) + 1);
    for (auto& x : q) x = coef(rng);
    q.back() = q.back() == 0 ? 1 : q.back();
    const GradedOp u = W(d, dop_piece(cusp(), d) * UniPoly(q));
    const auto w = meets_A(cusp(), u, 0, 12, 12);
    c.expect(w.has_value(), "meets_A witness for " + u.to_string());
  }
  // every proper nonzero monomial ideal with generators <= 8
  std::set<std::vector<std::int64_t>> ideals;
  const std::vector<std::int64_t> candidates{2, 3, 4, 5, 6, 7, 8};
  for (unsigned mask = 1; mask < (1u << candidates.size()); ++mask) {
    std::vector<std::int64_t> g;
    for (std::size_t b = 0; b < candidates.size(); ++b) {
      if (mask & (1u << b)) g.push_back(candidates[b]);
    }
    ideals.insert(SIdeal(cusp(), g).generators());
  }
  for (const auto& g : ideals) {
    const auto r = closure_in_A(cusp(), SIdeal(cusp(), g), 12, 12);
    c.expect(r.outcome == ClosureOutcome::StrictlyLarger, "closure strictly larger");
  }
  return c;
}

Check criterion9() {
  Check c;
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> e(0, 2), co(-3, 3);
  const auto ring = make_ring({"x", "y", "z"}, 0);
  auto rand_poly = [&] {
    MultiPoly f(ring);
    for (int t = 0; t < 3; ++t) {
      f.add_term(Monomial({static_cast<std::uint32_t>(e(rng)), static_cast<std::uint32_t>(e(rng)),
                           static_cast<std::uint32_t>(e(rng))}),
                 Scalar::from_int(co(rng), 0));
    }
    return f;
  };
  for (int round = 0; round < 8; ++round) {
    std::vector<MultiPoly> gens{rand_poly(), rand_poly(), rand_poly()};
    const auto gb = groebner_basis(ring, gens);
    std::vector<std::size_t> perm{0, 1, 2};
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::vector<MultiPoly> g2;
      for (auto i : perm) g2.push_back(gens[i]);
      c.expect(groebner_basis(ring, g2).basis() == gb.basis(), "GB permutation uniqueness");
    }
    const auto& b = gb.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        c.expect(normal_form(s_polynomial(b[i], b[j], gb.order()), gb).is_zero(), "S-polynomial self-check");
      }
    }
    const auto f = rand_poly() * rand_poly();
    c.expect(normal_form(normal_form(f, gb), gb) == normal_form(f, gb), "NF idempotence");
  }

  std::uniform_int_distribution<int> d(-4, 4), hd(0, 3), cc(-4, 4);
  auto rand_op = [&] {
    GradedOp u;
    for (int t = 0; t < 2; ++t) {
      std::vector<mpq_class> q(hd(rng) + 1);
      for (auto& x : q) x = cc(rng);
      u += W(d(rng), UniPoly(q));
    }
    return u;
  };
  for (int round = 0; round < 30; ++round) {
    const auto a = rand_op(), b = rand_op(), g = rand_op();
    c.expect(op_mul(op_mul(a, b), g) == op_mul(a, op_mul(b, g)), "associativity");
    c.expect(op_mul(a, b + g) == op_mul(a, b) + op_mul(a, g), "distributivity");
    c.expect(op_mul(a, GradedOp::scalar(1)) == a, "identity");
    if (a.is_zero()) continue;
    const int ord = op_order(a);
    GradedOp nested = a;
    for (int k = 0; k < ord; ++k) nested = op_commutator(GradedOp::x_power(2), nested);
    c.expect(!nested.is_zero(), "ad^order nonzero");
    c.expect(op_commutator(GradedOp::x_power(2), nested).is_zero(), "ad^(order+1) zero");
  }

  for (const auto& g : std::vector<std::vector<std::int64_t>>{{2, 3}, {2, 5}, {3, 4, 5}, {3, 5}}) {
    const NumericalSemigroup s(g);
    for (std::int64_t i = 1; i <= 8; ++i) {
      const auto roots = dop_piece_roots(s, -i);
      bool disjoint = true;
      for (auto r : roots) disjoint = disjoint && std::find(roots.begin(), roots.end(), r - i) == roots.end();
      c.expect(disjoint, "root multisets disjoint");
      c.expect(gcd_monic(dop_piece(s, -i), shift_poly(dop_piece(s, -i), i)).is_one(), "gcd 1");
    }
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "cusp w-table from the CLI", 1, criterion1},
      {2, "product identities w_-i x^i and x^i w_-i", 1, criterion2},
      {3, "coprimality certificates and SimpleProven for <2,3>", 2, criterion3},
      {4, "power relations and the generalized Weyl relation", 1, criterion4},
      {5, "derivations and the derivation ring", 1, criterion5},
      {6, "stability witnesses and discrepancy warning", 1, criterion6},
      {7, "Jacobian pipeline", 5, criterion7},
      {8, "ideal meets A; closures strictly larger", 20, criterion8},
      {9, "infrastructure properties", 30, criterion9},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.limit_s) c.expect(false, "time limit exceeded");
    std::printf("criterion %d: %s  %s  (%.3f s, limit %.0f s)%s%s\n", cr.id, c.ok ? "PASS" : "FAIL",
                cr.title, secs, cr.limit_s, c.ok ? "" : "  first failure: ",
                c.ok ? "" : c.first_failure.c_str());
    failures += !c.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
