#include "diffops/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <optional>
#include <sstream>

#include "diffops/errors.hpp"
#include "diffops/groebner.hpp"
#include "diffops/jacobian.hpp"
#include "diffops/parse.hpp"
#include "diffops/semigroup.hpp"

namespace diffops {

namespace {

using json = nlohmann::json;

// ---------------------------------------------------------------- option parsing helpers

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return out;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("invalid integer '" + s + "' for " + what);
  }
}

std::vector<std::int64_t> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<std::int64_t> out;
  for (const auto& piece : split(s, ',')) {
    if (piece.empty()) throw InputError("empty entry in " + what);
    out.push_back(parse_int(piece, what));
  }
  if (out.empty()) throw InputError(what + " is empty");
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw InputError("degree range must look like a..b, got '" + s + "'");
  const auto lo = parse_int(s.substr(0, dots), "--degrees");
  const auto hi = parse_int(s.substr(dots + 2), "--degrees");
  if (lo > hi) throw InputError("empty degree range '" + s + "'");
  if (hi - lo > 10000) throw InputError("degree range too wide");
  return {lo, hi};
}

// Options whose values may begin with '-' are glued to their value before CLI11 sees them.
std::vector<std::string> glue_values(const std::vector<std::string>& args) {
  static const std::vector<std::string> glued{"--degrees", "--op", "--t-min", "--t-max",
                                              "--shift-bound", "--k-max"};
  std::vector<std::string> out;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (k + 1 < args.size() && std::find(glued.begin(), glued.end(), args[k]) != glued.end()) {
      out.push_back(args[k] + "=" + args[k + 1]);
      ++k;
    } else {
      out.push_back(args[k]);
    }
  }
  return out;
}

// ---------------------------------------------------------------- json helpers

json one_based(const IndexTuple& t) {
  json a = json::array();
  for (auto v : t) a.push_back(v + 1);
  return a;
}

json poly_list(const std::vector<MultiPoly>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

json semigroup_json(const NumericalSemigroup& s) {
  return {{"generators", s.generators()},
          {"gaps", s.gaps()},
          {"frobenius", s.frobenius()},
          {"conductor", s.conductor()}};
}

json component_json(const ComponentResult& r) {
  return {{"degree", r.degree},
          {"gcd", r.gcd.to_string()},
          {"status", r.status == ComponentStatus::UnitProven ? "UnitProven" : "UpperBoundOnly"},
          {"shift_bound", r.shift_window},
          {"window", {r.window_lo, r.window_hi}},
          {"witness_shifts", r.witnesses}};
}

json report(const std::string& command, json inputs) {
  return {{"command", command},
          {"inputs", std::move(inputs)},
          {"result", json::object()},
          {"certificates", json::array()},
          {"warnings", json::array()},
          {"bounds", json::object()}};
}

std::string cusp_warning(const NumericalSemigroup& s, const SIdeal& e) {
  if (s.generators() != std::vector<std::int64_t>{2, 3}) return {};
  return "the cusp's Jacobian ideal is often quoted as {2}+S (all x^i with i >= 2); the "
         "Jacobian minors computed here generate " + e.to_string() + ", which excludes x^2";
}

// ---------------------------------------------------------------- text rendering

void render_text(const json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (const auto& [key, v] : j.items()) {
    if (v.is_object()) {
      out << pad << key << ":\n";
      render_text(v, out, indent + 2);
    } else if (v.is_array()) {
      const bool flat = std::none_of(v.begin(), v.end(),
                                     [](const json& x) { return x.is_structured(); });
      if (flat) {
        out << pad << key << ": [";
        for (std::size_t k = 0; k < v.size(); ++k) out << (k ? ", " : "") << scalar(v[k]);
        out << "]\n";
      } else {
        out << pad << key << ":\n";
        for (const auto& item : v) {
          out << pad << "  -\n";
          if (item.is_object()) {
            render_text(item, out, indent + 4);
          } else {
            out << pad << "    " << item.dump() << "\n";
          }
        }
      }
    } else {
      out << pad << key << ": " << scalar(v) << "\n";
    }
  }
}

// ---------------------------------------------------------------- commands

struct Options {
  std::string format = "json";
  std::size_t max_pairs = GbBudget{}.max_pairs;
  std::size_t max_basis = GbBudget{}.max_basis;

  // polynomial commands
  std::string vars;
  std::string ideal;
  std::uint32_t characteristic = 0;
  std::string order = "grevlex";
  std::string poly;

  // semigroup
  std::string sg_gens;
  std::optional<std::uint32_t> sg_char;
  std::string degrees;
  std::string ideal_gens;
  std::string kind = "der";
  std::string op;
  std::optional<std::int64_t> t_min;
  std::optional<std::int64_t> t_max;
  std::optional<std::int64_t> shift_bound;
  std::int64_t k_max = 5;

  GbBudget budget() const { return {max_pairs, max_basis}; }
};

RingPtr ring_from(const Options& o) {
  if (o.vars.empty()) throw InputError("--vars is required");
  return make_ring(split(o.vars, ','), o.characteristic);
}

json poly_inputs(const Options& o, const std::vector<MultiPoly>& ideal) {
  return {{"vars", split(o.vars, ',')}, {"char", o.characteristic}, {"ideal", poly_list(ideal)}};
}

MonomialOrder order_from(const Options& o, std::size_t n) {
  if (o.order == "grevlex") return MonomialOrder::grevlex(n);
  if (o.order == "lex") return MonomialOrder::lex(n);
  throw InputError("unknown order '" + o.order + "' (grevlex or lex)");
}

json cmd_gb(const Options& o) {
  const RingPtr ring = ring_from(o);
  const auto gens = parse_poly_list(o.ideal, ring);
  const MonomialOrder order = order_from(o, ring->vars.size());
  const GroebnerBasis gb = groebner_basis(ring, gens, order, o.budget());
  json r = report("gb", poly_inputs(o, gens));
  r["inputs"]["order"] = o.order;
  json basis = json::array();
  for (const auto& g : gb.basis()) basis.push_back(g.to_string(order));
  r["result"] = {{"basis", basis}, {"unit_ideal", gb.is_unit()}};
  bool all_zero = true;
  for (std::size_t i = 0; i < gb.basis().size(); ++i) {
    for (std::size_t j = i + 1; j < gb.basis().size(); ++j) {
      all_zero = all_zero &&
                 normal_form(s_polynomial(gb.basis()[i], gb.basis()[j], order), gb).is_zero();
    }
  }
  r["certificates"].push_back({{"kind", "s_pairs_reduce_to_zero"}, {"holds", all_zero}});
  r["bounds"] = {{"max_pairs", o.max_pairs}, {"max_basis", o.max_basis}};
  return r;
}

json cmd_nf(const Options& o) {
  const RingPtr ring = ring_from(o);
  const auto gens = parse_poly_list(o.ideal, ring);
  if (o.poly.empty()) throw InputError("--poly is required");
  const MultiPoly f = parse_poly(o.poly, ring);
  const MonomialOrder order = order_from(o, ring->vars.size());
  const GroebnerBasis gb = groebner_basis(ring, gens, order, o.budget());
  const MultiPoly nf = normal_form(f, gb);
  json r = report("nf", poly_inputs(o, gens));
  r["inputs"]["order"] = o.order;
  r["inputs"]["poly"] = f.to_string(order);
  r["result"] = {{"normal_form", nf.to_string(order)}, {"in_ideal", nf.is_zero()}};
  json basis = json::array();
  for (const auto& g : gb.basis()) basis.push_back(g.to_string(order));
  r["certificates"].push_back({{"kind", "groebner_basis"}, {"basis", basis}});
  r["bounds"] = {{"max_pairs", o.max_pairs}, {"max_basis", o.max_basis}};
  return r;
}

json cmd_jacobian(const Options& o) {
  const RingPtr ring = ring_from(o);
  const auto gens = parse_poly_list(o.ideal, ring);
  const AffinePresentation pres(ring, gens, true, o.budget());
  const JacobiData data = rank_and_minors(pres);
  const bool regular = is_regular(pres, data);
  const auto order = MonomialOrder::grevlex(ring->vars.size());

  json r = report("jacobian", poly_inputs(o, gens));
  json matrix = json::array();
  for (const auto& row : data.matrix) matrix.push_back(poly_list(row));
  json minors = json::array();
  for (const auto& m : data.minors) {
    minors.push_back({{"rows", one_based(m.rows)}, {"cols", one_based(m.cols)},
                      {"value", m.value.to_string()}});
  }
  json rows = json::array();
  for (const auto& t : data.nonsingular_rows) rows.push_back(one_based(t));
  json cols = json::array();
  for (const auto& t : data.nonsingular_cols) cols.push_back(one_based(t));
  json ideal = json::array();
  for (const auto& g : data.jacobian_ideal_gens) ideal.push_back(g.monic(order).to_string());

  r["result"] = {{"matrix", matrix},
                 {"rank", data.rank},
                 {"codimension", data.codimension},
                 {"minors", minors},
                 {"nonsingular_rows", rows},
                 {"nonsingular_cols", cols},
                 {"jacobian_ideal", ideal},
                 {"minor_support_check", check_minor_support(data)},
                 {"regular", regular}};
  r["certificates"].push_back({{"kind", "quotient_groebner_basis"}, {"basis", poly_list(pres.gb().basis())}});
  const std::vector<MultiPoly> unit_gens = regularity_generators(pres, data);
  r["certificates"].push_back(
      {{"kind", "regularity"},
       {"basis_of_ideal_plus_minors",
        poly_list(groebner_basis(ring, unit_gens, o.budget()).basis())},
       {"unit_ideal", regular}});
  r["warnings"].push_back("the ideal is assumed prime; primality is not verified");
  for (const auto& w : data.warnings) r["warnings"].push_back(w);
  r["bounds"] = {{"max_pairs", o.max_pairs}, {"max_basis", o.max_basis}};
  return r;
}

json op_json(const GradedOp& u) { return u.to_string(); }

json cmd_semigroup(const Options& o, const std::string& action) {
  if (o.sg_char && *o.sg_char != 0) {
    throw InputError("semigroup commands work in characteristic 0 only");
  }
  if (o.sg_gens.empty()) throw InputError("--gens is required");
  const NumericalSemigroup s(parse_int_list(o.sg_gens, "--gens"));
  json r = report("semigroup " + action, {{"gens", parse_int_list(o.sg_gens, "--gens")}});
  r["result"]["semigroup"] = semigroup_json(s);

  auto ideal_from_opts = [&]() {
    if (o.ideal_gens.empty()) throw InputError("--gens for the ideal is required");
    return SIdeal(s, parse_int_list(o.ideal_gens, "ideal --gens"));
  };

  if (action == "pieces") {
    const auto [lo, hi] = parse_range(o.degrees.empty() ? "-6..6" : o.degrees);
    r["inputs"]["degrees"] = {lo, hi};
    json pieces = json::array();
    for (std::int64_t i = lo; i <= hi; ++i) {
      pieces.push_back({{"degree", i},
                        {"piece", dop_piece(s, i).to_string()},
                        {"roots", dop_piece_roots(s, i)},
                        {"operator", op_json(dop_generator(s, i))}});
    }
    r["result"]["pieces"] = pieces;
  } else if (action == "der") {
    const std::string range = o.degrees.empty()
                                  ? std::to_string(-s.multiplicity() - 1) + ".." +
                                        std::to_string(s.conductor() + 1)
                                  : o.degrees;
    const auto [lo, hi] = parse_range(range);
    r["inputs"]["degrees"] = {lo, hi};
    json pieces = json::array();
    std::vector<std::int64_t> degs;
    for (const auto& p : der_pieces(s, lo, hi)) {
      degs.push_back(p.degree);
      pieces.push_back({{"degree", p.degree}, {"basis", op_json(p.basis)},
                        {"in_dop", dop_membership(s, p.basis)}});
    }
    r["result"]["der_pieces"] = pieces;
    r["result"]["nonzero_degrees"] = degs;
    const auto w = delta_vs_dop(s);
    r["result"]["derivation_ring_equals_dop"] = !w.has_value();
    r["result"]["dop_witness_outside_derivation_ring"] = w ? json(op_json(*w)) : json(nullptr);
    if (w) {
      r["certificates"].push_back(
          {{"kind", "negative_degree_member"},
           {"operator", op_json(*w)},
           {"in_dop", dop_membership(s, *w)},
           {"reason", "the derivation ring is generated by A and Der(A), all of degree >= 0"}});
    }
  } else if (action == "present") {
    const SemigroupPresentation sp = present_algebra(s, o.budget());
    r["result"]["variables"] = sp.presentation.ring()->vars;
    r["result"]["degree_map"] = sp.degree_map;
    r["result"]["ideal"] = poly_list(sp.presentation.gb().basis());
    r["bounds"] = {{"max_pairs", o.max_pairs}, {"max_basis", o.max_basis}};
  } else if (action == "jacobian-ideal") {
    const SemigroupPresentation sp = present_algebra(s, o.budget());
    const JacobiData data = rank_and_minors(sp.presentation);
    const SIdeal e = jacobian_ideal_monomial(s, o.budget());
    r["result"]["presentation"] = poly_list(sp.presentation.gb().basis());
    r["result"]["rank"] = data.rank;
    r["result"]["minors"] = poly_list(data.jacobian_ideal_gens);
    r["result"]["ideal_generators"] = e.generators();
    r["result"]["ideal"] = e.to_string();
    if (auto w = cusp_warning(s, e); !w.empty()) r["warnings"].push_back(w);
    r["bounds"] = {{"max_pairs", o.max_pairs}, {"max_basis", o.max_basis}};
  } else if (action == "stable") {
    const SIdeal e = ideal_from_opts();
    if (o.kind != "der" && o.kind != "dop") throw InputError("--kind must be der or dop");
    const StabilityVerdict v = o.kind == "der" ? is_der_stable(s, e) : is_dop_stable(s, e);
    r["inputs"]["ideal"] = e.generators();
    r["inputs"]["kind"] = o.kind;
    if (auto w = cusp_warning(s, jacobian_ideal_monomial(s, o.budget())); !w.empty()) {
      r["warnings"].push_back(w);
    }
    r["result"]["ideal"] = e.to_string();
    r["result"]["stable"] = v.stable;
    if (v.witness) {
      const auto& w = *v.witness;
      const GradedOp op = o.kind == "der" ? GradedOp::x_power(w.op_degree) * GradedOp::h()
                                          : dop_generator(s, w.op_degree);
      const LaurentPoly image = op_apply(op, LaurentPoly::monomial(w.exponent));
      r["result"]["witness"] = {{"operator_degree", w.op_degree},
                                {"operator", op_json(op)},
                                {"exponent", w.exponent},
                                {"value", w.value.get_str()},
                                {"image", image.to_string()}};
      r["certificates"].push_back({{"kind", "image_outside_ideal"},
                                   {"image", image.to_string()},
                                   {"image_exponent", w.exponent + w.op_degree},
                                   {"image_in_ideal", e.contains(w.exponent + w.op_degree)}});
    } else {
      r["result"]["witness"] = nullptr;
    }
  } else if (action == "closure") {
    const SIdeal e = ideal_from_opts();
    const std::int64_t t_max = o.t_max.value_or(e.generators().back() + s.conductor() + 4);
    const std::int64_t b = o.shift_bound.value_or(default_shift_bound(s, e.generators().back()));
    const ClosureResult c = closure_in_A(s, e, t_max, b);
    r["inputs"]["ideal"] = e.generators();
    r["result"]["ideal"] = e.to_string();
    r["result"]["outcome"] = c.outcome == ClosureOutcome::EqualsE        ? "equals_E"
                             : c.outcome == ClosureOutcome::StrictlyLarger ? "strictly_larger"
                                                                           : "inconclusive";
    r["result"]["witness_exponent"] = c.witness ? json(c.witness->t) : json(nullptr);
    if (c.witness) r["certificates"].push_back(component_json(c.witness->certificate));
    r["bounds"] = {{"t_max", t_max}, {"shift_bound", b}};
  } else if (action == "meets-a") {
    if (o.op.empty()) throw InputError("--op is required");
    const GradedOp u = parse_op(o.op);
    if (u.is_zero()) throw InputError("--op must be nonzero");
    const std::int64_t deg = u.is_homogeneous() ? u.min_degree() : 0;
    const std::int64_t t_min = o.t_min.value_or(0);
    const std::int64_t t_max = o.t_max.value_or(12);
    const std::int64_t b = o.shift_bound.value_or(default_shift_bound(s, std::abs(deg)));
    const auto w = meets_A(s, u, t_min, t_max, b);
    r["inputs"]["op"] = op_json(u);
    r["result"]["found"] = w.has_value();
    r["result"]["exponent"] = w ? json(w->t) : json(nullptr);
    if (w) r["certificates"].push_back(component_json(w->certificate));
    r["bounds"] = {{"t_min", t_min}, {"t_max", t_max}, {"shift_bound", b}};
  } else if (action == "simple") {
    const std::int64_t b = o.shift_bound.value_or(default_shift_bound(s));
    const SimplicityVerdict v = simplicity_verdict(s, o.k_max, b, o.budget());
    r["result"]["outcome"] =
        v.outcome == SimplicityOutcome::SimpleProven ? "SimpleProven" : "Inconclusive";
    r["result"]["jacobian_ideal"] = v.jacobian_ideal.to_string();
    r["result"]["least_generator"] = v.jacobian_ideal.generators().front();
    for (const auto& c : v.certificates) {
      r["certificates"].push_back(
          {{"k", c.k},
           {"power", c.power},
           {"power_in_ideal_power", "x^" + std::to_string(c.power) + " = (x^" +
                                        std::to_string(v.jacobian_ideal.generators().front()) +
                                        ")^" + std::to_string(c.k)},
           {"left", c.left.to_string()},
           {"right", c.right.to_string()},
           {"gcd", c.gcd.to_string()},
           {"roots_disjoint", c.roots_disjoint},
           {"component", component_json(c.component)}});
    }
    if (auto w = cusp_warning(s, v.jacobian_ideal); !w.empty()) r["warnings"].push_back(w);
    r["warnings"].push_back("finite evidence: powers k <= " + std::to_string(o.k_max) +
                            " checked; the root-disjointness invariant covers the rest");
    r["bounds"] = {{"k_max", o.k_max}, {"shift_bound", b},
                   {"max_pairs", o.max_pairs}, {"max_basis", o.max_basis}};
  } else {
    throw InputError("unknown semigroup action '" + action + "'");
  }
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact differential-operator and Jacobian-ideal toolkit", "diffops"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-pairs", o.max_pairs, "Groebner S-pair budget");
  app.add_option("--max-basis", o.max_basis, "Groebner basis-size budget");

  auto add_poly_opts = [&](CLI::App* sub, bool with_order) {
    sub->add_option("--vars", o.vars, "Comma-separated variable names")->required();
    sub->add_option("--ideal", o.ideal, "Semicolon-separated generators");
    sub->add_option("--char", o.characteristic, "Field characteristic (0 or a prime)");
    if (with_order) sub->add_option("--order", o.order, "grevlex or lex");
  };
  CLI::App* gb = app.add_subcommand("gb", "Reduced Groebner basis");
  add_poly_opts(gb, true);
  CLI::App* nf = app.add_subcommand("nf", "Normal form modulo an ideal");
  add_poly_opts(nf, true);
  nf->add_option("--poly", o.poly, "Polynomial to reduce")->required();
  CLI::App* jac = app.add_subcommand("jacobian", "Jacobi matrix, rank, minors, regularity");
  add_poly_opts(jac, false);

  CLI::App* sg = app.add_subcommand("semigroup", "Numerical-semigroup algebra commands");
  sg->add_option("--gens", o.sg_gens, "Semigroup generators, e.g. 2,3")->required();
  sg->add_option("--char", o.sg_char, "Refused unless 0");
  sg->require_subcommand(1);
  sg->fallthrough();
  CLI::App* pieces = sg->add_subcommand("pieces", "Graded pieces f_i of D(A)");
  pieces->add_option("--degrees", o.degrees, "Degree range a..b");
  CLI::App* der = sg->add_subcommand("der", "Derivations and the derivation ring");
  der->add_option("--degrees", o.degrees, "Degree range a..b");
  sg->add_subcommand("present", "Toric presentation of the semigroup algebra");
  sg->add_subcommand("jacobian-ideal", "Jacobian ideal as a monomial ideal");
  CLI::App* stable = sg->add_subcommand("stable", "Stability of a monomial ideal");
  stable->add_option("--gens", o.ideal_gens, "Ideal generator exponents")->required();
  stable->add_option("--kind", o.kind, "der or dop");
  CLI::App* closure = sg->add_subcommand("closure", "D(A) E D(A) intersected with A");
  closure->add_option("--gens", o.ideal_gens, "Ideal generator exponents")->required();
  closure->add_option("--t-max", o.t_max, "Largest exponent examined");
  closure->add_option("--shift-bound", o.shift_bound, "Shift slack B");
  CLI::App* meets = sg->add_subcommand("meets-a", "Find x^t in the ideal generated by an operator");
  meets->add_option("--op", o.op, "Operator literal, e.g. (h^2 + h - 2)*x^-2")->required();
  meets->add_option("--t-min", o.t_min, "Smallest exponent examined");
  meets->add_option("--t-max", o.t_max, "Largest exponent examined");
  meets->add_option("--shift-bound", o.shift_bound, "Shift slack B");
  CLI::App* simple = sg->add_subcommand("simple", "Simplicity certificates");
  simple->add_option("--k-max", o.k_max, "Largest Jacobian power checked");
  simple->add_option("--shift-bound", o.shift_bound, "Shift slack B");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  for (auto* sub : sg->get_subcommands({})) sub->fallthrough();

  std::vector<std::string> args = glue_values(raw_args);
  std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    json r;
    if (gb->parsed()) {
      r = cmd_gb(o);
    } else if (nf->parsed()) {
      r = cmd_nf(o);
    } else if (jac->parsed()) {
      r = cmd_jacobian(o);
    } else {
      const auto subs = sg->get_subcommands();
      r = cmd_semigroup(o, subs.front()->get_name());
    }
    if (o.format == "text") {
      std::ostringstream text;
      render_text(r, text, 0);
      out << text.str();
    } else {
      out << r.dump(2) << "\n";
    }
    return kExitOk;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace diffops
