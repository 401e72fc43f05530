#include "diffops/jacobian.hpp"

#include <algorithm>
#include <set>

#include "diffops/errors.hpp"

namespace diffops {

AffinePresentation::AffinePresentation(RingPtr ring, std::vector<MultiPoly> generators,
                                       bool assumed_prime, const GbBudget& budget)
    : ring_(std::move(ring)),
      generators_(std::move(generators)),
      assumed_prime_(assumed_prime),
      budget_(budget),
      gb_([&] {
        for (const auto& f : generators_) {
          if (f.is_zero()) throw InputError("presentation generators must be nonzero");
          if (!same_ring(f.ring(), ring_)) {
            throw InputError("presentation generator lives in a different ring");
          }
        }
        return groebner_basis(ring_, generators_, budget_);
      }()) {
  if (gb_.is_unit()) throw InputError("the ideal is the unit ideal; the quotient ring is zero");
}

std::vector<IndexTuple> index_tuples(std::size_t n, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k > n) return out;
  IndexTuple cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

MultiPoly determinant_mod(const PolyMatrix& m, const GroebnerBasis& gb) {
  const std::size_t k = m.size();
  if (k == 0) return MultiPoly::constant(gb.ring(), 1);
  if (k == 1) return normal_form(m[0][0], gb);
  MultiPoly det(gb.ring());
  for (std::size_t col = 0; col < k; ++col) {
    if (m[0][col].is_zero()) continue;
    PolyMatrix sub;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t c = 0; c < k; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      sub.push_back(std::move(row));
    }
    MultiPoly term = normal_form(m[0][col] * determinant_mod(sub, gb), gb);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return normal_form(det, gb);
}

namespace {

PolyMatrix submatrix(const PolyMatrix& m, const IndexTuple& rows, const IndexTuple& cols) {
  PolyMatrix out;
  for (std::size_t r : rows) {
    std::vector<MultiPoly> row;
    for (std::size_t c : cols) row.push_back(m[r][c]);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Minor> all_minors(const PolyMatrix& m, std::size_t rows, std::size_t cols,
                              std::size_t size, const GroebnerBasis& gb) {
  std::vector<Minor> out;
  for (const auto& ri : index_tuples(rows, size)) {
    for (const auto& cj : index_tuples(cols, size)) {
      out.push_back({ri, cj, determinant_mod(submatrix(m, ri, cj), gb)});
    }
  }
  return out;
}

bool has_nonzero_minor(const PolyMatrix& m, std::size_t rows, std::size_t cols,
                       std::size_t size, const GroebnerBasis& gb) {
  for (const auto& ri : index_tuples(rows, size)) {
    for (const auto& cj : index_tuples(cols, size)) {
      if (!determinant_mod(submatrix(m, ri, cj), gb).is_zero()) return true;
    }
  }
  return false;
}

}  // namespace

PolyMatrix jacobi_matrix(const AffinePresentation& pres) {
  PolyMatrix out;
  for (const auto& f : pres.generators()) {
    std::vector<MultiPoly> row;
    for (std::size_t j = 0; j < pres.num_vars(); ++j) {
      row.push_back(normal_form(partial_derivative(f, j), pres.gb()));
    }
    out.push_back(std::move(row));
  }
  return out;
}

JacobiData rank_and_minors(const AffinePresentation& pres) {
  JacobiData data;
  data.matrix = jacobi_matrix(pres);
  const std::size_t m = pres.generators().size();
  const std::size_t n = pres.num_vars();

  // A vanishing set of t x t minors forces every larger minor to vanish (Laplace).
  std::size_t r = 0;
  for (std::size_t t = 1; t <= std::min(m, n); ++t) {
    if (!has_nonzero_minor(data.matrix, m, n, t, pres.gb())) break;
    r = t;
  }
  data.rank = r;
  data.minors = all_minors(data.matrix, m, n, r, pres.gb());

  std::set<IndexTuple> rows;
  std::set<IndexTuple> cols;
  for (const auto& mi : data.minors) {
    if (mi.value.is_zero()) continue;
    rows.insert(mi.rows);
    cols.insert(mi.cols);
    data.jacobian_ideal_gens.push_back(mi.value);
  }
  data.nonsingular_rows.assign(rows.begin(), rows.end());
  data.nonsingular_cols.assign(cols.begin(), cols.end());

  data.codimension = n - quotient_dimension(pres.gb());
  if (!pres.assumed_prime()) {
    data.warnings.push_back(
        "ideal not asserted prime: rank is computed with the zero test modulo I");
  }
  if (data.codimension != data.rank) {
    data.warnings.push_back("Jacobian rank " + std::to_string(data.rank) +
                            " differs from codimension " + std::to_string(data.codimension) +
                            ": the quotient is not a domain with separable fraction field");
  }
  return data;
}

std::vector<MultiPoly> jacobian_ideal(const AffinePresentation& pres) {
  const MonomialOrder& order = pres.gb().order();
  std::vector<MultiPoly> out;
  for (const auto& g : rank_and_minors(pres).jacobian_ideal_gens) out.push_back(g.monic(order));
  auto by_text = [](const MultiPoly& a, const MultiPoly& b) { return a.to_string() < b.to_string(); };
  std::sort(out.begin(), out.end(), by_text);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MultiPoly> regularity_generators(const AffinePresentation& pres, const JacobiData& data) {
  std::vector<MultiPoly> gens = pres.generators();
  if (data.codimension == data.rank) {
    gens.insert(gens.end(), data.jacobian_ideal_gens.begin(), data.jacobian_ideal_gens.end());
  } else {
    const std::size_t m = pres.generators().size();
    for (const auto& mi : all_minors(data.matrix, m, pres.num_vars(), data.codimension,
                                     pres.gb())) {
      if (!mi.value.is_zero()) gens.push_back(mi.value);
    }
  }
  return gens;
}

bool is_regular(const AffinePresentation& pres, const JacobiData& data) {
  return is_unit_ideal(pres.ring(), regularity_generators(pres, data), pres.budget());
}

bool is_regular(const AffinePresentation& pres) { return is_regular(pres, rank_and_minors(pres)); }

bool check_minor_support(const JacobiData& data) {
  const std::set<IndexTuple> rows(data.nonsingular_rows.begin(), data.nonsingular_rows.end());
  const std::set<IndexTuple> cols(data.nonsingular_cols.begin(), data.nonsingular_cols.end());
  return std::all_of(data.minors.begin(), data.minors.end(), [&](const Minor& mi) {
    const bool nonzero = !mi.value.is_zero();
    return nonzero == (rows.count(mi.rows) > 0 && cols.count(mi.cols) > 0);
  });
}

}  // namespace diffops
