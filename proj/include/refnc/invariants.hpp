#pragma once

/**
 * @file invariants.hpp
 * @brief Reynolds operator, Molien series, basic invariants, the mirror
 *        arrangement, Jacobian and discriminant, and rewriting invariants
 *        in terms of basic invariants.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "refnc/chartab.hpp"
#include "refnc/cyclotomic.hpp"
#include "refnc/error.hpp"
#include "refnc/graded_series.hpp"
#include "refnc/group.hpp"
#include "refnc/matrix.hpp"
#include "refnc/polynomial.hpp"
#include "refnc/sparse.hpp"

namespace refnc {

/// (1/|G|) sum_g g.f
inline MPoly reynolds(const MPoly& f, const MatGroup& g) {
  MPoly acc(f.nvars());
  for (const auto& m : g.elements) acc += act(m, f);
  return acc * CycNum(Rational(1, static_cast<long>(g.size())));
}

inline bool is_invariant(const MPoly& f, const MatGroup& g) {
  return std::all_of(g.generators.begin(), g.generators.end(), [&](const Matrix& m) { return act(m, f) == f; });
}

/// Truncated power series of 1 / c(t), c[0] = 1.
inline std::vector<CycNum> invert_series(const std::vector<CycNum>& c, int cutoff) {
  if (c.empty() || !c[0].is_one()) throw InvalidArgument("invert_series: constant term must be 1");
  std::vector<CycNum> q(static_cast<std::size_t>(cutoff) + 1);
  q[0] = CycNum(1);
  for (int k = 1; k <= cutoff; ++k) {
    CycNum s;
    for (int i = 1; i < static_cast<int>(c.size()) && i <= k; ++i) {
      if (!c[static_cast<std::size_t>(i)].is_zero()) s += c[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(k - i)];
    }
    q[static_cast<std::size_t>(k)] = -s;
  }
  return q;
}

/// (1/|G|) sum_g conj(twist(g)) / det(1 - t g); no twist means the trivial
/// character. Coefficients must come out as integers.
inline GradedSeries molien(const MatGroup& g, const std::optional<ClassFunction>& twist, int cutoff) {
  if (cutoff < 0) throw InvalidArgument("molien: cutoff must be nonnegative");
  if (twist && twist->size() != g.class_count()) throw InvalidArgument("molien: twist has the wrong length");
  std::vector<CycNum> acc(static_cast<std::size_t>(cutoff) + 1);
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    CycNum weight(g.class_size(c));
    if (twist) {
      if ((*twist)[c].is_zero()) continue;
      weight *= (*twist)[c].conj();
    }
    const auto series = invert_series(det_one_minus_tg(g.elements[static_cast<std::size_t>(g.class_rep(c))]), cutoff);
    for (int k = 0; k <= cutoff; ++k) {
      if (!series[static_cast<std::size_t>(k)].is_zero()) acc[static_cast<std::size_t>(k)] += weight * series[static_cast<std::size_t>(k)];
    }
  }
  GradedSeries out(cutoff);
  const CycNum inv_order(Rational(1, static_cast<long>(g.size())));
  for (int k = 0; k <= cutoff; ++k) {
    CycNum v = acc[static_cast<std::size_t>(k)] * inv_order;
    if (!v.is_rational() || v.rational().get_den() != 1) {
      throw VerificationError("molien: coefficient " + v.str() + " in degree " + std::to_string(k) + " is not an integer");
    }
    out[k] = v.rational().get_num().get_si();
  }
  return out;
}

/// Degrees d_1 <= ... <= d_n with series = prod 1/(1 - t^{d_i}) up to the
/// cutoff and prod d_i = order.
inline std::vector<int> degrees_from_molien(const GradedSeries& series, long order, int n) {
  const char* failure = "group is not a pseudo-reflection group on this representation";
  std::vector<int> degrees;
  GradedSeries cur = GradedSeries::product_inverse({}, series.cutoff());
  for (;;) {
    int d = -1;
    for (int k = 0; k <= series.cutoff(); ++k) {
      if (series[k] != cur[k]) {
        d = k;
        break;
      }
    }
    if (d < 0) break;
    if (d == 0 || series[d] < cur[d] || static_cast<int>(degrees.size()) >= n) throw VerificationError(failure);
    degrees.push_back(d);
    cur = GradedSeries::product_inverse(degrees, series.cutoff());
  }
  long prod = 1;
  for (int d : degrees) prod *= d;
  if (static_cast<int>(degrees.size()) != n || prod != order) throw VerificationError(failure);
  return degrees;
}

struct BasicInvariants {
  std::vector<MPoly> polys;
  std::vector<int> degrees;
  bool power_sums = false;
};

/// Reduced echelon basis of the degree-d invariants, columns in deglex
/// order. Built from the Reynolds images of all degree-d monomials.
inline std::vector<MPoly> invariant_subspace_basis(const MatGroup& g, int d) {
  const int n = g.dim;
  const auto monos = graded_piece_basis(d, n);
  std::map<Monomial, std::size_t, DeglexFirst> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
  EchelonBasis basis;
  for (const auto& m : monos) {
    MPoly r = reynolds(MPoly::monomial(m), g);
    if (r.is_zero()) continue;
    SparseVec v;
    for (const auto& [mono, c] : r.terms()) v.emplace_back(index.at(mono), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.insert(std::move(v));
  }
  basis.make_reduced();
  std::vector<MPoly> out;
  for (const auto& row : basis.basis()) {
    MPoly p(n);
    for (const auto& [i, c] : row) p.add_term(monos[i], c);
    out.push_back(std::move(p));
  }
  return out;
}

namespace detail {

/// Cutoff at which the Molien series pins down every degree:
/// max d_i <= #reflections + 1.
inline int degree_cutoff(const MatGroup& g) {
  const auto refl = pseudo_reflections(g);
  return static_cast<int>(refl.reflection_count()) + 2;
}

}  // namespace detail

inline std::vector<int> invariant_degrees(const MatGroup& g) {
  const int cutoff = detail::degree_cutoff(g);
  return degrees_from_molien(molien(g, std::nullopt, cutoff), static_cast<long>(g.size()), g.dim);
}

/// Basic invariants. Power sums when the degrees are distinct and every
/// power sum of those degrees is invariant with nonzero Jacobian; otherwise
/// echelon vectors per degree, backtracking over subsets until the Jacobian
/// is nonzero.
inline BasicInvariants basic_invariants(const MatGroup& g) {
  BasicInvariants out;
  out.degrees = invariant_degrees(g);
  const int n = g.dim;
  const auto& deg = out.degrees;
  const bool distinct = std::adjacent_find(deg.begin(), deg.end()) == deg.end();
  if (distinct) {
    std::vector<MPoly> ps;
    for (int d : deg) ps.push_back(power_sum(n, d));
    if (std::all_of(ps.begin(), ps.end(), [&](const MPoly& p) { return is_invariant(p, g); }) && !jacobian_det(ps).is_zero()) {
      out.polys = std::move(ps);
      out.power_sums = true;
      return out;
    }
  }
  // groups of equal degrees
  std::vector<std::pair<int, int>> slots;  // (degree, multiplicity)
  for (int d : deg) {
    if (!slots.empty() && slots.back().first == d) {
      ++slots.back().second;
    } else {
      slots.emplace_back(d, 1);
    }
  }
  std::vector<std::vector<MPoly>> candidates;
  for (auto [d, k] : slots) {
    candidates.push_back(invariant_subspace_basis(g, d));
    if (static_cast<int>(candidates.back().size()) < k) throw VerificationError("basic_invariants: invariant subspace too small");
  }
  // all k-subsets per slot, lexicographic
  auto subsets = [](int size, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    for (;;) {
      out.push_back(cur);
      int i = k - 1;
      while (i >= 0 && cur[static_cast<std::size_t>(i)] == size - k + i) --i;
      if (i < 0) break;
      ++cur[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
  };
  std::vector<std::vector<std::vector<int>>> choices;
  for (std::size_t s = 0; s < slots.size(); ++s) choices.push_back(subsets(static_cast<int>(candidates[s].size()), slots[s].second));
  std::vector<std::size_t> pick(slots.size(), 0);
  long attempts = 0;
  for (;;) {
    std::vector<MPoly> polys;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      for (int i : choices[s][pick[s]]) polys.push_back(candidates[s][static_cast<std::size_t>(i)]);
    }
    if (!jacobian_det(polys).is_zero()) {
      out.polys = std::move(polys);
      return out;
    }
    if (++attempts > 100000) break;
    std::size_t s = slots.size();
    while (s > 0) {
      --s;
      if (++pick[s] < choices[s].size()) break;
      pick[s] = 0;
      if (s == 0) {
        s = slots.size() + 1;
        break;
      }
    }
    if (s > slots.size()) break;
  }
  throw VerificationError("basic_invariants: no candidate set with nonzero Jacobian");
}

/// Exponent vectors a with sum a_i w_i = degree, larger leading exponents first.
inline std::vector<Monomial> weighted_monomials(const std::vector<int>& weights, int degree) {
  std::vector<Monomial> out;
  Monomial cur(weights.size(), 0);
  auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
    if (var == weights.size()) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int e = remaining / weights[var]; e >= 0; --e) {
      cur[var] = e;
      self(self, var + 1, remaining - e * weights[var]);
    }
    cur[var] = 0;
  };
  if (degree >= 0) rec(rec, 0, degree);
  return out;
}

namespace detail {

/// Columns f^a for every weighted monomial a, as x-polynomials.
inline std::vector<MPoly> evaluate_monomials(const std::vector<MPoly>& gens, const std::vector<Monomial>& monos) {
  std::vector<std::vector<MPoly>> powers(gens.size());
  auto power_of = [&](std::size_t i, int e) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MPoly::constant(gens[i].nvars(), 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * gens[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  std::vector<MPoly> out;
  for (const auto& a : monos) {
    MPoly p = MPoly::constant(gens[0].nvars(), 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > 0) p = p * power_of(i, a[i]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

/// Coefficient matrix: rows are x-monomials, columns the given polys.
inline Matrix coefficient_matrix(const std::vector<MPoly>& cols, const MPoly* extra, std::vector<Monomial>* row_monos) {
  std::map<Monomial, std::size_t, DeglexFirst> rows;
  auto collect = [&](const MPoly& p) {
    for (const auto& [m, c] : p.terms()) rows.emplace(m, 0);
  };
  for (const auto& p : cols) collect(p);
  if (extra) collect(*extra);
  std::size_t i = 0;
  for (auto& [m, idx] : rows) {
    idx = i++;
    if (row_monos) row_monos->push_back(m);
  }
  Matrix a(rows.size(), cols.size() + (extra ? 1 : 0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [m, c] : cols[j].terms()) a(rows.at(m), j) = c;
  }
  if (extra) {
    for (const auto& [m, c] : extra->terms()) a(rows.at(m), cols.size()) = c;
  }
  return a;
}

}  // namespace detail

/// Writes an invariant as a polynomial in the basic invariants. The result
/// lives in n variables, variable i standing for polys[i] (weight d_i).
inline MPoly rewrite_in_invariants(const MPoly& target, const BasicInvariants& f) {
  const int n = static_cast<int>(f.polys.size());
  if (target.is_zero()) return MPoly(n);
  if (!target.is_homogeneous()) throw InvalidArgument("rewrite_in_invariants: target must be homogeneous");
  const auto monos = weighted_monomials(f.degrees, target.degree());
  if (monos.empty()) throw VerificationError("rewrite_in_invariants: no monomial in the invariants has degree " + std::to_string(target.degree()));
  const auto cols = detail::evaluate_monomials(f.polys, monos);
  Matrix a = detail::coefficient_matrix(cols, &target, nullptr);
  Matrix lhs(a.rows(), cols.size());
  Matrix rhs(a.rows(), 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) lhs(i, j) = a(i, j);
    rhs(i, 0) = a(i, cols.size());
  }
  auto sol = solve(lhs, rhs);
  if (!sol.consistent) throw VerificationError("rewrite_in_invariants: target is not a polynomial in the basic invariants");
  if (!sol.kernel.empty()) throw VerificationError("rewrite_in_invariants: solution is not unique; invariants are dependent");
  MPoly out(n);
  for (std::size_t j = 0; j < monos.size(); ++j) out.add_term(monos[j], sol.particular(j, 0));
  return out;
}

/// Relation among gens in weighted degree rel_degree, if any. Normalized to
/// a primitive integer vector with positive first term when rational, else
/// to a first coefficient of 1.
inline std::optional<MPoly> algebra_relation(const std::vector<MPoly>& gens, int rel_degree) {
  if (gens.empty()) throw InvalidArgument("algebra_relation: need generators");
  std::vector<int> weights;
  for (const auto& p : gens) {
    if (p.is_zero() || !p.is_homogeneous() || p.degree() == 0) throw InvalidArgument("algebra_relation: generators must be homogeneous of positive degree");
    weights.push_back(p.degree());
  }
  const auto monos = weighted_monomials(weights, rel_degree);
  if (monos.empty()) return std::nullopt;
  const auto cols = detail::evaluate_monomials(gens, monos);
  Matrix a = detail::coefficient_matrix(cols, nullptr, nullptr);
  auto ker = kernel_basis(a);
  if (ker.empty()) return std::nullopt;
  if (ker.size() > 1) {
    throw InvalidArgument("algebra_relation: " + std::to_string(ker.size()) + " independent relations in degree " +
                          std::to_string(rel_degree) + "; try a smaller degree");
  }
  MPoly rel(static_cast<int>(gens.size()));
  for (std::size_t j = 0; j < monos.size(); ++j) rel.add_term(monos[j], ker[0](j, 0));
  bool rational = std::all_of(rel.terms().begin(), rel.terms().end(), [](const auto& t) { return t.second.is_rational(); });
  if (rational) {
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& [m, c] : rel.terms()) {
      const Rational q = c.rational();
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(rel.leading_coeff().rational()) < 0) scale = -scale;
    return rel * CycNum(scale);
  }
  return rel * rel.leading_coeff().inverse();
}

struct DiscriminantData {
  MPoly z;
  MPoly J;
  MPoly delta_x;      // prod l_H^{rho_H}; z^2 for true reflection groups
  MPoly delta_f;
  CycNum unit_J;      // J = unit_J * prod l_H^{rho_H - 1}
  CycNum unit_delta;  // J * z = unit_delta * delta_x
  bool true_reflection = false;
  int deg_z = 0;
  int deg_J = 0;
};

inline DiscriminantData arrangement_and_discriminant(const MatGroup& g, const BasicInvariants& f) {
  const int n = g.dim;
  const auto refl = pseudo_reflections(g);
  DiscriminantData out;
  out.z = MPoly::constant(n, 1);
  MPoly j_product = MPoly::constant(n, 1);
  for (const auto& m : refl.mirrors) {
    out.z = out.z * m.linear_form;
    j_product = j_product * m.linear_form.pow(static_cast<int>(m.rho - 1));
  }
  out.J = jacobian_det(f.polys);
  if (out.J.is_zero()) throw VerificationError("arrangement_and_discriminant: Jacobian vanishes");
  auto q = divide_exact(out.J, j_product);
  if (!q || !q->is_constant()) {
    throw VerificationError("arrangement_and_discriminant: J is not a unit times prod l_H^(rho_H - 1)");
  }
  out.unit_J = q->constant_term();
  out.delta_x = j_product * out.z;
  out.unit_delta = out.unit_J;
  if (out.J * out.z != out.delta_x * out.unit_delta) throw VerificationError("arrangement_and_discriminant: J z differs from the recorded unit times delta");
  out.true_reflection = refl.all_order_two() && is_true_reflection_group(g, refl);
  if (out.true_reflection && out.delta_x != out.z * out.z) throw VerificationError("arrangement_and_discriminant: delta is not z^2");
  out.delta_f = rewrite_in_invariants(out.delta_x, f);
  out.deg_z = out.z.degree();
  out.deg_J = out.J.degree();
  return out;
}

/// prod (1 - t^{d_i}) / (1 - t)^n: coefficients of the coinvariant
/// algebra's Hilbert polynomial. Throws unless it is a polynomial of degree
/// sum (d_i - 1) with nonnegative coefficients summing to |G|.
inline std::vector<std::int64_t> coexponent_polynomial(int n, const std::vector<int>& degrees, long order) {
  int top = 0;
  for (int d : degrees) top += d - 1;
  const int cutoff = top + 1 + 1;
  GradedSeries s = GradedSeries::polynomial_ring(n, cutoff);
  for (int d : degrees) {
    GradedSeries factor(cutoff);
    factor[0] = 1;
    if (d <= cutoff) factor[d] = -1;
    s = s * factor;
  }
  std::int64_t total = 0;
  for (int k = 0; k <= cutoff; ++k) {
    if (s[k] < 0 || (k > top && s[k] != 0)) throw VerificationError("coexponent_polynomial: quotient is not a nonnegative polynomial");
    total += s[k];
  }
  if (total != order) throw VerificationError("coexponent_polynomial: coefficients do not sum to |G|");
  return std::vector<std::int64_t>(s.coeffs().begin(), s.coeffs().begin() + top + 1);
}

}  // namespace refnc
