#pragma once

/**
 * @file skewgroup.hpp
 * @brief The skew group ring A = S * G in graded slices: products,
 *        idempotents, the ideal A gen A, corners gen A gen, and the series
 *        identities for the quotient A / AeA.
 *
 * A_d has basis {m g : m a monomial of degree d, g in G}; coordinate of m g
 * is index(m) * |G| + g with index the deglex position in S_d.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "refnc/catalog.hpp"
#include "refnc/chartab.hpp"
#include "refnc/error.hpp"
#include "refnc/graded_series.hpp"
#include "refnc/group.hpp"
#include "refnc/invariants.hpp"
#include "refnc/polynomial.hpp"
#include "refnc/sparse.hpp"

namespace refnc {

/// Finite sum of f_g g with f_g in S.
struct SkewElement {
  int nvars = 0;
  std::map<int, MPoly> terms;

  bool is_zero() const { return terms.empty(); }

  void add(int g, const MPoly& f) {
    if (f.is_zero()) return;
    auto it = terms.find(g);
    if (it == terms.end()) {
      terms.emplace(g, f);
      return;
    }
    it->second += f;
    if (it->second.is_zero()) terms.erase(it);
  }

  friend SkewElement operator+(SkewElement a, const SkewElement& b) {
    for (const auto& [g, f] : b.terms) a.add(g, f);
    return a;
  }
  friend SkewElement operator-(SkewElement a, const SkewElement& b) {
    for (const auto& [g, f] : b.terms) a.add(g, -f);
    return a;
  }
  friend SkewElement operator*(const CycNum& c, SkewElement a) {
    if (c.is_zero()) return SkewElement{a.nvars, {}};
    for (auto& [g, f] : a.terms) f = f * c;
    return a;
  }
  friend bool operator==(const SkewElement& a, const SkewElement& b) { return a.terms == b.terms; }
};

inline SkewElement skew_group_element(const MatGroup& g, int idx) {
  SkewElement e{g.dim, {}};
  e.add(idx, MPoly::constant(g.dim, 1));
  return e;
}

inline SkewElement skew_poly(const MatGroup& g, const MPoly& f) {
  SkewElement e{g.dim, {}};
  e.add(0, f);
  return e;
}

/// (s g)(s' g') = s g(s') (g g').
inline SkewElement skew_mul(const MatGroup& G, const SkewElement& a, const SkewElement& b) {
  SkewElement out{G.dim, {}};
  for (const auto& [g, s] : a.terms) {
    const Matrix& m = G.elements[static_cast<std::size_t>(g)];
    for (const auto& [h, t] : b.terms) out.add(G.mult[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)], s * act(m, t));
  }
  return out;
}

/// e = (1/|G|) sum_g g.
inline SkewElement trivial_idempotent(const MatGroup& g) {
  SkewElement e{g.dim, {}};
  const CycNum c(Rational(1, static_cast<long>(g.size())));
  for (std::size_t x = 0; x < g.size(); ++x) e.add(static_cast<int>(x), MPoly::constant(g.dim, c));
  return e;
}

/// First element of order 2 with determinant -1, or -1.
inline int sign_element(const MatGroup& g) {
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (g.order[x] == 2 && g.det[x] == CycNum(-1)) return static_cast<int>(x);
  }
  return -1;
}

/// e_+ = (1 + sigma)/2 and e_- = (1 - sigma)/2.
inline std::pair<SkewElement, SkewElement> sign_idempotents(const MatGroup& g) {
  const int s = sign_element(g);
  if (s < 0) throw InvalidArgument("sign_idempotents: group has no element of order 2 with determinant -1");
  const CycNum half(Rational(1, 2));
  SkewElement one = skew_group_element(g, 0);
  SkewElement sigma = skew_group_element(g, s);
  return {half * (one + sigma), half * (one - sigma)};
}

inline long long skew_piece_dim(const MatGroup& g, int d) {
  return static_cast<long long>(g.size()) * graded_piece_dim(d, g.dim);
}

namespace detail {

struct SkewSlice {
  std::vector<Monomial> monos;
  std::map<Monomial, std::size_t, DeglexFirst> index;

  SkewSlice(int d, int n) : monos(graded_piece_basis(d, n)) {
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
  }
};

inline SparseVec sorted(SparseVec v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

/// Homogeneous element of degree d to coordinates.
inline SparseVec to_coords(const SkewElement& a, const SkewSlice& slice, std::size_t order) {
  SparseVec v;
  for (const auto& [g, f] : a.terms) {
    for (const auto& [m, c] : f.terms()) {
      auto it = slice.index.find(m);
      if (it == slice.index.end()) throw InvalidArgument("skew: element is not homogeneous of the slice degree");
      v.emplace_back(it->second * order + static_cast<std::size_t>(g), c);
    }
  }
  return sorted(std::move(v));
}

/// Accumulates coordinate entries, dropping zeros.
inline SparseVec collect(std::map<std::size_t, CycNum>& acc) {
  SparseVec v;
  for (auto& [i, c] : acc) {
    if (!c.is_zero()) v.emplace_back(i, std::move(c));
  }
  return v;
}

/// x_i * v for v in A_d, result in A_{d+1}.
inline SparseVec left_var(const SparseVec& v, int i, const SkewSlice& from, const SkewSlice& to, std::size_t order) {
  SparseVec out;
  out.reserve(v.size());
  for (const auto& [idx, c] : v) {
    Monomial m = from.monos[idx / order];
    m[static_cast<std::size_t>(i)] += 1;
    out.emplace_back(to.index.at(m) * order + idx % order, c);
  }
  return sorted(std::move(out));
}

/// v * x_i: (m g) x_i = m g(x_i) g with g(x_i) = sum_k g_ki x_k.
inline SparseVec right_var(const MatGroup& G, const SparseVec& v, int i, const SkewSlice& from, const SkewSlice& to) {
  const std::size_t order = G.size();
  std::map<std::size_t, CycNum> acc;
  for (const auto& [idx, c] : v) {
    const std::size_t g = idx % order;
    const Matrix& mat = G.elements[g];
    const Monomial& base = from.monos[idx / order];
    for (int k = 0; k < G.dim; ++k) {
      const CycNum& a = mat(static_cast<std::size_t>(k), static_cast<std::size_t>(i));
      if (a.is_zero()) continue;
      Monomial m = base;
      m[static_cast<std::size_t>(k)] += 1;
      acc[to.index.at(m) * order + g] += c * a;
    }
  }
  return collect(acc);
}

/// v * h for h in G.
inline SparseVec right_group(const MatGroup& G, const SparseVec& v, int h) {
  const std::size_t order = G.size();
  SparseVec out;
  out.reserve(v.size());
  for (const auto& [idx, c] : v) {
    const std::size_t g = idx % order;
    out.emplace_back(idx - g + static_cast<std::size_t>(G.mult[g][static_cast<std::size_t>(h)]), c);
  }
  return sorted(std::move(out));
}

/// h * v for h in G: h (m g) = h(m) (h g).
inline SparseVec left_group(const MatGroup& G, const SparseVec& v, int h, const SkewSlice& slice) {
  const std::size_t order = G.size();
  const Matrix& mat = G.elements[static_cast<std::size_t>(h)];
  std::map<std::size_t, CycNum> acc;
  for (const auto& [idx, c] : v) {
    const std::size_t g = idx % order;
    const MPoly img = act(mat, MPoly::monomial(slice.monos[idx / order]));
    const std::size_t hg = static_cast<std::size_t>(G.mult[static_cast<std::size_t>(h)][g]);
    for (const auto& [m, a] : img.terms()) acc[slice.index.at(m) * order + hg] += c * a;
  }
  return collect(acc);
}

inline void check_degree_zero(const SkewElement& gen) {
  for (const auto& [g, f] : gen.terms) {
    if (!f.is_constant()) throw InvalidArgument("skew: generator must have degree 0");
  }
}

}  // namespace detail

/// Graded dimensions of the two-sided ideal A gen A for d <= cutoff.
/// Degree 0 is kG gen kG; degree d is spanned by x_i v and v x_i over a
/// basis v of degree d - 1 (A is generated by A_0 and A_1).
inline GradedSeries ideal_graded_dims(const MatGroup& G, const SkewElement& gen, int cutoff) {
  detail::check_degree_zero(gen);
  const std::size_t order = G.size();
  const int n = G.dim;
  GradedSeries out(cutoff);
  if (gen.is_zero()) return out;
  detail::SkewSlice slice0(0, n);
  const SparseVec g0 = detail::to_coords(gen, slice0, order);
  EchelonBasis left;
  for (std::size_t h = 0; h < order; ++h) left.insert(detail::left_group(G, g0, static_cast<int>(h), slice0));
  EchelonBasis cur;
  for (const auto& l : left.basis()) {
    for (std::size_t h = 0; h < order; ++h) cur.insert(detail::right_group(G, l, static_cast<int>(h)));
  }
  out[0] = static_cast<std::int64_t>(cur.rank());
  bool full = static_cast<long long>(cur.rank()) == skew_piece_dim(G, 0);
  for (int d = 1; d <= cutoff; ++d) {
    if (full) {
      out[d] = skew_piece_dim(G, d);
      continue;
    }
    detail::SkewSlice from(d - 1, n);
    detail::SkewSlice to(d, n);
    const long long target = skew_piece_dim(G, d);
    EchelonBasis next;
    const auto basis = cur.basis();
    for (const auto& v : basis) {
      for (int i = 0; i < n && static_cast<long long>(next.rank()) < target; ++i) {
        next.insert(detail::left_var(v, i, from, to, order));
        next.insert(detail::right_var(G, v, i, from, to));
      }
      if (static_cast<long long>(next.rank()) == target) break;
    }
    out[d] = static_cast<std::int64_t>(next.rank());
    full = static_cast<long long>(next.rank()) == target;
    cur = std::move(next);
  }
  return out;
}

/// HS(A) with HS(A)_d = |G| dim S_d.
inline GradedSeries skew_ring_series(const MatGroup& G, int cutoff) {
  GradedSeries s(cutoff);
  for (int d = 0; d <= cutoff; ++d) s[d] = skew_piece_dim(G, d);
  return s;
}

/// HS(A / A gen A).
inline GradedSeries quotient_series(const MatGroup& G, const SkewElement& gen, int cutoff) {
  return skew_ring_series(G, cutoff) - ideal_graded_dims(G, gen, cutoff);
}

/// Graded dimensions of gen A gen, spanned by gen s l with s a monomial and
/// l running over a basis of kG gen.
inline GradedSeries corner_dims(const MatGroup& G, const SkewElement& gen, int cutoff) {
  detail::check_degree_zero(gen);
  const std::size_t order = G.size();
  const int n = G.dim;
  GradedSeries out(cutoff);
  if (gen.is_zero()) return out;
  detail::SkewSlice slice0(0, n);
  const SparseVec g0 = detail::to_coords(gen, slice0, order);
  EchelonBasis left;
  for (std::size_t h = 0; h < order; ++h) left.insert(detail::left_group(G, g0, static_cast<int>(h), slice0));
  std::vector<SkewElement> ls;
  for (const auto& v : left.basis()) {
    SkewElement l{n, {}};
    for (const auto& [idx, c] : v) l.add(static_cast<int>(idx), MPoly::constant(n, c));
    ls.push_back(std::move(l));
  }
  for (int d = 0; d <= cutoff; ++d) {
    detail::SkewSlice slice(d, n);
    EchelonBasis span;
    const long long cap = skew_piece_dim(G, d);
    for (const auto& m : slice.monos) {
      const SkewElement gs = skew_mul(G, gen, skew_poly(G, MPoly::monomial(m)));
      for (const auto& l : ls) {
        span.insert(detail::to_coords(skew_mul(G, gs, l), slice, order));
        if (static_cast<long long>(span.rank()) == cap) break;
      }
    }
    out[d] = static_cast<std::int64_t>(span.rank());
  }
  return out;
}

struct ArrangementComponent {
  int irrep = 0;
  long dim = 1;  // multiplicity of the summand
  GradedSeries series;
};

/// Isotypic pieces of S/(J): molien(chi) - t^{deg J} molien(chi * det).
inline std::vector<ArrangementComponent> arrangement_module_series(const MatGroup& G, const CharTable& t, int cutoff) {
  const auto refl = pseudo_reflections(G);
  if (!refl.all_order_two() || !is_true_reflection_group(G, refl)) {
    throw InvalidArgument("arrangement_module_series: group must be a true reflection group");
  }
  const int deg_j = static_cast<int>(refl.reflection_count());
  const ClassFunction det = det_character(G);
  std::vector<ArrangementComponent> out;
  GradedSeries total(cutoff);
  for (std::size_t i = 0; i < t.size(); ++i) {
    GradedSeries s = molien(G, t.rows[i], cutoff) - molien(G, t.rows[i] * det, cutoff).shift(deg_j);
    total += t.dims[i] * s;
    out.push_back({static_cast<int>(i), t.dims[i], std::move(s)});
  }
  GradedSeries expect = GradedSeries::polynomial_ring(G.dim, cutoff);
  expect -= expect.shift(deg_j);
  if (total != expect) throw VerificationError("arrangement_module_series: components do not add up to HS(S/(J))");
  return out;
}

struct CuspCheck {
  bool holds = false;
  int shift = 0;
  bool unique = false;
  std::vector<int> working_shifts;
  long multiplicity = 2;
  long canonical_dim = 0;
  bool canonical_irreducible = false;
  GradedSeries hs_s_mod_j;
  GradedSeries hs_t_mod_delta;
  GradedSeries hs_m;
};

/// HS(S/(J)) = HS(T/(Delta)) + 2 t^s HS(m) for S_3 in its reflection
/// representation, searching s in [-D, D].
inline CuspCheck cusp_decomposition_check(int cutoff) {
  if (cutoff < 1) throw InvalidArgument("cusp_decomposition_check: cutoff must be positive");
  const auto c = catalog("S3-refl");
  const MatGroup g = close_group(c.generators, kDefaultMaxOrder, c.name);
  CuspCheck r;
  const int wide = 2 * cutoff + 1;
  const auto degrees = invariant_degrees(g);
  int deg_j = 0;
  for (int d : degrees) deg_j += d - 1;
  GradedSeries s_mod_j = GradedSeries::polynomial_ring(2, wide);
  s_mod_j -= s_mod_j.shift(deg_j);
  const int delta = 2 * deg_j;  // deg Delta = deg J + deg z = 2 deg z for true reflection groups
  GradedSeries t_mod_delta = GradedSeries::product_inverse(degrees, wide);
  t_mod_delta -= t_mod_delta.shift(delta);
  GradedSeries m = t_mod_delta;
  m[0] -= 1;
  for (int s = -cutoff; s <= cutoff; ++s) {
    // t^s HS(m) must stay a power series
    bool negative = false;
    for (int d = 0; d < -s; ++d) negative = negative || m[d] != 0;
    if (negative) continue;
    GradedSeries rhs = t_mod_delta + 2 * m.shift(s);
    if (rhs.truncate(cutoff) == s_mod_j.truncate(cutoff)) r.working_shifts.push_back(s);
  }
  r.holds = !r.working_shifts.empty();
  r.unique = r.working_shifts.size() == 1;
  if (r.holds) r.shift = r.working_shifts.front();
  const CharTable t = character_table(g);
  const ClassFunction nat = natural_character(g);
  r.canonical_dim = g.dim;
  r.canonical_irreducible = inner_product(nat, nat, g) == CycNum(1);
  r.hs_s_mod_j = s_mod_j.truncate(cutoff);
  r.hs_t_mod_delta = t_mod_delta.truncate(cutoff);
  r.hs_m = m.truncate(cutoff);
  return r;
}

}  // namespace refnc
