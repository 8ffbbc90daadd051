#pragma once

/**
 * @file group.hpp
 * @brief Finite matrix groups: closure, conjugacy classes, pseudo-reflections
 *        and the special linear subgroup.
 *
 * Elements are identified by exact matrix equality. All matrices of a group
 * are promoted to one field conductor (the lcm of the generator entries), so
 * the coefficient hash is consistent with equality.
 */

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "refnc/cyclotomic.hpp"
#include "refnc/error.hpp"
#include "refnc/matrix.hpp"
#include "refnc/polynomial.hpp"

namespace refnc {

inline constexpr std::size_t kDefaultMaxOrder = 10000;

struct MatGroup {
  std::string name;
  int dim = 0;
  int field_conductor = 1;
  std::vector<Matrix> generators;
  std::vector<Matrix> elements;            // elements[0] is the identity
  std::vector<int> parent;                 // BFS tree: elements[i] = elements[parent[i]] * generators[parent_gen[i]]
  std::vector<int> parent_gen;
  std::vector<std::vector<int>> mult;      // mult[a][b] = index of elements[a] * elements[b]
  std::vector<int> inverse;
  std::vector<long> order;
  long exponent = 1;
  std::vector<std::vector<int>> classes;   // ordered by (size, smallest index)
  std::vector<int> class_of;
  std::vector<CycNum> det;                 // per element

  std::size_t size() const { return elements.size(); }
  std::size_t class_count() const { return classes.size(); }
  int class_rep(std::size_t c) const { return classes[c].front(); }
  long class_size(std::size_t c) const { return static_cast<long>(classes[c].size()); }

  int power(int x, long k) const {
    long e = ((k % order[static_cast<std::size_t>(x)]) + order[static_cast<std::size_t>(x)]) % order[static_cast<std::size_t>(x)];
    int r = 0;
    for (long i = 0; i < e; ++i) r = mult[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)];
    return r;
  }

  bool is_abelian() const {
    return std::all_of(classes.begin(), classes.end(), [](const auto& c) { return c.size() == 1; });
  }

  bool in_special_linear() const {
    return std::all_of(det.begin(), det.end(), [](const CycNum& d) { return d.is_one(); });
  }

  /// Index of m in the group, or -1.
  int index_of(const Matrix& m) const {
    if (m.rows() != static_cast<std::size_t>(dim) || m.cols() != static_cast<std::size_t>(dim)) return -1;
    if (field_conductor % m.conductor() != 0) return -1;
    Matrix p = m.promote(field_conductor);
    auto range = lookup_.equal_range(p.hash());
    for (auto it = range.first; it != range.second; ++it) {
      if (elements[static_cast<std::size_t>(it->second)] == p) return it->second;
    }
    return -1;
  }

  void rebuild_lookup() {
    lookup_.clear();
    for (std::size_t i = 0; i < elements.size(); ++i) lookup_.emplace(elements[i].hash(), static_cast<int>(i));
  }

 private:
  std::unordered_multimap<std::size_t, int> lookup_;
};

/// Orbit partition under conjugation, classes ordered by (size, smallest
/// element index), indices ascending inside each class.
inline std::vector<std::vector<int>> conjugacy_classes(const MatGroup& g) {
  const std::size_t n = g.size();
  std::vector<int> seen(n, -1);
  std::vector<std::vector<int>> classes;
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x] >= 0) continue;
    std::vector<int> cls;
    for (std::size_t h = 0; h < n; ++h) {
      const int y = g.mult[static_cast<std::size_t>(g.mult[h][x])][static_cast<std::size_t>(g.inverse[h])];
      if (seen[static_cast<std::size_t>(y)] < 0) {
        seen[static_cast<std::size_t>(y)] = static_cast<int>(classes.size());
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return classes;
}

namespace detail {

inline void finish_group(MatGroup& g) {
  const std::size_t n = g.size();
  g.rebuild_lookup();
  // right multiplication by generators, then the full table via the BFS tree
  std::vector<std::vector<int>> right(n, std::vector<int>(g.generators.size()));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t k = 0; k < g.generators.size(); ++k) {
      int y = g.index_of(g.elements[x] * g.generators[k]);
      if (y < 0) throw VerificationError("close_group: element set is not closed");
      right[x][k] = y;
    }
  }
  g.mult.assign(n, std::vector<int>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    g.mult[a][0] = static_cast<int>(a);
    for (std::size_t b = 1; b < n; ++b) {
      const int left = g.mult[a][static_cast<std::size_t>(g.parent[b])];
      g.mult[a][b] = right[static_cast<std::size_t>(left)][static_cast<std::size_t>(g.parent_gen[b])];
    }
  }
  g.inverse.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.mult[a][b] == 0) {
        g.inverse[a] = static_cast<int>(b);
        break;
      }
    }
    if (g.inverse[a] < 0) throw VerificationError("close_group: element without inverse");
  }
  g.order.assign(n, 0);
  g.exponent = 1;
  for (std::size_t a = 0; a < n; ++a) {
    long k = 1;
    int p = static_cast<int>(a);
    while (p != 0) {
      p = g.mult[static_cast<std::size_t>(p)][a];
      ++k;
    }
    g.order[a] = k;
    g.exponent = std::lcm(g.exponent, k);
  }
  g.classes = conjugacy_classes(g);
  g.class_of.assign(n, 0);
  for (std::size_t c = 0; c < g.classes.size(); ++c) {
    for (int x : g.classes[c]) g.class_of[static_cast<std::size_t>(x)] = static_cast<int>(c);
  }
  g.det.assign(n, CycNum());
  for (std::size_t c = 0; c < g.classes.size(); ++c) {
    CycNum d = determinant(g.elements[static_cast<std::size_t>(g.class_rep(c))]);
    for (int x : g.classes[c]) g.det[static_cast<std::size_t>(x)] = d;
  }
}

}  // namespace detail

/// Closes the group generated by the given invertible square matrices.
/// Elements are listed in BFS order from the identity, trying generators in
/// the given order. Throws NonFiniteError once more than max_order elements
/// appear.
inline MatGroup close_group(const std::vector<Matrix>& gens, std::size_t max_order = kDefaultMaxOrder,
                            std::string name = {}) {
  if (gens.empty()) throw InvalidArgument("close_group: need at least one generator");
  const std::size_t n = gens[0].rows();
  int conductor = 1;
  for (const auto& m : gens) {
    if (!m.is_square() || m.rows() != n) throw InvalidArgument("close_group: generators must be square of equal size");
    if (determinant(m).is_zero()) throw InvalidArgument("close_group: generator is singular");
    conductor = std::lcm(conductor, m.conductor());
  }
  MatGroup g;
  g.name = std::move(name);
  g.dim = static_cast<int>(n);
  g.field_conductor = conductor;
  for (const auto& m : gens) g.generators.push_back(m.promote(conductor));

  std::unordered_multimap<std::size_t, int> index;
  auto find = [&](const Matrix& m, std::size_t h) {
    auto range = index.equal_range(h);
    for (auto it = range.first; it != range.second; ++it) {
      if (g.elements[static_cast<std::size_t>(it->second)] == m) return it->second;
    }
    return -1;
  };
  g.elements.push_back(Matrix::identity(n).promote(conductor));
  g.parent.push_back(-1);
  g.parent_gen.push_back(-1);
  index.emplace(g.elements[0].hash(), 0);
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (std::size_t k = 0; k < g.generators.size(); ++k) {
      Matrix y = g.elements[head] * g.generators[k];
      const std::size_t h = y.hash();
      if (find(y, h) >= 0) continue;
      if (g.elements.size() >= max_order) {
        throw NonFiniteError("close_group: more than " + std::to_string(max_order) +
                             " elements; group is infinite or too large");
      }
      index.emplace(h, static_cast<int>(g.elements.size()));
      g.elements.push_back(std::move(y));
      g.parent.push_back(static_cast<int>(head));
      g.parent_gen.push_back(static_cast<int>(k));
    }
  }
  detail::finish_group(g);
  return g;
}

inline MatGroup trivial_group(int n) {
  return close_group({Matrix::identity(static_cast<std::size_t>(n))}, 1, "trivial");
}

/// One mirror of a pseudo-reflection group.
struct Mirror {
  std::vector<CycNum> coeffs;   // l_H = sum coeffs[i] x_i, first nonzero coefficient 1
  MPoly linear_form;
  long rho = 1;                 // order of the pointwise stabilizer of H
  std::vector<int> reflections; // element indices with this mirror
};

struct ReflectionData {
  std::vector<Mirror> mirrors;

  std::size_t reflection_count() const {
    std::size_t k = 0;
    for (const auto& m : mirrors) k += m.reflections.size();
    return k;
  }
  bool all_order_two() const {
    return std::all_of(mirrors.begin(), mirrors.end(), [](const Mirror& m) { return m.rho == 2; });
  }
};

/// Elements with rank(g - I) = 1 grouped by mirror. The form l_H spans the
/// image of g - I on S_1 = V; it is the eigenvector of g on linear forms
/// with eigenvalue != 1, and it vanishes on the mirror in the dual picture.
inline ReflectionData pseudo_reflections(const MatGroup& g) {
  ReflectionData data;
  const std::size_t n = static_cast<std::size_t>(g.dim);
  const Matrix id = Matrix::identity(n);
  for (std::size_t x = 1; x < g.size(); ++x) {
    Matrix d = g.elements[x] - id;
    if (rank(d) != 1) continue;
    std::vector<CycNum> v(n);
    for (std::size_t j = 0; j < n && v == std::vector<CycNum>(n); ++j) {
      for (std::size_t i = 0; i < n; ++i) v[i] = d(i, j);
    }
    CycNum lead;
    for (const auto& c : v) {
      if (!c.is_zero()) {
        lead = c;
        break;
      }
    }
    CycNum inv = lead.inverse();
    for (auto& c : v) c *= inv;
    auto it = std::find_if(data.mirrors.begin(), data.mirrors.end(), [&](const Mirror& m) { return m.coeffs == v; });
    if (it == data.mirrors.end()) {
      Mirror m;
      m.coeffs = v;
      m.linear_form = MPoly::linear_form(v);
      data.mirrors.push_back(std::move(m));
      it = data.mirrors.end() - 1;
    }
    it->reflections.push_back(static_cast<int>(x));
    it->rho = std::max(it->rho, g.order[x]);
  }
  for (const auto& m : data.mirrors) {
    if (static_cast<std::size_t>(m.rho) != m.reflections.size() + 1) {
      throw VerificationError("pseudo_reflections: mirror stabilizer is not cyclic of the expected order");
    }
  }
  return data;
}

namespace detail {

/// Indices of the subgroup generated by the given element indices.
inline std::vector<int> generated_subgroup(const MatGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.size(), 0);
  std::vector<int> members{0};
  in[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (int s : gens) {
      const int y = g.mult[static_cast<std::size_t>(members[head])][static_cast<std::size_t>(s)];
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace detail

/// True when the group is generated by its pseudo-reflections.
inline bool is_reflection_group(const MatGroup& g, const ReflectionData& refl) {
  std::vector<int> gens;
  for (const auto& m : refl.mirrors) gens.insert(gens.end(), m.reflections.begin(), m.reflections.end());
  return detail::generated_subgroup(g, gens).size() == g.size();
}

/// True when generated by reflections of order 2.
inline bool is_true_reflection_group(const MatGroup& g, const ReflectionData& refl) {
  std::vector<int> gens;
  for (const auto& m : refl.mirrors) {
    for (int x : m.reflections) {
      if (g.order[static_cast<std::size_t>(x)] == 2) gens.push_back(x);
    }
  }
  return detail::generated_subgroup(g, gens).size() == g.size();
}

struct SpecialSubgroup {
  MatGroup group;               // Gamma = G intersect SL(V), re-indexed
  std::vector<int> embedding;   // Gamma index -> G index
  std::size_t quotient_order = 1;
};

/// Gamma = G intersect SL(V) and the order of G / Gamma.
inline SpecialSubgroup sl_subgroup(const MatGroup& g) {
  std::vector<int> members;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (g.det[x].is_one()) members.push_back(static_cast<int>(x));
  }
  // greedy generating set over indices, then re-close with matrices
  std::vector<int> gens;
  std::vector<int> current{0};
  for (int x : members) {
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    gens.push_back(x);
    current = detail::generated_subgroup(g, gens);
  }
  std::vector<Matrix> mats;
  for (int x : gens) mats.push_back(g.elements[static_cast<std::size_t>(x)]);
  if (mats.empty()) mats.push_back(g.elements[0]);
  SpecialSubgroup out;
  out.group = close_group(mats, g.size(), g.name.empty() ? std::string() : g.name + " cap SL");
  for (const auto& m : out.group.elements) {
    const int idx = g.index_of(m);
    if (idx < 0 || !g.det[static_cast<std::size_t>(idx)].is_one()) throw VerificationError("sl_subgroup: element escaped G cap SL");
    out.embedding.push_back(idx);
  }
  if (out.group.size() != members.size()) throw VerificationError("sl_subgroup: closure size mismatch");
  out.quotient_order = g.size() / out.group.size();
  return out;
}

}  // namespace refnc
