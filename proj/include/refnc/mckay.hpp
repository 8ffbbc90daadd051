#pragma once

/**
 * @file mckay.hpp
 * @brief McKay quivers, ADE recognition, dual graphs and fundamental cycles.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "refnc/chartab.hpp"
#include "refnc/error.hpp"
#include "refnc/graded_series.hpp"
#include "refnc/group.hpp"
#include "refnc/invariants.hpp"
#include "refnc/matrix.hpp"

namespace refnc {

struct QuiverVertex {
  std::string label;
  long dim = 1;
};

struct Quiver {
  std::vector<QuiverVertex> vertices;
  std::vector<std::vector<long>> arrows;  // arrows[i][j]: multiplicity of V_i in V_j (x) V
  int trivial_index = 0;

  std::size_t size() const { return vertices.size(); }
};

/// m_ij = <chi_i, chi_j chi_V>.
inline Quiver mckay_quiver(const MatGroup& g, const CharTable& t) {
  const ClassFunction nat = natural_character(g);
  Quiver q;
  q.trivial_index = t.trivial_index;
  const std::size_t r = t.size();
  for (std::size_t i = 0; i < r; ++i) q.vertices.push_back({"chi" + std::to_string(i), t.dims[i]});
  q.arrows.assign(r, std::vector<long>(r, 0));
  for (std::size_t j = 0; j < r; ++j) {
    const ClassFunction prod = t.rows[j] * nat;
    for (std::size_t i = 0; i < r; ++i) {
      const CycNum m = inner_product(prod, t.rows[i], g);
      if (!m.is_rational() || m.rational().get_den() != 1 || sgn(m.rational()) < 0) {
        throw VerificationError("mckay_quiver: multiplicity " + m.str() + " is not a nonnegative integer");
      }
      q.arrows[i][j] = m.rational().get_num().get_si();
    }
  }
  return q;
}

struct AdeType {
  char family = 'A';  // 'A', 'D' or 'E'
  int rank = 0;
  std::string klein_equation;

  std::string name() const { return std::string(1, family) + std::to_string(rank); }
};

inline std::string klein_equation(char family, int rank) {
  switch (family) {
    case 'A':
      return "z^2 + y^2 + x^" + std::to_string(rank + 1);
    case 'D':
      return "z^2 + x(y^2 + x^" + std::to_string(rank - 2) + ")";
    case 'E':
      if (rank == 6) return "z^2 + x^3 + y^4";
      if (rank == 7) return "z^2 + x(x^2 + y^3)";
      if (rank == 8) return "z^2 + x^3 + y^5";
      break;
    default:
      break;
  }
  throw InvalidArgument("klein_equation: unknown type");
}

namespace detail {

/// Simple graph given by adjacency lists; classifies connected trees as
/// A_n, D_n, E_6, E_7, E_8 from the degree sequence and branch lengths.
inline AdeType classify_tree(const std::vector<std::vector<int>>& adj) {
  const char* fail = "not an ADE diagram";
  const int n = static_cast<int>(adj.size());
  if (n == 0) throw VerificationError(fail);
  std::size_t edge_ends = 0;
  for (const auto& a : adj) edge_ends += a.size();
  if (edge_ends != 2 * static_cast<std::size_t>(n - 1)) throw VerificationError(fail);
  // connectivity
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw VerificationError(fail);
  std::vector<int> branch_points;
  for (int v = 0; v < n; ++v) {
    const std::size_t d = adj[static_cast<std::size_t>(v)].size();
    if (d > 3) throw VerificationError(fail);
    if (d == 3) branch_points.push_back(v);
  }
  AdeType t;
  t.rank = n;
  if (branch_points.empty()) {
    t.family = 'A';
  } else if (branch_points.size() == 1) {
    const int c = branch_points[0];
    std::vector<int> lengths;
    for (int start : adj[static_cast<std::size_t>(c)]) {
      int prev = c;
      int cur = start;
      int len = 1;
      while (adj[static_cast<std::size_t>(cur)].size() == 2) {
        const auto& nb = adj[static_cast<std::size_t>(cur)];
        const int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    if (lengths[0] == 1 && lengths[1] == 1) {
      t.family = 'D';
    } else if (lengths == std::vector<int>{1, 2, 2} || lengths == std::vector<int>{1, 2, 3} || lengths == std::vector<int>{1, 2, 4}) {
      t.family = 'E';
    } else {
      throw VerificationError(fail);
    }
  } else {
    throw VerificationError(fail);
  }
  t.klein_equation = klein_equation(t.family, t.rank);
  return t;
}

}  // namespace detail

/// Deletes the trivial vertex and matches the rest against A, D, E.
inline AdeType ade_recognize(const Quiver& q) {
  const char* fail = "not an ADE diagram";
  const std::size_t r = q.size();
  if (r < 2) throw VerificationError(fail);
  // C2: one nontrivial vertex joined to the trivial one by a double edge
  const bool two_vertex = r == 2;
  for (std::size_t i = 0; i < r; ++i) {
    if (q.arrows[i][i] != 0) throw VerificationError(fail);
    for (std::size_t j = 0; j < r; ++j) {
      if (q.arrows[i][j] != q.arrows[j][i]) throw VerificationError(fail);
      const long m = q.arrows[i][j];
      if (m < 0 || (m > 1 && !two_vertex) || m > 2) throw VerificationError(fail);
    }
  }
  std::vector<int> keep;
  for (std::size_t i = 0; i < r; ++i) {
    if (static_cast<int>(i) != q.trivial_index) keep.push_back(static_cast<int>(i));
  }
  std::vector<std::vector<int>> adj(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (a != b && q.arrows[static_cast<std::size_t>(keep[a])][static_cast<std::size_t>(keep[b])] == 1) adj[a].push_back(static_cast<int>(b));
    }
  }
  return detail::classify_tree(adj);
}

struct DualGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<long> self_intersections;  // default -2
  std::optional<std::vector<long>> multiplicities;

  std::size_t size() const { return vertices.size(); }

  std::vector<std::vector<long>> intersection_matrix() const {
    const std::size_t n = size();
    std::vector<std::vector<long>> e(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) e[i][i] = i < self_intersections.size() ? self_intersections[i] : -2;
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n || a == b) {
        throw InvalidArgument("DualGraph: bad edge");
      }
      e[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += 1;
      e[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] += 1;
    }
    return e;
  }
};

/// Dual graph of the quiver with the trivial vertex removed; vertex
/// multiplicities are the representation dimensions.
inline DualGraph dual_graph_from_quiver(const Quiver& q) {
  DualGraph g;
  std::vector<int> keep;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (static_cast<int>(i) != q.trivial_index) keep.push_back(static_cast<int>(i));
  }
  std::vector<long> dims;
  for (int v : keep) {
    g.vertices.push_back(q.vertices[static_cast<std::size_t>(v)].label);
    dims.push_back(q.vertices[static_cast<std::size_t>(v)].dim);
  }
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      const long m = q.arrows[static_cast<std::size_t>(keep[a])][static_cast<std::size_t>(keep[b])];
      for (long k = 0; k < m; ++k) g.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  g.self_intersections.assign(keep.size(), -2);
  g.multiplicities = dims;
  return g;
}

/// Z . E_i for every i.
inline std::vector<long> cycle_products(const std::vector<std::vector<long>>& e, const std::vector<long>& z) {
  std::vector<long> out(z.size(), 0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = 0; j < z.size(); ++j) out[i] += z[j] * e[j][i];
  }
  return out;
}

inline bool negative_definite(const std::vector<std::vector<long>>& e) {
  const std::size_t n = e.size();
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) m(i, j) = CycNum(-e[i][j]);
    }
    const CycNum d = determinant(m);
    if (sgn(d.rational()) <= 0) return false;
  }
  return true;
}

/// Laufer's algorithm: start at sum E_i, add E_i while Z . E_i > 0.
inline std::vector<long> fundamental_cycle(const DualGraph& g) {
  const auto e = g.intersection_matrix();
  if (g.size() == 0) throw InvalidArgument("fundamental_cycle: empty graph");
  if (!negative_definite(e)) throw InvalidArgument("fundamental_cycle: intersection matrix is not negative definite");
  std::vector<long> z(g.size(), 1);
  for (;;) {
    const auto p = cycle_products(e, z);
    auto it = std::find_if(p.begin(), p.end(), [](long v) { return v > 0; });
    if (it == p.end()) return z;
    z[static_cast<std::size_t>(it - p.begin())] += 1;
  }
}

struct CorrespondenceReport {
  Quiver quiver;
  AdeType ade;
  DualGraph graph;
  std::vector<long> cycle;
  std::vector<long> dims;           // nontrivial irreducibles, quiver order
  std::vector<GradedSeries> isotypic;  // molien(G, chi_i), all rows
  long order = 0;
};

/// Quiver, ADE type, dual graph and fundamental cycle of a small subgroup
/// of SL(2); throws unless the cycle multiplicities equal the dimensions.
inline CorrespondenceReport correspondence_report(const MatGroup& g, int cutoff = 12) {
  if (g.dim != 2 || !g.in_special_linear()) throw InvalidArgument("correspondence_report: group must lie in SL(2)");
  if (g.size() < 2) throw InvalidArgument("correspondence_report: group is trivial");
  CorrespondenceReport rep;
  rep.order = static_cast<long>(g.size());
  const CharTable t = character_table(g);
  rep.quiver = mckay_quiver(g, t);
  rep.ade = ade_recognize(rep.quiver);
  rep.graph = dual_graph_from_quiver(rep.quiver);
  rep.dims = *rep.graph.multiplicities;
  rep.cycle = fundamental_cycle(rep.graph);
  if (rep.cycle != rep.dims) {
    std::ostringstream os;
    os << "correspondence_report: fundamental cycle (";
    for (std::size_t i = 0; i < rep.cycle.size(); ++i) os << (i ? "," : "") << rep.cycle[i];
    os << ") differs from dimensions (";
    for (std::size_t i = 0; i < rep.dims.size(); ++i) os << (i ? "," : "") << rep.dims[i];
    os << ")";
    throw VerificationError(os.str());
  }
  for (const auto& row : t.rows) rep.isotypic.push_back(molien(g, row, cutoff));
  return rep;
}

/// Vertices labelled by dimension; an arrow pair i <-> j becomes one
/// double-headed edge, other multiplicities are edge labels.
inline std::string quiver_to_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph mckay {\n";
  for (std::size_t i = 0; i < q.size(); ++i) {
    os << "  v" << i << " [label=\"" << q.vertices[i].dim << "\"";
    if (static_cast<int>(i) == q.trivial_index) os << ", shape=box";
    os << "];\n";
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i; j < q.size(); ++j) {
      const long a = q.arrows[i][j];
      const long b = q.arrows[j][i];
      if (i == j) {
        if (a > 0) os << "  v" << i << " -> v" << i << (a > 1 ? " [label=\"" + std::to_string(a) + "\"]" : "") << ";\n";
        continue;
      }
      const long both = std::min(a, b);
      if (both > 0) {
        os << "  v" << i << " -> v" << j << " [dir=both" << (both > 1 ? ", label=\"" + std::to_string(both) + "\"" : "") << "];\n";
      }
      if (a > both) os << "  v" << i << " -> v" << j << (a - both > 1 ? " [label=\"" + std::to_string(a - both) + "\"]" : "") << ";\n";
      if (b > both) os << "  v" << j << " -> v" << i << (b - both > 1 ? " [label=\"" + std::to_string(b - both) + "\"]" : "") << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace refnc
