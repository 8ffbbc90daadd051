#pragma once

/**
 * @file chartab.hpp
 * @brief Exact character tables and class-function arithmetic.
 *
 * character_table runs Dixon-Schneider: class-multiplication matrices are
 * simultaneously diagonalized over F_p, p = 1 mod exponent, and every value
 * is lifted to Q(zeta_e) through the eigenvalue multiplicities of the class
 * representative. Abelian groups take the dual-group route instead. Both
 * orthogonality relations are checked exactly before a table is returned.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "refnc/cyclotomic.hpp"
#include "refnc/error.hpp"
#include "refnc/group.hpp"

namespace refnc {

struct ClassFunction {
  std::vector<CycNum> values;  // indexed by conjugacy class

  std::size_t size() const { return values.size(); }
  const CycNum& operator[](std::size_t c) const { return values[c]; }

  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    check(a, b);
    ClassFunction r{a.values};
    for (std::size_t i = 0; i < r.size(); ++i) r.values[i] *= b.values[i];
    return r;
  }
  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    check(a, b);
    ClassFunction r{a.values};
    for (std::size_t i = 0; i < r.size(); ++i) r.values[i] += b.values[i];
    return r;
  }
  friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
    check(a, b);
    ClassFunction r{a.values};
    for (std::size_t i = 0; i < r.size(); ++i) r.values[i] -= b.values[i];
    return r;
  }
  friend ClassFunction operator*(const CycNum& s, const ClassFunction& a) {
    ClassFunction r{a.values};
    for (auto& v : r.values) v *= s;
    return r;
  }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) { return a.values == b.values; }

  ClassFunction conj() const {
    ClassFunction r{values};
    for (auto& v : r.values) v = v.conj();
    return r;
  }

 private:
  static void check(const ClassFunction& a, const ClassFunction& b) {
    if (a.size() != b.size()) throw InvalidArgument("ClassFunction: lengths differ");
  }
};

struct CharTable {
  std::vector<ClassFunction> rows;
  std::vector<long> dims;
  int trivial_index = 0;
  int det_index = -1;
  long exponent = 1;
  long prime = 0;  // 0 for the abelian path
  bool abelian_path = false;

  std::size_t size() const { return rows.size(); }
};

/// (1/|G|) sum_c |c| a(c) conj(b(c)).
inline CycNum inner_product(const ClassFunction& a, const ClassFunction& b, const MatGroup& g) {
  if (a.size() != b.size() || a.size() != g.class_count()) throw InvalidArgument("inner_product: lengths differ");
  CycNum s;
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c].is_zero() || b[c].is_zero()) continue;
    s += CycNum(g.class_size(c)) * a[c] * b[c].conj();
  }
  return s / CycNum(static_cast<long>(g.size()));
}

inline ClassFunction natural_character(const MatGroup& g) {
  ClassFunction f;
  for (std::size_t c = 0; c < g.class_count(); ++c) f.values.push_back(g.elements[static_cast<std::size_t>(g.class_rep(c))].trace());
  return f;
}

inline ClassFunction det_character(const MatGroup& g) {
  ClassFunction f;
  for (std::size_t c = 0; c < g.class_count(); ++c) f.values.push_back(g.det[static_cast<std::size_t>(g.class_rep(c))]);
  return f;
}

inline ClassFunction trivial_character(const MatGroup& g) { return {std::vector<CycNum>(g.class_count(), CycNum(1))}; }

inline ClassFunction regular_character(const MatGroup& g) {
  ClassFunction f{std::vector<CycNum>(g.class_count(), CycNum())};
  f.values[static_cast<std::size_t>(g.class_of[0])] = CycNum(static_cast<long>(g.size()));
  return f;
}

/// Multiplicities <chi, row_i>; throws unless all are nonnegative integers.
inline std::vector<long> decompose(const ClassFunction& chi, const CharTable& t, const MatGroup& g) {
  std::vector<long> out;
  for (const auto& row : t.rows) {
    CycNum m = inner_product(chi, row, g);
    if (!m.is_rational() || m.rational().get_den() != 1 || sgn(m.rational()) < 0) {
      throw VerificationError("decompose: multiplicity " + m.str() + " is not a nonnegative integer");
    }
    out.push_back(m.rational().get_num().get_si());
  }
  return out;
}

namespace detail {

using i64 = std::int64_t;

inline i64 mod_pow(i64 b, i64 e, i64 p) {
  i64 r = 1;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline i64 mod_inv(i64 a, i64 p) { return mod_pow(a, p - 2, p); }

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Smallest prime p = 1 mod e with p > 2 sqrt(order).
inline i64 dixon_prime(i64 e, i64 order) {
  for (i64 p = e + 1;; p += e) {
    if (p * p > 4 * order && is_prime(p)) return p;
  }
}

inline i64 primitive_root(i64 p) {
  std::vector<i64> factors;
  i64 m = p - 1;
  for (i64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (i64 g = 2; g < p; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(), [&](i64 q) { return mod_pow(g, (p - 1) / q, p) != 1; });
    if (ok) return g;
  }
  return 1;
}

using ModMat = std::vector<std::vector<i64>>;

/// Null space of an r x d matrix over F_p, columns of the result.
inline ModMat mod_kernel(ModMat a, std::size_t cols, i64 p) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const i64 inv = mod_inv(a[r][c], p);
    for (auto& v : a[r]) v = v * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const i64 f = a[i][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] = ((a[i][k] - f * a[r][k]) % p + p) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  ModMat basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<i64> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - a[i][f]) % p;
    basis.push_back(v);
  }
  return basis;
}

/// Characteristic polynomial of a square matrix over F_p (ascending
/// coefficients, monic), via Hessenberg reduction.
inline std::vector<i64> mod_charpoly(ModMat h, i64 p) {
  const std::size_t n = h.size();
  auto md = [p](i64 v) { return ((v % p) + p) % p; };
  for (std::size_t m = 1; m + 1 < n + 1 && m < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    const i64 inv = mod_inv(h[m][m - 1], p);
    for (std::size_t k = m + 1; k < n; ++k) {
      if (h[k][m - 1] == 0) continue;
      const i64 u = h[k][m - 1] * inv % p;
      for (std::size_t c = 0; c < n; ++c) h[k][c] = md(h[k][c] - u * h[m][c]);
      for (std::size_t r = 0; r < n; ++r) h[r][m] = md(h[r][m] + u * h[r][k]);
    }
  }
  // p_0 = 1, p_m = (x - h_mm) p_{m-1} - sum_i h_{i,m} prod_{j=i+1}^{m} h_{j,j-1} p_{i-1}
  std::vector<std::vector<i64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<i64> cur(m + 1, 0);
    const auto& prev = polys[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] = md(cur[k + 1] + prev[k]);
      cur[k] = md(cur[k] - h[m - 1][m - 1] * prev[k]);
    }
    i64 t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = t * h[i][i - 1] % p;
      const i64 coef = t * h[i - 1][m - 1] % p;
      if (coef != 0) {
        for (std::size_t k = 0; k < polys[i - 1].size(); ++k) cur[k] = md(cur[k] - coef * polys[i - 1][k]);
      }
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

/// Structure constants a[j][k][l] = #{x in C_j : x^-1 z_l in C_k}.
inline std::vector<ModMat> class_matrices(const MatGroup& g, i64 p) {
  const std::size_t r = g.class_count();
  std::vector<ModMat> out(r, ModMat(r, std::vector<i64>(r, 0)));
  for (std::size_t j = 0; j < r; ++j) {
    for (int x : g.classes[j]) {
      const auto& row = g.mult[static_cast<std::size_t>(g.inverse[static_cast<std::size_t>(x)])];
      for (std::size_t l = 0; l < r; ++l) {
        const int k = g.class_of[static_cast<std::size_t>(row[static_cast<std::size_t>(g.class_rep(l))])];
        out[j][static_cast<std::size_t>(k)][l] += 1;
      }
    }
    for (auto& row : out[j]) {
      for (auto& v : row) v %= p;
    }
  }
  return out;
}

/// Common eigenvectors of the class matrices over F_p.
inline std::vector<std::vector<i64>> dixon_eigenvectors(const std::vector<ModMat>& mats, i64 p) {
  const std::size_t r = mats.size();
  // each space is a list of basis columns in F_p^r
  std::vector<ModMat> spaces;
  {
    ModMat id(r, std::vector<i64>(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(id);
  }
  for (std::size_t j = 1; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const ModMat& s) { return s.size() == 1; })) break;
    std::vector<ModMat> next;
    for (const auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(basis);
        continue;
      }
      const std::size_t d = basis.size();
      // image columns M_j b
      ModMat img(d, std::vector<i64>(r, 0));
      for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t k = 0; k < r; ++k) {
          i64 s = 0;
          for (std::size_t l = 0; l < r; ++l) s = (s + mats[j][k][l] * basis[c][l]) % p;
          img[c][k] = s;
        }
      }
      // coordinates of the image in the basis: solve [basis | img] by elimination on rows
      ModMat aug(r, std::vector<i64>(2 * d, 0));
      for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t c = 0; c < d; ++c) {
          aug[k][c] = basis[c][k];
          aug[k][d + c] = img[c][k];
        }
      }
      std::size_t row = 0;
      for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = row;
        while (piv < r && aug[piv][c] == 0) ++piv;
        if (piv == r) throw VerificationError("character_table: degenerate eigenspace basis");
        std::swap(aug[piv], aug[row]);
        const i64 inv = mod_inv(aug[row][c], p);
        for (auto& v : aug[row]) v = v * inv % p;
        for (std::size_t i = 0; i < r; ++i) {
          if (i == row || aug[i][c] == 0) continue;
          const i64 f = aug[i][c];
          for (std::size_t k = 0; k < 2 * d; ++k) aug[i][k] = ((aug[i][k] - f * aug[row][k]) % p + p) % p;
        }
        ++row;
      }
      ModMat restricted(d, std::vector<i64>(d, 0));  // restricted[a][b]: coefficient of basis a in M_j basis b
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) restricted[a][b] = aug[a][d + b];
      }
      const auto cp = mod_charpoly(restricted, p);
      std::size_t found = 0;
      for (i64 lambda = 0; lambda < p && found < d; ++lambda) {
        i64 val = 0;
        for (std::size_t k = cp.size(); k-- > 0;) val = (val * lambda + cp[k]) % p;
        if (val != 0) continue;
        ModMat shifted = restricted;
        for (std::size_t a = 0; a < d; ++a) shifted[a][a] = ((shifted[a][a] - lambda) % p + p) % p;
        const auto ker = mod_kernel(shifted, d, p);
        if (ker.empty()) continue;
        ModMat sub;
        for (const auto& coords : ker) {
          std::vector<i64> v(r, 0);
          for (std::size_t c = 0; c < d; ++c) {
            if (coords[c] == 0) continue;
            for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + coords[c] * basis[c][k]) % p;
          }
          sub.push_back(v);
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != d) throw VerificationError("character_table: class matrix is not diagonalizable mod p");
    }
    spaces = std::move(next);
  }
  std::vector<std::vector<i64>> out;
  for (const auto& s : spaces) {
    if (s.size() != 1) throw VerificationError("character_table: class matrices do not separate characters");
    out.push_back(s[0]);
  }
  return out;
}

inline std::vector<Rational> dense_row(const ClassFunction& f, int e) {
  std::vector<Rational> out;
  for (const auto& v : f.values) {
    auto d = v.dense(e);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

inline void order_rows(CharTable& t, const MatGroup& g) {
  const int e = static_cast<int>(t.exponent);
  std::vector<std::size_t> idx(t.rows.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::vector<Rational>> keys;
  for (const auto& r : t.rows) keys.push_back(dense_row(r, e));
  auto is_trivial = [&](std::size_t i) {
    return std::all_of(t.rows[i].values.begin(), t.rows[i].values.end(), [](const CycNum& v) { return v.is_one(); });
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const bool ta = is_trivial(a);
    const bool tb = is_trivial(b);
    if (ta != tb) return ta;
    if (t.dims[a] != t.dims[b]) return t.dims[a] < t.dims[b];
    return keys[a] < keys[b];
  });
  CharTable sorted = t;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    sorted.rows[i] = t.rows[idx[i]];
    sorted.dims[i] = t.dims[idx[i]];
  }
  sorted.trivial_index = 0;
  sorted.det_index = -1;
  const ClassFunction det = det_character(g);
  for (std::size_t i = 0; i < sorted.rows.size(); ++i) {
    if (sorted.rows[i] == det) {
      sorted.det_index = static_cast<int>(i);
      break;
    }
  }
  t = std::move(sorted);
}

inline void verify_table(const CharTable& t, const MatGroup& g) {
  const std::size_t r = g.class_count();
  if (t.rows.size() != r) throw VerificationError("character_table: wrong number of rows");
  long dim_sq = 0;
  for (long d : t.dims) dim_sq += d * d;
  if (dim_sq != static_cast<long>(g.size())) throw VerificationError("character_table: sum of squared dimensions is not |G|");
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      CycNum ip = inner_product(t.rows[i], t.rows[j], g);
      if (ip != CycNum(i == j ? 1 : 0)) throw VerificationError("character_table: row orthogonality fails");
    }
  }
  std::vector<ClassFunction> conj_rows;
  for (const auto& row : t.rows) conj_rows.push_back(row.conj());
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t d = c; d < r; ++d) {
      CycNum s;
      for (std::size_t i = 0; i < r; ++i) s += t.rows[i][c] * conj_rows[i][d];
      const CycNum expect = c == d ? CycNum(static_cast<long>(g.size()) / g.class_size(c)) : CycNum();
      if (s != expect) throw VerificationError("character_table: column orthogonality fails");
    }
  }
  if (t.det_index < 0) throw VerificationError("character_table: determinant character missing");
}

/// Dual group of an abelian group by enumerating generator images.
/// Returns false when the search space is too large.
inline bool abelian_table(const MatGroup& g, CharTable& t) {
  const long e = g.exponent;
  std::vector<long> gen_order;
  long space = 1;
  std::vector<int> gen_index;
  for (const auto& m : g.generators) {
    const int idx = g.index_of(m);
    gen_index.push_back(idx);
    gen_order.push_back(g.order[static_cast<std::size_t>(idx)]);
    space *= gen_order.back();
    if (space > 1000000) return false;
  }
  const std::size_t n = g.size();
  std::vector<long> assign(gen_order.size(), 0);
  std::vector<long> expo(n, 0);
  for (long trial = 0; trial < space; ++trial) {
    long rem = trial;
    for (std::size_t k = 0; k < gen_order.size(); ++k) {
      assign[k] = rem % gen_order[k];
      rem /= gen_order[k];
    }
    // chi(x) = zeta_e^{expo[x]}
    expo[0] = 0;
    for (std::size_t x = 1; x < n; ++x) {
      const std::size_t k = static_cast<std::size_t>(g.parent_gen[x]);
      expo[x] = (expo[static_cast<std::size_t>(g.parent[x])] + assign[k] * (e / gen_order[k])) % e;
    }
    bool hom = true;
    for (std::size_t a = 0; a < n && hom; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (expo[static_cast<std::size_t>(g.mult[a][b])] != (expo[a] + expo[b]) % e) {
          hom = false;
          break;
        }
      }
    }
    if (!hom) continue;
    ClassFunction row;
    row.values.resize(g.class_count());
    for (std::size_t x = 0; x < n; ++x) {
      row.values[static_cast<std::size_t>(g.class_of[x])] = CycNum::zeta(e, expo[x]).promote(static_cast<int>(e));
    }
    t.rows.push_back(std::move(row));
    t.dims.push_back(1);
  }
  return t.rows.size() == n;
}

inline void dixon_table(const MatGroup& g, CharTable& t) {
  const std::size_t r = g.class_count();
  const i64 order = static_cast<i64>(g.size());
  const i64 e = g.exponent;
  const i64 p = dixon_prime(e, order);
  t.prime = p;
  const i64 root = primitive_root(p);
  const auto mats = class_matrices(g, p);
  const auto vecs = dixon_eigenvectors(mats, p);
  std::vector<std::size_t> inv_class(r);
  for (std::size_t k = 0; k < r; ++k) {
    inv_class[k] = static_cast<std::size_t>(g.class_of[static_cast<std::size_t>(g.inverse[static_cast<std::size_t>(g.class_rep(k))])]);
  }
  const std::size_t id_class = static_cast<std::size_t>(g.class_of[0]);
  // powers of each class representative, as classes
  std::vector<std::vector<std::size_t>> power_classes(r);
  for (std::size_t k = 0; k < r; ++k) {
    const int x = g.class_rep(k);
    int cur = 0;
    for (long l = 0; l < g.order[static_cast<std::size_t>(x)]; ++l) {
      power_classes[k].push_back(static_cast<std::size_t>(g.class_of[static_cast<std::size_t>(cur)]));
      cur = g.mult[static_cast<std::size_t>(cur)][static_cast<std::size_t>(x)];
    }
  }
  for (const auto& raw : vecs) {
    if (raw[id_class] == 0) throw VerificationError("character_table: eigenvector vanishes at the identity");
    const i64 s0 = mod_inv(raw[id_class], p);
    std::vector<i64> w(r);
    for (std::size_t k = 0; k < r; ++k) w[k] = raw[k] * s0 % p;
    // chi(1)^2 = |G| / sum_k w_k w_k* / |C_k|
    i64 sum = 0;
    for (std::size_t k = 0; k < r; ++k) sum = (sum + w[k] * w[inv_class[k]] % p * mod_inv(g.class_size(k) % p, p)) % p;
    if (sum == 0) throw VerificationError("character_table: zero norm for an eigenvector");
    const i64 dim_sq = order % p * mod_inv(sum, p) % p;
    i64 dim = 0;
    for (i64 d = 1; d * d <= order; ++d) {
      if (d * d % p == dim_sq) {
        dim = d;
        break;
      }
    }
    if (dim == 0) throw VerificationError("character_table: no degree fits modulo p");
    std::vector<i64> chi(r);
    for (std::size_t k = 0; k < r; ++k) chi[k] = w[k] * dim % p * mod_inv(g.class_size(k) % p, p) % p;
    ClassFunction row;
    for (std::size_t k = 0; k < r; ++k) {
      const long o = static_cast<long>(power_classes[k].size());
      const i64 w_o = mod_pow(root, (p - 1) / o, p);
      const i64 inv_o = mod_inv(o % p, p);
      std::vector<Rational> coeffs(static_cast<std::size_t>(o), 0);
      long total = 0;
      for (long i = 0; i < o; ++i) {
        i64 m = 0;
        for (long l = 0; l < o; ++l) {
          const i64 twist = mod_pow(w_o, (p - 1 - (i * l) % (p - 1)) % (p - 1), p);
          m = (m + chi[power_classes[k][static_cast<std::size_t>(l)]] * twist) % p;
        }
        m = m * inv_o % p;
        if (m > dim) throw VerificationError("character_table: eigenvalue multiplicity out of range");
        coeffs[static_cast<std::size_t>(i)] = static_cast<long>(m);
        total += static_cast<long>(m);
      }
      if (total != dim) throw VerificationError("character_table: multiplicities do not add up to the degree");
      row.values.push_back(CycNum::from_coeffs(static_cast<int>(o), coeffs).promote(static_cast<int>(e)));
    }
    t.rows.push_back(std::move(row));
    t.dims.push_back(static_cast<long>(dim));
  }
}

}  // namespace detail

/// Exact irreducible character table of a closed group.
inline CharTable character_table(const MatGroup& g, bool allow_abelian_shortcut = true) {
  CharTable t;
  t.exponent = g.exponent;
  bool done = false;
  if (allow_abelian_shortcut && g.is_abelian()) {
    t.abelian_path = true;
    done = detail::abelian_table(g, t);
    if (!done) {
      t = CharTable{};
      t.exponent = g.exponent;
    }
  }
  if (!done) {
    t.abelian_path = false;
    detail::dixon_table(g, t);
  }
  detail::order_rows(t, g);
  detail::verify_table(t, g);
  return t;
}

}  // namespace refnc
