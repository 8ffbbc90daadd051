#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse multivariate polynomials over Q(zeta_N).
 *
 * Terms are kept in a map ordered by the graded lexicographic order, highest
 * term first, so iteration order is printing order and the first term is the
 * leading term used by exact division.
 *
 * Group action: a matrix g acts on S = k[x_1..x_n] through its action on
 * S_1 = V, where x_j is the j-th basis vector, i.e. g(x_j) = sum_i g_ij x_i.
 * Then g(f(x_1, ..., x_n)) = f(g(x_1), ..., g(x_n)) and act(gh, f) equals
 * act(g, act(h, f)).
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "refnc/cyclotomic.hpp"
#include "refnc/detail/expr_parser.hpp"
#include "refnc/error.hpp"
#include "refnc/matrix.hpp"

namespace refnc {

using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

/// Strict "comes first" relation of the graded lexicographic order:
/// higher total degree first, ties broken by lexicographically larger
/// exponent vector.
struct DeglexFirst {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// All monomials of total degree d in nvars variables, deglex order.
inline std::vector<Monomial> graded_piece_basis(int d, int nvars) {
  if (d < 0) throw InvalidArgument("graded_piece_basis: negative degree");
  if (nvars <= 0) throw InvalidArgument("graded_piece_basis: need at least one variable");
  std::vector<Monomial> out;
  Monomial cur(static_cast<std::size_t>(nvars), 0);
  // Recursive fill: first variable takes the largest exponent first.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      cur[static_cast<std::size_t>(var)] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[static_cast<std::size_t>(var)] = e;
      self(self, var + 1, remaining - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Number of monomials of degree d in n variables, C(d + n - 1, n - 1).
inline long long graded_piece_dim(int d, int n) {
  if (d < 0) return 0;
  long long r = 1;
  for (int i = 1; i < n; ++i) r = r * (d + i) / i;
  return r;
}

class MPoly {
 public:
  using TermMap = std::map<Monomial, CycNum, DeglexFirst>;

  MPoly() = default;
  explicit MPoly(int nvars) : nvars_(nvars) {}

  static MPoly constant(int nvars, const CycNum& c) {
    MPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Monomial(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }

  static MPoly variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw InvalidArgument("MPoly::variable: index out of range");
    Monomial m(static_cast<std::size_t>(nvars), 0);
    m[static_cast<std::size_t>(index)] = 1;
    return monomial(m);
  }

  static MPoly monomial(const Monomial& m, const CycNum& c = CycNum(1)) {
    MPoly p(static_cast<int>(m.size()));
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
  }

  /// sum_i coeffs[i] x_i
  static MPoly linear_form(const std::vector<CycNum>& coeffs) {
    const int n = static_cast<int>(coeffs.size());
    MPoly p(n);
    for (int i = 0; i < n; ++i) {
      if (coeffs[static_cast<std::size_t>(i)].is_zero()) continue;
      Monomial m(static_cast<std::size_t>(n), 0);
      m[static_cast<std::size_t>(i)] = 1;
      p.terms_.emplace(std::move(m), coeffs[static_cast<std::size_t>(i)]);
    }
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }

  CycNum constant_term() const {
    auto it = terms_.find(Monomial(static_cast<std::size_t>(nvars_), 0));
    return it == terms_.end() ? CycNum() : it->second;
  }

  CycNum coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CycNum() : it->second;
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return total_degree(t.first) == d; });
  }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw InvalidArgument("MPoly: zero polynomial has no leading term");
    return terms_.begin()->first;
  }
  const CycNum& leading_coeff() const {
    if (terms_.empty()) throw InvalidArgument("MPoly: zero polynomial has no leading term");
    return terms_.begin()->second;
  }

  void add_term(const Monomial& m, const CycNum& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MPoly& operator*=(const CycNum& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const CycNum& s) { return a *= s; }
  friend MPoly operator*(const CycNum& s, MPoly a) { return a *= s; }
  MPoly operator-() const { return *this * CycNum(-1); }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check(b);
    MPoly out(a.nvars_);
    Monomial m(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        out.add_term(m, ca * cb);
      }
    }
    return out;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(int e) const {
    if (e < 0) throw InvalidArgument("MPoly::pow: negative exponent");
    MPoly result = constant(nvars_, CycNum(1));
    MPoly base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  MPoly derivative(int var) const {
    if (var < 0 || var >= nvars_) throw InvalidArgument("MPoly::derivative: variable out of range");
    MPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
      const int e = m[static_cast<std::size_t>(var)];
      if (e == 0) continue;
      Monomial d = m;
      d[static_cast<std::size_t>(var)] = e - 1;
      out.add_term(d, c * CycNum(static_cast<long>(e)));
    }
    return out;
  }

  /// Homogeneous component of degree d.
  MPoly component(int d) const {
    MPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
      if (total_degree(m) == d) out.terms_.emplace(m, c);
    }
    return out;
  }

  /// Substitutes polynomials (all in the same ring) for the variables.
  MPoly substitute(const std::vector<MPoly>& values) const {
    if (static_cast<int>(values.size()) != nvars_) throw InvalidArgument("MPoly::substitute: wrong number of values");
    if (values.empty()) return *this;
    const int target_vars = values[0].nvars();
    std::vector<std::vector<MPoly>> powers(values.size());
    auto power_of = [&](std::size_t var, int e) -> const MPoly& {
      auto& cache = powers[var];
      if (cache.empty()) cache.push_back(constant(target_vars, CycNum(1)));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * values[var]);
      return cache[static_cast<std::size_t>(e)];
    };
    MPoly out(target_vars);
    for (const auto& [m, c] : terms_) {
      MPoly term = constant(target_vars, c);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] > 0) term *= power_of(i, m[i]);
      }
      out += term;
    }
    return out;
  }

  /// Exact quotient a / b, or nullopt when b does not divide a.
  friend std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
    a.check(b);
    if (b.is_zero()) throw InvalidArgument("divide_exact: division by zero polynomial");
    MPoly rem = a;
    MPoly quot(a.nvars_);
    const Monomial& lb = b.leading_monomial();
    const CycNum lc_inv = b.leading_coeff().inverse();
    Monomial q(static_cast<std::size_t>(a.nvars_));
    while (!rem.is_zero()) {
      const Monomial& lr = rem.leading_monomial();
      for (std::size_t i = 0; i < q.size(); ++i) {
        q[i] = lr[i] - lb[i];
        if (q[i] < 0) return std::nullopt;
      }
      CycNum c = rem.leading_coeff() * lc_inv;
      quot.add_term(q, c);
      MPoly step = monomial(q, c) * b;
      rem -= step;
    }
    return quot;
  }

  /// Least common conductor of the coefficients.
  int conductor() const {
    int n = 1;
    for (const auto& [m, c] : terms_) n = std::lcm(n, c.conductor());
    return n;
  }

  /// Polynomial literal, e.g. "x1^2*x2 - 3/2*x3"; "0" for zero.
  std::string str(std::string_view var_prefix = "x") const;

  /// Parses a literal in variables <prefix>1 .. <prefix>nvars.
  static MPoly parse(std::string_view text, int nvars, std::string_view var_prefix = "x");

 private:
  void check(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw InvalidArgument("MPoly: operands live in different rings");
  }

  int nvars_ = 0;
  TermMap terms_;
};

inline std::string MPoly::str(std::string_view var_prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += std::string(var_prefix) + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string term;
    // a single-term coefficient carries its sign outside
    bool negative = false;
    if (c.term_count() == 1) {
      for (const auto& q : c.coeffs()) {
        if (sgn(q) != 0) negative = sgn(q) < 0;
      }
    }
    const CycNum coef = negative ? -c : c;
    std::string cs = coef.str();
    if (mono.empty()) {
      term = coef.term_count() > 1 ? "(" + cs + ")" : cs;
    } else if (coef.is_one()) {
      term = mono;
    } else if (coef.term_count() > 1) {
      term = "(" + cs + ")*" + mono;
    } else {
      term = cs + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
  }
  return out;
}

namespace detail {

struct PolyPolicy {
  using value_type = MPoly;
  int nvars;
  std::string prefix;
  MPoly integer(const mpz_class& z) const { return MPoly::constant(nvars, CycNum(Rational(z))); }
  MPoly zeta(long n) const { return MPoly::constant(nvars, CycNum::zeta(n)); }
  MPoly variable(long idx) const {
    if (idx < 1 || idx > nvars) {
      throw ParseError("variable " + prefix + std::to_string(idx) + " out of range (ring has " +
                       std::to_string(nvars) + " variables)");
    }
    return MPoly::variable(nvars, static_cast<int>(idx - 1));
  }
  MPoly divide(const MPoly& a, const MPoly& b) const {
    if (!b.is_constant() || b.is_zero()) throw ParseError("division only by nonzero scalars");
    return a * b.constant_term().inverse();
  }
  MPoly power(const MPoly& b, long e) const {
    if (e < 0) {
      if (!b.is_constant() || b.is_zero()) throw ParseError("negative powers only of nonzero scalars");
      return MPoly::constant(nvars, b.constant_term().pow(e));
    }
    return b.pow(static_cast<int>(e));
  }
  std::string_view variable_prefix() const { return prefix; }
};

}  // namespace detail

inline MPoly MPoly::parse(std::string_view text, int nvars, std::string_view var_prefix) {
  if (nvars <= 0) throw InvalidArgument("MPoly::parse: need at least one variable");
  detail::PolyPolicy policy{nvars, std::string(var_prefix)};
  return detail::ExprParser<detail::PolyPolicy>(text, policy).parse();
}

/// Applies g to f: x_j -> sum_i g_ij x_i.
inline MPoly act(const Matrix& g, const MPoly& f) {
  const int n = f.nvars();
  if (static_cast<int>(g.rows()) != n || static_cast<int>(g.cols()) != n) {
    throw InvalidArgument("act: matrix is " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()) +
                          " but the ring has " + std::to_string(n) + " variables");
  }
  if (f.is_constant()) return f;
  std::vector<MPoly> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<CycNum> col(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = g(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    images.push_back(MPoly::linear_form(col));
  }
  return f.substitute(images);
}

namespace detail {

inline MPoly cofactor_det(const std::vector<std::vector<MPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  MPoly acc(m[0][0].nvars());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MPoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    MPoly term = m[0][j] * cofactor_det(minor);
    if (j % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

// Fraction-free elimination; every division is exact in the polynomial ring.
inline MPoly bareiss_det(std::vector<std::vector<MPoly>> m) {
  const std::size_t n = m.size();
  const int nv = m[0][0].nvars();
  MPoly prev = MPoly::constant(nv, CycNum(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return MPoly(nv);
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw VerificationError("bareiss_det: inexact division");
        m[i][j] = std::move(*q);
      }
    }
    prev = m[k][k];
  }
  MPoly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

}  // namespace detail

/// Determinant of a square matrix of polynomials. Cofactor expansion up to
/// 4x4, fraction-free elimination above.
inline MPoly poly_det(const std::vector<std::vector<MPoly>>& m) {
  if (m.empty()) throw InvalidArgument("poly_det: empty matrix");
  for (const auto& row : m) {
    if (row.size() != m.size()) throw InvalidArgument("poly_det: matrix is not square");
  }
  return m.size() <= 4 ? detail::cofactor_det(m) : detail::bareiss_det(m);
}

/// det(d f_i / d x_j).
inline MPoly jacobian_det(const std::vector<MPoly>& fs) {
  if (fs.empty()) throw InvalidArgument("jacobian_det: empty list");
  const int n = fs[0].nvars();
  if (static_cast<int>(fs.size()) != n) {
    throw InvalidArgument("jacobian_det: need exactly as many polynomials as variables");
  }
  std::vector<std::vector<MPoly>> jac(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].nvars() != n) throw InvalidArgument("jacobian_det: polynomials live in different rings");
    for (int j = 0; j < n; ++j) jac[i].push_back(fs[i].derivative(j));
  }
  return poly_det(jac);
}

/// Power sum x_1^d + ... + x_n^d.
inline MPoly power_sum(int nvars, int d) {
  MPoly p(nvars);
  for (int i = 0; i < nvars; ++i) {
    Monomial m(static_cast<std::size_t>(nvars), 0);
    m[static_cast<std::size_t>(i)] = d;
    p.add_term(m, CycNum(1));
  }
  return p;
}

}  // namespace refnc
