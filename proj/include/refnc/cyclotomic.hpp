#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in cyclotomic fields Q(zeta_N).
 *
 * An element is stored in the power basis 1, x, ..., x^(phi(N)-1) of
 * Q[x]/(Phi_N(x)) with x = zeta_N. Coefficient vectors are trimmed (no
 * trailing zeros), so zero is the empty vector. Any element whose
 * representation has at most a constant term is normalized to conductor 1,
 * which makes rational values independent of the field they were computed
 * in. Mixed-conductor operations promote both operands to the lcm.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "refnc/detail/expr_parser.hpp"
#include "refnc/error.hpp"

namespace refnc {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {

/// Q(zeta_n) presented as Q[x]/(Phi_n).
struct CyclotomicField {
  int conductor = 1;
  int degree = 1;                              // phi(conductor)
  std::vector<long long> modulus;              // Phi_n, ascending, monic
  std::vector<std::vector<Rational>> powers;   // x^k mod Phi_n, 0 <= k < n
};

inline std::vector<long long> cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<long long>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long long> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<long long> den = cyclotomic_polynomial(d);
    std::size_t dn = den.size() - 1;
    std::vector<long long> quot(num.size() - dn, 0);
    for (std::size_t k = num.size() - 1; k + 1 > dn; --k) {
      long long lead = num[k];
      quot[k - dn] = lead;
      for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= lead * den[i];
      if (k == dn) break;
    }
    num = std::move(quot);
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, num);
  return num;
}

inline const CyclotomicField& cyclotomic_field(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto field = std::make_unique<CyclotomicField>();
  field->conductor = n;
  field->modulus = cyclotomic_polynomial(n);
  const int deg = static_cast<int>(field->modulus.size()) - 1;
  field->degree = deg;
  field->powers.reserve(static_cast<std::size_t>(n));
  std::vector<Rational> cur(static_cast<std::size_t>(deg), 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    field->powers.push_back(cur);
    // multiply by x, then fold x^deg = -(Phi_n - x^deg)
    Rational top = cur[static_cast<std::size_t>(deg) - 1];
    for (int i = deg - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i) - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < deg; ++i) cur[static_cast<std::size_t>(i)] -= top * static_cast<long>(field->modulus[static_cast<std::size_t>(i)]);
    }
  }
  const CyclotomicField& ref = *field;
  cache.emplace(n, std::move(field));
  return ref;
}

inline void trim(std::vector<Rational>& v) {
  while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

inline std::size_t hash_rational(const Rational& q) {
  const mpz_srcptr num = q.get_num_mpz_t();
  const mpz_srcptr den = q.get_den_mpz_t();
  std::size_t h = static_cast<std::size_t>(mpz_size(num)) * 0x9e3779b97f4a7c15ULL;
  if (mpz_size(num) > 0) h ^= static_cast<std::size_t>(mpz_getlimbn(num, 0)) + 0x7f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= static_cast<std::size_t>(mpz_sgn(num) + 1) + (h << 6) + (h >> 2);
  if (mpz_size(den) > 0) h ^= static_cast<std::size_t>(mpz_getlimbn(den, 0)) + (h << 6) + (h >> 2);
  return h;
}

}  // namespace detail

/// Element of the cyclotomic field Q(zeta_N).
class CycNum {
 public:
  CycNum() = default;
  CycNum(long v) {  // NOLINT(google-explicit-constructor)
    if (v != 0) c_.emplace_back(v);
  }
  CycNum(const Rational& q) {  // NOLINT(google-explicit-constructor)
    if (sgn(q) != 0) {
      c_.push_back(q);
      c_[0].canonicalize();  // mpq_class(a, b) is not reduced on construction
    }
  }

  /// zeta_n^k for any integer k.
  static CycNum zeta(long n, long k = 1) {
    if (n <= 0) throw InvalidArgument("zeta: order must be positive");
    long e = ((k % n) + n) % n;
    const auto& f = detail::cyclotomic_field(static_cast<int>(n));
    CycNum r;
    r.conductor_ = static_cast<int>(n);
    r.c_ = f.powers[static_cast<std::size_t>(e)];
    r.normalize();
    return r;
  }

  /// Builds sum coeffs[e] zeta_n^e; coeffs may be longer than phi(n).
  static CycNum from_coeffs(int n, const std::vector<Rational>& coeffs) {
    const auto& f = detail::cyclotomic_field(n);
    CycNum r;
    r.conductor_ = n;
    r.c_ = reduce(f, coeffs);
    for (auto& q : r.c_) q.canonicalize();
    r.normalize();
    return r;
  }

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return conductor_ == 1; }
  bool is_one() const { return conductor_ == 1 && c_.size() == 1 && c_[0] == 1; }

  /// The value as a rational; throws if it is not rational.
  Rational rational() const {
    if (!is_rational()) throw InvalidArgument("CycNum::rational: value " + str() + " is not rational");
    return c_.empty() ? Rational(0) : c_[0];
  }

  /// Same value expressed in Q(zeta_m); m must be a multiple of conductor().
  CycNum promote(int m) const {
    if (m % conductor_ != 0) throw InvalidArgument("CycNum::promote: target conductor is not a multiple");
    if (m == conductor_ || is_rational()) {
      CycNum r = *this;
      if (!is_rational()) r.conductor_ = m;
      return r;
    }
    const auto& f = detail::cyclotomic_field(m);
    const int ratio = m / conductor_;
    std::vector<Rational> out(static_cast<std::size_t>(f.degree), 0);
    for (std::size_t e = 0; e < c_.size(); ++e) {
      if (sgn(c_[e]) == 0) continue;
      const std::size_t k = e * static_cast<std::size_t>(ratio);
      if (k < out.size()) {
        out[k] += c_[e];
      } else {
        const auto& p = f.powers[k % static_cast<std::size_t>(m)];
        for (std::size_t i = 0; i < out.size(); ++i) {
          if (sgn(p[i]) != 0) out[i] += c_[e] * p[i];
        }
      }
    }
    CycNum r;
    r.conductor_ = m;
    r.c_ = std::move(out);
    r.normalize();
    return r;
  }

  /// Dense power-basis coefficients in Q(zeta_m), length phi(m).
  std::vector<Rational> dense(int m) const {
    CycNum p = promote(m);
    std::vector<Rational> out(static_cast<std::size_t>(detail::cyclotomic_field(m).degree), 0);
    std::copy(p.c_.begin(), p.c_.end(), out.begin());
    return out;
  }

  /// Galois automorphism zeta_N -> zeta_N^k, gcd(k, N) = 1.
  CycNum galois(long k) const {
    if (is_rational()) return *this;
    const long n = conductor_;
    long kk = ((k % n) + n) % n;
    if (std::gcd(kk, n) != 1) throw InvalidArgument("CycNum::galois: exponent not coprime to conductor");
    const auto& f = detail::cyclotomic_field(conductor_);
    std::vector<Rational> out(static_cast<std::size_t>(f.degree), 0);
    for (std::size_t e = 0; e < c_.size(); ++e) {
      if (sgn(c_[e]) == 0) continue;
      const auto& p = f.powers[(e * static_cast<std::size_t>(kk)) % static_cast<std::size_t>(n)];
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (sgn(p[i]) != 0) out[i] += c_[e] * p[i];
      }
    }
    CycNum r;
    r.conductor_ = conductor_;
    r.c_ = std::move(out);
    r.normalize();
    return r;
  }

  /// Complex conjugation, realized as zeta_N -> zeta_N^{-1}.
  CycNum conj() const { return galois(-1); }

  CycNum inverse() const {
    if (is_zero()) throw InvalidArgument("CycNum: division by zero");
    if (is_rational()) return CycNum(Rational(1) / c_[0]);
    // Solve (a * y) = 1 as a linear system over Q in the power basis.
    const auto& f = detail::cyclotomic_field(conductor_);
    const std::size_t d = static_cast<std::size_t>(f.degree);
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, 0));
    std::vector<Rational> col(c_);
    for (std::size_t j = 0; j < d; ++j) {
      // col = a * x^j
      std::vector<Rational> shifted(j, 0);
      shifted.insert(shifted.end(), c_.begin(), c_.end());
      col = reduce(f, shifted);
      col.resize(d, 0);
      for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
    }
    m[0][d] = 1;
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t piv = c;
      while (piv < d && sgn(m[piv][c]) == 0) ++piv;
      if (piv == d) throw VerificationError("CycNum::inverse: singular multiplication map");
      std::swap(m[piv], m[c]);
      Rational inv = Rational(1) / m[c][c];
      for (std::size_t k = c; k <= d; ++k) m[c][k] *= inv;
      for (std::size_t r = 0; r < d; ++r) {
        if (r == c || sgn(m[r][c]) == 0) continue;
        Rational factor = m[r][c];
        for (std::size_t k = c; k <= d; ++k) m[r][k] -= factor * m[c][k];
      }
    }
    CycNum r;
    r.conductor_ = conductor_;
    r.c_.resize(d);
    for (std::size_t i = 0; i < d; ++i) r.c_[i] = m[i][d];
    r.normalize();
    return r;
  }

  CycNum pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum result(1);
    CycNum base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  CycNum operator-() const {
    CycNum r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
  }

  CycNum& operator+=(const CycNum& o) { return add_scaled(o, 1); }
  CycNum& operator-=(const CycNum& o) { return add_scaled(o, -1); }

  CycNum& operator*=(const CycNum& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
      c_.clear();
      conductor_ = 1;
      return *this;
    }
    if (o.is_rational()) {
      for (auto& q : c_) q *= o.c_[0];
      return *this;
    }
    if (is_rational()) {
      Rational s = c_[0];
      *this = o;
      for (auto& q : c_) q *= s;
      return *this;
    }
    if (conductor_ != o.conductor_) {
      const int m = std::lcm(conductor_, o.conductor_);
      *this = promote(m);
      return *this *= o.promote(m);
    }
    std::vector<Rational> prod(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (sgn(c_[i]) == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) {
        if (sgn(o.c_[j]) == 0) continue;
        prod[i + j] += c_[i] * o.c_[j];
      }
    }
    c_ = reduce(detail::cyclotomic_field(conductor_), prod);
    normalize();
    return *this;
  }

  CycNum& operator/=(const CycNum& o) { return *this *= o.inverse(); }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    if (a.conductor_ == b.conductor_) return a.c_ == b.c_;
    if (a.is_rational() || b.is_rational()) return false;
    const int m = std::lcm(a.conductor_, b.conductor_);
    return a.promote(m).c_ == b.promote(m).c_;
  }
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Hash of the stored coefficients. Consistent with == for values kept at
  /// one common conductor (rational values always agree).
  std::size_t hash() const {
    std::size_t h = c_.size();
    for (const auto& q : c_) h = h * 1000003ULL ^ detail::hash_rational(q);
    return h;
  }

  /// Scalar literal, e.g. "-1/2*z3 + z3^2"; "0" for zero.
  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t e = 0; e < c_.size(); ++e) {
      const Rational& q = c_[e];
      if (sgn(q) == 0) continue;
      std::string term;
      if (e == 0) {
        term = q.get_str();
      } else {
        std::string z = "z" + std::to_string(conductor_);
        if (e > 1) z += "^" + std::to_string(e);
        if (q == 1) {
          term = z;
        } else if (q == -1) {
          term = "-" + z;
        } else {
          term = q.get_str() + "*" + z;
        }
      }
      if (out.empty()) {
        out = term;
      } else if (term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

  /// Number of nonzero power-basis terms.
  std::size_t term_count() const {
    return static_cast<std::size_t>(
        std::count_if(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) != 0; }));
  }

  static CycNum parse(std::string_view text);

 private:
  static std::vector<Rational> reduce(const detail::CyclotomicField& f, const std::vector<Rational>& v) {
    const std::size_t d = static_cast<std::size_t>(f.degree);
    std::vector<Rational> out(std::min(v.size(), d));
    std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(out.size()), out.begin());
    if (v.size() <= d) {
      detail::trim(out);
      return out;
    }
    out.resize(d, 0);
    for (std::size_t k = d; k < v.size(); ++k) {
      if (sgn(v[k]) == 0) continue;
      const auto& p = f.powers[k % static_cast<std::size_t>(f.conductor)];
      for (std::size_t i = 0; i < d; ++i) {
        if (sgn(p[i]) != 0) out[i] += v[k] * p[i];
      }
    }
    detail::trim(out);
    return out;
  }

  CycNum& add_scaled(const CycNum& o, int sign) {
    if (o.is_zero()) return *this;
    if (conductor_ != o.conductor_ && !o.is_rational()) {
      if (is_rational()) {
        Rational s = c_.empty() ? Rational(0) : c_[0];
        *this = o;
        if (sign < 0) {
          for (auto& q : c_) q = -q;
        }
        if (c_.empty()) c_.emplace_back(0);
        c_[0] += s;
        normalize();
        return *this;
      }
      const int m = std::lcm(conductor_, o.conductor_);
      *this = promote(m);
      return add_scaled(o.promote(m), sign);
    }
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      if (sign > 0) {
        c_[i] += o.c_[i];
      } else {
        c_[i] -= o.c_[i];
      }
    }
    normalize();
    return *this;
  }

  void normalize() {
    detail::trim(c_);
    if (c_.size() <= 1) conductor_ = 1;
  }

  int conductor_ = 1;
  std::vector<Rational> c_;
};

enum class ArithOp { add, sub, mul, div };

/// Exact field operation; mixed conductors are promoted to their lcm.
inline CycNum cyc_arith(const CycNum& a, const CycNum& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw InvalidArgument("cyc_arith: unknown operation");
}

namespace detail {

struct ScalarPolicy {
  using value_type = CycNum;
  CycNum integer(const mpz_class& z) const { return CycNum(Rational(z)); }
  CycNum zeta(long n) const { return CycNum::zeta(n); }
  CycNum variable(long) const { throw ParseError("variables are not allowed in scalar literals"); }
  CycNum divide(const CycNum& a, const CycNum& b) const {
    if (b.is_zero()) throw ParseError("division by zero in scalar literal");
    return a / b;
  }
  CycNum power(const CycNum& b, long e) const {
    if (e < 0 && b.is_zero()) throw ParseError("zero raised to a negative power");
    return b.pow(e);
  }
  std::string_view variable_prefix() const { return {}; }
};

}  // namespace detail

inline CycNum CycNum::parse(std::string_view text) {
  return detail::ExprParser<detail::ScalarPolicy>(text, detail::ScalarPolicy{}).parse();
}

/// Multiplicative order of a root of unity; 0 if the value is not one.
inline long root_of_unity_order(const CycNum& x, long bound = 100000) {
  if (x.is_zero()) return 0;
  CycNum p = x;
  for (long k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p *= x;
  }
  return 0;
}

}  // namespace refnc

template <>
struct std::hash<refnc::CycNum> {
  std::size_t operator()(const refnc::CycNum& x) const noexcept { return x.hash(); }
};
