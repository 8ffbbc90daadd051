#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "refnc/error.hpp"

namespace refnc {

/// Truncated power series sum_{d <= cutoff} a_d t^d with integer
/// coefficients. Coefficients above the cutoff are unknown, not zero, so
/// binary operations insist on identical cutoffs.
class GradedSeries {
 public:
  GradedSeries() = default;
  explicit GradedSeries(int cutoff) : coeffs_(check_cutoff(cutoff) + 1, 0) {}
  GradedSeries(int cutoff, std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    check_cutoff(cutoff);
    coeffs_.resize(static_cast<std::size_t>(cutoff) + 1, 0);
  }

  /// 1 / prod_i (1 - t^{d_i}).
  static GradedSeries product_inverse(const std::vector<int>& degrees, int cutoff) {
    GradedSeries s(cutoff);
    s.coeffs_[0] = 1;
    for (int d : degrees) {
      if (d <= 0) throw InvalidArgument("GradedSeries: factor degree must be positive");
      for (int k = d; k <= cutoff; ++k) s.coeffs_[static_cast<std::size_t>(k)] += s.coeffs_[static_cast<std::size_t>(k - d)];
    }
    return s;
  }

  /// Hilbert series of a polynomial ring in n variables of degree 1.
  static GradedSeries polynomial_ring(int n, int cutoff) {
    return product_inverse(std::vector<int>(static_cast<std::size_t>(n), 1), cutoff);
  }

  int cutoff() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t operator[](int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
  std::int64_t& operator[](int d) { return coeffs_.at(static_cast<std::size_t>(d)); }

  GradedSeries truncate(int cutoff) const {
    if (cutoff > this->cutoff()) throw InvalidArgument("GradedSeries::truncate: cannot extend a truncated series");
    return GradedSeries(cutoff, std::vector<std::int64_t>(coeffs_.begin(), coeffs_.begin() + cutoff + 1));
  }

  GradedSeries& operator+=(const GradedSeries& o) {
    same_cutoff(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  GradedSeries& operator-=(const GradedSeries& o) {
    same_cutoff(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  GradedSeries& operator*=(std::int64_t s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(std::int64_t s, GradedSeries a) { return a *= s; }

  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    a.same_cutoff(b);
    GradedSeries out(a.cutoff());
    for (int i = 0; i <= a.cutoff(); ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= a.cutoff(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  }

  /// Multiplication by t^s, keeping the cutoff. A negative s needs the
  /// first -s coefficients to vanish.
  GradedSeries shift(int s) const {
    GradedSeries out(cutoff());
    for (int d = 0; d <= cutoff(); ++d) {
      const int src = d - s;
      if (src < 0) continue;
      if (src > cutoff()) break;
      out[d] = coeffs_[static_cast<std::size_t>(src)];
    }
    if (s < 0) {
      for (int d = 0; d < -s && d <= cutoff(); ++d) {
        if (coeffs_[static_cast<std::size_t>(d)] != 0) throw InvalidArgument("GradedSeries::shift: negative shift drops a nonzero coefficient");
      }
    }
    return out;
  }

  /// Exact comparison; cutoffs must agree.
  friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
    a.same_cutoff(b);
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const GradedSeries& a, const GradedSeries& b) { return !(a == b); }

  /// Comparison on the common range only; must be requested explicitly.
  bool equal_on_overlap(const GradedSeries& o) const {
    const int c = std::min(cutoff(), o.cutoff());
    for (int d = 0; d <= c; ++d) {
      if ((*this)[d] != o[d]) return false;
    }
    return true;
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) s += (i ? ", " : "") + std::to_string(coeffs_[i]);
    return s + "]";
  }

 private:
  static std::size_t check_cutoff(int cutoff) {
    if (cutoff < 0) throw InvalidArgument("GradedSeries: cutoff must be nonnegative");
    return static_cast<std::size_t>(cutoff);
  }
  void same_cutoff(const GradedSeries& o) const {
    if (cutoff() != o.cutoff()) {
      throw InvalidArgument("GradedSeries: cutoffs differ (" + std::to_string(cutoff()) + " vs " +
                            std::to_string(o.cutoff()) + ")");
    }
  }

  std::vector<std::int64_t> coeffs_{0};
};

}  // namespace refnc
