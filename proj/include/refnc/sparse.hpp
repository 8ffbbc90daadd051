#pragma once

// Sparse vectors over Q(zeta_N) and an incremental echelon basis, used for
// spans inside large graded pieces (invariant subspaces, skew ring slices).

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "refnc/cyclotomic.hpp"

namespace refnc {

/// Sorted by coordinate, no explicit zeros.
using SparseVec = std::vector<std::pair<std::size_t, CycNum>>;

/// v - a * w
inline SparseVec sub_scaled(const SparseVec& v, const CycNum& a, const SparseVec& w) {
  SparseVec out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, -(a * w[j].second));
      ++j;
    } else {
      CycNum x = v[i].second - a * w[j].second;
      if (!x.is_zero()) out.emplace_back(v[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

/// Echelon basis grown one vector at a time. Every stored row has a leading
/// 1 at its pivot and no entries left of it.
class EchelonBasis {
 public:
  /// Remainder of v after eliminating every pivot column.
  SparseVec reduce(SparseVec v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = rows_.find(v[pos].first);
      if (it == rows_.end()) {
        ++pos;
        continue;
      }
      const std::size_t col = v[pos].first;
      CycNum f = v[pos].second;
      v = sub_scaled(v, f, it->second);
      pos = static_cast<std::size_t>(
          std::lower_bound(v.begin(), v.end(), col + 1,
                           [](const auto& e, std::size_t c) { return e.first < c; }) -
          v.begin());
    }
    return v;
  }

  /// Adds v to the span; returns true when the rank grew.
  bool insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    CycNum inv = v.front().second.inverse();
    for (auto& e : v) e.second *= inv;
    const std::size_t pivot = v.front().first;
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  std::size_t rank() const { return rows_.size(); }

  /// Clears every pivot column from every other row.
  void make_reduced() {
    for (auto& [pivot, row] : rows_) {
      SparseVec tail(row.begin() + 1, row.end());
      SparseVec reduced = reduce(std::move(tail));
      SparseVec next;
      next.reserve(reduced.size() + 1);
      next.push_back(row.front());
      next.insert(next.end(), reduced.begin(), reduced.end());
      row = std::move(next);
    }
  }

  /// Rows in increasing pivot order.
  std::vector<SparseVec> basis() const {
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    for (const auto& [pivot, row] : rows_) out.push_back(row);
    return out;
  }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    for (const auto& [pivot, row] : rows_) out.push_back(pivot);
    return out;
  }

 private:
  std::map<std::size_t, SparseVec> rows_;
};

}  // namespace refnc
