#pragma once

// Exact linear algebra over Gaussian rationals: sparse Gaussian elimination
// for rank / kernel dimension / consistency, and a small dense matrix type
// for structure maps.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace lira {

// Sorted (column, value) pairs; values nonzero.
using SparseVec = std::vector<std::pair<int, Scalar>>;

inline void sv_normalize(SparseVec& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [c, s] : v) {
    if (!out.empty() && out.back().first == c)
      out.back().second += s;
    else
      out.emplace_back(c, s);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& e) { return e.second.is_zero(); }),
            out.end());
  v = std::move(out);
}

// v -= f * w
inline void sv_axpy(SparseVec& v, const Scalar& f, const SparseVec& w) {
  SparseVec out;
  out.reserve(v.size() + w.size());
  size_t a = 0, b = 0;
  while (a < v.size() || b < w.size()) {
    if (b == w.size() || (a < v.size() && v[a].first < w[b].first)) {
      out.push_back(v[a++]);
    } else if (a == v.size() || w[b].first < v[a].first) {
      Scalar s = -(f * w[b].second);
      if (!s.is_zero()) out.emplace_back(w[b].first, std::move(s));
      ++b;
    } else {
      Scalar s = v[a].second - f * w[b].second;
      if (!s.is_zero()) out.emplace_back(v[a].first, std::move(s));
      ++a;
      ++b;
    }
  }
  v = std::move(out);
}

class SparseMat {
 public:
  explicit SparseMat(int cols) : cols_(cols) {}

  int cols() const { return cols_; }
  size_t row_count() const { return rows_.size(); }

  void add_row(SparseVec v) {
    sv_normalize(v);
    if (!v.empty()) rows_.push_back(std::move(v));
  }

  // Forward elimination; returns the rank. Destructive.
  int rank() && { return eliminate(); }
  int rank() const& {
    SparseMat copy = *this;
    return copy.eliminate();
  }

 private:
  int cols_;
  std::vector<SparseVec> rows_;

  int eliminate() {
    // Bucket rows by leading column; repeatedly pick the sparsest row of the
    // lowest occupied column as pivot and eliminate that column elsewhere.
    int rank = 0;
    std::vector<std::vector<SparseVec>> bucket((size_t)cols_);
    for (auto& r : rows_) {
      if (!r.empty()) bucket[(size_t)r.front().first].push_back(std::move(r));
    }
    rows_.clear();
    for (int col = 0; col < cols_; ++col) {
      auto& rows = bucket[(size_t)col];
      if (rows.empty()) continue;
      size_t best = 0;
      for (size_t k = 1; k < rows.size(); ++k)
        if (rows[k].size() < rows[best].size()) best = k;
      SparseVec pivot = std::move(rows[best]);
      rows.erase(rows.begin() + (long)best);
      Scalar inv = Scalar(1) / pivot.front().second;
      for (auto& [c, s] : pivot) s *= inv;
      ++rank;
      for (auto& r : rows) {
        sv_axpy(r, r.front().second, pivot);
        if (!r.empty()) bucket[(size_t)r.front().first].push_back(std::move(r));
      }
      rows.clear();
      bucket[(size_t)col] = {};
    }
    return rank;
  }
};

// Dense matrix over exact scalars, for structure maps and operators.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Scalar> a;  // row-major

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a((size_t)r * (size_t)c) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = Scalar(1);
    return m;
  }

  Scalar& at(int r, int c) { return a[(size_t)r * (size_t)cols + (size_t)c]; }
  const Scalar& at(int r, int c) const { return a[(size_t)r * (size_t)cols + (size_t)c]; }

  bool is_identity() const {
    if (rows != cols) return false;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (at(r, c) != (r == c ? Scalar(1) : Scalar(0))) return false;
    return true;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch in product");
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        if (x.at(i, k).is_zero()) continue;
        for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return r;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
};

}  // namespace lira
