#pragma once

#include <utility>
#include <vector>

#include "chss/util.hpp"

namespace chss {

// Dense rational matrix (row-major).  Sized for the small exact kernel and
// rank problems the cohomology and span computations produce; it is not a
// general-purpose linear algebra suite.
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols)
      : rows_(rows),
        cols_(cols),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)]; }
  const Rat& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)];
  }
  bool is_zero() const {
    for (const Rat& v : a_)
      if (v != 0) return false;
    return true;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> a_;
};

inline RatMat transpose(const RatMat& m) {
  RatMat t(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
  return t;
}

inline RatMat mul(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.rows()) throw internal_error("mul: shape mismatch");
  RatMat p(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      const Rat& v = a.at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < b.cols(); ++c) {
        const Rat& w = b.at(k, c);
        if (w != 0) p.at(r, c) += v * w;
      }
    }
  return p;
}

inline std::vector<Rat> apply(const RatMat& m, const std::vector<Rat>& v) {
  if (m.cols() != static_cast<int>(v.size())) throw internal_error("apply: shape mismatch");
  std::vector<Rat> out(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0 && v[static_cast<std::size_t>(c)] != 0)
        out[static_cast<std::size_t>(r)] += m.at(r, c) * v[static_cast<std::size_t>(c)];
  return out;
}

// In-place reduction to reduced row echelon form; returns the pivot columns
// (so the rank is the number of entries).
inline std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    const Rat piv = m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) /= piv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Rat f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

// Basis of the right kernel {v : m·v = 0}; each vector has length m.cols().
inline std::vector<std::vector<Rat>> nullspace(RatMat m) {
  const std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rat>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rat> v(static_cast<std::size_t>(m.cols()));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[static_cast<std::size_t>(pivots[k])] = -m.at(static_cast<int>(k), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Positive semidefiniteness of a symmetric rational matrix, decided exactly
// by diagonal-pivot Schur complements: a symmetric matrix is PSD iff every
// elimination step finds a nonnegative diagonal pivot, and whenever the
// remaining diagonal vanishes the remaining block vanishes entirely.
inline bool is_psd(RatMat m) {
  if (m.rows() != m.cols()) throw internal_error("is_psd: not square");
  std::vector<int> idx(static_cast<std::size_t>(m.rows()));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  while (!idx.empty()) {
    int p = -1;
    for (int i : idx) {
      if (m.at(i, i) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) {
      for (int i : idx)
        for (int j : idx)
          if (m.at(i, j) != 0) return false;
      return true;
    }
    if (m.at(p, p) < 0) return false;
    std::vector<int> rest;
    for (int i : idx)
      if (i != p) rest.push_back(i);
    for (int i : rest)
      for (int j : rest) m.at(i, j) -= m.at(i, p) * m.at(p, j) / m.at(p, p);
    idx = std::move(rest);
  }
  return true;
}

}  // namespace chss
