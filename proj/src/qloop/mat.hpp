#pragma once
// Sparse exact matrices over Rat.  Stored entries are always nonzero, so
// emptiness means the zero matrix and map equality is semantic equality.

#include "qloop/rat.hpp"

#include <map>
#include <utility>

namespace qloop {

struct Mat {
  int rows = 0, cols = 0;
  std::map<std::pair<int, int>, Rat> e;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c) {}

  static Mat eye(int n);

  Rat get(int r, int c) const;
  void set(int r, int c, const Rat& v);
  void add_to(int r, int c, const Rat& v);

  bool is_zero() const { return e.empty(); }

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scale(const Rat& s) const;
  Mat transpose() const;
};

// Kronecker product; index (i, j) of the product is i * B.dim + j.
Mat kron(const Mat& A, const Mat& B);

// Embed a two-factor operator R (dimension N^2) into an nfac-fold tensor
// power of C^N, acting on factor positions p1 and p2 (0-based, distinct).
Mat embed_pair(const Mat& R, int N, int nfac, int p1, int p2);

// Flip operator P(x tensor y) = y tensor x on C^N tensor C^N.
Mat flip_op(int N);

// Entrywise substitution.
Mat mat_subst(const Mat& M, const std::map<int, Rat>& vals);

// Exact inverse of a square matrix via connected-component decomposition
// plus dense elimination per block; throws pole_error when singular.
Mat inverse(const Mat& M);

// True when M is a scalar multiple of the identity; the scalar lands in out.
bool is_scalar_mat(const Mat& M, Rat* out = nullptr);

}  // namespace qloop
