#ifndef RICCIFORGE_RATIONAL_HPP
#define RICCIFORGE_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace ricciforge {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_from_string(const std::string& s);  // "p", "p/q"
std::string rat_to_string(const Rat& r);

/// Dense matrix of exact rationals.  Row-major storage.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}

  static RatMatrix identity(int n);
  static RatMatrix diagonal(const std::vector<Rat>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator*(const Rat& s) const;
  RatMatrix transpose() const;

  bool is_zero() const;
  bool is_symmetric() const;
  Rat trace() const;
  Rat max_abs() const;

  std::vector<Rat> apply(const std::vector<Rat>& x) const;

  /// Gauss-Jordan inverse; throws std::runtime_error on singular input.
  RatMatrix inverse() const;
  /// Solves A x = b; throws on singular A.
  std::vector<Rat> solve(const std::vector<Rat>& b) const;

  int rank() const;
  /// Basis of the kernel, one vector per column of the result.
  RatMatrix nullspace() const;

  /// Exact SPD test via the LDL^T decomposition (all pivots positive).
  bool is_positive_definite() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

/// Sparse column-major matrix of exact rationals.  Each column holds
/// (row, value) pairs sorted by row; zero values are never stored.
class SparseRatMatrix {
 public:
  SparseRatMatrix() : rows_(0) {}
  SparseRatMatrix(int rows, int cols) : rows_(rows), cols_(std::vector<std::vector<std::pair<int, Rat>>>(cols)) {}

  int rows() const { return rows_; }
  int cols() const { return int(cols_.size()); }

  void add(int i, int j, const Rat& v);  // accumulates, drops zeros
  Rat get(int i, int j) const;
  const std::vector<std::pair<int, Rat>>& column(int j) const { return cols_[j]; }

  size_t nnz() const;
  bool is_zero() const;

  SparseRatMatrix operator+(const SparseRatMatrix& o) const;
  SparseRatMatrix operator-(const SparseRatMatrix& o) const;
  SparseRatMatrix operator*(const SparseRatMatrix& o) const;
  SparseRatMatrix operator*(const Rat& s) const;
  SparseRatMatrix commutator(const SparseRatMatrix& o) const;  // [this, o]

  std::vector<Rat> apply(const std::vector<Rat>& x) const;
  RatMatrix dense() const;
  static SparseRatMatrix from_dense(const RatMatrix& m);

  bool operator==(const SparseRatMatrix& o) const;

 private:
  int rows_;
  std::vector<std::vector<std::pair<int, Rat>>> cols_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& m);

/// Rank of the span of a set of row vectors.
int span_rank(const std::vector<std::vector<Rat>>& rows);

/// Reduces `rows` to a row-echelon basis of their span.
std::vector<std::vector<Rat>> span_basis(const std::vector<std::vector<Rat>>& rows);

/// True iff v lies in the span of the (echelonized) basis rows.
bool in_span(const std::vector<std::vector<Rat>>& basis, const std::vector<Rat>& v);

}  // namespace ricciforge

#endif
