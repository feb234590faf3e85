#include "ricciforge/rational.hpp"

#include <algorithm>
#include <sstream>

namespace ricciforge {

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rat r(s);
      r.canonicalize();
      return r;
    }
    Rat r(s.substr(0, slash) + "/" + s.substr(slash + 1));
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse rational: " + s);
  }
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rat>& d) {
  RatMatrix m(int(d.size()), int(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m(int(i), int(i)) = d[i];
  return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix size mismatch");
  RatMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& v = (*this)(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o(k, j) == 0) continue;
        r(i, j) += v * o(k, j);
      }
    }
  return r;
}

RatMatrix RatMatrix::operator*(const Rat& s) const {
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool RatMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Rat RatMatrix::trace() const {
  Rat t(0);
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Rat RatMatrix::max_abs() const {
  Rat m(0);
  for (const auto& v : a_) {
    Rat av = abs(v);
    if (av > m) m = av;
  }
  return m;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& x) const {
  if (int(x.size()) != cols_) throw std::invalid_argument("vector size mismatch");
  std::vector<Rat> y(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

namespace {

// Gauss-Jordan on [A | B]; returns false if A singular.
bool gauss_jordan(RatMatrix& A, RatMatrix& B) {
  int n = A.rows();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (A(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        swap(A(piv, j), A(col, j));
      }
    if (piv != col)
      for (int j = 0; j < B.cols(); ++j) swap(B(piv, j), B(col, j));
    Rat inv = 1 / A(col, col);
    for (int j = 0; j < n; ++j) A(col, j) *= inv;
    for (int j = 0; j < B.cols(); ++j) B(col, j) *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || A(r, col) == 0) continue;
      Rat f = A(r, col);
      for (int j = 0; j < n; ++j) A(r, j) -= f * A(col, j);
      for (int j = 0; j < B.cols(); ++j) B(r, j) -= f * B(col, j);
    }
  }
  return true;
}

}  // namespace

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  RatMatrix A = *this, B = identity(rows_);
  if (!gauss_jordan(A, B)) throw std::runtime_error("singular matrix");
  return B;
}

std::vector<Rat> RatMatrix::solve(const std::vector<Rat>& b) const {
  if (rows_ != cols_ || int(b.size()) != rows_) throw std::invalid_argument("solve size mismatch");
  RatMatrix A = *this, B(rows_, 1);
  for (int i = 0; i < rows_; ++i) B(i, 0) = b[i];
  if (!gauss_jordan(A, B)) throw std::runtime_error("singular matrix");
  std::vector<Rat> x(rows_);
  for (int i = 0; i < rows_; ++i) x[i] = B(i, 0);
  return x;
}

std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  int lead = 0;
  for (int row = 0; row < m.rows() && lead < m.cols(); ++row) {
    int piv = -1;
    while (lead < m.cols()) {
      for (int r = row; r < m.rows(); ++r)
        if (m(r, lead) != 0) {
          piv = r;
          break;
        }
      if (piv >= 0) break;
      ++lead;
    }
    if (lead >= m.cols()) break;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) swap(m(piv, j), m(row, j));
    Rat inv = 1 / m(row, lead);
    for (int j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, lead) == 0) continue;
      Rat f = m(r, lead);
      for (int j = 0; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(lead);
    ++lead;
  }
  return pivots;
}

int RatMatrix::rank() const {
  RatMatrix m = *this;
  return int(rref(m).size());
}

RatMatrix RatMatrix::nullspace() const {
  RatMatrix m = *this;
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < cols_; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  RatMatrix ker(cols_, int(free_cols.size()));
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    int f = free_cols[fi];
    ker(f, int(fi)) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) ker(pivots[r], int(fi)) = -m(int(r), f);
  }
  return ker;
}

bool RatMatrix::is_positive_definite() const {
  if (rows_ != cols_ || !is_symmetric()) return false;
  // LDL^T with exact pivots; SPD iff every pivot is positive.
  RatMatrix A = *this;
  int n = rows_;
  for (int k = 0; k < n; ++k) {
    if (A(k, k) <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      Rat f = A(i, k) / A(k, k);
      for (int j = k; j < n; ++j) A(i, j) -= f * A(k, j);
    }
  }
  return true;
}

void SparseRatMatrix::add(int i, int j, const Rat& v) {
  if (v == 0) return;
  auto& col = cols_[j];
  auto it = std::lower_bound(col.begin(), col.end(), i,
                             [](const std::pair<int, Rat>& e, int row) { return e.first < row; });
  if (it != col.end() && it->first == i) {
    it->second += v;
    if (it->second == 0) col.erase(it);
  } else {
    col.insert(it, {i, v});
  }
}

Rat SparseRatMatrix::get(int i, int j) const {
  const auto& col = cols_[j];
  auto it = std::lower_bound(col.begin(), col.end(), i,
                             [](const std::pair<int, Rat>& e, int row) { return e.first < row; });
  if (it != col.end() && it->first == i) return it->second;
  return Rat(0);
}

size_t SparseRatMatrix::nnz() const {
  size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

bool SparseRatMatrix::is_zero() const { return nnz() == 0; }

SparseRatMatrix SparseRatMatrix::operator+(const SparseRatMatrix& o) const {
  SparseRatMatrix r = *this;
  for (int j = 0; j < o.cols(); ++j)
    for (const auto& [i, v] : o.cols_[j]) r.add(i, j, v);
  return r;
}

SparseRatMatrix SparseRatMatrix::operator-(const SparseRatMatrix& o) const {
  SparseRatMatrix r = *this;
  for (int j = 0; j < o.cols(); ++j)
    for (const auto& [i, v] : o.cols_[j]) r.add(i, j, -v);
  return r;
}

SparseRatMatrix SparseRatMatrix::operator*(const SparseRatMatrix& o) const {
  SparseRatMatrix r(rows_, o.cols());
  for (int j = 0; j < o.cols(); ++j)
    for (const auto& [k, v] : o.cols_[j])
      for (const auto& [i, w] : cols_[k]) r.add(i, j, w * v);
  return r;
}

SparseRatMatrix SparseRatMatrix::operator*(const Rat& s) const {
  SparseRatMatrix r(rows_, cols());
  if (s == 0) return r;
  r.cols_ = cols_;
  for (auto& c : r.cols_)
    for (auto& e : c) e.second *= s;
  return r;
}

SparseRatMatrix SparseRatMatrix::commutator(const SparseRatMatrix& o) const {
  return (*this) * o - o * (*this);
}

std::vector<Rat> SparseRatMatrix::apply(const std::vector<Rat>& x) const {
  std::vector<Rat> y(rows_, Rat(0));
  for (int j = 0; j < cols(); ++j) {
    if (x[j] == 0) continue;
    for (const auto& [i, v] : cols_[j]) y[i] += v * x[j];
  }
  return y;
}

RatMatrix SparseRatMatrix::dense() const {
  RatMatrix m(rows_, cols());
  for (int j = 0; j < cols(); ++j)
    for (const auto& [i, v] : cols_[j]) m(i, j) = v;
  return m;
}

SparseRatMatrix SparseRatMatrix::from_dense(const RatMatrix& m) {
  SparseRatMatrix r(m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) r.cols_[j].push_back({i, m(i, j)});
  return r;
}

bool SparseRatMatrix::operator==(const SparseRatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_;
}

int span_rank(const std::vector<std::vector<Rat>>& rows) { return int(span_basis(rows).size()); }

std::vector<std::vector<Rat>> span_basis(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(int(rows.size()), int(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(int(i), int(j)) = rows[i][j];
  std::vector<int> pivots = rref(m);
  std::vector<std::vector<Rat>> basis;
  for (size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Rat> row(m.cols());
    for (int j = 0; j < m.cols(); ++j) row[j] = m(int(r), j);
    basis.push_back(std::move(row));
  }
  return basis;
}

bool in_span(const std::vector<std::vector<Rat>>& basis, const std::vector<Rat>& v) {
  std::vector<std::vector<Rat>> all = basis;
  all.push_back(v);
  return span_rank(all) == int(basis.size());
}

}  // namespace ricciforge
