#include "tribranch/intalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace tribranch {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  data_.reserve(static_cast<std::size_t>(rows_ * cols_));
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(int dst, int src, const BigInt& factor) {
  if (factor == 0) return;
  for (int c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(int dst, int src, const BigInt& factor) {
  if (factor == 0) return;
  for (int r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(int r) {
  for (int c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: dimension mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row count mismatch");
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (int c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (m(r, k) != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Truncating quotient; the remainder is strictly smaller than |b| in
// absolute value, which is all the reduction loop needs.
BigInt quotient(const BigInt& a, const BigInt& b) { return a / b; }

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  const int m = a.rows();
  const int n = a.cols();
  SnfResult res{IntMatrix::identity(m), a, IntMatrix::identity(n), {}};
  IntMatrix& S = res.S;
  IntMatrix& U = res.U;
  IntMatrix& V = res.V;

  const int diag = std::min(m, n);
  for (int t = 0; t < diag; ++t) {
    while (true) {
      // Smallest nonzero |entry| of the trailing block, first in row-major order.
      int pr = -1, pc = -1;
      for (int r = t; r < m; ++r)
        for (int c = t; c < n; ++c) {
          if (S(r, c) == 0) continue;
          if (pr < 0 || abs(S(r, c)) < abs(S(pr, pc))) {
            pr = r;
            pc = c;
          }
        }
      if (pr < 0) break;  // trailing block is zero

      S.swap_rows(t, pr);
      U.swap_rows(t, pr);
      S.swap_cols(t, pc);
      V.swap_cols(t, pc);

      bool dirty = false;
      for (int r = t + 1; r < m; ++r) {
        if (S(r, t) == 0) continue;
        const BigInt q = quotient(S(r, t), S(t, t));
        S.add_row_multiple(r, t, -q);
        U.add_row_multiple(r, t, -q);
        if (S(r, t) != 0) dirty = true;
      }
      for (int c = t + 1; c < n; ++c) {
        if (S(t, c) == 0) continue;
        const BigInt q = quotient(S(t, c), S(t, t));
        S.add_col_multiple(c, t, -q);
        V.add_col_multiple(c, t, -q);
        if (S(t, c) != 0) dirty = true;
      }
      if (dirty) continue;  // a smaller remainder now exists; re-pivot

      // Row and column t are clear. Enforce divisibility of the remainder.
      int bad_row = -1;
      for (int r = t + 1; r < m && bad_row < 0; ++r)
        for (int c = t + 1; c < n; ++c)
          if (S(r, c) % S(t, t) != 0) {
            bad_row = r;
            break;
          }
      if (bad_row < 0) break;
      S.add_row_multiple(t, bad_row, 1);
      U.add_row_multiple(t, bad_row, 1);
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
  }

  for (int t = 0; t < diag; ++t) res.invariant_factors.push_back(S(t, t));
  return res;
}

AbelianGroup cokernel(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  AbelianGroup g;
  int nonzero = 0;
  for (const auto& d : snf.invariant_factors) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) g.torsion.push_back(d);
  }
  g.free_rank = a.rows() - nonzero;
  return g;
}

int min_generators(const AbelianGroup& g) { return g.free_rank + static_cast<int>(g.torsion.size()); }

std::string to_string(const AbelianGroup& g) {
  std::vector<std::string> parts;
  if (g.free_rank == 1) parts.push_back("Z");
  if (g.free_rank > 1) parts.push_back("Z^" + std::to_string(g.free_rank));
  for (const auto& t : g.torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

}  // namespace tribranch
