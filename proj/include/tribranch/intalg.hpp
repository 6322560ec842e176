#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <string>
#include <vector>

namespace tribranch {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  BigInt& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const BigInt& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  IntMatrix transpose() const;
  bool is_zero() const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(int dst, int src, const BigInt& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(int dst, int src, const BigInt& factor);
  void negate_row(int r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

/// Columns of `a` followed by the columns of `b` (same row count).
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant (fraction-free Bareiss elimination). Square input only.
BigInt determinant(const IntMatrix& a);

struct SnfResult {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  /// Diagonal of S, length min(rows, cols): d_1 | d_2 | ... with zeros last.
  std::vector<BigInt> invariant_factors;
};

/// U * A * V = S with U, V unimodular and S in Smith normal form. Pivots are
/// chosen as the smallest nonzero absolute value, ties in row-major order.
SnfResult smith_normal_form(const IntMatrix& a);

struct AbelianGroup {
  int free_rank = 0;
  std::vector<BigInt> torsion;  // entries >= 2, each dividing the next

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Cokernel Z^rows / image(a).
AbelianGroup cokernel(const IntMatrix& a);

int min_generators(const AbelianGroup& g);

/// "0", "Z", "Z^3 + Z/2 + Z/4", ...
std::string to_string(const AbelianGroup& g);

}  // namespace tribranch
