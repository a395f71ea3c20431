#pragma once

// Exact arithmetic in Q(sqrt5) and dense matrices over it.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hexoct/signed_perm.hpp"

namespace hexoct {

using Rational = mpq_class;

// a + b*sqrt(5) with a, b rational (always kept in lowest terms by GMP).
class QfElem {
 public:
  QfElem() : a_(0), b_(0) {}
  QfElem(long v) : a_(v), b_(0) {}  // NOLINT(google-explicit-constructor)
  QfElem(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {  // NOLINT
    a_.canonicalize();
    b_.canonicalize();
  }

  static QfElem sqrt5() { return {0, 1}; }
  // tau = (1 + sqrt5)/2
  static QfElem tau() { return {Rational(1, 2), Rational(1, 2)}; }
  // Sums of rational multiples of 1, tau and sqrt5, e.g. "1-tau", "1/2+1/2*sqrt5".
  static QfElem parse(std::string_view text);

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_integer() const { return is_rational() && a_.get_den() == 1; }

  // Galois conjugate a - b*sqrt5.
  QfElem conjugate() const { return {a_, -b_}; }
  // Field norm a^2 - 5 b^2.
  Rational norm() const { return a_ * a_ - 5 * b_ * b_; }
  // Exact sign of the real number a + b*sqrt5.
  int sign() const;
  QfElem inverse() const;
  double to_double() const;
  std::string to_string() const;

  QfElem& operator+=(const QfElem& o);
  QfElem& operator-=(const QfElem& o);
  QfElem& operator*=(const QfElem& o);
  QfElem& operator/=(const QfElem& o);
  QfElem operator-() const { return {-a_, -b_}; }

  friend QfElem operator+(QfElem x, const QfElem& y) { return x += y; }
  friend QfElem operator-(QfElem x, const QfElem& y) { return x -= y; }
  friend QfElem operator*(QfElem x, const QfElem& y) { return x *= y; }
  friend QfElem operator/(QfElem x, const QfElem& y) { return x /= y; }
  friend bool operator==(const QfElem& x, const QfElem& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const QfElem& x, const QfElem& y) { return !(x == y); }
  friend bool operator<(const QfElem& x, const QfElem& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QfElem& x, const QfElem& y) { return y < x; }

 private:
  Rational a_;
  Rational b_;
};

class QfMat {
 public:
  QfMat() = default;
  QfMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QfMat identity(std::size_t n);
  static QfMat from_int(const IntMat6& m);
  // Rows given as nested initializer data, e.g. literal matrices in tests.
  static QfMat from_rows(const std::vector<std::vector<QfElem>>& rows);
  // Rows of textual entries, each read by QfElem::parse.
  static QfMat from_literal(const std::vector<std::vector<std::string_view>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  QfElem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const QfElem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QfMat transpose() const;
  QfMat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  QfMat column(std::size_t j) const { return block(0, j, rows_, 1); }
  QfElem trace() const;
  bool is_zero() const;
  bool is_diagonal() const;
  // Rank via fraction-free (Bareiss) elimination; exact.
  std::size_t rank() const;
  // Exact inverse by Gauss-Jordan; throws DegenerateBasis when singular.
  QfMat inverse() const;
  std::vector<std::vector<double>> to_double() const;

  QfMat& operator*=(const QfElem& s);
  friend QfMat operator*(const QfMat& a, const QfMat& b);
  friend QfMat operator+(const QfMat& a, const QfMat& b);
  friend QfMat operator-(const QfMat& a, const QfMat& b);
  friend QfMat operator*(QfMat a, const QfElem& s) { return a *= s; }
  friend QfMat operator*(const QfElem& s, QfMat a) { return a *= s; }
  friend bool operator==(const QfMat& a, const QfMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QfElem> data_;
};

// Concatenates matrices with equal row counts side by side.
QfMat hconcat(const std::vector<QfMat>& parts);

}  // namespace hexoct
