#include "hexoct/qfield.hpp"

#include <cmath>

#include "hexoct/error.hpp"

namespace hexoct {

int QfElem::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: the larger of a^2 and 5b^2 wins (never equal, sqrt5 is irrational)
  return a_ * a_ > 5 * b_ * b_ ? sa : sb;
}

QfElem QfElem::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("QfElem: division by zero");
  return {a_ / n, -b_ / n};
}

double QfElem::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(5.0);
}

std::string QfElem::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string bs = (b_ == 1 ? "" : b_ == -1 ? "-" : b_.get_str() + "*") + "sqrt5";
  if (sgn(a_) == 0) return bs;
  if (sgn(b_) > 0) return a_.get_str() + "+" + bs;
  return a_.get_str() + bs;
}

QfElem QfElem::parse(std::string_view text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  if (t.empty()) throw ParseError("empty field element");
  QfElem out;
  std::size_t i = 0;
  while (i < t.size()) {
    int sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = t[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t j = i;
    while (j < t.size() && t[j] != '+' && t[j] != '-') ++j;
    std::string term = t.substr(i, j - i);
    if (term.empty()) throw ParseError("malformed field element '" + std::string(text) + "'");
    std::string coef = term, atom;
    for (std::string_view a : {"sqrt5", "tau"}) {
      if (term.size() >= a.size() && term.compare(term.size() - a.size(), a.size(), a) == 0) {
        atom = a;
        coef = term.substr(0, term.size() - a.size());
        if (!coef.empty() && coef.back() == '*') coef.pop_back();
        break;
      }
    }
    Rational c(1);
    if (!coef.empty()) {
      if (coef.find_first_not_of("0123456789/") != std::string::npos) throw ParseError("bad coefficient '" + coef + "'");
      const auto slash = coef.find('/');
      if (slash == 0 || slash + 1 == coef.size() || coef.find('/', slash + 1) != std::string::npos ||
          (slash != std::string::npos && coef.find_first_not_of('0', slash + 1) == std::string::npos))
        throw ParseError("bad coefficient '" + coef + "'");
      c = Rational(coef);
      c.canonicalize();
    }
    c *= sign;
    if (atom.empty()) out += QfElem(c);
    else if (atom == "sqrt5") out += QfElem(0, c);
    else out += QfElem(c) * tau();
    i = j;
  }
  return out;
}

QfElem& QfElem::operator+=(const QfElem& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QfElem& QfElem::operator-=(const QfElem& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QfElem& QfElem::operator*=(const QfElem& o) {
  Rational a = a_ * o.a_ + 5 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QfElem& QfElem::operator/=(const QfElem& o) { return *this *= o.inverse(); }

// ---- QfMat ---------------------------------------------------------------

QfMat QfMat::identity(std::size_t n) {
  QfMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QfMat QfMat::from_int(const IntMat6& m) {
  QfMat r(kDim, kDim);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r(i, j) = m.entries[i][j];
  return r;
}

QfMat QfMat::from_rows(const std::vector<std::vector<QfElem>>& rows) {
  QfMat r(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != r.cols_) throw std::invalid_argument("QfMat: ragged rows");
    for (std::size_t j = 0; j < r.cols_; ++j) r(i, j) = rows[i][j];
  }
  return r;
}

QfMat QfMat::from_literal(const std::vector<std::vector<std::string_view>>& rows) {
  std::vector<std::vector<QfElem>> v;
  for (const auto& r : rows) {
    v.emplace_back();
    for (auto e : r) v.back().push_back(QfElem::parse(e));
  }
  return from_rows(v);
}

QfMat QfMat::transpose() const {
  QfMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QfMat QfMat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("QfMat::block");
  QfMat b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

QfElem QfMat::trace() const {
  QfElem t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool QfMat::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool QfMat::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

std::size_t QfMat::rank() const {
  QfMat m = *this;
  QfElem prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rank;
    while (piv < rows_ && m(piv, col).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(piv, j), m(rank, j));
    const QfElem p = m(rank, col);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      const QfElem f = m(i, col);
      for (std::size_t j = col; j < cols_; ++j) m(i, j) = (p * m(i, j) - f * m(rank, j)) / prev;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

QfMat QfMat::inverse() const {
  if (rows_ != cols_) throw DegenerateBasis("inverse of a non-square matrix");
  const std::size_t n = rows_;
  QfMat m = *this;
  QfMat inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) throw DegenerateBasis("matrix is singular");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    const QfElem p = m(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) *= p;
      inv(col, j) *= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col).is_zero()) continue;
      const QfElem f = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<std::vector<double>> QfMat::to_double() const {
  std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).to_double();
  return out;
}

QfMat& QfMat::operator*=(const QfElem& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

QfMat operator*(const QfMat& a, const QfMat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("QfMat: shape mismatch in product");
  QfMat r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const QfElem& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

QfMat operator+(const QfMat& a, const QfMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("QfMat: shape mismatch");
  QfMat r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

QfMat operator-(const QfMat& a, const QfMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("QfMat: shape mismatch");
  QfMat r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

QfMat hconcat(const std::vector<QfMat>& parts) {
  if (parts.empty()) return {};
  std::size_t rows = parts.front().rows();
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw std::invalid_argument("hconcat: row mismatch");
    cols += p.cols();
  }
  QfMat r(rows, cols);
  std::size_t c0 = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) r(i, c0 + j) = p(i, j);
    c0 += p.cols();
  }
  return r;
}

}  // namespace hexoct
