#pragma once

// Elements of the hyperoctahedral group B6 = Z2 wr S6.
//
// Conventions (all indices are 0-based in memory, 1-based in text):
//   * a permutation acts on points and composes as (pi sigma)(k) = pi(sigma(k));
//   * a signed permutation (a, pi) acts on R^6 by e_j -> (-1)^{a_j} e_{pi(j)},
//     i.e. its matrix is T(a, pi)_{ij} = (-1)^{a_j} delta_{i, pi(j)};
//   * in S12 form point k < 6 stands for +e_k and point k + 6 for -e_k.

#include <array>
#include <compare>
#include <initializer_list>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hexoct {

inline constexpr int kDim = 6;
inline constexpr int kOrderB6 = 46080;  // 2^6 * 6!
inline constexpr int kOrderS6 = 720;

// Parses cycle notation such as "(1,6)(2,5)" or "(1 2 3)" into a 0-based
// image array of length `degree`. "()" and "" denote the identity.
std::vector<std::uint8_t> parse_cycles(std::string_view text, int degree);
// Formats a 0-based image array in cycle notation with `sep` between points.
std::string format_cycles(const std::vector<std::uint8_t>& images, char sep = ',');

struct Perm6 {
  std::array<std::uint8_t, kDim> images{0, 1, 2, 3, 4, 5};

  static Perm6 identity() { return {}; }
  static Perm6 parse(std::string_view cycles);
  bool valid() const;
  int sign() const;
  Perm6 inverse() const;
  friend Perm6 operator*(const Perm6& pi, const Perm6& sigma);
  friend bool operator==(const Perm6&, const Perm6&) = default;
};

struct Perm12 {
  std::array<std::uint8_t, 2 * kDim> images{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};

  static Perm12 identity() { return {}; }
  static Perm12 parse(std::string_view cycles);
  std::string to_string() const;
  bool valid() const;
  // True when k -> p(k) and k+6 -> p(k)+6 (mod 12) for every k.
  bool respects_antipodes() const;
  friend Perm12 operator*(const Perm12& p, const Perm12& q);
  friend bool operator==(const Perm12&, const Perm12&) = default;
};

struct IntMat6 {
  std::array<std::array<int, kDim>, kDim> entries{};

  static IntMat6 identity();
  // Throws ParseError unless given exactly 6 rows of 6 entries.
  static IntMat6 from_rows(std::initializer_list<std::initializer_list<int>> rows);
  IntMat6 transpose() const;
  int trace() const;
  bool is_signed_permutation() const;
  friend IntMat6 operator*(const IntMat6& a, const IntMat6& b);
  friend bool operator==(const IntMat6&, const IntMat6&) = default;
};

class SignedPerm {
 public:
  SignedPerm();  // identity (0, id)
  SignedPerm(const std::array<std::uint8_t, kDim>& signs, const Perm6& perm);

  // Dense index in [0, 46080) that realises the canonical order:
  // lexicographic on (signs, perm.images).
  static SignedPerm from_code(std::uint16_t code);
  // Parses "[a1..a6|cycles]", e.g. "[000001|(1 2)]".
  static SignedPerm parse(std::string_view text);

  std::uint16_t code() const { return code_; }
  std::array<std::uint8_t, kDim> signs() const;
  Perm6 perm() const;

  // The 12-point image of +e_k, i.e. pi(k) + 6 a_k.
  std::uint8_t image(int k) const { return img_[k]; }

  SignedPerm inverse() const;
  bool is_identity() const { return code_ == 0; }
  int order() const;
  int trace() const;
  int determinant() const;
  std::string to_string() const;

  friend SignedPerm operator*(const SignedPerm& x, const SignedPerm& y);
  friend bool operator==(const SignedPerm& x, const SignedPerm& y) {
    return x.code_ == y.code_;
  }
  friend std::strong_ordering operator<=>(const SignedPerm& x, const SignedPerm& y) {
    return x.code_ <=> y.code_;
  }

 private:
  explicit SignedPerm(const std::array<std::uint8_t, kDim>& img);
  void recode();

  std::array<std::uint8_t, kDim> img_;
  std::uint16_t code_;
};

// Wreath-product multiplication (a, pi)(b, sigma) = (a_sigma + b, pi sigma).
inline SignedPerm multiply(const SignedPerm& x, const SignedPerm& y) { return x * y; }

IntMat6 to_matrix(const SignedPerm& x);
// Inverse of to_matrix; throws ParseError when `m` is not a signed permutation.
SignedPerm from_matrix(const IntMat6& m);
Perm12 to_s12(const SignedPerm& x);
// Throws NotInImage when `p` does not pair k with k+6.
SignedPerm from_s12(const Perm12& p);
inline int determinant(const SignedPerm& x) { return x.determinant(); }

// g x g^-1
inline SignedPerm conjugate(const SignedPerm& x, const SignedPerm& g) {
  return g * x * g.inverse();
}

}  // namespace hexoct
