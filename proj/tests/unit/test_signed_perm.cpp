#include <doctest.h>

#include <set>
#include <tuple>

#include "../property_suites.hpp"
#include "hexoct/error.hpp"
#include "hexoct/signed_perm.hpp"

using namespace hexoct;

namespace {

int order_by_powers(const SignedPerm& x) {
  SignedPerm p = x;
  int k = 1;
  while (!p.is_identity()) {
    p = p * x;
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("identity and parsing") {
  const SignedPerm e;
  CHECK(e.is_identity());
  CHECK(e.code() == 0);
  CHECK(e.to_string() == "[000000|()]");
  CHECK(SignedPerm::parse("[000000|()]") == e);

  const SignedPerm x = SignedPerm::parse("[000011|(1 6 5 3)]");
  CHECK(SignedPerm::parse(x.to_string()) == x);
  CHECK(x.perm() == Perm6::parse("(1,6,5,3)"));
  CHECK(x.signs() == std::array<std::uint8_t, 6>{0, 0, 0, 0, 1, 1});
  CHECK(x.determinant() == -1);

  CHECK_THROWS_AS(SignedPerm::parse("[00001|()]"), ParseError);
  CHECK_THROWS_AS(SignedPerm::parse("[000002|()]"), ParseError);
  CHECK_THROWS_AS(SignedPerm::parse("000000|()"), ParseError);
  CHECK_THROWS_AS(SignedPerm::parse("[000000|(1 7)]"), ParseError);
  CHECK_THROWS_AS(SignedPerm::parse("[000000|(1 1)]"), ParseError);
}

TEST_CASE("codes are dense and follow the lexicographic (signs, images) order") {
  std::set<std::uint16_t> seen;
  auto key = [](const SignedPerm& x) { return std::make_tuple(x.signs(), x.perm().images); };
  SignedPerm prev = SignedPerm::from_code(0);
  for (int c = 0; c < kOrderB6; ++c) {
    const SignedPerm x = SignedPerm::from_code(static_cast<std::uint16_t>(c));
    REQUIRE(x.code() == c);
    seen.insert(x.code());
    if (c > 0) REQUIRE(key(prev) < key(x));
    prev = x;
  }
  CHECK(seen.size() == kOrderB6);
}

TEST_CASE("matrix convention T(a, pi)_ij = (-1)^a_j delta_{i, pi(j)}") {
  const SignedPerm x = SignedPerm::parse("[100000|(1 2 3)]");
  const IntMat6 m = to_matrix(x);
  // e_1 -> -e_2, e_2 -> e_3, e_3 -> e_1
  CHECK(m.entries[1][0] == -1);
  CHECK(m.entries[2][1] == 1);
  CHECK(m.entries[0][2] == 1);
  CHECK(m.entries[3][3] == 1);
  CHECK(m.is_signed_permutation());
  CHECK(x.trace() == m.trace());
  CHECK(x.trace() == 3);
}

TEST_CASE("order, trace and determinant against independent oracles") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const SignedPerm x = props::random_element(rng);
    CHECK(x.order() == order_by_powers(x));
    CHECK(x.trace() == to_matrix(x).trace());
    CHECK(x.determinant() == props::det_cofactor(props::as_rows(to_matrix(x))));
  }
  CHECK(SignedPerm::parse("[111111|()]").order() == 2);
  CHECK(SignedPerm::parse("[111111|()]").determinant() == 1);
  CHECK(SignedPerm::parse("[100000|()]").determinant() == -1);
  CHECK(SignedPerm::parse("[000000|(1 2 3 4 5 6)]").order() == 6);
  CHECK(SignedPerm::parse("[100000|(1 2 3 4 5 6)]").order() == 12);
}

TEST_CASE("wreath product rule (a, pi)(b, sigma) = (a_sigma + b, pi sigma)") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const SignedPerm x = props::random_element(rng), y = props::random_element(rng);
    const auto a = x.signs(), b = y.signs();
    const Perm6 pi = x.perm(), sigma = y.perm();
    std::array<std::uint8_t, kDim> c{};
    for (int k = 0; k < kDim; ++k) c[k] = static_cast<std::uint8_t>((a[sigma.images[k]] + b[k]) % 2);
    CHECK(multiply(x, y) == SignedPerm(c, pi * sigma));
  }
}

TEST_CASE("from_matrix and from_s12 reject non-members") {
  IntMat6 m = IntMat6::identity();
  m.entries[0][1] = 1;
  CHECK_FALSE(m.is_signed_permutation());
  CHECK_THROWS_AS(from_matrix(m), ParseError);
  IntMat6 twice = IntMat6::identity();
  twice.entries[0][0] = 2;
  CHECK_THROWS_AS(from_matrix(twice), ParseError);
  CHECK_THROWS_AS(IntMat6::from_rows({{1, 0}, {0, 1}}), ParseError);

  const Perm12 bad = Perm12::parse("(1,2)");
  CHECK_FALSE(bad.respects_antipodes());
  CHECK_THROWS_AS(from_s12(bad), NotInImage);
  const Perm12 good = Perm12::parse("(1,7)");  // e_1 -> -e_1
  CHECK(good.respects_antipodes());
  CHECK(from_s12(good) == SignedPerm::parse("[100000|()]"));
}

TEST_CASE("conjugation is g x g^-1") {
  const SignedPerm x = SignedPerm::parse("[000000|(1 2)]");
  const SignedPerm g = SignedPerm::parse("[000000|(2 3)]");
  CHECK(conjugate(x, g) == SignedPerm::parse("[000000|(1 3)]"));
  CHECK(conjugate(x, SignedPerm()) == x);
}

TEST_CASE("cycle notation") {
  CHECK(parse_cycles("", 6) == std::vector<std::uint8_t>{0, 1, 2, 3, 4, 5});
  CHECK(parse_cycles("(1,2)(3 4)", 6) == std::vector<std::uint8_t>{1, 0, 3, 2, 4, 5});
  CHECK(format_cycles({1, 2, 0, 3}) == "(1,2,3)");
  CHECK_THROWS_AS(parse_cycles("(1,2", 6), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 6), ParseError);
  CHECK(Perm6::parse("(1,2)").sign() == -1);
  CHECK(Perm6::parse("(1,2,3)").sign() == 1);
}
