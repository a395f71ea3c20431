#include <doctest.h>

#include <cmath>
#include <random>

#include "hexoct/error.hpp"
#include "hexoct/qfield.hpp"

using namespace hexoct;

namespace {

QfElem random_elem(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("golden ratio identities") {
  const QfElem t = QfElem::tau();
  CHECK(t * t == t + QfElem(1));
  CHECK(QfElem::sqrt5() * QfElem::sqrt5() == QfElem(5));
  CHECK(t.inverse() == t - QfElem(1));
  CHECK(t + t.conjugate() == QfElem(1));
  CHECK(t * t.conjugate() == QfElem(-1));
  CHECK(t.norm() == -1);
  CHECK((QfElem(2) * t - QfElem(1)) == QfElem::sqrt5());
}

TEST_CASE("field operations agree with floating point") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const QfElem x = random_elem(rng), y = random_elem(rng);
    CHECK((x + y).to_double() == doctest::Approx(x.to_double() + y.to_double()));
    CHECK((x * y).to_double() == doctest::Approx(x.to_double() * y.to_double()));
    CHECK((x * y).norm() == x.norm() * y.norm());
    if (!y.is_zero()) {
      CHECK((x / y) * y == x);
      CHECK((x / y).to_double() == doctest::Approx(x.to_double() / y.to_double()));
    }
  }
}

TEST_CASE("sign is exact near cancellation") {
  // (x_k + y_k sqrt5) = (2 + sqrt5)^k has norm x_k^2 - 5 y_k^2 = (-1)^k, so
  // x_k - y_k sqrt5 has the sign (-1)^k while being within 1e-60 of zero.
  mpz_class x = 2, y = 1;
  for (int k = 1; k <= 60; ++k) {
    const QfElem d(Rational(x), Rational(-y));
    CHECK(d.sign() == (k % 2 == 0 ? 1 : -1));
    CHECK((-d).sign() == -d.sign());
    const mpz_class nx = 2 * x + 5 * y, ny = x + 2 * y;
    x = nx;
    y = ny;
  }
  CHECK(QfElem().sign() == 0);
  CHECK(QfElem(Rational(161, 72), -1).sign() == 1);
  CHECK(QfElem(Rational(-161, 72), 1).sign() == -1);
  CHECK(QfElem::tau() > QfElem(Rational(8, 5)));
  CHECK(QfElem::tau() < QfElem(Rational(13, 8)));
}

TEST_CASE("parsing") {
  CHECK(QfElem::parse("0") == QfElem());
  CHECK(QfElem::parse("tau") == QfElem::tau());
  CHECK(QfElem::parse("1-tau") == QfElem(1) - QfElem::tau());
  CHECK(QfElem::parse("-tau") == -QfElem::tau());
  CHECK(QfElem::parse("1/2+1/2*sqrt5") == QfElem::tau());
  CHECK(QfElem::parse("3/4 sqrt5") == QfElem(0, Rational(3, 4)));
  CHECK(QfElem::parse("2tau-1") == QfElem::sqrt5());
  for (const char* bad : {"", "+", "x", "1/", "/2", "1/0", "1//2", "2*x", "1+-2"})
    CHECK_THROWS_AS(QfElem::parse(bad), ParseError);
}

TEST_CASE("formatting") {
  CHECK(QfElem().to_string() == "0");
  CHECK(QfElem::tau().to_string() == "1/2+1/2*sqrt5");
  CHECK(QfElem(0, -1).to_string() == "-sqrt5");
  CHECK(QfElem(1, -1).to_string() == "1-sqrt5");
  CHECK(QfElem::tau().to_double() == doctest::Approx((1 + std::sqrt(5.0)) / 2));
}

TEST_CASE("division by zero is rejected") { CHECK_THROWS(QfElem().inverse()); }

TEST_CASE("matrix rank and inverse") {
  const QfMat id = QfMat::identity(4);
  CHECK(id.rank() == 4);
  CHECK(QfMat(3, 5).rank() == 0);
  CHECK(QfMat(3, 5).is_zero());
  const QfMat m = QfMat::from_literal({{"1", "tau", "0"}, {"tau", "1+tau", "0"}, {"0", "0", "sqrt5"}});
  // Row 2 is tau times row 1.
  CHECK(m.rank() == 2);
  CHECK_THROWS_AS(m.inverse(), DegenerateBasis);
  CHECK_THROWS_AS(QfMat(2, 3).inverse(), DegenerateBasis);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    QfMat a(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) a(i, j) = random_elem(rng);
    if (a.rank() < 5) continue;
    CHECK(a * a.inverse() == QfMat::identity(5));
    CHECK(a.inverse() * a == QfMat::identity(5));
    // A rank-deficient product.
    QfMat b = a;
    for (std::size_t j = 0; j < 5; ++j) b(4, j) = a(0, j) * QfElem::tau() - a(1, j);
    CHECK(b.rank() == 4);
  }
}

TEST_CASE("matrix helpers") {
  const QfMat m = QfMat::from_literal({{"1", "2", "3"}, {"4", "5", "6"}});
  CHECK(m.transpose().rows() == 3);
  CHECK(m.transpose()(2, 1) == QfElem(6));
  CHECK(m.block(1, 1, 1, 2) == QfMat::from_literal({{"5", "6"}}));
  CHECK(m.column(2) == QfMat::from_literal({{"3"}, {"6"}}));
  CHECK(hconcat({m.column(0), m.column(1)}) == m.block(0, 0, 2, 2));
  CHECK_THROWS(m.block(1, 1, 2, 2));
  CHECK(QfMat::identity(3).is_diagonal());
  CHECK_FALSE(m.block(0, 0, 2, 2).is_diagonal());
  CHECK(QfMat::from_literal({{"tau", "0"}, {"0", "1-tau"}}).trace() == QfElem(1));
}
