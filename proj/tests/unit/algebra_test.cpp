#include <doctest.h>

#include "tcode/algebra.hpp"

using namespace tcode;

TEST_CASE("primes and prime powers") {
  CHECK(is_prime(2));
  CHECK(is_prime(89));
  CHECK_FALSE(is_prime(91));
  CHECK(is_prime_power(81));
  CHECK(is_prime_power(64));
  CHECK_FALSE(is_prime_power(90));
  CHECK_THROWS_AS(checked_prime(15), std::invalid_argument);
}

TEST_CASE("field arithmetic") {
  FieldElement a(3, 7), b(5, 7);
  CHECK((a + b).value() == 1);
  CHECK((a - b).value() == 5);
  CHECK((a * b).value() == 1);
  CHECK((a / b).value() == 2);
  CHECK(a.inverse().value() == 5);
  CHECK(FieldElement(-1, 7).value() == 6);
  CHECK(primitive_root(7).value() == 3);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK_THROWS(FieldElement(1, 7) + FieldElement(1, 5));
}

TEST_CASE("polynomials") {
  Polynomial x = Polynomial::monomial(7, 1, 1);
  Polynomial f = pow(x - Polynomial::constant(7, 2), 3) * (x + Polynomial::constant(7, 1));
  CHECK(f.degree() == 4);
  CHECK(f.root_multiplicity(2) == 3);
  CHECK(f.root_multiplicity(6) == 1);
  CHECK(f.root_multiplicity(0) == 0);
  auto [q, r] = f.divmod(x * x + Polynomial::constant(7, 3));
  CHECK(q * (x * x + Polynomial::constant(7, 3)) + r == f);
  CHECK(r.degree() < 2);
  Polynomial g = gcd(f, pow(x - Polynomial::constant(7, 2), 5));
  CHECK(g == pow(x - Polynomial::constant(7, 2), 3));
  CHECK(gcd(Polynomial(7), Polynomial(7)).is_zero());
}

TEST_CASE("row reduction and kernel") {
  MatrixFp M = MatrixFp::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}, 5);
  RowReduction rr = rank_and_rref(M);
  CHECK(rr.rank == 2);
  CHECK(rr.pivots == std::vector<std::size_t>{0, 1});
  MatrixFp K = kernel(M);
  CHECK(K.rows() == 1);
  MatrixFp prod = M * K.transpose();
  for (std::size_t i = 0; i < prod.rows(); ++i) CHECK(prod.at(i, 0) == 0);
  CHECK(rank(MatrixFp::identity(4, 3)) == 4);
}

TEST_CASE("rationals") {
  Rational a = Rational::parse("-7/4");
  CHECK(a.floor_ll() == -2);
  CHECK(Rational::parse("6/3") == Rational(2));
  CHECK((a + Rational(1, 4)).to_string() == "-3/2");
  CHECK(Rational(3, 6) == Rational(1, 2));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
  Rational big = Rational::parse("123456789012345678901234567890");
  CHECK((big * big / big) == big);
}
