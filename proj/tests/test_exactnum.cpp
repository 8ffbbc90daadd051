#include <catch_amalgamated.hpp>

#include <random>

#include "refnc/cyclotomic.hpp"
#include "refnc/matrix.hpp"

using namespace refnc;

namespace {

CycNum random_cyc(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-5, 5);
  CycNum x;
  for (int k = 0; k < n; ++k) x += CycNum(Rational(d(rng), 1 + (k % 3))) * CycNum::zeta(n, k);
  return x;
}

}  // namespace

TEST_CASE("roots of unity satisfy their relations") {
  CHECK((CycNum::zeta(3) + CycNum::zeta(3, 2)) == CycNum(-1));
  CycNum s;
  for (int k = 0; k < 5; ++k) s += CycNum::zeta(5, k);
  CHECK(s.is_zero());
  CHECK(CycNum::zeta(4).pow(2) == CycNum(-1));
  CHECK(CycNum::zeta(12, 3) == CycNum::zeta(4));
  CHECK(CycNum::zeta(6, 2) == CycNum::zeta(3));
  CHECK(CycNum::zeta(7, 7).is_one());
  CHECK(CycNum::zeta(8, -1) * CycNum::zeta(8) == CycNum(1));
}

TEST_CASE("rational values collapse to conductor 1") {
  CycNum x = CycNum::zeta(3) + CycNum::zeta(3, 2);
  CHECK(x.conductor() == 1);
  CHECK(x.is_rational());
  CHECK(x.rational() == Rational(-1));
  CHECK(CycNum::zeta(2).conductor() == 1);
}

TEST_CASE("sqrt 5 from Gauss sum") {
  auto z = [](int k) { return CycNum::zeta(5, k); };
  CycNum r5 = z(1) + z(4) - z(2) - z(3);
  CHECK(r5 * r5 == CycNum(5));
  // golden ratio: phi^2 = phi + 1
  CycNum phi = (CycNum(1) + r5) / CycNum(2);
  CHECK(phi * phi == phi + CycNum(1));
  // sqrt(-3) = 2 zeta3 + 1
  CycNum s3 = CycNum(2) * CycNum::zeta(3) + CycNum(1);
  CHECK(s3 * s3 == CycNum(-3));
  // sqrt 2 = zeta8 + zeta8^-1
  CycNum s2 = CycNum::zeta(8) + CycNum::zeta(8, -1);
  CHECK(s2 * s2 == CycNum(2));
}

TEST_CASE("mixed conductors promote to the lcm") {
  CycNum a = CycNum::zeta(3) + CycNum::zeta(4);
  CHECK(a.conductor() == 12);
  CHECK((a - CycNum::zeta(4)) == CycNum::zeta(3));
  CHECK((a - CycNum::zeta(4)).promote(12) == CycNum::zeta(3).promote(12));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  for (int n : {3, 5, 7, 8, 9, 12, 15}) {
    for (int trial = 0; trial < 5; ++trial) {
      CycNum a = random_cyc(rng, n);
      CycNum b = random_cyc(rng, n);
      CycNum c = random_cyc(rng, n);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == CycNum(1));
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      // Galois maps are ring homomorphisms
      CHECK((a * b + c).galois(n - 1) == a.galois(n - 1) * b.galois(n - 1) + c.galois(n - 1));
    }
  }
}

TEST_CASE("norm to Q of a times conj is rational and nonnegative for real norms") {
  CycNum x = CycNum::zeta(5) + CycNum(2);
  CycNum nx = x * x.conj();
  // |x|^2 lies in the real subfield, not necessarily Q
  CHECK(nx == nx.conj());
}

TEST_CASE("parse and print round trip") {
  for (const char* s : {"0", "1", "-1/2", "z3", "-1/2*z3 + z3^2", "z8 + z8^-1", "(1+z4)/2", "2*z5^2 - 3"}) {
    CycNum x = CycNum::parse(s);
    CHECK(CycNum::parse(x.str()) == x);
  }
  CHECK(CycNum::parse("z3^2") == CycNum::zeta(3, 2));
  CHECK(CycNum::parse("1/z4") == CycNum::zeta(4, 3));
  CHECK(CycNum::parse("(1 + z4)^2") == CycNum(2) * CycNum::zeta(4));
  CHECK_THROWS_AS(CycNum::parse("1/0"), Error);
  CHECK_THROWS_AS(CycNum::parse("z"), ParseError);
  CHECK_THROWS_AS(CycNum::parse("1+"), ParseError);
  CHECK_THROWS_AS(CycNum::parse("x1"), ParseError);
}

TEST_CASE("root of unity order") {
  CHECK(root_of_unity_order(CycNum::zeta(12, 8)) == 3);
  CHECK(root_of_unity_order(CycNum(-1)) == 2);
  CHECK(root_of_unity_order(CycNum(1)) == 1);
  CHECK(root_of_unity_order(CycNum(2)) == 0);
}

TEST_CASE("hash agrees with equality within a conductor") {
  CycNum a = CycNum::zeta(5) + CycNum::zeta(5, 4);
  CycNum b = CycNum(-1) - CycNum::zeta(5, 2) - CycNum::zeta(5, 3);
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
}

TEST_CASE("matrix determinant, inverse and rank") {
  Matrix m = Matrix::from_rows({{1, 2, 3}, {0, 1, 4}, {5, 6, 0}});
  CHECK(determinant(m) == CycNum(1));
  CHECK((m * inverse(m)).is_identity());
  Matrix s = Matrix::from_rows({{1, 2}, {2, 4}});
  CHECK(rank(s) == 1);
  CHECK(determinant(s).is_zero());
  auto ker = kernel_basis(s);
  REQUIRE(ker.size() == 1);
  CHECK((s * ker[0])(0, 0).is_zero());
  CHECK_THROWS_AS(inverse(s), Error);
}

TEST_CASE("solve reports consistency and kernel") {
  Matrix a = Matrix::from_rows({{1, 1}, {1, 1}});
  auto ok = solve(a, Matrix::column({2, 2}));
  CHECK(ok.consistent);
  CHECK(ok.kernel.size() == 1);
  auto bad = solve(a, Matrix::column({1, 2}));
  CHECK_FALSE(bad.consistent);
}

TEST_CASE("det(1 - tg) from traces") {
  // g = diag(z3, z3^2, -1): det(1 - t g) = (1 - z3 t)(1 - z3^2 t)(1 + t) = (1 + t + t^2)(1 + t)
  Matrix g = Matrix::diagonal({CycNum::zeta(3), CycNum::zeta(3, 2), CycNum(-1)});
  auto c = det_one_minus_tg(g);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == CycNum(1));
  CHECK(c[1] == CycNum(2));
  CHECK(c[2] == CycNum(2));
  CHECK(c[3] == CycNum(1));
  CHECK(char_poly_order(g) == 6);
  CHECK_THROWS_AS(char_poly_order(Matrix::from_rows({{1, 1}, {0, 1}})), NonFiniteError);
}
