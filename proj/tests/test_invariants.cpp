#include <catch_amalgamated.hpp>

#include "refnc/catalog.hpp"
#include "refnc/invariants.hpp"

using namespace refnc;

namespace {

MatGroup make(const std::string& name) {
  auto c = catalog(name);
  return close_group(c.generators, kDefaultMaxOrder, c.name);
}

MPoly x(int n, int i) { return MPoly::variable(n, i); }

std::vector<std::int64_t> coeffs(const GradedSeries& s) { return s.coeffs(); }

}  // namespace

TEST_CASE("reynolds operator") {
  auto g = make("mu2^n:3");
  CHECK(reynolds(x(3, 0), g).is_zero());
  CHECK(reynolds(x(3, 0).pow(2), g) == x(3, 0).pow(2));
  auto b3 = make("G(2,1,3)");
  MPoly f = x(3, 0).pow(4) * x(3, 1).pow(2) + x(3, 2);
  MPoly r = reynolds(f, b3);
  CHECK(reynolds(r, b3) == r);
  CHECK(is_invariant(r, b3));
  CHECK(reynolds(power_sum(3, 4), b3) == power_sum(3, 4));
}

TEST_CASE("molien series") {
  auto triv = trivial_group(3);
  CHECK(molien(triv, std::nullopt, 6) == GradedSeries::polynomial_ring(3, 6));
  auto mu2 = make("mu2^n:1");
  CHECK(coeffs(molien(mu2, std::nullopt, 6)) == std::vector<std::int64_t>{1, 0, 1, 0, 1, 0, 1});
  // C3 in SL(2): diag(z, z^-1) fixes x^a y^b iff a = b mod 3
  auto c3 = make("cyclic-sl2:3");
  auto s = molien(c3, std::nullopt, 15);
  for (int d = 0; d <= 15; ++d) {
    int count = 0;
    for (int a = 0; a <= d; ++a) count += ((a - (d - a)) % 3 == 0) ? 1 : 0;
    CHECK(s[d] == count);
  }
  CHECK(s[0] == 1);
  CHECK(s[2] == 1);
  CHECK(s[3] == 2);
  CHECK(s[4] == 1);
  CHECK(s[5] == 2);
}

TEST_CASE("molien series matches invariant subspace dimensions") {
  for (const char* name : {"G(2,1,3)", "S3-refl", "G(m,p,n):3,1,2", "binary-dihedral:2"}) {
    auto g = make(name);
    auto s = molien(g, std::nullopt, 6);
    for (int d = 0; d <= 6; ++d) CHECK(static_cast<std::int64_t>(invariant_subspace_basis(g, d).size()) == s[d]);
  }
}

TEST_CASE("degrees from molien") {
  CHECK(invariant_degrees(make("mu2^n:3")) == std::vector<int>{2, 2, 2});
  CHECK(invariant_degrees(make("G(2,1,3)")) == std::vector<int>{2, 4, 6});
  CHECK(invariant_degrees(make("S3-refl")) == std::vector<int>{2, 3});
  CHECK(invariant_degrees(make("Sn:4")) == std::vector<int>{1, 2, 3, 4});
  // G(m,p,n): m, 2m, ..., (n-1)m and nm/p
  CHECK(invariant_degrees(make("G(m,p,n):3,1,2")) == std::vector<int>{3, 6});
  CHECK(invariant_degrees(make("G(m,p,n):4,2,2")) == std::vector<int>{4, 4});
  CHECK(invariant_degrees(make("G(m,p,n):3,3,3")) == std::vector<int>{3, 3, 6});
  CHECK_THROWS_AS(invariant_degrees(make("binary-dihedral:2")), VerificationError);
  CHECK_THROWS_AS(invariant_degrees(make("cyclic-sl2:3")), VerificationError);
}

TEST_CASE("basic invariants") {
  SECTION("mu2^n") {
    for (int n = 1; n <= 4; ++n) {
      auto f = basic_invariants(make("mu2^n:" + std::to_string(n)));
      REQUIRE(f.polys.size() == static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) CHECK(f.polys[static_cast<std::size_t>(i)] == x(n, i).pow(2));
    }
  }
  SECTION("B3 uses power sums") {
    auto f = basic_invariants(make("G(2,1,3)"));
    CHECK(f.power_sums);
    CHECK(f.polys[0] == power_sum(3, 2));
    CHECK(f.polys[1] == power_sum(3, 4));
    CHECK(f.polys[2] == power_sum(3, 6));
  }
  SECTION("S3 reflection representation") {
    auto g = make("S3-refl");
    auto f = basic_invariants(g);
    CHECK(f.degrees == std::vector<int>{2, 3});
    CHECK(invariant_subspace_basis(g, 2).size() == 1);
    CHECK(invariant_subspace_basis(g, 3).size() == 1);
    CHECK_FALSE(jacobian_det(f.polys).is_zero());
    for (const auto& p : f.polys) CHECK(is_invariant(p, g));
  }
  SECTION("pseudo-reflection and repeated degrees") {
    for (const char* name : {"G(m,p,n):3,1,2", "G(m,p,n):4,2,2", "G(m,p,n):3,3,3"}) {
      auto g = make(name);
      auto f = basic_invariants(g);
      for (const auto& p : f.polys) CHECK(is_invariant(p, g));
      CHECK_FALSE(jacobian_det(f.polys).is_zero());
    }
  }
}

TEST_CASE("invariant subspace basis is reduced echelon") {
  auto g = make("G(2,1,3)");
  auto basis = invariant_subspace_basis(g, 6);
  REQUIRE(basis.size() == 3);
  // leading coefficients are 1 and leading monomials strictly decrease
  for (std::size_t i = 0; i < basis.size(); ++i) {
    CHECK(basis[i].leading_coeff().is_one());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i != j) CHECK(basis[j].coeff(basis[i].leading_monomial()).is_zero());
    }
  }
}

TEST_CASE("discriminants") {
  SECTION("mu2^3") {
    auto g = make("mu2^n:3");
    auto f = basic_invariants(g);
    auto d = arrangement_and_discriminant(g, f);
    CHECK(d.z == x(3, 0) * x(3, 1) * x(3, 2));
    CHECK(d.delta_x == (x(3, 0) * x(3, 1) * x(3, 2)).pow(2));
    CHECK(d.delta_f == x(3, 0) * x(3, 1) * x(3, 2));
    CHECK(d.unit_J == CycNum(8));
  }
  SECTION("B3 arrangement") {
    auto g = make("G(2,1,3)");
    auto f = basic_invariants(g);
    auto d = arrangement_and_discriminant(g, f);
    MPoly a = x(3, 0), b = x(3, 1), c = x(3, 2);
    MPoly z = a * b * c * (a.pow(2) - b.pow(2)) * (a.pow(2) - c.pow(2)) * (b.pow(2) - c.pow(2));
    CHECK((d.z == z || d.z == -z));
    CHECK(d.delta_x == z * z);
    CHECK(d.deg_J == 9);
    // Delta rewritten and substituted back gives Delta
    std::vector<MPoly> vals = f.polys;
    CHECK(d.delta_f.substitute(vals) == d.delta_x);
  }
  SECTION("S3 degrees") {
    auto g = make("S3-refl");
    auto d = arrangement_and_discriminant(g, basic_invariants(g));
    CHECK(d.deg_z == 3);
    CHECK(d.delta_x.degree() == 6);
    CHECK(d.true_reflection);
  }
  SECTION("pseudo-reflection group") {
    auto g = make("G(m,p,n):3,1,2");
    auto f = basic_invariants(g);
    auto d = arrangement_and_discriminant(g, f);
    CHECK_FALSE(d.true_reflection);
    CHECK(d.delta_f.substitute(f.polys) == d.delta_x);
    CHECK(d.J * d.z == d.unit_delta * d.delta_x);
  }
}

TEST_CASE("rewrite in invariants") {
  auto g = make("G(2,1,3)");
  auto f = basic_invariants(g);
  CHECK(rewrite_in_invariants(f.polys[1], f) == x(3, 1));
  MPoly p = f.polys[0].pow(3) - CycNum(2) * f.polys[0] * f.polys[1];
  CHECK(rewrite_in_invariants(p, f) == x(3, 0).pow(3) - CycNum(2) * x(3, 0) * x(3, 1));
  CHECK_THROWS_AS(rewrite_in_invariants(x(3, 0).pow(2), f), VerificationError);
}

TEST_CASE("algebra relations") {
  MPoly a = x(2, 0), b = x(2, 1);
  auto rel = algebra_relation({a.pow(3) + b.pow(3), a * b, a.pow(3) - b.pow(3)}, 6);
  REQUIRE(rel.has_value());
  MPoly u = x(3, 0), v = x(3, 1), w = x(3, 2);
  CHECK(*rel == w.pow(2) - u.pow(2) + CycNum(4) * v.pow(3));
  auto quad = algebra_relation({a.pow(2), a * b, b.pow(2)}, 4);
  REQUIRE(quad.has_value());
  CHECK(*quad == u * w - v.pow(2));
  CHECK_FALSE(algebra_relation({a.pow(2), b.pow(2)}, 8).has_value());
  CHECK_THROWS_AS(algebra_relation({a.pow(2), a * b, b.pow(2)}, 8), InvalidArgument);
}

TEST_CASE("degree identities and freeness") {
  for (const char* name : {"mu2^n:3", "S3-refl", "Sn:4", "G(2,1,3)", "G(m,p,n):3,1,2", "G(m,p,n):4,2,2", "G(m,p,n):3,3,3"}) {
    INFO(name);
    auto g = make(name);
    auto deg = invariant_degrees(g);
    long prod = 1;
    long sum = 0;
    for (int d : deg) {
      prod *= d;
      sum += d - 1;
    }
    CHECK(prod == static_cast<long>(g.size()));
    CHECK(sum == static_cast<long>(pseudo_reflections(g).reflection_count()));
    auto co = coexponent_polynomial(g.dim, deg, static_cast<long>(g.size()));
    CHECK(static_cast<long>(co.size()) == sum + 1);
  }
}

TEST_CASE("anti-invariance of the Jacobian") {
  for (const char* name : {"S3-refl", "G(2,1,3)", "G(m,p,n):3,1,2", "G(m,p,n):4,2,2"}) {
    auto g = make(name);
    auto J = jacobian_det(basic_invariants(g).polys);
    for (const auto& gen : g.generators) CHECK(act(gen, J) == determinant(gen).inverse() * J);
  }
}

TEST_CASE("det-twisted molien series is shifted by deg J") {
  for (const char* name : {"S3-refl", "G(2,1,3)", "mu2^n:2"}) {
    auto g = make(name);
    const int D = 14;
    auto degJ = 0;
    for (int d : invariant_degrees(g)) degJ += d - 1;
    CHECK(molien(g, det_character(g), D) == molien(g, std::nullopt, D).shift(degJ));
  }
}

TEST_CASE("isotypic series add up to the polynomial ring") {
  for (const char* name : {"cyclic-sl2:3", "binary-dihedral:2", "binary-tetrahedral"}) {
    auto g = make(name);
    auto t = character_table(g);
    GradedSeries sum(20);
    for (std::size_t i = 0; i < t.size(); ++i) sum += t.dims[i] * molien(g, t.rows[i], 20);
    CHECK(sum == GradedSeries::polynomial_ring(2, 20));
  }
}
