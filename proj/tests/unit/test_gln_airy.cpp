#include <doctest.h>

#include <random>

#include "airy/error.hpp"
#include "airy/gln_airy.hpp"

using namespace airy;

namespace {

IMat zeros(int n) { return IMat(n, IVec(n, 0)); }

IMat imat_mul(const IMat& a, const IMat& b) {
  const std::size_t n = a.size();
  IMat r(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

SectionElement random_section(const FqField& f, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.gf->q() - 1);
  SectionElement s{std::vector<Fq>(n + 1, f.zero())};
  for (auto& x : s.x) x = f.of(d(rng));
  return s;
}

}  // namespace

TEST_CASE("the cyclic matrix E_1") {
  CHECK(e1_matrix(2) == IMat{{0, 1}, {1, 0}});
  IMat e = e1_matrix(4), pw = e;
  for (int k = 1; k < 4; ++k) pw = imat_mul(pw, e);
  IMat id = zeros(4);
  for (int i = 0; i < 4; ++i) id[i][i] = 1;
  CHECK(pw == id);
  IMat e2 = imat_mul(e, e);
  IMat want = zeros(4);
  want[0][2] = want[1][3] = want[2][0] = want[3][1] = 1;
  CHECK(e2 == want);
}

TEST_CASE("Z_r in the loop group") {
  SUBCASE("n = 2") {
    auto z1 = Z_element(2, 1);
    REQUIRE(z1.terms.size() == 2);
    CHECK(z1.terms.at(0) == IMat{{0, 1}, {0, 0}});
    CHECK(z1.terms.at(1) == IMat{{0, 0}, {1, 0}});
    auto z3 = Z_element(2, 3);
    REQUIRE(z3.terms.size() == 2);
    CHECK(z3.terms.at(1) == IMat{{0, 1}, {0, 0}});
    CHECK(z3.terms.at(2) == IMat{{0, 0}, {1, 0}});
  }
  SUBCASE("Z_{n+1} = t·ΣE_{i,i+1} + t²·E_{n,1} and φ(Z_{n+1}) = n") {
    for (int n : {2, 4, 6, 8}) {
      auto z = Z_element(n, n + 1);
      IMat t1 = zeros(n), t2 = zeros(n);
      for (int i = 0; i + 1 < n; ++i) t1[i][i + 1] = 1;
      t2[n - 1][0] = 1;
      CHECK(z.terms.at(1) == t1);
      CHECK(z.terms.at(2) == t2);
      CHECK(phi_gl(z) == n);
    }
  }
  SUBCASE("φ vanishes on Z_r for r ≤ n") {
    for (int r = 1; r <= 4; ++r) CHECK(phi_gl(Z_element(4, r)) == 0);
  }
  CHECK_THROWS_AS(Z_element(4, 6), InvalidArgument);
}

TEST_CASE("character parameters") {
  FqField f7(7, 1);
  CHECK_THROWS_AS(make_character_params(3, f7, std::vector<std::int64_t>{1}), Unsupported);
  CHECK_THROWS_WITH(make_character_params(3, f7, std::vector<std::int64_t>{1}), "odd n unsupported");
  CHECK_THROWS_AS(make_character_params(4, FqField(5, 1), std::vector<std::int64_t>{1, 0}), InvalidArgument);
  CHECK_THROWS_AS(make_character_params(4, f7, std::vector<std::int64_t>{1}), InvalidArgument);
  auto ok = make_character_params(4, FqField(7, 2), std::vector<std::int64_t>{1, -1});
  CHECK(ok.lambda[1] == ok.field.of(6));
}

TEST_CASE("section exponential and logarithm") {
  FqField f(11, 1);
  const int n = 4;
  CHECK(log_section(f, n, section_identity(f, n)) == std::vector<Fq>(n + 1, f.zero()));
  std::mt19937_64 rng(1);
  for (int k = 0; k < 500; ++k) {
    auto g = random_section(f, n, rng);
    auto y = log_section(f, n, g);
    CHECK(exp_section(f, n, y).x == g.x);
    CHECK(log_section(f, n, exp_section(f, n, g.x)) == g.x);
    // low orders: y₁ = x₁, y₂ = x₂ − x₁²/2
    CHECK(y[0] == g.x[0]);
    CHECK(y[1] == g.x[1] - g.x[0] * g.x[0] / f.from_int(2));
  }
  FqField f2(11, 1);
  for (int n2 : {2, 6}) {
    for (int k = 0; k < 100; ++k) {
      auto g = random_section(f2, n2, rng);
      CHECK(exp_section(f2, n2, log_section(f2, n2, g)).x == g.x);
    }
  }
}

TEST_CASE("section group law") {
  FqField f(13, 1);
  const int n = 4;
  std::mt19937_64 rng(2);
  for (int k = 0; k < 100; ++k) {
    auto a = random_section(f, n, rng), b = random_section(f, n, rng), c = random_section(f, n, rng);
    CHECK(section_mul(section_mul(a, b), c).x == section_mul(a, section_mul(b, c)).x);
    CHECK(section_mul(a, b).x == section_mul(b, a).x);  // the section is abelian
    CHECK(section_mul(a, section_identity(f, n)).x == a.x);
  }
  // (Id + Z_1)(Id + Z_1) = Id + 2Z_1 + Z_2
  SectionElement z1{std::vector<Fq>(n + 1, f.zero())};
  z1.x[0] = f.one();
  auto sq = section_mul(z1, z1);
  CHECK(sq.x[0] == f.of(2));
  CHECK(sq.x[1] == f.one());
  CHECK(sq.x[2] == f.zero());
}

TEST_CASE("the character χ") {
  SUBCASE("χ(Id) = 0") {
    auto params = make_character_params(4, FqField(7, 1), std::vector<std::int64_t>{2, 5});
    CHECK(chi_eval(params, section_identity(params.field, 4)) == params.field.zero());
  }
  SUBCASE("n = 2, λ₁ = 0, x = (m, 0, 0) gives (2/3)m³") {
    auto params = make_character_params(2, FqField(11, 1), std::vector<std::int64_t>{0});
    const FqField& f = params.field;
    for (std::uint32_t m = 0; m < 11; ++m) {
      SectionElement s{{f.of(m), f.zero(), f.zero()}};
      Fq mm = f.of(m);
      CHECK(chi_eval(params, s) == f.from_ratio(2, 3) * mm * mm * mm);
    }
  }
  SUBCASE("additivity on 1000 random pairs over F_7") {
    auto params = make_character_params(4, FqField(7, 1), std::vector<std::int64_t>{3, 1});
    std::mt19937_64 rng(3);
    for (int k = 0; k < 1000; ++k) {
      auto a = random_section(params.field, 4, rng), b = random_section(params.field, 4, rng);
      CHECK(chi_eval(params, section_mul(a, b)) == chi_eval(params, a) + chi_eval(params, b));
    }
  }
  SUBCASE("χ only sees y_1..y_{n/2} and y_{n+1}") {
    auto params = make_character_params(4, FqField(7, 1), std::vector<std::int64_t>{3, 1});
    const FqField& f = params.field;
    std::vector<Fq> y(5, f.zero());
    y[2] = f.of(4);
    y[3] = f.of(6);
    CHECK(chi_eval(params, exp_section(f, 4, y)) == f.zero());
    y[4] = f.one();
    CHECK(chi_eval(params, exp_section(f, 4, y)) == f.of(4));
  }
}

TEST_CASE("χ on the geometric point m₁") {
  SUBCASE("m₁ = 0") {
    auto params = make_character_params(4, FqField(11, 1), std::vector<std::int64_t>{1, 2});
    CHECK(chi_geometric(params, params.field.zero()) == params.field.zero());
  }
  SUBCASE("n = 2, λ₁ = 1") {
    auto params = make_character_params(2, FqField(7, 1), std::vector<std::int64_t>{1});
    const FqField& f = params.field;
    for (std::uint32_t m = 0; m < 7; ++m) {
      Fq x = f.of(m);
      CHECK(chi_geometric(params, x) == x + f.from_ratio(2, 3) * x * x * x);
    }
  }
  SUBCASE("agrees with χ of Id + Σ m₁^r Z_r") {
    for (auto [p, e] : {std::pair{11u, 1u}, {7u, 2u}}) {
      auto params = make_character_params(4, FqField(p, e), std::vector<std::int64_t>{4, 9});
      const FqField& f = params.field;
      for (std::uint32_t m = 0; m < f.gf->q(); ++m) {
        Fq x = f.of(m);
        SectionElement s{std::vector<Fq>(5, f.zero())};
        s.x[0] = x;
        s.x[1] = x * x;
        CHECK(chi_geometric(params, x) == chi_eval(params, s));
      }
    }
  }
}

TEST_CASE("Hecke kernel maps") {
  SUBCASE("n = 2") {
    auto params = make_character_params(2, FqField(7, 1), std::vector<std::int64_t>{3});
    const FqField& f = params.field;
    for (std::uint32_t a = 0; a < 7; ++a)
      for (std::uint32_t b = 0; b < 7; ++b) {
        Fq m1 = f.of(a), m2 = f.of(b);
        CHECK(hecke_p2(params, {m1, m2}) == -m2);
        CHECK(hecke_p1(params, {m1, m2}) == f.of(3) * m1 - m1 * m1 * m1 / f.from_int(3) - m2 * m1);
      }
  }
  SUBCASE("n = 4") {
    auto params = make_character_params(4, FqField(7, 1), std::vector<std::int64_t>{1, 0});
    const FqField& f = params.field;
    CHECK(hecke_p1(params, {f.zero(), f.zero(), f.zero()}) == f.zero());
    CHECK(hecke_p2(params, {f.zero(), f.zero(), f.zero()}) == f.zero());
    const auto fp = f_poly(params);
    for (std::uint32_t a = 0; a < 7; ++a)
      for (std::uint32_t b = 0; b < 7; ++b)
        for (std::uint32_t c = 0; c < 7; ++c) {
          std::vector<Fq> m{f.of(a), f.of(b), f.of(c)};
          CHECK(hecke_p2(params, m) == -m[1] * m[0] - m[2]);
          // p₁ = f(m₁) + m₁p₂, which collapses the fiber sum over p₂ = a
          CHECK(hecke_p1(params, m) == poly_eval(fp, m[0]) + m[0] * hecke_p2(params, m));
        }
  }
  SUBCASE("n = 6 over F_11, sampled") {
    auto params = make_character_params(6, FqField(11, 1), std::vector<std::int64_t>{2, 7, 5});
    const FqField& f = params.field;
    const auto fp = f_poly(params);
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::uint32_t> d(0, 10);
    for (int k = 0; k < 300; ++k) {
      std::vector<Fq> m{f.of(d(rng)), f.of(d(rng)), f.of(d(rng)), f.of(d(rng))};
      CHECK(hecke_p1(params, m) == poly_eval(fp, m[0]) + m[0] * hecke_p2(params, m));
    }
  }
}

TEST_CASE("the polynomial f") {
  SUBCASE("n = 2, λ₁ = 0") {
    auto params = make_character_params(2, FqField(5, 1), std::vector<std::int64_t>{0});
    const FqField& f = params.field;
    auto c = f_poly(params);
    REQUIRE(c.size() == 4);
    CHECK(c[0] == f.zero());
    CHECK(c[1] == f.zero());
    CHECK(c[2] == f.zero());
    CHECK(c[3] == -f.one() / f.from_int(3));
  }
  SUBCASE("n = 4, λ = (1, 0)") {
    auto params = make_character_params(4, FqField(11, 1), std::vector<std::int64_t>{1, 0});
    const FqField& f = params.field;
    auto c = f_poly(params);
    REQUIRE(c.size() == 6);
    CHECK(c[1] == f.one());
    CHECK(c[5] == -f.one() / f.from_int(5));
    for (int i : {0, 2, 3, 4}) CHECK(c[i] == f.zero());
    CHECK(poly_to_string(c) == "2*m^5 + m");  // −1/5 ≡ 2 (mod 11)
  }
  SUBCASE("leading coefficient never vanishes") {
    for (int n : {2, 4, 6, 8})
      for (std::uint32_t p : {11u, 13u, 17u, 19u, 23u}) {
        if (p <= static_cast<std::uint32_t>(n + 1)) continue;
        auto params = make_character_params(n, FqField(p, 1), std::vector<std::int64_t>(n / 2, 1));
        CHECK(f_poly(params).back().v != 0);
      }
  }
}
