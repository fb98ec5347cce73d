#include <doctest.h>

#include <cmath>

#include "airy/error.hpp"
#include "airy/expsum.hpp"

using namespace airy;

namespace {

std::int64_t modp(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  a = modp(a, p);
  for (std::int64_t x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

// −Σ_x ψ(f(x) + t x) over F_p, integer arithmetic only. f low degree first.
CyclotomicValue direct_airy(std::int64_t p, const std::vector<std::int64_t>& f, std::int64_t t) {
  std::vector<std::int64_t> counts(p, 0);
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t v = 0, pw = 1;
    for (auto c : f) {
      v = modp(v + c * pw, p);
      pw = pw * x % p;
    }
    counts[modp(v + t * x, p)]++;
  }
  return -CyclotomicValue::from_counts(static_cast<std::uint32_t>(p), counts);
}

std::vector<std::int64_t> as_ints(const std::vector<Fq>& c) {
  std::vector<std::int64_t> out;
  for (const auto& x : c) out.push_back(x.v);
  return out;
}

}  // namespace

TEST_CASE("Airy table against direct summation") {
  SUBCASE("n = 2, p = 5, f = −x³/3") {
    FqField f(5, 1);
    std::vector<Fq> fp{f.zero(), f.zero(), f.zero(), -f.one() / f.from_int(3)};
    auto t = airy_trace_table(f, fp);
    CHECK(t.q == 5);
    CHECK(t.n == 2);
    const std::vector<std::int64_t> ints{0, 0, 0, modp(-inv_mod(3, 5), 5)};
    for (std::int64_t a = 0; a < 5; ++a) CHECK(t.at(a) == direct_airy(5, ints, a));
  }
  SUBCASE("n = 4 polynomials over F_7 and F_11") {
    for (std::uint32_t p : {7u, 11u})
      for (auto lam : {std::vector<std::int64_t>{0, 0}, {1, 0}, {2, 3}}) {
        auto params = make_character_params(4, FqField(p, 1), lam);
        auto fp = f_poly(params);
        auto t = airy_trace_table(params.field, fp);
        for (std::uint32_t a = 0; a < p; ++a) CHECK(t.at(a) == direct_airy(p, as_ints(fp), a));
      }
  }
}

TEST_CASE("Airy table identities") {
  FqField f(7, 2);
  auto params = make_character_params(4, f, std::vector<std::int64_t>{2, 3});
  auto fp = f_poly(params);
  auto t = airy_trace_table(f, fp);
  const GaloisField& gf = *f.gf;

  SUBCASE("Σ_t entry(t) = −q ψ(Tr f(0))") {
    CyclotomicValue s = CyclotomicValue::zero(7);
    for (const auto& v : t.entries) s += v;
    CHECK(s == -(psi(7, gf.trace(fp[0].v)) * BigInt(gf.q())));
  }
  SUBCASE("f + c multiplies every entry by ψ(Tr c)") {
    for (std::uint32_t c : {1u, 9u, 30u}) {
      auto shifted = fp;
      shifted[0] += f.of(c);
      auto ts = airy_trace_table(f, shifted);
      for (std::uint32_t a = 0; a < gf.q(); ++a) CHECK(ts.at(a) == t.at(a) * psi(7, gf.trace(c)));
    }
  }
  SUBCASE("Frobenius on t fixes the table for f over F_p") {
    for (std::uint32_t a = 0; a < gf.q(); ++a) CHECK(t.at(gf.frobenius(a)) == t.at(a));
  }
  SUBCASE("ζ ↦ ζ^c matches scaling f and t by c") {
    for (std::uint32_t c = 2; c < 7; ++c) {
      auto scaled = fp;
      for (auto& x : scaled) x *= f.of(c);
      auto tc = airy_trace_table(f, scaled);
      for (std::uint32_t a = 0; a < gf.q(); ++a) CHECK(tc.at(gf.mul(c, a)) == t.at(a).galois(c));
    }
  }
  SUBCASE("bad input") {
    CHECK_THROWS_AS(airy_trace_table(f, {f.one()}), InvalidArgument);
    std::vector<Fq> deg7(8, f.zero());
    deg7[7] = f.one();
    CHECK_THROWS_AS(airy_trace_table(f, deg7), InvalidArgument);  // p | deg f
  }
}

TEST_CASE("closed Hecke trace") {
  SUBCASE("n = 2 equals the Airy entry") {
    auto params = make_character_params(2, FqField(5, 1), std::vector<std::int64_t>{1});
    auto t = airy_trace_table(params.field, f_poly(params));
    for (std::uint32_t a = 0; a < 5; ++a) CHECK(hecke_trace_closed(params, params.field.of(a)) == t.at(a));
  }
  SUBCASE("n = 4, p = 7 is q times the Airy entry") {
    auto params = make_character_params(4, FqField(7, 1), std::vector<std::int64_t>{1, 0});
    auto t = airy_trace_table(params.field, f_poly(params));
    for (std::uint32_t a = 0; a < 7; ++a)
      CHECK(hecke_trace_closed(params, params.field.of(a)) == t.at(a) * BigInt(7));
    CHECK(hecke_table_closed(params).entries.size() == 7);
  }
}

TEST_CASE("brute-force Hecke trace") {
  SUBCASE("n = 2, p = 5, λ₁ = 0, a = 0: fiber {(m₁, 0)}") {
    auto params = make_character_params(2, FqField(5, 1), std::vector<std::int64_t>{0});
    const std::vector<std::int64_t> f{0, 0, 0, modp(-inv_mod(3, 5), 5)};
    std::vector<std::int64_t> counts(5, 0);
    for (std::int64_t m = 0; m < 5; ++m) counts[modp(f[3] * m * m * m, 5)]++;
    CHECK(hecke_trace_bruteforce(params, params.field.zero()) == -CyclotomicValue::from_counts(5, counts));
  }
  SUBCASE("agrees with the closed form, n = 4 over F_7") {
    auto params = make_character_params(4, FqField(7, 1), std::vector<std::int64_t>{1, 0});
    auto brute = hecke_table_bruteforce(params);
    for (std::uint32_t a = 0; a < 7; ++a) {
      CHECK(brute.at(a) == hecke_trace_closed(params, params.field.of(a)));
      CHECK(hecke_trace_bruteforce(params, params.field.of(a)) == brute.at(a));
    }
  }
  SUBCASE("every fiber of p₂ has q^{n/2} points") {
    for (int n : {2, 4}) {
      auto params = make_character_params(n, FqField(7, 1), std::vector<std::int64_t>(n / 2, 2));
      const std::uint32_t q = 7;
      std::vector<std::uint64_t> fiber(q, 0);
      const int d = 1 + n / 2;
      std::vector<Fq> m(d, params.field.zero());
      std::uint64_t total = 1;
      for (int i = 0; i < d; ++i) total *= q;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t x = idx;
        for (int i = 0; i < d; ++i, x /= q) m[i] = params.field.of(static_cast<std::uint32_t>(x % q));
        fiber[hecke_p2(params, m).v]++;
      }
      std::uint64_t expect = 1;
      for (int i = 0; i < n / 2; ++i) expect *= q;
      for (auto c : fiber) CHECK(c == expect);
    }
  }
}

TEST_CASE("trace comparison") {
  SUBCASE("n = 2") {
    for (std::uint32_t p : {5u, 7u, 11u})
      for (std::int64_t l : {0, 1, 2}) {
        auto cmp = compare_traces(make_character_params(2, FqField(p, 1), std::vector<std::int64_t>{l}));
        CHECK(cmp.pass);
        CHECK(cmp.mismatches.empty());
      }
  }
  SUBCASE("n = 4") {
    for (std::uint32_t p : {7u, 11u})
      for (auto lam : {std::vector<std::int64_t>{0, 0}, {1, 0}, {2, 3}})
        CHECK(compare_traces(make_character_params(4, FqField(p, 1), lam)).pass);
  }
  SUBCASE("over F_25") {
    auto cmp = compare_traces(make_character_params(2, FqField(5, 2), std::vector<std::int64_t>{1}));
    CHECK(cmp.pass);
    CHECK(cmp.airy.q == 25);
  }
  SUBCASE("λ outside the prime field") {
    FqField f(7, 2);
    auto params = make_character_params(4, f, std::vector<Fq>{f.of(12), f.of(30)});
    CHECK(compare_traces(params).pass);
  }
}

TEST_CASE("Weil bound") {
  SUBCASE("n = 2, q = 5") {
    auto params = make_character_params(2, FqField(5, 1), std::vector<std::int64_t>{0});
    auto w = weil_check(airy_trace_table(params.field, f_poly(params)));
    CHECK(w.pass);
    CHECK(w.bound == doctest::Approx(2 * std::sqrt(5.0) + 1e-6));
  }
  SUBCASE("n = 4, q = 49") {
    auto params = make_character_params(4, FqField(7, 2), std::vector<std::int64_t>{1, 0});
    auto t = airy_trace_table(params.field, f_poly(params));
    auto w = weil_check(t);
    CHECK(w.pass);
    CHECK(w.bound == doctest::Approx(28.0 + 1e-6));
    for (const auto& v : t.entries) CHECK(std::abs(v.embed()) <= w.bound);
  }
}

TEST_CASE("budgets and threads") {
  auto params = make_character_params(4, FqField(11, 1), std::vector<std::int64_t>{2, 3});
  ExpsumOptions tiny;
  tiny.budget = 100;
  CHECK_THROWS_AS(hecke_table_bruteforce(params, tiny), BudgetExceeded);
  CHECK_THROWS_AS(hecke_trace_bruteforce(params, params.field.zero(), tiny), BudgetExceeded);
  CHECK_THROWS_AS(airy_trace_table(params.field, f_poly(params), tiny), BudgetExceeded);
  CHECK_THROWS_AS(hecke_table_closed(params, tiny), BudgetExceeded);

  ExpsumOptions one;
  one.threads = 1;
  auto ref_brute = hecke_table_bruteforce(params, one);
  auto ref_airy = airy_trace_table(params.field, f_poly(params), one);
  for (unsigned th : {2u, 3u, 7u, 16u}) {
    ExpsumOptions o;
    o.threads = th;
    CHECK(hecke_table_bruteforce(params, o).entries == ref_brute.entries);
    CHECK(airy_trace_table(params.field, f_poly(params), o).entries == ref_airy.entries);
    CHECK(hecke_table_closed(params, o).entries == hecke_table_closed(params, one).entries);
  }
}

TEST_CASE("table metadata") {
  auto params = make_character_params(4, FqField(7, 1), std::vector<std::int64_t>{1, 0});
  auto shape = table_shape(params, Provenance::HeckeBrute);
  CHECK(shape.lambda == std::vector<std::uint32_t>{1, 0});
  CHECK(shape.f_coeffs.size() == 6);
  CHECK(table_shape(params, Provenance::Airy).lambda.empty());
  CHECK(to_string(Provenance::HeckeClosed) == "hecke-closed");
  CHECK(scale_by_power(CyclotomicValue::one(7), 7, 2) == CyclotomicValue::one(7) * BigInt(49));
  CHECK(field_digits(5, 2, 7) == std::vector<std::uint32_t>{2, 1});
}
