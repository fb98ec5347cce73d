#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "airy/error.hpp"
#include "airy/rootdata.hpp"

using namespace airy;

namespace {

struct T {
  Series s;
  int rank;
};

// Every type the library supports up to rank 6.
std::vector<T> all_types() {
  std::vector<T> out;
  for (int r = 1; r <= 6; ++r) out.push_back({Series::A, r});
  for (int r = 2; r <= 6; ++r) out.push_back({Series::B, r});
  for (int r = 2; r <= 6; ++r) out.push_back({Series::C, r});
  for (int r = 4; r <= 6; ++r) out.push_back({Series::D, r});
  out.push_back({Series::G, 2});
  out.push_back({Series::F, 4});
  return out;
}

std::string name(const T& t) { return to_string(t.s) + std::to_string(t.rank); }

}  // namespace

TEST_CASE("root datum examples") {
  SUBCASE("A1 simply connected") {
    RootDatum rd(Series::A, 1, Form::SimplyConnected);
    CHECK(rd.num_roots() == 2);
    CHECK(rd.coxeter_number() == 2);
    CHECK(rd.exponents() == std::vector<int>{1});
  }
  SUBCASE("G2 adjoint") {
    RootDatum rd(Series::G, 2, Form::Adjoint);
    CHECK(rd.num_roots() == 12);
    CHECK(rd.coxeter_number() == 6);
    CHECK(rd.exponents() == std::vector<int>{1, 5});
  }
  SUBCASE("A4 has odd Coxeter number") { CHECK(RootDatum(Series::A, 4, Form::SimplyConnected).coxeter_number() == 5); }
  SUBCASE("Coxeter numbers") {
    CHECK(coxeter_number(build_root_datum(Series::A, 1, Form::Adjoint)) == 2);
    CHECK(coxeter_number(build_root_datum(Series::D, 4, Form::Adjoint)) == 6);
    for (int n = 1; n <= 3; ++n) CHECK(coxeter_number(build_root_datum(Series::A, 2 * n, Form::Adjoint)) == 2 * n + 1);
    CHECK(coxeter_number(build_root_datum(Series::F, 4, Form::Adjoint)) == 12);
  }
  SUBCASE("exponents") {
    CHECK(exponents(build_root_datum(Series::A, 2, Form::Adjoint)) == std::vector<int>{1, 2});
    CHECK(exponents(build_root_datum(Series::A, 3, Form::Adjoint)) == std::vector<int>{1, 2, 3});
    CHECK(exponents(build_root_datum(Series::B, 2, Form::Adjoint)) == std::vector<int>{1, 3});
    CHECK(exponents(build_root_datum(Series::D, 4, Form::Adjoint)) == std::vector<int>{1, 3, 3, 5});
    CHECK(exponents(build_root_datum(Series::F, 4, Form::Adjoint)) == std::vector<int>{1, 5, 7, 11});
  }
  SUBCASE("GL_n") {
    RootDatum gl(Series::GL, 4, Form::GL);
    CHECK(gl.semisimple_rank() == 3);
    CHECK(gl.lattice_rank() == 4);
    CHECK(gl.center_rank() == 1);
    CHECK(gl.coxeter_number() == 4);
    CHECK(gl.dim_group() == 16);
  }
  SUBCASE("bad input") {
    CHECK_THROWS_AS(parse_series("Z"), InvalidArgument);
    CHECK_THROWS_AS(parse_form("weird"), InvalidArgument);
    CHECK(parse_series("gl") == Series::GL);
    CHECK(parse_form("sc") == Form::SimplyConnected);
  }
}

TEST_CASE("root system invariants for every type up to rank 6") {
  for (const auto& t : all_types())
    for (Form form : {Form::Adjoint, Form::SimplyConnected}) {
      CAPTURE(name(t));
      RootDatum rd(t.s, t.rank, form);
      const int n = rd.semisimple_rank(), h = rd.coxeter_number();
      // ⟨α, α̌⟩ = 2
      for (const auto& r : rd.roots()) CHECK(RootDatum::pair(r.character, r.coroot) == 2);
      CHECK(static_cast<int>(rd.num_roots()) == n * h);
      CHECK(rd.roots()[rd.highest_root()].height == h - 1);
      const auto& ex = rd.exponents();
      REQUIRE(static_cast<int>(ex.size()) == n);
      CHECK(std::is_sorted(ex.begin(), ex.end()));
      for (int i = 0; i < n; ++i) CHECK(ex[i] + ex[n - 1 - i] == h);
      CHECK(std::accumulate(ex.begin(), ex.end(), 0) == static_cast<int>(rd.num_positive()));
      for (int r = 1; r < h; ++r) {
        int mult = static_cast<int>(std::count(ex.begin(), ex.end(), r));
        CHECK(mult == rd.positive_height_count(r) - rd.positive_height_count(r + 1));
      }
      // index conventions: simple roots first, negatives offset by P
      for (int i = 0; i < n; ++i) CHECK(rd.roots()[rd.simple_root(i)].height == 1);
      for (std::size_t j = 0; j < rd.num_positive(); ++j) {
        const auto& a = rd.roots()[j].simple;
        const auto& b = rd.roots()[rd.negative(j)].simple;
        for (int i = 0; i < n; ++i) CHECK(a[i] == -b[i]);
      }
    }
}

TEST_CASE("the dual datum swaps B and C") {
  RootDatum b3(Series::B, 3, Form::SimplyConnected);
  RootDatum d = b3.dual();
  CHECK(d.series() == Series::C);
  CHECK(d.form() == Form::Adjoint);
  CHECK(d.num_roots() == b3.num_roots());
}

TEST_CASE("minuscule coweights") {
  SUBCASE("SL2 has only 0") {
    auto m = minuscule_coweights(RootDatum(Series::A, 1, Form::SimplyConnected));
    REQUIRE(m.size() == 1);
    CHECK(m[0].coords == IVec{0});
  }
  SUBCASE("PGL2 has 0 and half the coroot") {
    auto m = minuscule_coweights(RootDatum(Series::A, 1, Form::Adjoint));
    std::set<IVec> got;
    for (const auto& c : m) got.insert(c.coords);
    CHECK(got == std::set<IVec>{{0}, {1}});
  }
  SUBCASE("GL_n window contains (0,…,0,−1)") {
    RootDatum gl(Series::GL, 4, Form::GL);
    auto m = minuscule_coweights(gl, {-1, 1});
    CHECK(m.size() == 3);
    bool found = false;
    for (const auto& c : m) {
      if (c.coords == IVec{0, 0, 0, -1}) found = true;
      CHECK(is_minuscule(gl, c));
      for (auto x : c.coords) CHECK((x == 0 || x == 1 || x == -1));
    }
    CHECK(found);
  }
  SUBCASE("adjoint A3 has four") { CHECK(minuscule_coweights(RootDatum(Series::A, 3, Form::Adjoint)).size() == 4); }
}

TEST_CASE("minuscule bijection") {
  SUBCASE("SL3") {
    auto r = minuscule_bijection_check(RootDatum(Series::A, 2, Form::SimplyConnected));
    CHECK(r.ok());
    CHECK(r.num_weights == 3);
  }
  SUBCASE("PGL3") {
    auto r = minuscule_bijection_check(RootDatum(Series::A, 2, Form::Adjoint));
    CHECK(r.ok());
    CHECK(r.num_coweights == 3);
  }
  SUBCASE("G2") {
    auto r = minuscule_bijection_check(RootDatum(Series::G, 2, Form::Adjoint));
    CHECK(r.ok());
    CHECK(r.num_coweights == 1);
    CHECK(r.num_weights == 1);
  }
  SUBCASE("Sp4") {
    auto r = minuscule_bijection_check(RootDatum(Series::C, 2, Form::SimplyConnected));
    CHECK(r.ok());
    CHECK(r.num_weights == 2);
  }
  for (const auto& t : all_types())
    for (Form form : {Form::Adjoint, Form::SimplyConnected}) {
      CAPTURE(name(t));
      CHECK(minuscule_bijection_check(RootDatum(t.s, t.rank, form)).ok());
    }
}

TEST_CASE("alpha_mu") {
  CHECK_FALSE(alpha_mu(RootDatum(Series::A, 3, Form::Adjoint), Coweight{{0, 0, 0}}).has_value());
  CHECK(alpha_mu(RootDatum(Series::A, 1, Form::Adjoint), Coweight{{1}}) == 0);
  CHECK(alpha_mu(RootDatum(Series::A, 3, Form::Adjoint), Coweight{{0, 1, 0}}) == 1);
  CHECK_THROWS_AS(alpha_mu(RootDatum(Series::A, 3, Form::Adjoint), Coweight{{2, 0, 0}}), InvalidArgument);
}

TEST_CASE("Weyl elements attached to minuscule coweights") {
  SUBCASE("μ = 0 gives w_P = 1") {
    for (const auto& t : all_types()) {
      RootDatum rd(t.s, t.rank, Form::Adjoint);
      Coweight zero{IVec(rd.lattice_rank(), 0)};
      CHECK(weyl_wP(rd, zero).is_identity());
      CHECK(weyl_wP0(rd, zero).length() == weyl_w0(rd).length());
      CHECK(check_wP_heights(rd, zero));
    }
  }
  SUBCASE("w_0 has length #Φ⁺ and sends Φ⁺ to Φ⁻") {
    for (const auto& t : all_types()) {
      RootDatum rd(t.s, t.rank, Form::Adjoint);
      auto w0 = weyl_w0(rd);
      CHECK(w0.length() == rd.num_positive());
      for (std::size_t j = 0; j < rd.num_positive(); ++j) CHECK_FALSE(rd.roots()[w0.act(j)].positive());
    }
  }
  SUBCASE("PGL2, μ = α̌/2") {
    RootDatum rd(Series::A, 1, Form::Adjoint);
    Coweight mu{{1}};
    CHECK(weyl_wP0(rd, mu).is_identity());
    CHECK(weyl_wP(rd, mu).length() == 1);
  }
  SUBCASE("PGL4, μ = ω̌_1: w_{P,0}θ = α_1") {
    RootDatum rd(Series::A, 3, Form::Adjoint);
    Coweight mu{{1, 0, 0}};
    CHECK(weyl_wP0(rd, mu).act(rd.highest_root()) == rd.simple_root(0));
    CHECK(check_wP_heights(rd, mu));
  }
  SUBCASE("D4, every minuscule μ") {
    RootDatum rd(Series::D, 4, Form::Adjoint);
    auto ms = minuscule_coweights(rd);
    CHECK(ms.size() == 4);
    for (const auto& mu : ms) CHECK(check_wP_heights(rd, mu));
  }
  SUBCASE("reflections are involutions") {
    RootDatum rd(Series::B, 3, Form::SimplyConnected);
    for (int i = 0; i < 3; ++i) {
      auto s = WeylElement::reflection(rd, i);
      CHECK(compose(rd, s, s).is_identity());
      CHECK(s.act(rd.simple_root(i)) == rd.negative(rd.simple_root(i)));
    }
  }
}

TEST_CASE("u_μ root sets") {
  SUBCASE("μ = 0") {
    RootDatum rd(Series::A, 2, Form::Adjoint);
    auto u = u_mu_roots(rd, Coweight{{0, 0}});
    std::set<std::size_t> pos, neg;
    for (std::size_t j = 0; j < rd.num_positive(); ++j) {
      pos.insert(j);
      neg.insert(rd.negative(j));
    }
    CHECK(std::set<std::size_t>(u.u_mu.begin(), u.u_mu.end()) == pos);
    CHECK(std::set<std::size_t>(u.u_mu_minus.begin(), u.u_mu_minus.end()) == neg);
    CHECK(u.conjugation_ok);
  }
  SUBCASE("PGL2, μ = α̌/2") {
    RootDatum rd(Series::A, 1, Form::Adjoint);
    auto u = u_mu_roots(rd, Coweight{{1}});
    CHECK(u.u_mu == std::vector<std::size_t>{rd.negative(0)});
    CHECK(u.u_mu_minus == std::vector<std::size_t>{0});
    CHECK(u.conjugation_ok);
  }
  SUBCASE("PGL3, μ = ω̌_1") {
    RootDatum rd(Series::A, 2, Form::Adjoint);
    auto u = u_mu_roots(rd, Coweight{{1, 0}});
    std::set<std::size_t> want{rd.simple_root(1), rd.negative(0), rd.negative(*rd.find_simple({1, 1}))};
    CHECK(std::set<std::size_t>(u.u_mu.begin(), u.u_mu.end()) == want);
    CHECK(u.conjugation_ok);
  }
}

TEST_CASE("stabilizer dimension") {
  RootDatum sl2(Series::A, 1, Form::SimplyConnected);
  CHECK(stab_dimension(sl2, Coweight{{0}}) == sl2.dim_borel());
  CHECK(stab_dimension(sl2, Coweight{{1}}) == 3);
  RootDatum pgl4(Series::A, 3, Form::Adjoint);
  CHECK(stab_dimension(pgl4, Coweight{{0, 1, 0}}) == 9);
  CHECK(pgl4.dim_borel() == 9);

  // stab_dimension ≥ dim B with equality exactly on dominant minuscule coweights
  for (const auto& t : all_types()) {
    if (t.rank > 3) continue;
    for (Form form : {Form::Adjoint, Form::SimplyConnected}) {
      RootDatum rd(t.s, t.rank, form);
      CAPTURE(rd.label());
      const int L = rd.lattice_rank();
      IVec c(L, -2);
      while (true) {
        Coweight mu{c};
        auto d = stab_dimension(rd, mu);
        CHECK(d >= rd.dim_borel());
        CHECK((d == rd.dim_borel()) == (is_minuscule(rd, mu) && is_dominant(rd, mu)));
        int i = 0;
        for (; i < L; ++i) {
          if (c[i] < 2) {
            ++c[i];
            break;
          }
          c[i] = -2;
        }
        if (i == L) break;
      }
    }
  }
}

TEST_CASE("zero-dimensionality and the Swan identity") {
  CHECK(dim_bunJ_defect(RootDatum(Series::A, 3, Form::Adjoint)) == 0);
  CHECK(dim_bunJ_defect(RootDatum(Series::A, 4, Form::Adjoint)) == 0);
  CHECK(dim_bunJ_defect(RootDatum(Series::D, 4, Form::Adjoint)) == 0);
  for (const auto& t : all_types()) {
    RootDatum rd(t.s, t.rank, Form::Adjoint);
    CAPTURE(rd.label());
    CHECK(dim_bunJ_defect(rd) == 0);
    CHECK(swan_identity_check(rd));
    // n(h+1) = n + #Φ
    const int n = rd.semisimple_rank(), h = rd.coxeter_number();
    CHECK(n * (h + 1) == n + static_cast<int>(rd.num_roots()));
  }
}
