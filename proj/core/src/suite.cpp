#include "airy/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "airy/chevalley.hpp"
#include "airy/error.hpp"
#include "airy/gln_airy.hpp"
#include "airy/lie_structure.hpp"
#include "airy/loopmodel.hpp"

namespace airy {

namespace {

using QAlg = ChevalleyAlgebra<RationalField>;

std::shared_ptr<const RootDatum> datum(const TypeSpec& t) {
  return std::make_shared<const RootDatum>(t.series, t.rank, t.form);
}

Json coweight_json(const Coweight& mu) { return Json(mu.coords); }

std::vector<Coweight> minuscules(const RootDatum& rd) { return minuscule_coweights(rd, DegreeWindow{-1, 1}); }

Json type_params(const TypeSpec& t) {
  return Json{{"type", label(t)}, {"series", to_string(t.series)}, {"rank", t.rank}, {"form", to_string(t.form)}};
}

// Fails `v` when the elapsed time exceeds the criterion's budget.
void check_runtime(Verdict& v, std::chrono::steady_clock::time_point t0, double limit_ms) {
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  v.params["runtime_limit_ms"] = limit_ms;
  if (ms > limit_ms) v.fail(Json{{"runtime_ms", ms}, {"limit_ms", limit_ms}});
}

// Folds sub-verdicts into one criterion verdict; the first failure's
// witness is kept together with the sub-check parameters.
void absorb(Verdict& into, const Verdict& sub, Json& subs) {
  subs.push_back(Json{{"check", sub.check}, {"params", sub.params}, {"pass", sub.pass}});
  if (!sub.pass) into.fail(Json{{"check", sub.check}, {"params", sub.params}, {"witness", *sub.witness}});
}

void decomposition_on(Verdict& v, const QAlg& alg, const std::string& type, const std::optional<Coweight>& only_mu) {
  const RootDatum& rd = alg.rd();
  const int h = alg.h();
  auto z = centralizer_z(alg);
  std::size_t checked = 0;
  for (int r = 1; r < h; ++r) {
    if (static_cast<int>(z[r].dim()) != rd.exponent_multiplicity(r))
      v.fail(Json{{"type", type}, {"r", r}, {"dim_z", z[r].dim()}, {"expected", rd.exponent_multiplicity(r)}});
    if (!p_minus_bijective(alg, z[r])) v.fail(Json{{"type", type}, {"r", r}, {"p_minus_bijective", false}});
  }
  std::vector<Coweight> mus = only_mu ? std::vector<Coweight>{*only_mu} : minuscules(rd);
  for (const auto& mu : mus) {
    if (!is_minuscule(rd, mu)) throw InvalidArgument("coweight " + to_string(mu) + " is not minuscule");
    auto lift = wP_representative(alg, mu);
    for (int r = 1; r < h; ++r) {
      auto d = decomposition_check(alg, lift, z[r]);
      ++checked;
      if (!d.pass())
        v.fail(Json{{"type", type},
                    {"mu", coweight_json(mu)},
                    {"r", r},
                    {"dim_g", d.dim_g},
                    {"dim_z", d.dim_z},
                    {"dim_a", d.dim_a},
                    {"dim_u", d.dim_u},
                    {"rank", d.rank},
                    {"homogeneous", d.homogeneous}});
    }
  }
  v.params["num_mu"] = mus.size();
  v.params["checked"] = checked;
}

std::int64_t reduce_mod(const Rational& x, std::uint32_t p) {
  BigInt den = x.get_den() % p;
  if (den == 0) throw InvalidArgument("denominator divisible by p");
  BigInt num = x.get_num() % p;
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), BigInt(p).get_mpz_t());
  BigInt r = (num * inv) % p;
  if (r < 0) r += p;
  return r.get_si();
}

}  // namespace

std::vector<TypeSpec> desk_types() {
  std::vector<std::pair<Series, int>> base = {{Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::A, 4},
                                              {Series::A, 5}, {Series::A, 6}, {Series::B, 2}, {Series::B, 3},
                                              {Series::B, 4}, {Series::C, 2}, {Series::C, 3}, {Series::C, 4},
                                              {Series::D, 4}, {Series::G, 2}, {Series::F, 4}};
  std::vector<TypeSpec> out;
  for (auto [s, r] : base)
    for (auto f : {Form::Adjoint, Form::SimplyConnected}) out.push_back({s, r, f});
  return out;
}

std::string label(const TypeSpec& t) { return RootDatum(t.series, t.rank, t.form).label(); }

TypeSpec parse_type(const std::string& series, int rank, const std::string& form) {
  Series s = parse_series(series);
  Form f = s == Series::GL ? Form::GL : parse_form(form);
  if (s != Series::GL && f == Form::GL) throw InvalidArgument("form gl is only valid for series GL");
  RootDatum check(s, rank, f);  // validates the rank
  return {s, rank, f};
}

Verdict verify_trace_identity(int n, std::uint32_t p, std::uint32_t e, const std::vector<std::int64_t>& lambda,
                              const SuiteOptions& opt) {
  Json params{{"n", n}, {"p", p}, {"e", e}, {"lambda", lambda}};
  return run_check("trace-identity", params, [&](Verdict& v) {
    FqField field(p, e);
    auto params_ = make_character_params(n, field, lambda);
    ExpsumOptions eo{opt.budget, opt.threads};
    auto cmp = compare_traces(params_, eo);
    v.params["q"] = field.gf->q();
    v.params["twist"] = n / 2 - 1;
    if (!cmp.pass) {
      const auto& m = cmp.mismatches.front();
      v.fail(Json{{"a", field_digits(p, e, m.a)},
                  {"lambda", lambda},
                  {"closed", m.closed.to_string()},
                  {"brute", m.brute.to_string()},
                  {"airy_scaled", m.airy_scaled.to_string()},
                  {"num_mismatches", cmp.mismatches.size()}});
    }
  });
}

namespace {

Verdict verify_weil(int n, std::uint32_t p, std::uint32_t e, const std::vector<std::int64_t>& lambda,
                    const SuiteOptions& opt) {
  Json params{{"n", n}, {"p", p}, {"e", e}, {"lambda", lambda}};
  return run_check("weil-bound", params, [&](Verdict& v) {
    FqField field(p, e);
    auto cp = make_character_params(n, field, lambda);
    auto table = airy_trace_table(field, f_poly(cp), ExpsumOptions{opt.budget, opt.threads});
    auto w = weil_check(table);
    v.params["bound"] = w.bound;
    v.params["max_abs"] = w.max_abs;
    if (!w.pass) v.fail(Json{{"a", field_digits(p, e, w.worst_a)}, {"abs", w.max_abs}, {"bound", w.bound}});
  });
}

}  // namespace

Verdict verify_decomposition(const TypeSpec& t, const std::optional<Coweight>& mu) {
  return run_check("decomposition", type_params(t), [&](Verdict& v) {
    if (mu) v.params["mu"] = coweight_json(*mu);
    auto alg = build_algebra<RationalField>(datum(t));
    decomposition_on(v, alg, label(t), mu);
  });
}

Verdict verify_rigidity_kernel(const TypeSpec& t) {
  return run_check("rigidity-kernel", type_params(t), [&](Verdict& v) {
    auto alg = build_algebra<RationalField>(datum(t));
    const int h = alg.h();
    Json rs = Json::array();
    for (int r = 2; 2 * r <= h + 1; ++r) {
      auto k = relevance_linear_kernel(alg, r);
      rs.push_back(r);
      if (!k.pass())
        v.fail(Json{{"type", label(t)}, {"r", r}, {"dim_a", k.dim_a}, {"rank", k.rank}, {"split_ok", k.split_ok}});
    }
    v.params["r"] = rs;
  });
}

Verdict verify_rigidity_quadratic(const TypeSpec& t, std::uint32_t p, std::uint64_t budget) {
  Json params = type_params(t);
  params["p"] = p;
  return run_check("rigidity-quadratic", params, [&](Verdict& v) {
    auto alg = build_algebra<FqField>(datum(t), FqField(p, 1));
    Json per_mu = Json::array();
    for (const auto& mu : minuscules(alg.rd())) {
      auto q = relevance_quadratic_bruteforce(alg, mu, budget);
      per_mu.push_back(Json{{"mu", coweight_json(mu)}, {"dim_a", q.dim_a}, {"searched", q.searched},
                            {"solutions", q.solutions.size()}});
      bool only_zero = q.solutions.size() == 1 &&
                       std::all_of(q.solutions[0].begin(), q.solutions[0].end(), [](const Fq& x) { return x.v == 0; });
      if (!only_zero) {
        Json sols = Json::array();
        for (const auto& s : q.solutions) {
          std::vector<std::uint32_t> c;
          for (const auto& x : s) c.push_back(x.v);
          sols.push_back(c);
          if (sols.size() >= 4) break;
        }
        v.fail(Json{{"type", label(t)}, {"mu", coweight_json(mu)}, {"solutions", sols}});
      }
    }
    v.params["per_mu"] = per_mu;
  });
}

Verdict verify_factorization(int n, std::uint32_t p, const std::optional<Coweight>& mu, int samples,
                             std::uint64_t seed) {
  Json params{{"n", n}, {"p", p}, {"samples", samples}, {"seed", seed}};
  if (mu) params["mu"] = coweight_json(*mu);
  return run_check("factorization", params, [&](Verdict& v) {
    RootDatum rd(Series::GL, n, Form::GL);
    std::vector<Coweight> mus = mu ? std::vector<Coweight>{*mu} : minuscules(rd);
    int min_depth = INT_MAX;
    for (std::size_t k = 0; k < mus.size(); ++k) {
      GLLoopModel model(n, p, mus[k]);
      const int target = 1 + model.steps();
      std::mt19937_64 rng(seed + k);
      for (int s = 0; s < samples; ++s) {
        auto g = model.random_I1(rng);
        auto fz = model.factorize_I1(g);
        min_depth = std::min(min_depth, fz.residual_depth);
        if (!fz.pass(target))
          v.fail(Json{{"type", "GL" + std::to_string(n)},
                      {"mu", coweight_json(mus[k])},
                      {"sample", s},
                      {"reconstructs", fz.reconstructs},
                      {"u_ok", fz.u_ok},
                      {"a_ok", fz.a_ok},
                      {"s_ok", fz.s_ok},
                      {"residual_depth", fz.residual_depth},
                      {"target_depth", target}});
      }
    }
    v.params["num_mu"] = mus.size();
    v.params["min_residual_depth"] = min_depth;
  });
}

Verdict verify_s1_graph(int n, std::uint32_t p, int samples, std::uint64_t seed) {
  Json params{{"n", n}, {"p", p}, {"samples", samples}, {"seed", seed}};
  return run_check("s1-graph", params, [&](Verdict& v) {
    auto rd = std::make_shared<const RootDatum>(Series::GL, n, Form::GL);
    FqField f(p, 1);
    auto alg = build_algebra<FqField>(rd, f);
    const int h = alg.h();
    auto g = s1_graph(alg);
    v.params["nvars"] = g.nvars;
    v.params["graph_relations"] = g.graph.size();
    if (!g.triangular_ok) {
      v.fail(Json{{"type", rd->label()}, {"triangular_ok", false}});
      return;
    }
    // Independent oracle: exp(−V⁺)·exp(V⁺ + tV⁻) mod t² as n×n matrices over ℚ.
    std::vector<std::vector<Fq>> w;
    for (int r = 1; 2 * r <= h; ++r)
      for (auto& b : centralizer_piece(alg, r).basis) w.push_back(b);
    AIRY_ENSURE(w.size() == g.nvars, "centralizer basis does not match the graph variables");
    auto entry = [&](std::size_t root) {
      const auto& ch = rd->roots()[root].character;
      std::size_t i = 0, j = 0;
      for (std::size_t k = 0; k < ch.size(); ++k) {
        if (ch[k] == 1) i = k;
        if (ch[k] == -1) j = k;
      }
      return std::make_pair(i, j);
    };
    RationalField Q;
    const std::size_t N = static_cast<std::size_t>(n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    for (int s = 0; s < samples; ++s) {
      std::vector<Fq> lam(g.nvars, f.zero());
      for (auto& x : lam) x = f.of(dist(rng));
      Matrix<RationalField> block(Q, 2 * N, 2 * N), vplus(Q, N, N);
      for (std::size_t k = 0; k < g.nvars; ++k)
        for (std::size_t root = 0; root < rd->num_roots(); ++root) {
          if (w[k][root].v == 0) continue;
          auto [i, j] = entry(root);
          Rational c = Rational(static_cast<long>(lam[k].v)) * Rational(static_cast<long>(w[k][root].v));
          if (alg.structure().height(root) > 0) {
            vplus(i, j) += c;
            block(i, j) += c;
            block(N + i, N + j) += c;
          } else {
            block(i, N + j) += c;
          }
        }
      auto big = nilpotent_exp(Q, block);
      Matrix<RationalField> minus = vplus;
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) minus(i, j) = -minus(i, j);
      auto left = nilpotent_exp(Q, minus);
      Matrix<RationalField> d(Q, N, N);
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) d(i, j) = big(i, N + j);
      auto z1 = mat_mul(Q, left, d);
      std::map<std::size_t, Fq> oracle;
      for (auto b : g.kept_roots) {
        auto [i, j] = entry(b);
        oracle[b] = f.from_int(reduce_mod(z1(i, j), p));
      }
      for (auto b : g.kept_roots)
        if (g.z.at(b).eval(lam) != oracle[b]) {
          v.fail(Json{{"type", rd->label()}, {"sample", s}, {"root", b}, {"relation", "Z_beta(lambda)"}});
          return;
        }
      std::vector<Fq> y;
      for (auto b : g.phi_s) y.push_back(oracle[b]);
      for (std::size_t i = 0; i < g.nvars; ++i)
        if (g.lambda_of_y[i].eval(y) != lam[i]) {
          v.fail(Json{{"type", rd->label()}, {"sample", s}, {"variable", i}, {"relation", "lambda(y)"}});
          return;
        }
      for (const auto& [b, poly] : g.graph)
        if (poly.eval(y) != oracle[b]) {
          v.fail(Json{{"type", rd->label()}, {"sample", s}, {"root", b}, {"relation", "graph"}});
          return;
        }
    }
  });
}

Verdict verify_stab(const TypeSpec& t, int box) {
  Json params = type_params(t);
  params["box"] = box;
  return run_check("stab", params, [&](Verdict& v) {
    RootDatum rd(t.series, t.rank, t.form);
    const std::int64_t dimB = rd.dim_borel();
    const std::size_t L = static_cast<std::size_t>(rd.lattice_rank());
    Coweight mu{IVec(L, -box)};
    std::size_t count = 0, equal = 0;
    while (true) {
      ++count;
      std::int64_t sd = stab_dimension(rd, mu);
      bool special = is_dominant(rd, mu) && is_minuscule(rd, mu);
      if (sd == dimB) ++equal;
      if (sd < dimB || (sd == dimB) != special)
        v.fail(Json{{"type", rd.label()}, {"mu", coweight_json(mu)}, {"stab_dim", sd}, {"dim_B", dimB},
                    {"dominant_minuscule", special}});
      std::size_t i = 0;
      for (; i < L; ++i) {
        if (mu.coords[i] < box) {
          ++mu.coords[i];
          break;
        }
        mu.coords[i] = -box;
      }
      if (i == L) break;
    }
    v.params["coweights"] = count;
    v.params["equality_cases"] = equal;
  });
}

Verdict verify_dim(const TypeSpec& t) {
  return run_check("dim", type_params(t), [&](Verdict& v) {
    RootDatum rd(t.series, t.rank, t.form);
    auto defect = dim_bunJ_defect(rd);
    auto bij = minuscule_bijection_check(rd);
    v.params["h"] = rd.coxeter_number();
    v.params["num_coweights"] = bij.num_coweights;
    v.params["num_weights"] = bij.num_weights;
    if (defect != 0) v.fail(Json{{"type", rd.label()}, {"dim_bunJ_defect", defect}});
    if (!bij.ok())
      v.fail(Json{{"type", rd.label()}, {"coweights_ok", bij.coweights_ok}, {"weights_ok", bij.weights_ok}});
  });
}

Verdict verify_weyl(const TypeSpec& t) {
  return run_check("weyl", type_params(t), [&](Verdict& v) {
    auto rd = datum(t);
    auto alg = build_algebra<RationalField>(rd);
    std::size_t n = 0;
    for (const auto& mu : minuscules(*rd)) {
      ++n;
      Json w{{"type", rd->label()}, {"mu", coweight_json(mu)}};
      if (auto a = alpha_mu(*rd, mu)) {
        if (weyl_wP0(*rd, mu).act(rd->highest_root()) != static_cast<std::size_t>(*a)) {
          w["failed"] = "wP0_theta";
          v.fail(w);
        }
      }
      auto lift = wP_representative(alg, mu);
      if (!lift.fixes_x_minus_1 || !lift.monomial) {
        w["failed"] = "fix_x_minus_1";
        v.fail(w);
      }
      if (!lift.conjugates_u || !u_mu_roots(*rd, mu).conjugation_ok) {
        w["failed"] = "u_conjugation";
        v.fail(w);
      }
      if (!check_wP_heights(*rd, mu)) {
        w["failed"] = "height_classes";
        v.fail(w);
      }
      if (!stab_affine_roots(*rd, mu).match()) {
        w["failed"] = "stab_affine_roots";
        v.fail(w);
      }
    }
    v.params["num_mu"] = n;
  });
}

Verdict verify_character(int n, std::uint32_t p, int samples, std::uint64_t seed) {
  Json params{{"n", n}, {"p", p}, {"samples", samples}, {"pairs", 2 * samples}, {"seed", seed}};
  return run_check("character", params, [&](Verdict& v) {
    FqField f(p, 1);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    auto random_vec = [&](std::size_t k) {
      std::vector<Fq> x(k, f.zero());
      for (auto& c : x) c = f.of(dist(rng));
      return x;
    };
    const std::size_t len = static_cast<std::size_t>(n + 1);
    for (int s = 0; s < samples; ++s) {
      auto y = random_vec(len);
      if (log_section(f, n, exp_section(f, n, y)) != y) v.fail(Json{{"n", n}, {"sample", s}, {"failed", "log(exp(y))"}});
      SectionElement x{random_vec(len)};
      if (exp_section(f, n, log_section(f, n, x)).x != x.x)
        v.fail(Json{{"n", n}, {"sample", s}, {"failed", "exp(log(x))"}});
    }
    auto params_ = make_character_params(n, f, random_vec(static_cast<std::size_t>(n / 2)));
    for (int s = 0; s < 2 * samples; ++s) {
      SectionElement a{random_vec(len)}, b{random_vec(len)};
      if (chi_eval(params_, section_mul(a, b)) != chi_eval(params_, a) + chi_eval(params_, b))
        v.fail(Json{{"n", n}, {"pair", s}, {"failed", "additivity"}});
    }
    auto z = Z_element(n, n + 1);
    if (phi_gl(z) != n) v.fail(Json{{"n", n}, {"failed", "phi(Z_{n+1})"}, {"value", phi_gl(z)}});
  });
}

namespace {

// chi_geometric = chi_eval on Id + Σ m^r Z_r for every m in every F_q,
// q ≤ q_max, p > n+1, for a few λ.
Verdict verify_chi_geometric(int n, std::uint32_t q_max, std::uint64_t seed) {
  Json params{{"n", n}, {"q_max", q_max}, {"seed", seed}};
  return run_check("chi-geometric", params, [&](Verdict& v) {
    std::mt19937_64 rng(seed);
    Json fields = Json::array();
    for (std::uint32_t p = static_cast<std::uint32_t>(n + 2); p <= q_max; ++p) {
      if (!is_prime(p)) continue;
      for (std::uint32_t e = 1, q = p; q <= q_max; ++e, q *= p) {
        FqField f(p, e);
        fields.push_back(f.name());
        std::uniform_int_distribution<std::uint32_t> dist(0, q - 1);
        for (int trial = 0; trial < 3; ++trial) {
          std::vector<Fq> lam(static_cast<std::size_t>(n / 2), f.zero());
          for (auto& l : lam) l = trial == 0 ? f.zero() : trial == 1 ? f.one() : f.of(dist(rng));
          auto cp = make_character_params(n, f, lam);
          for (std::uint32_t m = 0; m < q; ++m) {
            SectionElement g = section_identity(f, n);
            Fq pw = f.one();
            for (int r = 1; r <= n / 2; ++r) {
              pw *= f.of(m);
              g.x[r - 1] = pw;
            }
            if (chi_eval(cp, g) != chi_geometric(cp, f.of(m)))
              v.fail(Json{{"n", n}, {"field", f.name()}, {"m1", m}, {"trial", trial}});
          }
        }
      }
    }
    v.params["fields"] = fields;
  });
}

}  // namespace

Verdict verify_swan(const TypeSpec& t) {
  return run_check("swan", type_params(t), [&](Verdict& v) {
    RootDatum rd(t.series, t.rank, t.form);
    if (!swan_identity_check(rd))
      v.fail(Json{{"type", rd.label()}, {"h", rd.coxeter_number()}, {"num_roots", rd.num_roots()}});
  });
}

namespace {

const std::vector<std::uint32_t> kGl2Primes = {5, 7, 11};
const std::vector<std::uint32_t> kGl2Ext = {1, 2};
const std::vector<std::int64_t> kGl2Lambda = {0, 1, 2};
const std::vector<std::uint32_t> kGl4Primes = {7, 11};
const std::vector<std::vector<std::int64_t>> kGl4Lambda = {{0, 0}, {1, 0}, {2, 3}};

bool rank_at_most_3(const TypeSpec& t) { return t.rank <= 3; }

template <class Sub>
Verdict criterion(const std::string& name, Json params, double limit_ms, Sub&& subs_fn) {
  return run_check(name, std::move(params), [&](Verdict& v) {
    const auto t0 = std::chrono::steady_clock::now();
    Json subs = Json::array();
    subs_fn([&](const Verdict& sub) { absorb(v, sub, subs); });
    v.params["subchecks"] = subs.size();
    if (limit_ms > 0) check_runtime(v, t0, limit_ms);
  });
}

}  // namespace

Json acceptance_grids() {
  Json types = Json::array();
  for (const auto& t : desk_types()) types.push_back(label(t));
  return Json{{"trace_gl2", {{"p", kGl2Primes}, {"e", kGl2Ext}, {"lambda1", kGl2Lambda}}},
              {"trace_gl4", {{"p", kGl4Primes}, {"e", {1}}, {"lambda", kGl4Lambda}}},
              {"types", types},
              {"factorization", {{"n", {2, 3, 4}}, {"p", 7}, {"samples", 100}}},
              {"quadratic", {{"types", {"GL2", "GL4", "C2(sc)"}}, {"p", 5}}},
              {"stab_box", 2},
              {"character", {{"n", {2, 4}}, {"p", 11}, {"samples", 500}, {"pairs", 1000}, {"q_max", 121}}},
              {"s1_graph", {{"n", {4, 6}}, {"p", 7}, {"samples", 200}}}};
}

std::vector<Verdict> run_acceptance(const SuiteOptions& opt) {
  std::vector<Verdict> out;
  const auto types = desk_types();

  out.push_back(criterion("c01-trace-gl2", Json{{"n", 2}}, 2000, [&](auto&& add) {
    for (auto p : kGl2Primes)
      for (auto e : kGl2Ext)
        for (auto l : kGl2Lambda) add(verify_trace_identity(2, p, e, {l}, opt));
  }));
  out.push_back(criterion("c02-trace-gl4", Json{{"n", 4}}, 10000, [&](auto&& add) {
    for (auto p : kGl4Primes)
      for (const auto& l : kGl4Lambda) add(verify_trace_identity(4, p, 1, l, opt));
  }));
  out.push_back(criterion("c03-weil-bound", Json::object(), 0, [&](auto&& add) {
    for (auto p : kGl2Primes)
      for (auto e : kGl2Ext)
        for (auto l : kGl2Lambda) add(verify_weil(2, p, e, {l}, opt));
    for (auto p : kGl4Primes)
      for (const auto& l : kGl4Lambda) add(verify_weil(4, p, 1, l, opt));
  }));
  out.push_back(criterion("c04-decomposition", Json::object(), 30000, [&](auto&& add) {
    for (const auto& t : types) add(verify_decomposition(t));
  }));
  out.push_back(criterion("c05-rigidity", Json::object(), 0, [&](auto&& add) {
    for (const auto& t : types) add(verify_rigidity_kernel(t));
    add(verify_rigidity_quadratic({Series::GL, 2, Form::GL}, 5, opt.budget));
    add(verify_rigidity_quadratic({Series::GL, 4, Form::GL}, 5, opt.budget));
    add(verify_rigidity_quadratic({Series::C, 2, Form::SimplyConnected}, 5, opt.budget));
  }));
  out.push_back(criterion("c06-factorization", Json{{"seed", opt.seed}}, 0, [&](auto&& add) {
    for (int n : {2, 3, 4}) add(verify_factorization(n, 7, std::nullopt, 100, opt.seed));
  }));
  out.push_back(criterion("c07-dim-zero", Json::object(), 0, [&](auto&& add) {
    for (const auto& t : types) add(verify_dim(t));
  }));
  out.push_back(criterion("c08-stab-dichotomy", Json::object(), 0, [&](auto&& add) {
    for (const auto& t : types)
      if (rank_at_most_3(t)) add(verify_stab(t, 2));
  }));
  out.push_back(criterion("c09-weyl", Json::object(), 0, [&](auto&& add) {
    for (const auto& t : types) add(verify_weyl(t));
  }));
  out.push_back(criterion("c10-character", Json{{"seed", opt.seed}}, 0, [&](auto&& add) {
    for (int n : {2, 4}) add(verify_character(n, 11, 500, opt.seed));
    for (int n : {2, 4}) add(verify_chi_geometric(n, 121, opt.seed));
    for (int n : {2, 4, 6, 8}) {
      add(run_check("phi-z", Json{{"n", n}}, [&](Verdict& v) {
        auto val = phi_gl(Z_element(n, n + 1));
        if (val != n) v.fail(Json{{"n", n}, {"phi", val}});
      }));
    }
  }));
  out.push_back(criterion("c11-s1-graph", Json{{"seed", opt.seed}}, 0, [&](auto&& add) {
    for (int n : {4, 6}) add(verify_s1_graph(n, 7, 200, opt.seed));
  }));
  out.push_back(criterion("c12-swan", Json::object(), 0, [&](auto&& add) {
    for (const auto& t : types) add(verify_swan(t));
  }));
  return out;
}

Verdict corrupted_constant_selftest() {
  const TypeSpec t{Series::A, 2, Form::Adjoint};
  return run_check("selftest-corrupted-constant", type_params(t), [&](Verdict& v) {
    auto rd = datum(t);
    auto s = std::make_shared<LieStructure>(rd);
    // N_{α1,α2} = ±1 in any Chevalley basis; 2 breaks the Jacobi identity.
    s->debug_set_constant(0, 1, 2);
    QAlg alg(std::shared_ptr<const LieStructure>(s), RationalField{});
    v.params["corrupted"] = Json{{"a", 0}, {"b", 1}, {"value", 2}};
    decomposition_on(v, alg, label(t) + " (corrupted)", std::nullopt);
  });
}

}  // namespace airy
