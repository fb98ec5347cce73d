#include "airy/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "airy/error.hpp"
#include "airy/trace_cache.hpp"

namespace airy {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Airy: return "airy";
    case Provenance::HeckeClosed: return "hecke-closed";
    case Provenance::HeckeBrute: return "hecke-brute";
  }
  return "?";
}

namespace {

using Counts = std::vector<std::int64_t>;

unsigned worker_count(const ExpsumOptions& opt, std::uint64_t work) {
  unsigned t = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(t, work)));
}

// Runs body(lo, hi) over contiguous chunks of [0, total). Each index is
// owned by exactly one chunk, so results do not depend on the chunking.
void parallel_ranges(std::uint32_t total, unsigned workers,
                     const std::function<void(std::uint32_t, std::uint32_t, unsigned)>& body) {
  if (workers <= 1) {
    body(0, total, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::uint32_t step = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint32_t lo = std::min(total, w * step), hi = std::min(total, lo + step);
    pool.emplace_back([&, lo, hi, w] {
      try {
        body(lo, hi, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void check_budget(std::uint64_t needed, const ExpsumOptions& opt, const char* what) {
  if (needed > opt.budget)
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(needed) + " character evaluations exceed the budget of " +
                         std::to_string(opt.budget));
}

std::uint64_t ipow(std::uint64_t b, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > UINT64_MAX / b) return UINT64_MAX;
    r *= b;
  }
  return r;
}

std::vector<std::uint32_t> indices(const std::vector<Fq>& v) {
  std::vector<std::uint32_t> out;
  for (const auto& x : v) out.push_back(x.v);
  return out;
}

}  // namespace

TraceTable table_shape(const CharacterParams& params, Provenance prov) {
  TraceTable t;
  t.provenance = prov;
  t.p = params.field.gf->p();
  t.e = params.field.gf->e();
  t.q = params.field.gf->q();
  t.n = params.n;
  t.lambda = indices(params.lambda);
  t.f_coeffs = indices(f_poly(params));
  if (prov == Provenance::Airy) t.lambda.clear();
  return t;
}

namespace {

CyclotomicValue closed_value(const CharacterParams& params, const std::vector<Fq>& f, Fq a) {
  const GaloisField& gf = *params.field.gf;
  Counts counts(gf.p(), 0);
  for (std::uint32_t m = 0; m < gf.q(); ++m) {
    Fq x = params.field.of(m);
    counts[gf.trace((poly_eval(f, x) + x * a).v)]++;
  }
  return -scale_by_power(CyclotomicValue::from_counts(gf.p(), counts), gf.q(), params.n / 2 - 1);
}

// Calls visit(m) for every m ∈ F_q^{1+n/2} with m_1 in [lo, hi).
template <class Visit>
void enumerate_m(const CharacterParams& params, std::uint32_t lo, std::uint32_t hi, Visit&& visit) {
  const std::uint32_t q = params.field.gf->q();
  const std::size_t d = static_cast<std::size_t>(1 + params.n / 2);
  std::vector<Fq> m(d, params.field.zero());
  for (std::uint32_t m1 = lo; m1 < hi; ++m1) {
    for (std::size_t i = 1; i < d; ++i) m[i] = params.field.zero();
    m[0] = params.field.of(m1);
    while (true) {
      visit(m);
      std::size_t i = 1;
      for (; i < d; ++i) {
        if (m[i].v + 1 < q) {
          m[i].v += 1;
          break;
        }
        m[i].v = 0;
      }
      if (i == d) break;
    }
  }
}

}  // namespace

CyclotomicValue scale_by_power(const CyclotomicValue& v, std::uint32_t q, int k) {
  AIRY_ENSURE(k >= 0, "negative Tate twist");
  BigInt s = 1;
  for (int i = 0; i < k; ++i) s *= q;
  return v * s;
}

TraceTable airy_trace_table(const FqField& field, const std::vector<Fq>& f, const ExpsumOptions& opt) {
  if (!field.gf) throw InvalidArgument("airy_trace_table: field not initialized");
  if (f.size() < 2 || FqField::is_zero(f.back())) throw InvalidArgument("airy_trace_table: f must have degree >= 1");
  const GaloisField& gf = *field.gf;
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  if (deg % gf.p() == 0) throw InvalidArgument("airy_trace_table: p divides deg f");
  const std::uint32_t q = gf.q();
  check_budget(static_cast<std::uint64_t>(q) * q, opt, "airy_trace_table");

  std::vector<std::uint32_t> fx(q);
  for (std::uint32_t x = 0; x < q; ++x) fx[x] = poly_eval(f, field.of(x)).v;

  TraceTable t;
  t.provenance = Provenance::Airy;
  t.p = gf.p();
  t.e = gf.e();
  t.q = q;
  t.n = static_cast<int>(deg) - 1;
  t.f_coeffs = indices(f);
  t.entries.assign(q, CyclotomicValue::zero(gf.p()));
  parallel_ranges(q, worker_count(opt, q), [&](std::uint32_t lo, std::uint32_t hi, unsigned) {
    Counts counts(gf.p());
    for (std::uint32_t a = lo; a < hi; ++a) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::uint32_t x = 0; x < q; ++x) counts[gf.trace(gf.add(fx[x], gf.mul(a, x)))]++;
      t.entries[a] = -CyclotomicValue::from_counts(gf.p(), counts);
    }
  });
  return t;
}

CyclotomicValue hecke_trace_closed(const CharacterParams& params, Fq a) {
  a.f = params.field.gf.get();
  return closed_value(params, f_poly(params), a);
}

TraceTable hecke_table_closed(const CharacterParams& params, const ExpsumOptions& opt) {
  const std::uint32_t q = params.field.gf->q();
  check_budget(static_cast<std::uint64_t>(q) * q, opt, "hecke_table_closed");
  TraceTable t = table_shape(params, Provenance::HeckeClosed);
  const auto f = f_poly(params);
  t.entries.assign(q, CyclotomicValue::zero(t.p));
  parallel_ranges(q, worker_count(opt, q), [&](std::uint32_t lo, std::uint32_t hi, unsigned) {
    for (std::uint32_t a = lo; a < hi; ++a) t.entries[a] = closed_value(params, f, params.field.of(a));
  });
  return t;
}

CyclotomicValue hecke_trace_bruteforce(const CharacterParams& params, Fq a, const ExpsumOptions& opt) {
  const GaloisField& gf = *params.field.gf;
  const std::uint32_t q = gf.q();
  check_budget(ipow(q, 1 + params.n / 2), opt, "hecke_trace_bruteforce");
  const unsigned workers = worker_count(opt, q);
  std::vector<Counts> partial(workers, Counts(gf.p(), 0));
  parallel_ranges(q, workers, [&](std::uint32_t lo, std::uint32_t hi, unsigned w) {
    enumerate_m(params, lo, hi, [&](const std::vector<Fq>& m) {
      if (hecke_p2(params, m).v == a.v) partial[w][gf.trace(hecke_p1(params, m).v)]++;
    });
  });
  Counts total(gf.p(), 0);
  for (const auto& c : partial)
    for (std::size_t i = 0; i < c.size(); ++i) total[i] += c[i];
  CyclotomicValue v = CyclotomicValue::from_counts(gf.p(), total);
  return (params.n - 1) % 2 == 0 ? v : -v;
}

TraceTable hecke_table_bruteforce(const CharacterParams& params, const ExpsumOptions& opt) {
  const GaloisField& gf = *params.field.gf;
  const std::uint32_t q = gf.q(), p = gf.p();
  check_budget(ipow(q, 1 + params.n / 2), opt, "hecke_table_bruteforce");
  const unsigned workers = worker_count(opt, q);
  // per worker: counts[a * p + k] = #{m in the worker's m_1 range : p₂(m) = a, Tr p₁(m) = k}
  std::vector<Counts> partial(workers);
  parallel_ranges(q, workers, [&](std::uint32_t lo, std::uint32_t hi, unsigned w) {
    Counts c(static_cast<std::size_t>(q) * p, 0);
    enumerate_m(params, lo, hi, [&](const std::vector<Fq>& m) {
      c[static_cast<std::size_t>(hecke_p2(params, m).v) * p + gf.trace(hecke_p1(params, m).v)]++;
    });
    partial[w] = std::move(c);
  });
  TraceTable t = table_shape(params, Provenance::HeckeBrute);
  t.entries.assign(q, CyclotomicValue::zero(p));
  Counts row(p);
  for (std::uint32_t a = 0; a < q; ++a) {
    std::fill(row.begin(), row.end(), 0);
    for (const auto& c : partial)
      if (!c.empty())
        for (std::uint32_t k = 0; k < p; ++k) row[k] += c[static_cast<std::size_t>(a) * p + k];
    CyclotomicValue v = CyclotomicValue::from_counts(p, row);
    t.entries[a] = (params.n - 1) % 2 == 0 ? v : -v;
  }
  return t;
}

TraceComparison compare_traces(const CharacterParams& params, const ExpsumOptions& opt) {
  TraceComparison out;
  const auto f = f_poly(params);
  out.airy = load_or_build(table_shape(params, Provenance::Airy), [&] { return airy_trace_table(params.field, f, opt); });
  out.closed = load_or_build(table_shape(params, Provenance::HeckeClosed), [&] { return hecke_table_closed(params, opt); });
  out.brute = load_or_build(table_shape(params, Provenance::HeckeBrute), [&] { return hecke_table_bruteforce(params, opt); });
  const std::uint32_t q = params.field.gf->q();
  for (std::uint32_t a = 0; a < q; ++a) {
    CyclotomicValue scaled = scale_by_power(out.airy.at(a), q, params.n / 2 - 1);
    if (out.closed.at(a) != scaled || out.closed.at(a) != out.brute.at(a))
      out.mismatches.push_back({a, out.closed.at(a), out.brute.at(a), scaled});
  }
  out.pass = out.mismatches.empty();
  return out;
}

WeilResult weil_check(const TraceTable& table) {
  WeilResult r;
  const double rank = static_cast<double>(table.f_coeffs.size()) - 2.0;
  r.bound = rank * std::sqrt(static_cast<double>(table.q)) + 1e-6;
  for (std::uint32_t a = 0; a < table.entries.size(); ++a) {
    double v = std::abs(table.entries[a].embed());
    if (v > r.max_abs) {
      r.max_abs = v;
      r.worst_a = a;
    }
  }
  r.pass = r.max_abs <= r.bound;
  return r;
}

std::vector<std::uint32_t> field_digits(std::uint32_t p, std::uint32_t e, std::uint32_t a) {
  return GaloisField::get(p, e)->digits(a);
}

}  // namespace airy
