#include "airy/gln_airy.hpp"

#include <sstream>

#include "airy/error.hpp"

namespace airy {

namespace {

void check_section(const SectionElement& g, int n) {
  if (g.x.size() != static_cast<std::size_t>(n + 1))
    throw InvalidArgument("section element must have n+1 coordinates");
}

// Coefficient vectors indexed 1..n+1 (slot 0 unused) under truncated convolution.
std::vector<Fq> conv(const FqField& f, int n, const std::vector<Fq>& a, const std::vector<Fq>& b) {
  std::vector<Fq> c(static_cast<std::size_t>(n + 2), f.zero());
  for (int i = 1; i <= n + 1; ++i) {
    if (FqField::is_zero(a[i])) continue;
    for (int j = 1; i + j <= n + 1; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

}  // namespace

CharacterParams make_character_params(int n, const FqField& field, std::vector<Fq> lambda) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  if (n % 2 != 0) throw Unsupported("odd n unsupported");
  if (!field.gf) throw InvalidArgument("field not initialized");
  const std::uint32_t p = field.characteristic();
  if (p <= static_cast<std::uint32_t>(n + 1))
    throw InvalidArgument("need p > n+1 (p = " + std::to_string(p) + ", n = " + std::to_string(n) + ")");
  if (lambda.size() != static_cast<std::size_t>(n / 2))
    throw InvalidArgument("lambda must have n/2 = " + std::to_string(n / 2) + " entries");
  for (auto& l : lambda) l.f = field.gf.get();
  return CharacterParams{n, field, std::move(lambda)};
}

CharacterParams make_character_params(int n, const FqField& field, const std::vector<std::int64_t>& lambda) {
  if (n % 2 != 0 && n >= 2) throw Unsupported("odd n unsupported");
  if (!field.gf) throw InvalidArgument("field not initialized");
  std::vector<Fq> l;
  for (auto v : lambda) l.push_back(field.from_int(v));
  return make_character_params(n, field, std::move(l));
}

IMat e1_matrix(int n) {
  if (n < 2) throw InvalidArgument("e1_matrix: n must be at least 2");
  IMat m(static_cast<std::size_t>(n), IVec(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[i][(i + 1) % n] = 1;
  return m;
}

IntLoopMatrix Z_element(int n, int r) {
  if (n < 2) throw InvalidArgument("Z_element: n must be at least 2");
  if (r < 1 || r > n + 1) throw InvalidArgument("Z_element: need 1 <= r <= n+1");
  IntLoopMatrix z{n, {}};
  const int base = r / n;
  for (int i = 0; i < n; ++i) {
    int j = (i + r) % n;
    // height j − i is either r mod n or r mod n − n
    int power = (j - i == r % n) ? base : base + 1;
    auto& m = z.terms[power];
    if (m.empty()) m.assign(static_cast<std::size_t>(n), IVec(static_cast<std::size_t>(n), 0));
    m[i][j] = 1;
  }
  return z;
}

std::int64_t phi_gl(const IntLoopMatrix& y) {
  const int n = y.n;
  std::int64_t v = 0;
  if (auto it = y.terms.find(1); it != y.terms.end())
    for (int i = 0; i + 1 < n; ++i) v += it->second[i][i + 1];  // tr(E_{i+1,i} Y)
  if (auto it = y.terms.find(2); it != y.terms.end()) v += it->second[n - 1][0];  // tr(E_{1n} Y)
  return v;
}

SectionElement section_identity(const FqField& f, int n) {
  return SectionElement{std::vector<Fq>(static_cast<std::size_t>(n + 1), f.zero())};
}

SectionElement section_mul(const SectionElement& a, const SectionElement& b) {
  if (a.x.empty() || a.x.size() != b.x.size()) throw InvalidArgument("section_mul: size mismatch");
  const int n = static_cast<int>(a.x.size()) - 1;
  const FqField f(GaloisField::get(a.x[0].f->p(), a.x[0].f->e()));
  std::vector<Fq> av(static_cast<std::size_t>(n + 2), f.zero()), bv = av;
  for (int i = 1; i <= n + 1; ++i) {
    av[i] = a.x[i - 1];
    bv[i] = b.x[i - 1];
  }
  auto c = conv(f, n, av, bv);
  SectionElement out = section_identity(f, n);
  for (int k = 1; k <= n + 1; ++k) out.x[k - 1] = av[k] + bv[k] + c[k];
  return out;
}

SectionElement exp_section(const FqField& f, int n, const std::vector<Fq>& y) {
  if (y.size() != static_cast<std::size_t>(n + 1)) throw InvalidArgument("exp_section: need n+1 coordinates");
  if (f.characteristic() <= static_cast<std::uint32_t>(n + 1)) throw InvalidArgument("exp_section: need p > n+1");
  std::vector<Fq> X(static_cast<std::size_t>(n + 2), f.zero());
  for (int i = 1; i <= n + 1; ++i) X[i] = y[i - 1];
  std::vector<Fq> acc = X, power = X;
  Fq fact = f.one();
  for (int k = 2; k <= n + 1; ++k) {
    power = conv(f, n, power, X);
    fact *= f.from_int(k);
    for (int i = 1; i <= n + 1; ++i) acc[i] += power[i] / fact;
  }
  SectionElement g = section_identity(f, n);
  for (int i = 1; i <= n + 1; ++i) g.x[i - 1] = acc[i];
  return g;
}

std::vector<Fq> log_section(const FqField& f, int n, const SectionElement& g) {
  check_section(g, n);
  if (f.characteristic() <= static_cast<std::uint32_t>(n + 1)) throw InvalidArgument("log_section: need p > n+1");
  std::vector<Fq> X(static_cast<std::size_t>(n + 2), f.zero());
  for (int i = 1; i <= n + 1; ++i) X[i] = g.x[i - 1];
  std::vector<Fq> acc = X, power = X;
  for (int k = 2; k <= n + 1; ++k) {
    power = conv(f, n, power, X);
    Fq c = f.one() / f.from_int(k);
    if (k % 2 == 0) c = -c;
    for (int i = 1; i <= n + 1; ++i) acc[i] += c * power[i];
  }
  return std::vector<Fq>(acc.begin() + 1, acc.end());
}

Fq chi_eval(const CharacterParams& params, const SectionElement& g) {
  const int n = params.n;
  auto y = log_section(params.field, n, g);
  Fq v = params.field.zero();
  for (int r = 1; r <= n / 2; ++r) v += params.lambda[r - 1] * y[r - 1];
  return v + params.field.from_int(n) * y[n];
}

Fq chi_geometric(const CharacterParams& params, Fq m1) {
  const auto& f = params.field;
  const int n = params.n;
  m1.f = f.gf.get();
  Fq v = f.zero();
  Fq pw = f.one();
  for (int r = 1; r <= n / 2; ++r) {
    pw *= m1;
    v += params.lambda[r - 1] / f.from_int(r) * pw;
  }
  return v + f.from_ratio(n, n + 1) * f.of(f.gf->pow(m1.v, n + 1));
}

namespace {

Fq power(const FqField& f, Fq x, int k) { return f.of(f.gf->pow(x.v, k)); }

void check_m(const CharacterParams& params, const std::vector<Fq>& m) {
  if (m.size() != static_cast<std::size_t>(1 + params.n / 2))
    throw InvalidArgument("m-vector must have 1 + n/2 entries");
}

}  // namespace

Fq hecke_p1(const CharacterParams& params, const std::vector<Fq>& m) {
  check_m(params, m);
  const auto& f = params.field;
  const int n = params.n;
  const Fq m1 = m[0];
  SectionElement g = section_identity(f, n);
  for (int r = 1; r <= n / 2; ++r) g.x[r - 1] = power(f, m1, r);
  Fq v = chi_eval(params, g) - power(f, m1, n + 1);
  for (int r = 2; r <= 1 + n / 2; ++r) v -= m[r - 1] * power(f, m1, n / 2 - r + 2);
  return v;
}

Fq hecke_p2(const CharacterParams& params, const std::vector<Fq>& m) {
  check_m(params, m);
  const auto& f = params.field;
  const int n = params.n;
  Fq v = f.zero();
  for (int r = 2; r <= 1 + n / 2; ++r) v -= m[r - 1] * power(f, m[0], n / 2 - r + 1);
  return v;
}

std::vector<Fq> f_poly(const CharacterParams& params) {
  const auto& f = params.field;
  const int n = params.n;
  std::vector<Fq> c(static_cast<std::size_t>(n + 2), f.zero());
  for (int r = 1; r <= n / 2; ++r) c[r] = params.lambda[r - 1] / f.from_int(r);
  c[n + 1] = -(f.one() / f.from_int(n + 1));
  AIRY_ENSURE(!FqField::is_zero(c[n + 1]), "f has wrong degree");
  return c;
}

Fq poly_eval(const std::vector<Fq>& coeffs, Fq x) {
  AIRY_ENSURE(!coeffs.empty(), "empty polynomial");
  Fq v = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) v = v * x + coeffs[i];
  return v;
}

std::string poly_to_string(const std::vector<Fq>& coeffs, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Fq& c = coeffs[k];
    if (c.v == 0) continue;
    const GaloisField& gf = *c.f;
    std::string body;
    bool negative = false;
    if (c.v < gf.p()) {
      // symmetric residue for prime-field coefficients
      std::int64_t s = c.v;
      if (s > static_cast<std::int64_t>(gf.p()) / 2) s -= gf.p();
      negative = s < 0;
      std::int64_t a = negative ? -s : s;
      if (a != 1 || k == 0) body = std::to_string(a);
    } else {
      body = "[" + std::to_string(c.v) + "]";
    }
    std::string mon;
    if (k >= 1) mon = var + (k > 1 ? "^" + std::to_string(k) : "");
    std::string term = body.empty() ? mon : (mon.empty() ? body : body + "*" + mon);
    if (first) os << (negative ? "-" : "") << term;
    else os << (negative ? " - " : " + ") << term;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace airy
