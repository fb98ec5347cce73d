#include "airy/arith/galois_field.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "airy/error.hpp"

namespace airy {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // c_0 first, no trailing zeros

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t qq = r / nr;
    std::swap(t, nt);
    nt -= qq * t;
    std::swap(r, nr);
    nr -= qq * r;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      std::uint64_t sub = c * m[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

Poly index_to_poly(std::uint32_t idx, std::uint32_t p, std::uint32_t len) {
  Poly r(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    r[i] = idx % p;
    idx /= p;
  }
  trim(r);
  return r;
}

std::uint32_t poly_to_index(const Poly& a, std::uint32_t p) {
  std::uint32_t idx = 0;
  for (std::size_t i = a.size(); i-- > 0;) idx = idx * p + a[i];
  return idx;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g = index_to_poly(static_cast<std::uint32_t>(idx), p, d);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
  if (!is_prime(p)) throw InvalidArgument("GaloisField: " + std::to_string(p) + " is not prime");
  if (e == 0) throw InvalidArgument("GaloisField: extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw InvalidArgument("GaloisField: field order exceeds table limit");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (e == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint32_t idx = 0; idx < q_; ++idx) {
      Poly f = index_to_poly(idx, p, e);
      f.resize(e + 1, 0);
      f[e] = 1;
      if (is_irreducible(f, p)) {
        modulus_ = f;
        break;
      }
    }
    AIRY_ENSURE(!modulus_.empty(), "no irreducible polynomial found");
  }

  auto mulmod = [&](const Poly& a, const Poly& b) {
    if (e_ == 1) {
      if (a.empty() || b.empty()) return Poly{};
      Poly r{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[0]) * b[0] % p_)};
      trim(r);
      return r;
    }
    return poly_mulmod(a, b, modulus_, p_);
  };
  auto powmod = [&](Poly base, std::uint64_t k) {
    Poly r{1};
    while (k) {
      if (k & 1) r = mulmod(r, base);
      base = mulmod(base, base);
      k >>= 1;
    }
    return r;
  };

  const std::uint64_t order = q_ - 1;
  const auto factors = prime_factors(order);
  gen_ = 0;
  for (std::uint32_t cand = 1; cand < q_ && gen_ == 0; ++cand) {
    Poly g = index_to_poly(cand, p, e);
    bool ok = true;
    for (auto l : factors) {
      Poly r = powmod(g, order / l);
      if (r.size() == 1 && r[0] == 1) {
        ok = false;
        break;
      }
    }
    if (q_ == 2) ok = (cand == 1);
    if (ok) gen_ = cand;
  }
  AIRY_ENSURE(gen_ != 0, "no primitive element");

  exp_.assign(2 * order, 0);
  log_.assign(q_, 0);
  Poly x{1};
  Poly g = index_to_poly(gen_, p, e);
  for (std::uint64_t k = 0; k < order; ++k) {
    std::uint32_t idx = poly_to_index(x, p);
    exp_[k] = idx;
    exp_[k + order] = idx;
    log_[idx] = static_cast<std::uint32_t>(k);
    x = mulmod(x, g);
  }

  neg_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    auto d = digits(a);
    for (auto& c : d) c = (p_ - c) % p_;
    neg_[a] = from_digits(d);
  }

  if (e_ > 1 && q_ <= 512) {
    add_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_digits(a, b);
  }

  frob_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) frob_[a] = pow(a, p_);
  trace_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t s = 0, y = a;
    for (std::uint32_t i = 0; i < e_; ++i) {
      s = add(s, y);
      y = frob_[y];
    }
    AIRY_ENSURE(s < p_, "trace left the prime field");
    trace_[a] = s;
  }
}

std::shared_ptr<const GaloisField> GaloisField::get(std::uint32_t p, std::uint32_t e) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const GaloisField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, e);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const GaloisField>(p, e);
  cache.emplace(key, f);
  return f;
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw InvalidArgument("GaloisField: division by zero");
  const std::uint32_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

std::uint32_t GaloisField::pow(std::uint32_t a, std::int64_t k) const {
  if (a == 0) {
    if (k == 0) return 1;
    if (k < 0) throw InvalidArgument("GaloisField: zero to a negative power");
    return 0;
  }
  const std::int64_t order = q_ - 1;
  std::int64_t r = (static_cast<std::int64_t>(log_[a]) * (k % order)) % order;
  if (r < 0) r += order;
  return exp_[r];
}

std::uint32_t GaloisField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::vector<std::uint32_t> GaloisField::digits(std::uint32_t a) const {
  std::vector<std::uint32_t> d(e_, 0);
  for (std::uint32_t i = 0; i < e_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

std::uint32_t GaloisField::from_digits(const std::vector<std::uint32_t>& d) const {
  std::uint32_t idx = 0;
  for (std::size_t i = d.size(); i-- > 0;) idx = idx * p_ + (d[i] % p_);
  return idx;
}

std::uint32_t GaloisField::add_digits(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0, mult = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

std::string GaloisField::name() const {
  if (e_ == 1) return "F_" + std::to_string(p_);
  return "F_" + std::to_string(p_) + "^" + std::to_string(e_);
}

}  // namespace airy
