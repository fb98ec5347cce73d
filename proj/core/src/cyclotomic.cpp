#include "airy/arith/cyclotomic.hpp"

#include <cmath>
#include <numbers>

#include "airy/error.hpp"

namespace airy {

namespace {

// Reduce a length-p vector of ζ^k coefficients to the length-(p-1) basis.
std::vector<BigInt> reduce_full(std::vector<BigInt> full) {
  const std::size_t p = full.size();
  BigInt top = full[p - 1];
  full.pop_back();
  if (top != 0)
    for (auto& c : full) c -= top;
  return full;
}

}  // namespace

CyclotomicValue::CyclotomicValue(std::uint32_t p) : p_(p), c_(p - 1) {
  if (p < 2) throw InvalidArgument("CyclotomicValue: p must be >= 2");
}

CyclotomicValue CyclotomicValue::one(std::uint32_t p) { return zeta_pow(p, 0); }

CyclotomicValue CyclotomicValue::zeta_pow(std::uint32_t p, std::int64_t k) {
  CyclotomicValue r(p);
  std::int64_t e = k % static_cast<std::int64_t>(p);
  if (e < 0) e += p;
  if (e == static_cast<std::int64_t>(p) - 1) {
    for (auto& c : r.c_) c = -1;
  } else {
    r.c_[e] = 1;
  }
  return r;
}

CyclotomicValue CyclotomicValue::from_counts(std::uint32_t p, const std::vector<std::int64_t>& counts) {
  if (counts.size() != p) throw InvalidArgument("CyclotomicValue::from_counts: length must be p");
  CyclotomicValue r(p);
  const std::int64_t top = counts[p - 1];
  for (std::uint32_t i = 0; i + 1 < p; ++i) {
    // Differences of counts can exceed 2^31; go through long arithmetic.
    std::int64_t d = counts[i] - top;
    r.c_[i] = static_cast<long>(d);
  }
  return r;
}

bool CyclotomicValue::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

CyclotomicValue& CyclotomicValue::operator+=(const CyclotomicValue& o) {
  if (p_ != o.p_) throw InvalidArgument("CyclotomicValue: mismatched p");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicValue& CyclotomicValue::operator-=(const CyclotomicValue& o) {
  if (p_ != o.p_) throw InvalidArgument("CyclotomicValue: mismatched p");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CyclotomicValue& CyclotomicValue::operator*=(const BigInt& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

CyclotomicValue CyclotomicValue::operator-() const {
  CyclotomicValue r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b) {
  if (a.p_ != b.p_) throw InvalidArgument("CyclotomicValue: mismatched p");
  const std::uint32_t p = a.p_;
  std::vector<BigInt> full(p);
  for (std::uint32_t i = 0; i + 1 < p; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::uint32_t j = 0; j + 1 < p; ++j) {
      if (b.c_[j] == 0) continue;
      full[(i + j) % p] += a.c_[i] * b.c_[j];
    }
  }
  CyclotomicValue r(p);
  r.c_ = reduce_full(std::move(full));
  return r;
}

CyclotomicValue CyclotomicValue::galois(std::uint32_t c) const {
  if (c % p_ == 0) throw InvalidArgument("CyclotomicValue::galois: exponent divisible by p");
  std::vector<BigInt> full(p_);
  for (std::uint32_t i = 0; i + 1 < p_; ++i)
    full[static_cast<std::uint64_t>(i) * c % p_] += c_[i];
  CyclotomicValue r(p_);
  r.c_ = reduce_full(std::move(full));
  return r;
}

std::complex<double> CyclotomicValue::embed() const {
  std::complex<double> s = 0.0;
  for (std::uint32_t i = 0; i + 1 < p_; ++i) {
    if (c_[i] == 0) continue;
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(p_);
    s += c_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

std::string CyclotomicValue::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += c_[i].get_str();
  }
  return s + "]";
}

}  // namespace airy
