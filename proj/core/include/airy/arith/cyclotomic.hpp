#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "airy/arith/rational.hpp"

namespace airy {

/// Exact element of Z[ζ_p] in the basis 1, ζ, …, ζ^{p-2}.
///
/// The relation 1 + ζ + … + ζ^{p-1} = 0 is applied eagerly, so two values
/// are equal iff their coefficient vectors are equal.
class CyclotomicValue {
 public:
  CyclotomicValue() = default;
  explicit CyclotomicValue(std::uint32_t p);

  static CyclotomicValue zero(std::uint32_t p) { return CyclotomicValue(p); }
  static CyclotomicValue one(std::uint32_t p);
  /// ζ^k for any integer k.
  static CyclotomicValue zeta_pow(std::uint32_t p, std::int64_t k);
  /// Σ_k counts[k]·ζ^k, counts of length p.
  static CyclotomicValue from_counts(std::uint32_t p, const std::vector<std::int64_t>& counts);

  std::uint32_t p() const { return p_; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const;

  CyclotomicValue& operator+=(const CyclotomicValue& o);
  CyclotomicValue& operator-=(const CyclotomicValue& o);
  CyclotomicValue& operator*=(const BigInt& s);
  friend CyclotomicValue operator+(CyclotomicValue a, const CyclotomicValue& b) { return a += b; }
  friend CyclotomicValue operator-(CyclotomicValue a, const CyclotomicValue& b) { return a -= b; }
  friend CyclotomicValue operator*(CyclotomicValue a, const BigInt& s) { return a *= s; }
  friend CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b);
  CyclotomicValue operator-() const;
  friend bool operator==(const CyclotomicValue& a, const CyclotomicValue& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }
  friend bool operator!=(const CyclotomicValue& a, const CyclotomicValue& b) { return !(a == b); }

  /// Galois conjugate ζ ↦ ζ^c, c prime to p.
  CyclotomicValue galois(std::uint32_t c) const;

  /// Image under ζ ↦ exp(2πi/p).
  std::complex<double> embed() const;

  /// "[c_0, c_1, ...]"
  std::string to_string() const;

 private:
  std::uint32_t p_ = 0;
  std::vector<BigInt> c_;
};

/// Standard additive character ψ(x) = ζ_p^x on F_p, x given as 0..p-1.
inline CyclotomicValue psi(std::uint32_t p, std::uint32_t x) { return CyclotomicValue::zeta_pow(p, x); }

inline std::complex<double> complex_embed(const CyclotomicValue& v) { return v.embed(); }

}  // namespace airy
