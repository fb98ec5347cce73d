#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace airy {

/// Finite field F_{p^e}, table driven.
///
/// Elements are indices 0..q-1. The base-p digits of an index are the
/// coefficients c_0, c_1, ... of a polynomial reduced modulo `modulus()`,
/// c_0 least significant, so the prime subfield is exactly 0..p-1.
/// The modulus is the first monic irreducible of degree e when monic
/// polynomials are enumerated by that same index order.
class GaloisField {
 public:
  /// Shared, cached instance. Throws InvalidArgument if p is not prime,
  /// e == 0, or q exceeds the table limit.
  static std::shared_ptr<const GaloisField> get(std::uint32_t p, std::uint32_t e);

  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  /// Coefficients c_0..c_e of the monic modulus.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// Smallest index generating the multiplicative group.
  std::uint32_t generator() const { return gen_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) {
      std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_[b]); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws InvalidArgument on a == 0.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  std::uint32_t pow(std::uint32_t a, std::int64_t k) const;
  /// Absolute trace to F_p; the result is an index in 0..p-1.
  std::uint32_t trace(std::uint32_t a) const { return trace_[a]; }
  std::uint32_t frobenius(std::uint32_t a) const { return frob_[a]; }
  /// Image of an integer in the prime subfield.
  std::uint32_t from_int(std::int64_t v) const;
  /// Discrete log base generator(); a must be nonzero.
  std::uint32_t log(std::uint32_t a) const { return log_[a]; }

  std::vector<std::uint32_t> digits(std::uint32_t a) const;
  std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const;

  /// "F_p" or "F_p^e"
  std::string name() const;

  GaloisField(std::uint32_t p, std::uint32_t e);

 private:
  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_, e_, q_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t gen_ = 1;
  std::vector<std::uint32_t> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> trace_;
  std::vector<std::uint32_t> frob_;
  std::vector<std::uint32_t> add_table_;
};

bool is_prime(std::uint64_t n);

/// Element of a GaloisField. Cheap value type; the field must outlive it.
struct Fq {
  const GaloisField* f = nullptr;
  std::uint32_t v = 0;

  friend Fq operator+(Fq a, Fq b) { return {a.f, a.f->add(a.v, b.v)}; }
  friend Fq operator-(Fq a, Fq b) { return {a.f, a.f->sub(a.v, b.v)}; }
  friend Fq operator*(Fq a, Fq b) { return {a.f, a.f->mul(a.v, b.v)}; }
  friend Fq operator/(Fq a, Fq b) { return {a.f, a.f->div(a.v, b.v)}; }
  Fq operator-() const { return {f, f->neg(v)}; }
  Fq& operator+=(Fq b) { return *this = *this + b; }
  Fq& operator-=(Fq b) { return *this = *this - b; }
  Fq& operator*=(Fq b) { return *this = *this * b; }
  Fq& operator/=(Fq b) { return *this = *this / b; }
  friend bool operator==(Fq a, Fq b) { return a.v == b.v; }
  friend bool operator!=(Fq a, Fq b) { return a.v != b.v; }
};

/// Field context over a GaloisField, usable wherever templates expect a
/// `Field` (zero/one/from_int/is_zero).
struct FqField {
  using Element = Fq;

  std::shared_ptr<const GaloisField> gf;

  FqField() = default;
  explicit FqField(std::shared_ptr<const GaloisField> g) : gf(std::move(g)) {}
  FqField(std::uint32_t p, std::uint32_t e) : gf(GaloisField::get(p, e)) {}

  Element zero() const { return {gf.get(), 0}; }
  Element one() const { return {gf.get(), 1}; }
  Element from_int(std::int64_t v) const { return {gf.get(), gf->from_int(v)}; }
  Element from_ratio(std::int64_t num, std::int64_t den) const {
    return from_int(num) / from_int(den);
  }
  Element of(std::uint32_t index) const { return {gf.get(), index}; }
  static bool is_zero(const Element& x) { return x.v == 0; }
  static std::string to_string(const Element& x) { return std::to_string(x.v); }
  std::uint32_t characteristic() const { return gf->p(); }
  std::string name() const { return gf->name(); }
};

}  // namespace airy
