#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace airy {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Field context for exact rational arithmetic. Stateless.
struct RationalField {
  using Element = Rational;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const {
    Element r;
    r = BigInt(std::to_string(v));
    return r;
  }
  Element from_ratio(std::int64_t num, std::int64_t den) const {
    Element r(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
    r.canonicalize();
    return r;
  }
  static bool is_zero(const Element& x) { return sgn(x) == 0; }
  static std::string to_string(const Element& x) { return x.get_str(); }
  /// Characteristic, 0 for Q.
  static std::uint32_t characteristic() { return 0; }
  std::string name() const { return "Q"; }
};

}  // namespace airy
