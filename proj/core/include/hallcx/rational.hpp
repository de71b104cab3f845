#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hallcx {

using Rational = mpq_class;
using Integer = mpz_class;

/// p^e as an exact rational; e may be negative.
inline Rational power_of(std::uint64_t p, std::int64_t e) {
  Integer base(static_cast<unsigned long>(p));
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(r);
  Rational q(1, 1);
  q /= Rational(r);
  return q;
}

inline Rational rational_of(std::uint64_t n) { return Rational(Integer(std::to_string(n))); }
inline Rational rational_of(const Integer& n) { return Rational(n); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace hallcx
