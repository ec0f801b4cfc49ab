#ifndef KRES_NUMERIC_HPP
#define KRES_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "kres/errors.hpp"

namespace kres {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, never floating point.
using Int = mpz_class;
using Rat = mpq_class;

// Multiplicities in character/K-theory data.  They stay far below 2^63 at the
// ranks this library supports; arithmetic that could overflow (linear algebra,
// Freudenthal accumulation) is done in Int/Rat instead.
using i64 = std::int64_t;

// Exact integer division; remainder is a hard internal error, not bad input.
inline i64 exact_div(i64 num, i64 den) {
  internal_check(den != 0 && num % den == 0, "non-exact integer division");
  return num / den;
}

inline i64 to_i64(const Int& z) {
  internal_check(z.fits_slong_p(), "integer out of i64 range");
  return static_cast<i64>(z.get_si());
}

// Canonical text form used in all file formats: "p/q" in lowest terms with
// q > 0, "/1" omitted.
inline std::string rat_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0)
    fail(ErrorCode::UsageError, "malformed rational '" + s + "'");
  if (r.get_den() == 0)
    fail(ErrorCode::UsageError, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

// FNV-1a; stable across platforms, used for cache keys.
inline std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace kres

#endif
