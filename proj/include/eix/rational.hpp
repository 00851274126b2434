#ifndef EIX_RATIONAL_HPP
#define EIX_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eix {

/// Exact rational scalar used throughout the library. No floating point
/// enters any core computation; doubles appear only in human-readable
/// reports.
using Rat = mpq_class;

/// Canonical "p/q" rendering, with "/q" omitted when the denominator is 1.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// Parse "p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rat rat_parse(const std::string& s) {
  mpq_class r;
  if (s.empty() || r.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  r.canonicalize();
  return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

/// Floor of an exact rational as mpz.
inline mpz_class rat_floor(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline mpz_class rat_ceil(const Rat& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline std::int64_t to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("mpz out of i64 range");
  return static_cast<std::int64_t>(z.get_si());
}

/// Decimal approximation for report output only.
inline double rat_approx(const Rat& r) { return r.get_d(); }

}  // namespace eix

#endif
