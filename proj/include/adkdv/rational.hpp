#pragma once

#include <gmpxx.h>

#include <string>

#include "adkdv/errors.hpp"

namespace adkdv {

// Exact arithmetic scalar. All subtraction-free dynamics (Lusztig moves,
// interactions, wire-ansatz weights) stay in Q when the inputs do.
using Rat = mpq_class;

inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw InvalidInputError("cannot parse rational '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline double to_double(const Rat& r) { return r.get_d(); }
inline double to_double(double x) { return x; }

inline bool is_positive(const Rat& r) { return sgn(r) > 0; }
inline bool is_positive(double x) { return x > 0.0; }

// r^e for integer e (e may be negative; r must be nonzero then).
inline Rat rat_pow(const Rat& r, long e) {
  if (e == 0) return Rat(1);
  mpz_class num = r.get_num(), den = r.get_den();
  if (e < 0) {
    if (num == 0) throw InvalidInputError("rat_pow: zero base, negative exponent");
    std::swap(num, den);
    if (num < 0) { num = -num; den = -den; }
    e = -e;
  }
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
  Rat out(pn, pd);
  out.canonicalize();
  return out;
}

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static const char* name() { return "float"; }
};

template <>
struct scalar_traits<Rat> {
  static constexpr bool exact = true;
  static const char* name() { return "exact"; }
};

}  // namespace adkdv
