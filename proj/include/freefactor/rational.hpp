#ifndef FREEFACTOR_RATIONAL_HPP
#define FREEFACTOR_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace freefactor {

using Rational = mpq_class;
using Integer = mpz_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct ParameterOutOfRange : Error {
    using Error::Error;
};
struct DiffuseUnsupported : Error {
    using Error::Error;
};
struct UnitArgument : Error {
    using Error::Error;
};
struct TruncationTooLarge : Error {
    using Error::Error;
};
struct TruncationLeakage : Error {
    using Error::Error;
};
struct WitnessFailure : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

// Parses "p/q" or "p" (base 10). Normalizes to lowest terms.
inline Rational parse_rational(const std::string& s) {
    mpq_t q;
    mpq_init(q);
    if (s.empty() || mpq_set_str(q, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw ParseError("invalid rational: \"" + s + "\"");
    }
    Rational r(q);
    mpq_clear(q);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

// r^e for integer e (e may be negative; r must be nonzero then).
inline Rational pow_rational(const Rational& r, long e) {
    Rational base = e < 0 ? Rational(r.get_den(), r.get_num()) : r;
    if (e < 0) base.canonicalize();
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational out(1);
    Rational acc = base;
    while (n) {
        if (n & 1) out *= acc;
        acc *= acc;
        n >>= 1;
    }
    return out;
}

}  // namespace freefactor

#endif
