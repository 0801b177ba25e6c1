#ifndef M0N_RATIONAL_HPP
#define M0N_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace m0n {

// All arithmetic in the math core is exact. Chamber walls (w_I = 1, w = 2)
// are genuine equalities, so there is no tolerance anywhere.
using Rational = mpq_class;

inline Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Renders as "p/q" with q = 1 still printed ("3/1"): keeps report columns
// uniform and machine-parseable.
inline std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p/q" or a finite decimal ("0.3" -> 3/10). No floating point is
// ever involved; decimals convert via a power-of-ten denominator.
Rational parse_rational(const std::string& text);

}  // namespace m0n

#endif
