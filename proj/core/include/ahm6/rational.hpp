#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ahm6 {

// Every scalar in the library is an exact rational. GMP keeps values in
// lowest terms with a positive denominator, which is the canonical form
// we rely on for serialization and equality.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p" or "p/q" (base 10). Throws std::invalid_argument on bad input.
inline Rat rat_parse(const std::string& text) {
    Rat q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational: '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    q.canonicalize();
    return q;
}

/// Canonical text form: "p" for integers, "p/q" otherwise, q > 0, lowest terms.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool rat_is_zero(const Rat& q) { return sgn(q) == 0; }

/// q multiplied by a plain integer sign (+1/-1).
inline Rat rat_signed(int sign, const Rat& q) { return sign < 0 ? Rat(-q) : q; }

} // namespace ahm6
