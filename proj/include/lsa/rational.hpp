// Exact rational scalars for all coefficient arithmetic.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lsa {

/// Arbitrary-precision rational; always kept in lowest terms with positive denominator.
using Rational = mpq_class;

/// Parse "p" or "p/q" with optional leading '-'. Throws std::invalid_argument on anything else.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    for (char c : text) {
        const bool ok = (c >= '0' && c <= '9') || c == '-' || c == '/';
        if (!ok) throw std::invalid_argument("bad rational literal: " + text);
    }
    Rational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

/// Format in lowest terms: "p" when the denominator is 1, else "p/q".
inline std::string format_rational(const Rational& q) {
    return q.get_str();
}

}  // namespace lsa
