#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace canonlab {

// Exact rational scalar. mpq_class keeps values in canonical reduced form
// with a nonzero denominator.
using Rational = mpq_class;

Rational rational_from_string(const std::string& text);
std::string rational_to_string(const Rational& q);

// A coordinate on the normalization P^1 of a component: a rational number
// or the point at infinity.
struct Param {
    bool infinite = false;
    Rational value = 0;  // ignored when infinite

    static Param inf() { return Param{true, 0}; }
    static Param fin(Rational v) { return Param{false, std::move(v)}; }

    bool operator==(const Param& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    bool operator!=(const Param& o) const { return !(*this == o); }

    // Finite values in numeric order, infinity last.
    bool operator<(const Param& o) const {
        if (infinite != o.infinite) return !infinite;
        if (infinite) return false;
        return value < o.value;
    }
};

Param param_from_string(const std::string& text);
std::string param_to_string(const Param& p);

}  // namespace canonlab
