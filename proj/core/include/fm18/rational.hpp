#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace fm18 {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the representation every
// classification test below relies on: equality is canonical-form equality
// and zero tests are exact.
using Rat = mpq_class;

using RatVec = std::vector<Rat>;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

/// Parses "p", "-p" or "p/q" with q > 0 after canonicalization.
/// Decimal input is rejected on purpose: it would imply approximation.
inline Rat parse_rat(const std::string& s)
{
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char ch : s) {
        bool ok = (ch >= '0' && ch <= '9') || ch == '-' || ch == '+' || ch == '/';
        if (!ok) throw std::invalid_argument("bad rational literal '" + s + "' (use p, -p or p/q)");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal '" + s + "'");
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

/// Canonical "p" or "p/q" rendering (q omitted when 1).
inline std::string rat_to_string(const Rat& x)
{
    return x.get_str();
}

} // namespace fm18
