#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace grasslp {

using Rat = mpq_class;
using Int = mpz_class;

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Precondition or domain violation (bad index, mismatched dimensions, value
/// outside the stated window).
struct DomainError : Error {
    using Error::Error;
};

/// A bound whose hypothesis does not hold for the requested parameters.
struct NotApplicableError : DomainError {
    NotApplicableError(const std::string& msg, double threshold)
        : DomainError(msg), threshold(threshold) {}
    double threshold;
};

/// A parameter combination where the construction degenerates (eigenvalue
/// collision, vanishing normalization).
struct DegenerateParametersError : Error {
    using Error::Error;
};

/// Violation of an identity the implementation relies on; indicates a bug,
/// not a user mistake.
struct InternalConsistencyError : Error {
    using Error::Error;
};

inline double to_double(const Rat& q) { return q.get_d(); }
inline double to_double(const Int& z) { return z.get_d(); }

/// Canonical fraction; the two-argument mpq_class constructor does not
/// reduce, which breaks GMP comparisons.
inline Rat frac(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat frac(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Exact integer square root, empty when z is not a perfect square.
inline std::optional<Int> exact_sqrt(const Int& z) {
    if (sgn(z) < 0) return std::nullopt;
    Int r = sqrt(z);
    if (r * r == z) return r;
    return std::nullopt;
}

/// Exact rational square root, empty when q is not a square in Q.
inline std::optional<Rat> exact_sqrt(const Rat& q) {
    auto num = exact_sqrt(Int(q.get_num()));
    auto den = exact_sqrt(Int(q.get_den()));
    if (!num || !den) return std::nullopt;
    return Rat(*num, *den);
}

/// Parse "p/q" or "p"; throws DomainError on malformed input.
inline Rat parse_rat(const std::string& text) {
    try {
        Rat q(text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed rational: '" + text + "'");
    }
}

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace grasslp
