#pragma once

#include <vector>

#include "grasslp/rational.hpp"
#include "grasslp/sympoly.hpp"

namespace grasslp {

/// Dense univariate polynomial with exact rational coefficients, ascending
/// powers. Backs the rigorous sign checks of lp_verify and the m=1 root
/// oracle for the Jacobi operator.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);

    /// Reinterpret a one-variable SymPoly on the power basis.
    static RatPoly from_sympoly(const SymPoly& f);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const;

    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const;
    RatPoly derivative() const;
    RatPoly squarefree_part() const;

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

private:
    void strip();
    std::vector<Rat> c_;
};

/// Interval [lo, hi] known to contain exactly one root.
struct RootInterval {
    Rat lo, hi;
    double midpoint() const { return to_double((lo + hi) / 2); }
};

/// Number of distinct real roots of p in the half-open interval ]a, b].
int sturm_count(const RatPoly& p, const Rat& a, const Rat& b);

/// Isolating intervals for every distinct real root in ]a, b], each narrowed
/// below the given width, ordered by position. Roots of any multiplicity are
/// located (via the squarefree part); endpoints that are roots are included
/// when they lie in ]a, b].
std::vector<RootInterval> isolate_roots(const RatPoly& p, const Rat& a, const Rat& b,
                                        const Rat& width);

/// Exact decision: p(x) <= 0 for every x in [a, b].
bool nonpositive_on(const RatPoly& p, const Rat& a, const Rat& b);

}  // namespace grasslp
