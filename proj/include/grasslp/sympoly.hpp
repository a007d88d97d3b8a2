#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "grasslp/partition.hpp"
#include "grasslp/rational.hpp"

namespace grasslp {

/// Symmetric polynomial in m variables with exact rational coefficients,
/// stored on the monomial-symmetric basis {m_lambda}. Zero coefficients are
/// never stored.
class SymPoly {
public:
    explicit SymPoly(int m);

    static SymPoly constant(int m, const Rat& c);
    static SymPoly monomial(int m, const Partition& lambda, const Rat& c = 1);
    /// sigma = y_1 + ... + y_m
    static SymPoly sigma(int m);

    int vars() const { return m_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Max |lambda| over stored terms; -1 for the zero polynomial.
    int degree() const;

    const std::map<Partition, Rat>& coeffs() const { return coeffs_; }
    Rat coeff(const Partition& lambda) const;
    void set_coeff(const Partition& lambda, const Rat& c);

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    SymPoly& operator*=(const Rat& c);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(SymPoly a, const Rat& c) { return a *= c; }
    friend SymPoly operator*(const Rat& c, SymPoly a) { return a *= c; }
    SymPoly operator-() const;
    SymPoly operator*(const SymPoly& o) const;
    bool operator==(const SymPoly& o) const;

    Rat evaluate(const std::vector<Rat>& y) const;
    double evaluate(const std::vector<double>& y) const;
    Rat at_ones() const;

    /// Homogeneous component of the given degree.
    SymPoly homogeneous_part(int d) const;

    /// Canonical text form, graded-lex descending: "m[2,1] - 1/3 m[1] + 2".
    std::string to_string() const;

private:
    int m_;
    std::map<Partition, Rat> coeffs_;
};

/// Calls fn once per distinct permutation of lambda's parts padded to m slots.
void for_each_monomial_orbit(const Partition& lambda, int m,
                             const std::function<void(const std::vector<int>&)>& fn);

/// Number of distinct permutations of lambda's parts in m slots.
Int orbit_size(const Partition& lambda, int m);

/// epsilon = sum_i d/dy_i.
SymPoly apply_epsilon(const SymPoly& f);

/// Degree-preserving, n-independent part of the Laplace-Beltrami operator:
/// sum_i y_i^2 d2/dy_i^2 + sum_{i != j} y_i^2 (y_i - y_j)^{-1} d/dy_i.
/// The singular-looking terms combine pairwise into exact divided differences.
SymPoly apply_delta0(const SymPoly& f);

/// Full operator: delta0 + (n/2 - m + 1) sum_i y_i d/dy_i
///   - sum_i y_i d2/dy_i^2 - sum_{i != j} y_i (y_i - y_j)^{-1} d/dy_i
///   - (1/2) sum_i d/dy_i.
SymPoly apply_delta(const SymPoly& f, int n);

}  // namespace grasslp
