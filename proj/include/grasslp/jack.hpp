#pragma once

#include <map>
#include <utility>

#include "grasslp/partition.hpp"
#include "grasslp/sympoly.hpp"

namespace grasslp {

/// The polynomials C_kappa: eigenfunctions of the degree-preserving operator
/// apply_delta0, triangular with respect to dominance order in the monomial
/// basis, normalized by C_kappa(1,...,1) = 1. All coefficients exact.
class JackTable {
public:
    JackTable(int m, int max_degree);

    int vars() const { return m_; }
    int max_degree() const { return max_degree_; }

    const SymPoly& C(const Partition& kappa) const;
    /// Eigenvalue of apply_delta0 on C_kappa (n-independent).
    const Rat& eigenvalue0(const Partition& kappa) const;

    /// Exact expansion of f on the C basis; f must have degree <= max_degree.
    std::map<Partition, Rat> expand(const SymPoly& f) const;

private:
    int m_;
    int max_degree_;
    std::map<Partition, SymPoly> c_;
    std::map<Partition, Rat> eig_;
};

/// Standalone C_kappa (builds a throwaway table).
SymPoly jack_C(const Partition& kappa, int m);

/// Closed-form Pieri coefficients for the raise kappa -> kappa^{(i)}:
/// first = b(kappa^{(i)}, kappa)   with  sigma C_kappa = sum b C_mu,
/// second = binom(kappa^{(i)}, kappa) with epsilon C_mu = sum binom C_kappa.
/// Both positive; throws DomainError for an inadmissible index.
std::pair<Rat, Rat> pieri_coeffs(const Partition& kappa, int i, int m);

}  // namespace grasslp
