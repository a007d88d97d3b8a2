#pragma once

#include <map>
#include <vector>

#include "grasslp/zonal.hpp"

namespace grasslp {

/// Dense exact matrix, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return a_[r * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[r * cols_ + c]; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

/// The three-term relation sigma P_s = A_s P_{s+1} + B_s P_s + C_s P_{s-1}
/// in exact arithmetic, for s = 0..k, together with the diagonal dimensions.
/// Rows and columns follow the ascending-lex order within each degree.
struct ThreeTermData {
    int m = 0, n = 0, k = 0;
    std::vector<std::vector<Partition>> level;  // level[s]: partitions of degree s
    std::vector<RatMatrix> A;                   // A[s]: pi_s x pi_{s+1}, s = 0..k
    std::vector<RatMatrix> B;                   // B[s]: pi_s x pi_s,     s = 0..k
    std::vector<RatMatrix> C;                   // C[s]: pi_s x pi_{s-1}, s = 1..k (C[0] empty)
    std::vector<std::vector<Int>> d;            // d[s][i] = d_{2 kappa}, kappa = level[s][i]

    int index_in_level(int s, const Partition& kappa) const;
};

/// Exact matrices from the expansion of sigma * P_kappa; the table must reach
/// degree k+1.
ThreeTermData three_term_matrices(int k, const ZonalTable& table);

/// Closed-form diagonal entry B_s[kappa, kappa] of the normalized operator.
Rat closed_form_diag(const Partition& kappa, int m, int n);

/// Closed-form off-diagonal entry of the normalized operator, returned as the
/// exact radicand: A'_s[kappa, kappa^{(i)}]^2. Throws for inadmissible i.
Rat closed_form_offdiag_radicand(const Partition& kappa, int i, int m, int n);

/// Closed-form entry A_s[kappa, kappa^{(i)}] of the un-normalized relation.
Rat closed_form_A(const Partition& kappa, int i, int m, int n);

/// Q_kappa = sum_{|mu|=s+1} A_s[kappa, mu] P_mu and a_kappa = Q_kappa(1,..,1).
struct QPoly {
    SymPoly q;
    Rat a;
};
std::map<Partition, QPoly> q_polys(int s, const ThreeTermData& data, const ZonalTable& table);

/// Reproducing kernel K_k(x, y) = sum_{|nu|<=k} d_{2nu} P_nu(x) P_nu(y).
Rat cd_kernel(int k, const std::vector<Rat>& x, const std::vector<Rat>& y,
              const ZonalTable& table);
double cd_kernel(int k, const std::vector<double>& x, const std::vector<double>& y,
                 const ZonalTable& table);

/// Exact verification of both Christoffel-Darboux identities at random
/// rational points (seeded, reproducible).
struct CdReport {
    int k = 0;
    int samples = 0;
    bool identity_i_ok = false;
    bool identity_ii_ok = false;
    bool ok() const { return identity_i_ok && identity_ii_ok; }
};
CdReport cd_check(int k, const ThreeTermData& data, const ZonalTable& table, int samples,
                  unsigned seed);

}  // namespace grasslp
