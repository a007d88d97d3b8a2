#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "grasslp/jack.hpp"
#include "grasslp/partition.hpp"
#include "grasslp/sympoly.hpp"

namespace grasslp {

/// Exact coefficient vector of a symmetric polynomial on the {P_kappa} basis.
struct PExpansion {
    int m = 0;
    int n = 0;
    int k = 0;
    std::map<Partition, Rat> coeff;

    Rat at(const Partition& kappa) const {
        auto it = coeff.find(kappa);
        return it == coeff.end() ? Rat(0) : it->second;
    }
};

/// The zonal polynomials P_kappa of G_{m,n} up to a fixed degree, with their
/// operator eigenvalues, the dimensions d_{2 kappa}, and the transition data
/// to the C basis. Construction: for each kappa solve the eigenproblem of the
/// full operator in the C basis, where it is diagonal within a degree and
/// only couples downward by one degree; then normalize at (1,...,1).
///
/// When the environment variable GRASSLP_CACHE_DIR is set, tables are read
/// from / written to that directory. The cache is an optimization only;
/// a missing or corrupt file triggers a silent rebuild.
class ZonalTable {
public:
    ZonalTable(int m, int n, int max_degree);

    int vars() const { return m_; }
    int ambient() const { return n_; }
    int max_degree() const { return max_degree_; }
    const PartitionIndexSet& index() const { return index_; }

    const SymPoly& P(const Partition& kappa) const;
    /// Eigenvalue of the full operator on P_kappa.
    const Rat& eigenvalue(const Partition& kappa) const;
    /// d_{2 kappa} = dim V_n^{2 kappa}; the inverse of [P_kappa, P_kappa].
    const Int& d2(const Partition& kappa) const;
    /// Coefficients beta: P_kappa = sum beta_mu C_mu (support inside the
    /// containment order).
    const std::map<Partition, Rat>& p_in_c(const Partition& kappa) const;

    /// The C basis (rebuilt on first use when the table came from the cache).
    const JackTable& jack() const;

private:
    void build();
    bool load_cache(const std::string& path);
    void save_cache(const std::string& path) const;

    int m_, n_, max_degree_;
    PartitionIndexSet index_;
    std::map<Partition, SymPoly> p_;
    std::map<Partition, Rat> lambda_;
    std::map<Partition, Int> d_;
    std::map<Partition, std::map<Partition, Rat>> beta_;
    mutable std::unique_ptr<JackTable> jack_;
    mutable std::mutex jack_mutex_;
};

/// Exact change of basis onto {P_kappa}; throws DomainError past the table
/// degree. Round-trips exactly with reconstruct().
PExpansion p_expand(const SymPoly& f, const ZonalTable& table);

SymPoly reconstruct(const PExpansion& e, const ZonalTable& table);

/// [f, g] for the orthogonality measure, computed exactly as the coefficient
/// of P_() in the expansion of f*g (constant-term method).
Rat inner_product(const SymPoly& f, const SymPoly& g, const ZonalTable& table);

}  // namespace grasslp
