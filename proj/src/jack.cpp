#include "grasslp/jack.hpp"

#include <algorithm>
#include <vector>

namespace grasslp {

JackTable::JackTable(int m, int max_degree) : m_(m), max_degree_(max_degree) {
    if (m < 1 || max_degree < 0) throw DomainError("JackTable requires m >= 1, degree >= 0");
    for (int d = 0; d <= max_degree; ++d) {
        auto level = partitions_of_degree(m, d);  // ascending lex
        const int count = static_cast<int>(level.size());

        // Matrix of apply_delta0 on {m_lambda : |lambda| = d}; dominance
        // triangular, so entries below the lex diagonal vanish.
        std::vector<std::vector<Rat>> M(count, std::vector<Rat>(count, Rat(0)));
        std::vector<Rat> eig(count);
        for (int col = 0; col < count; ++col) {
            SymPoly image = apply_delta0(SymPoly::monomial(m, level[col]));
            for (const auto& [mu, c] : image.coeffs()) {
                int row = static_cast<int>(
                    std::lower_bound(level.begin(), level.end(), mu) - level.begin());
                if (row >= count || !(level[row] == mu))
                    throw InternalConsistencyError("delta0 left the degree level");
                M[row][col] = c;
            }
            eig[col] = M[col][col];
        }

        for (int t = 0; t < count; ++t) {
            std::vector<Rat> x(t + 1, Rat(0));
            x[t] = 1;
            for (int idx = t - 1; idx >= 0; --idx) {
                Rat rhs = 0;
                for (int l = idx + 1; l <= t; ++l)
                    if (x[l] != 0) rhs += M[idx][l] * x[l];
                if (rhs == 0) continue;
                if (eig[t] == eig[idx])
                    throw DegenerateParametersError(
                        "eigenvalue collision in the triangular solve for C_" +
                        level[t].to_string());
                x[idx] = rhs / (eig[t] - eig[idx]);
            }
            SymPoly v(m);
            for (int l = 0; l <= t; ++l) v.set_coeff(level[l], x[l]);
            Rat norm = v.at_ones();
            if (norm == 0)
                throw DegenerateParametersError("C_" + level[t].to_string() +
                                                " vanishes at (1,...,1)");
            v *= 1 / norm;
            c_.emplace(level[t], std::move(v));
            eig_.emplace(level[t], eig[t]);
        }
    }
}

const SymPoly& JackTable::C(const Partition& kappa) const {
    auto it = c_.find(kappa);
    if (it == c_.end())
        throw DomainError("C_" + kappa.to_string() + " not in table (m=" + std::to_string(m_) +
                          ", degree " + std::to_string(max_degree_) + ")");
    return it->second;
}

const Rat& JackTable::eigenvalue0(const Partition& kappa) const {
    auto it = eig_.find(kappa);
    if (it == eig_.end()) throw DomainError("eigenvalue not in table for " + kappa.to_string());
    return it->second;
}

std::map<Partition, Rat> JackTable::expand(const SymPoly& f) const {
    if (f.vars() != m_) throw DomainError("expand: mismatched variable count");
    if (f.degree() > max_degree_) throw DomainError("expand: degree exceeds table");
    std::map<Partition, Rat> out;
    SymPoly residual = f;
    while (!residual.is_zero()) {
        const Partition lead = residual.coeffs().rbegin()->first;
        Rat c = residual.coeff(lead) / C(lead).coeff(lead);
        out[lead] = c;
        residual -= c * C(lead);
    }
    return out;
}

SymPoly jack_C(const Partition& kappa, int m) {
    JackTable table(m, kappa.degree());
    return table.C(kappa);
}

std::pair<Rat, Rat> pieri_coeffs(const Partition& kappa, int i, int m) {
    auto u = u_set(kappa, m);
    if (std::find(u.begin(), u.end(), i) == u.end())
        throw DomainError("pieri_coeffs: index " + std::to_string(i) + " not admissible for " +
                          kappa.to_string());
    Rat b = 1;
    Rat binom = Rat(kappa.part(i) + 1) + frac(m - i, 2);
    for (int j = 1; j <= m; ++j) {
        if (j == i) continue;
        const int base = 2 * kappa.part(i) - 2 * kappa.part(j) + j - i;
        b *= frac(base + 1, base);
        binom *= frac(base + 1, base + 2);
    }
    return {b, binom};
}

}  // namespace grasslp
