#include "grasslp/zonal.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace grasslp {

namespace {

std::string cache_path_for(int m, int n, int k) {
    const char* dir = std::getenv("GRASSLP_CACHE_DIR");
    if (!dir || !*dir) return {};
    std::ostringstream os;
    os << dir << "/zonal_m" << m << "_n" << n << "_k" << k << ".v1.txt";
    return os.str();
}

void write_partition(std::ostream& os, const Partition& p) {
    os << p.length();
    for (int i = 1; i <= p.length(); ++i) os << ' ' << p.part(i);
}

bool read_partition(std::istream& is, Partition& out) {
    int len = 0;
    if (!(is >> len) || len < 0 || len > 64) return false;
    std::vector<int> parts(len);
    for (int& v : parts)
        if (!(is >> v)) return false;
    try {
        out = Partition(std::move(parts));
    } catch (const Error&) {
        return false;
    }
    return true;
}

bool read_coeff_map(std::istream& is, int m, std::map<Partition, Rat>& out) {
    int count = 0;
    if (!(is >> count) || count < 0) return false;
    for (int t = 0; t < count; ++t) {
        Partition key;
        std::string value;
        if (!read_partition(is, key) || !(is >> value) || key.length() > m) return false;
        try {
            out[key] = parse_rat(value);
        } catch (const Error&) {
            return false;
        }
    }
    return true;
}

}  // namespace

ZonalTable::ZonalTable(int m, int n, int max_degree)
    : m_(m), n_(n), max_degree_(max_degree) {
    if (m < 1) throw DomainError("ZonalTable requires m >= 1");
    if (n < 2 * m) throw DomainError("ZonalTable requires n >= 2m");
    if (max_degree < 0) throw DomainError("ZonalTable requires degree >= 0");
    index_ = enumerate_partitions(m, max_degree);
    const std::string path = cache_path_for(m, n, max_degree);
    if (!path.empty() && load_cache(path)) return;
    build();
    if (!path.empty()) save_cache(path);
}

void ZonalTable::build() {
    jack_ = std::make_unique<JackTable>(m_, max_degree_);
    const JackTable& jack = *jack_;
    const Rat degree_scale = frac(n_ - 2 * m_ + 2, 2);  // n/2 - m + 1

    // Full-operator columns in the C basis: diagonal lambda_mu plus a strictly
    // degree-lowering block L.
    std::map<Partition, std::map<Partition, Rat>> lowering;
    for (const Partition& mu : index_.list) {
        Rat lam = jack.eigenvalue0(mu) + degree_scale * mu.degree();
        lambda_[mu] = lam;
        auto column = jack.expand(apply_delta(jack.C(mu), n_));
        std::map<Partition, Rat> lower;
        for (const auto& [nu, c] : column) {
            if (nu == mu) {
                if (c != lam)
                    throw InternalConsistencyError("operator diagonal mismatch at " +
                                                   mu.to_string());
            } else if (nu.degree() == mu.degree() - 1) {
                lower[nu] = c;
            } else {
                throw InternalConsistencyError("operator column of " + mu.to_string() +
                                               " has support at degree " +
                                               std::to_string(nu.degree()));
            }
        }
        lowering[mu] = std::move(lower);
    }

    for (const Partition& kappa : index_.list) {
        const Rat& lam = lambda_[kappa];
        std::map<Partition, Rat> x;
        x[kappa] = 1;
        for (int d = kappa.degree() - 1; d >= 0; --d) {
            for (const Partition& nu : partitions_of_degree(m_, d)) {
                Rat rhs = 0;
                for (const auto& [mu, xm] : x) {
                    if (mu.degree() != d + 1) continue;
                    const auto& lower = lowering[mu];
                    auto it = lower.find(nu);
                    if (it != lower.end()) rhs += it->second * xm;
                }
                if (rhs == 0) continue;
                if (lambda_[nu] == lam)
                    throw DegenerateParametersError(
                        "eigenvalue collision for (m=" + std::to_string(m_) +
                        ", n=" + std::to_string(n_) + ", kappa=" + kappa.to_string() + ")");
                x[nu] = rhs / (lam - lambda_[nu]);
            }
        }
        // Condition (ii): the expansion stays inside the containment order.
        for (const auto& [mu, xm] : x)
            if (xm != 0 && !kappa.contains(mu))
                throw InternalConsistencyError("P_" + kappa.to_string() +
                                               " left the containment span at " + mu.to_string());

        SymPoly p(m_);
        for (const auto& [mu, xm] : x)
            if (xm != 0) p += xm * jack.C(mu);
        Rat norm = p.at_ones();
        if (norm == 0)
            throw DegenerateParametersError("P_" + kappa.to_string() +
                                            " cannot be normalized: value 0 at (1,...,1)");
        p *= 1 / norm;
        for (auto& [mu, xm] : x) xm /= norm;
        beta_[kappa] = std::move(x);
        p_.emplace(kappa, std::move(p));

        std::vector<int> doubled(kappa.parts());
        for (int& v : doubled) v *= 2;
        d_[kappa] = dim_on(Partition(std::move(doubled)), m_, n_);
    }
}

const SymPoly& ZonalTable::P(const Partition& kappa) const {
    auto it = p_.find(kappa);
    if (it == p_.end())
        throw DomainError("P_" + kappa.to_string() + " not in table (m=" + std::to_string(m_) +
                          ", n=" + std::to_string(n_) + ", degree " +
                          std::to_string(max_degree_) + ")");
    return it->second;
}

const Rat& ZonalTable::eigenvalue(const Partition& kappa) const {
    auto it = lambda_.find(kappa);
    if (it == lambda_.end()) throw DomainError("eigenvalue not in table for " + kappa.to_string());
    return it->second;
}

const Int& ZonalTable::d2(const Partition& kappa) const {
    auto it = d_.find(kappa);
    if (it == d_.end()) throw DomainError("d_{2k} not in table for " + kappa.to_string());
    return it->second;
}

const std::map<Partition, Rat>& ZonalTable::p_in_c(const Partition& kappa) const {
    auto it = beta_.find(kappa);
    if (it == beta_.end()) throw DomainError("C expansion not in table for " + kappa.to_string());
    return it->second;
}

const JackTable& ZonalTable::jack() const {
    std::lock_guard lock(jack_mutex_);
    if (!jack_) jack_ = std::make_unique<JackTable>(m_, max_degree_);
    return *jack_;
}

bool ZonalTable::load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    std::string magic, version;
    int m = 0, n = 0, k = 0, count = 0;
    if (!(in >> magic >> version >> m >> n >> k >> count)) return false;
    if (magic != "grasslp-zonal-cache" || version != "v1" || m != m_ || n != n_ ||
        k != max_degree_ || count != index_.total())
        return false;
    std::map<Partition, SymPoly> p;
    std::map<Partition, Rat> lambda;
    std::map<Partition, Int> d;
    std::map<Partition, std::map<Partition, Rat>> beta;
    for (int t = 0; t < count; ++t) {
        Partition kappa;
        std::string lam_text, d_text;
        if (!read_partition(in, kappa) || !(in >> lam_text >> d_text)) return false;
        if (index_.index_of(kappa) < 0) return false;
        std::map<Partition, Rat> pc, bc;
        if (!read_coeff_map(in, m_, pc) || !read_coeff_map(in, m_, bc)) return false;
        SymPoly poly(m_);
        for (const auto& [mu, c] : pc) poly.set_coeff(mu, c);
        try {
            lambda[kappa] = parse_rat(lam_text);
            d[kappa] = Int(d_text);
        } catch (...) {
            return false;
        }
        p.emplace(kappa, std::move(poly));
        beta.emplace(kappa, std::move(bc));
    }
    p_ = std::move(p);
    lambda_ = std::move(lambda);
    d_ = std::move(d);
    beta_ = std::move(beta);
    return true;
}

void ZonalTable::save_cache(const std::string& path) const {
    std::ofstream out(path + ".tmp");
    if (!out) return;
    out << "grasslp-zonal-cache v1\n"
        << m_ << ' ' << n_ << ' ' << max_degree_ << ' ' << index_.total() << '\n';
    for (const Partition& kappa : index_.list) {
        write_partition(out, kappa);
        out << ' ' << to_string(lambda_.at(kappa)) << ' ' << to_string(d_.at(kappa)) << '\n';
        const auto& pc = p_.at(kappa).coeffs();
        out << pc.size() << '\n';
        for (const auto& [mu, c] : pc) {
            write_partition(out, mu);
            out << ' ' << to_string(c) << '\n';
        }
        const auto& bc = beta_.at(kappa);
        out << bc.size() << '\n';
        for (const auto& [mu, c] : bc) {
            write_partition(out, mu);
            out << ' ' << to_string(c) << '\n';
        }
    }
    out.close();
    if (out) std::rename((path + ".tmp").c_str(), path.c_str());
}

PExpansion p_expand(const SymPoly& f, const ZonalTable& table) {
    if (f.vars() != table.vars()) throw DomainError("p_expand: mismatched variable count");
    if (f.degree() > table.max_degree())
        throw DomainError("p_expand: degree " + std::to_string(f.degree()) +
                          " exceeds table degree " + std::to_string(table.max_degree()));
    PExpansion out;
    out.m = table.vars();
    out.n = table.ambient();
    out.k = table.max_degree();
    SymPoly residual = f;
    while (!residual.is_zero()) {
        const Partition lead = residual.coeffs().rbegin()->first;
        const SymPoly& p = table.P(lead);
        Rat c = residual.coeff(lead) / p.coeff(lead);
        out.coeff[lead] = c;
        residual -= c * p;
    }
    return out;
}

SymPoly reconstruct(const PExpansion& e, const ZonalTable& table) {
    SymPoly out(table.vars());
    for (const auto& [kappa, c] : e.coeff) out += c * table.P(kappa);
    return out;
}

Rat inner_product(const SymPoly& f, const SymPoly& g, const ZonalTable& table) {
    SymPoly prod = f * g;
    if (prod.degree() > table.max_degree())
        throw DomainError("inner_product: product degree exceeds table degree");
    if (prod.is_zero()) return 0;
    return p_expand(prod, table).at(Partition{});
}

}  // namespace grasslp
