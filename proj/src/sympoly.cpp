#include "grasslp/sympoly.hpp"

#include <algorithm>
#include <sstream>

namespace grasslp {

namespace {

// Dense view used internally by products and differential operators:
// exponent vector of length m -> coefficient.
using RawPoly = std::map<std::vector<int>, Rat>;

RawPoly expand_raw(const SymPoly& f) {
    RawPoly raw;
    for (const auto& [lambda, c] : f.coeffs())
        for_each_monomial_orbit(lambda, f.vars(),
                                [&](const std::vector<int>& alpha) { raw[alpha] = c; });
    return raw;
}

void raw_add(RawPoly& dst, const std::vector<int>& alpha, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = dst.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) dst.erase(it);
    }
}

void raw_add(RawPoly& dst, const RawPoly& src) {
    for (const auto& [alpha, c] : src) raw_add(dst, alpha, c);
}

// y_i^p * d/dy_i applied to a raw polynomial (i is 0-based here).
RawPoly raw_weighted_derivative(const RawPoly& f, int i, int p) {
    RawPoly out;
    for (const auto& [alpha, c] : f) {
        if (alpha[i] == 0) continue;
        std::vector<int> beta = alpha;
        beta[i] += p - 1;
        raw_add(out, beta, c * alpha[i]);
    }
    return out;
}

// Exact division by (y_i - y_j); throws when the remainder is nonzero.
RawPoly raw_divide_linear(const RawPoly& f, int i, int j) {
    // Regroup as a polynomial in y_i with coefficients in the other variables.
    std::map<int, RawPoly> by_deg;
    int top = 0;
    for (const auto& [alpha, c] : f) {
        std::vector<int> rest = alpha;
        int a = rest[i];
        rest[i] = 0;
        raw_add(by_deg[a], rest, c);
        top = std::max(top, a);
    }
    auto shift_j = [&](const RawPoly& g) {
        RawPoly out;
        for (const auto& [alpha, c] : g) {
            std::vector<int> beta = alpha;
            beta[j] += 1;
            out.emplace(std::move(beta), c);
        }
        return out;
    };
    RawPoly quotient;
    RawPoly carry;  // q_{a} while sweeping a = top-1 .. 0
    for (int a = top - 1; a >= 0; --a) {
        RawPoly qa = shift_j(carry);
        if (auto it = by_deg.find(a + 1); it != by_deg.end()) raw_add(qa, it->second);
        for (const auto& [alpha, c] : qa) {
            std::vector<int> beta = alpha;
            beta[i] += a;
            raw_add(quotient, beta, c);
        }
        carry = std::move(qa);
    }
    RawPoly remainder = shift_j(carry);
    if (auto it = by_deg.find(0); it != by_deg.end()) raw_add(remainder, it->second);
    if (!remainder.empty())
        throw InternalConsistencyError("division by (y_i - y_j) left a nonzero remainder");
    return quotient;
}

// (y_i^p d_i - y_j^p d_j) f / (y_i - y_j), exact. Requires f symmetric in i,j.
RawPoly raw_divided_pair(const RawPoly& f, int i, int j, int p) {
    RawPoly numerator = raw_weighted_derivative(f, i, p);
    for (const auto& [alpha, c] : raw_weighted_derivative(f, j, p))
        raw_add(numerator, alpha, -c);
    return raw_divide_linear(numerator, i, j);
}

SymPoly collect_raw(const RawPoly& raw, int m) {
    SymPoly out(m);
    std::map<Partition, long> seen;
    for (const auto& [alpha, c] : raw) {
        std::vector<int> sorted = alpha;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        Partition lambda(std::move(sorted));
        Rat existing = out.coeff(lambda);
        if (seen.find(lambda) == seen.end()) {
            out.set_coeff(lambda, c);
            seen[lambda] = 1;
        } else {
            if (existing != c)
                throw InternalConsistencyError(
                    "operator produced a non-symmetric polynomial (coefficient mismatch)");
            seen[lambda] += 1;
        }
    }
    for (const auto& [lambda, count] : seen)
        if (count != orbit_size(lambda, m))
            throw InternalConsistencyError(
                "operator produced a non-symmetric polynomial (incomplete orbit)");
    return out;
}

}  // namespace

SymPoly::SymPoly(int m) : m_(m) {
    if (m < 1) throw DomainError("SymPoly needs at least one variable");
}

SymPoly SymPoly::constant(int m, const Rat& c) {
    SymPoly f(m);
    f.set_coeff(Partition{}, c);
    return f;
}

SymPoly SymPoly::monomial(int m, const Partition& lambda, const Rat& c) {
    if (lambda.length() > m)
        throw DomainError("monomial " + lambda.to_string() + " needs more than " +
                          std::to_string(m) + " variables");
    SymPoly f(m);
    f.set_coeff(lambda, c);
    return f;
}

SymPoly SymPoly::sigma(int m) { return monomial(m, Partition{1}); }

int SymPoly::degree() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first.degree();
}

Rat SymPoly::coeff(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void SymPoly::set_coeff(const Partition& lambda, const Rat& c) {
    if (lambda.length() > m_) throw DomainError("partition longer than variable count");
    if (c == 0)
        coeffs_.erase(lambda);
    else
        coeffs_[lambda] = c;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    if (o.m_ != m_) throw DomainError("mismatched variable counts");
    for (const auto& [lambda, c] : o.coeffs_) set_coeff(lambda, coeff(lambda) + c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    if (o.m_ != m_) throw DomainError("mismatched variable counts");
    for (const auto& [lambda, c] : o.coeffs_) set_coeff(lambda, coeff(lambda) - c);
    return *this;
}

SymPoly& SymPoly::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
    } else {
        for (auto& [lambda, v] : coeffs_) v *= c;
    }
    return *this;
}

SymPoly SymPoly::operator-() const {
    SymPoly out = *this;
    for (auto& [lambda, v] : out.coeffs_) v = -v;
    return out;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
    if (o.m_ != m_) throw DomainError("mismatched variable counts");
    if (is_zero() || o.is_zero()) return SymPoly(m_);
    RawPoly a = expand_raw(*this);
    RawPoly b = expand_raw(o);
    RawPoly prod;
    std::vector<int> gamma(m_);
    for (const auto& [alpha, ca] : a)
        for (const auto& [beta, cb] : b) {
            for (int t = 0; t < m_; ++t) gamma[t] = alpha[t] + beta[t];
            raw_add(prod, gamma, ca * cb);
        }
    return collect_raw(prod, m_);
}

bool SymPoly::operator==(const SymPoly& o) const {
    return m_ == o.m_ && coeffs_ == o.coeffs_;
}

Rat SymPoly::evaluate(const std::vector<Rat>& y) const {
    if (static_cast<int>(y.size()) != m_) throw DomainError("evaluation point has wrong dimension");
    Rat total = 0;
    for (const auto& [lambda, c] : coeffs_) {
        Rat orbit_sum = 0;
        for_each_monomial_orbit(lambda, m_, [&](const std::vector<int>& alpha) {
            Rat term = 1;
            for (int i = 0; i < m_; ++i)
                for (int e = 0; e < alpha[i]; ++e) term *= y[i];
            orbit_sum += term;
        });
        total += c * orbit_sum;
    }
    return total;
}

double SymPoly::evaluate(const std::vector<double>& y) const {
    if (static_cast<int>(y.size()) != m_) throw DomainError("evaluation point has wrong dimension");
    double total = 0;
    for (const auto& [lambda, c] : coeffs_) {
        double orbit_sum = 0;
        for_each_monomial_orbit(lambda, m_, [&](const std::vector<int>& alpha) {
            double term = 1;
            for (int i = 0; i < m_; ++i)
                for (int e = 0; e < alpha[i]; ++e) term *= y[i];
            orbit_sum += term;
        });
        total += to_double(c) * orbit_sum;
    }
    return total;
}

Rat SymPoly::at_ones() const {
    Rat total = 0;
    for (const auto& [lambda, c] : coeffs_) total += c * Rat(orbit_size(lambda, m_));
    return total;
}

SymPoly SymPoly::homogeneous_part(int d) const {
    SymPoly out(m_);
    for (const auto& [lambda, c] : coeffs_)
        if (lambda.degree() == d) out.set_coeff(lambda, c);
    return out;
}

std::string SymPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [lambda, c] = *it;
        Rat a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (lambda.empty()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << ' ';
            os << "m[";
            for (int i = 1; i <= lambda.length(); ++i) {
                if (i > 1) os << ',';
                os << lambda.part(i);
            }
            os << ']';
        }
    }
    return os.str();
}

void for_each_monomial_orbit(const Partition& lambda, int m,
                             const std::function<void(const std::vector<int>&)>& fn) {
    if (lambda.length() > m) throw DomainError("partition longer than variable count");
    std::vector<int> alpha(m, 0);
    std::copy(lambda.parts().begin(), lambda.parts().end(), alpha.begin());
    std::sort(alpha.begin(), alpha.end());
    do {
        fn(alpha);
    } while (std::next_permutation(alpha.begin(), alpha.end()));
}

Int orbit_size(const Partition& lambda, int m) {
    if (lambda.length() > m) throw DomainError("partition longer than variable count");
    Int size;
    mpz_fac_ui(size.get_mpz_t(), m);
    std::map<int, int> mult;
    for (int i = 1; i <= m; ++i) mult[lambda.part(i)] += 1;
    for (const auto& [value, count] : mult) {
        Int f;
        mpz_fac_ui(f.get_mpz_t(), count);
        size /= f;
    }
    return size;
}

SymPoly apply_epsilon(const SymPoly& f) {
    const int m = f.vars();
    RawPoly raw = expand_raw(f);
    RawPoly out;
    for (const auto& [alpha, c] : raw)
        for (int i = 0; i < m; ++i) {
            if (alpha[i] == 0) continue;
            std::vector<int> beta = alpha;
            beta[i] -= 1;
            raw_add(out, beta, c * alpha[i]);
        }
    return collect_raw(out, m);
}

namespace {

// Shared core for apply_delta0 / apply_delta. include_lowering adds the
// degree-lowering terms scaled by n (unused when false).
SymPoly delta_impl(const SymPoly& f, bool full, int n) {
    const int m = f.vars();
    RawPoly raw = expand_raw(f);
    RawPoly out;

    // sum_i y_i^2 d2/dy_i^2 keeps each exponent, with factor a(a-1)
    for (const auto& [alpha, c] : raw)
        for (int i = 0; i < m; ++i)
            if (alpha[i] >= 2) raw_add(out, alpha, c * Rat(alpha[i]) * (alpha[i] - 1));

    // sum_{i != j} y_i^2 (y_i - y_j)^{-1} d/dy_i as exact divided differences
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) raw_add(out, raw_divided_pair(raw, i, j, 2));

    if (full) {
        const Rat scale = frac(n - 2 * f.vars() + 2, 2);  // n/2 - m + 1
        for (const auto& [alpha, c] : raw) {
            int total = 0;
            for (int i = 0; i < m; ++i) total += alpha[i];
            if (total) raw_add(out, alpha, c * scale * total);  // sum_i y_i d/dy_i
            for (int i = 0; i < m; ++i) {
                if (alpha[i] == 0) continue;
                std::vector<int> beta = alpha;
                beta[i] -= 1;
                // -sum_i y_i d2/dy_i^2 and -(1/2) sum_i d/dy_i
                Rat factor = -Rat(alpha[i]) * (alpha[i] - 1) - frac(alpha[i], 2);
                raw_add(out, beta, c * factor);
            }
        }
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                RawPoly pair = raw_divided_pair(raw, i, j, 1);
                for (const auto& [alpha, c] : pair) raw_add(out, alpha, -c);
            }
    }
    return collect_raw(out, m);
}

}  // namespace

SymPoly apply_delta0(const SymPoly& f) { return delta_impl(f, false, 0); }

SymPoly apply_delta(const SymPoly& f, int n) {
    if (n < 2 * f.vars()) throw DomainError("apply_delta requires n >= 2m");
    return delta_impl(f, true, n);
}

}  // namespace grasslp
