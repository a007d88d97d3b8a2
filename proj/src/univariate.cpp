#include "grasslp/univariate.hpp"

#include <algorithm>

namespace grasslp {

namespace {

// Euclidean division, both out-parameters optional.
void divmod(const RatPoly& a, const RatPoly& b, RatPoly* quot, RatPoly* rem) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rat> r = a.coeffs();
    std::vector<Rat> q(std::max<size_t>(1, r.size()), Rat(0));
    const auto& bc = b.coeffs();
    const Rat& lead = bc.back();
    const int db = b.degree();
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
        int dr = static_cast<int>(r.size()) - 1;
        Rat factor = r.back() / lead;
        q[dr - db] = factor;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= factor * bc[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    if (quot) *quot = RatPoly(std::move(q));
    if (rem) *rem = RatPoly(std::move(r));
}

RatPoly monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    std::vector<Rat> c = p.coeffs();
    Rat lead = c.back();
    for (auto& x : c) x /= lead;
    return RatPoly(std::move(c));
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r;
        divmod(a, b, nullptr, &r);
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        RatPoly r;
        divmod(chain[chain.size() - 2], chain.back(), nullptr, &r);
        chain.push_back(-r);
    }
    if (chain.back().is_zero()) chain.pop_back();
    return chain;
}

int variations(const std::vector<RatPoly>& chain, const Rat& x) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// With the zeros-dropped variation convention, V is right-continuous and
// V(a) - V(b) counts distinct roots in ]a, b] for squarefree input.
int count_halfopen(const std::vector<RatPoly>& chain, const Rat& a, const Rat& b) {
    return variations(chain, a) - variations(chain, b);
}

void isolate_rec(const std::vector<RatPoly>& chain, const Rat& a, const Rat& b,
                 const Rat& width, std::vector<RootInterval>& out) {
    int n = count_halfopen(chain, a, b);
    if (n == 0) return;
    if (n == 1) {
        Rat lo = a, hi = b;
        while (hi - lo > width) {
            Rat mid = (lo + hi) / 2;
            if (count_halfopen(chain, mid, hi) == 1)
                lo = mid;
            else
                hi = mid;
        }
        out.push_back({lo, hi});
        return;
    }
    Rat mid = (a + b) / 2;
    isolate_rec(chain, a, mid, width, out);
    isolate_rec(chain, mid, b, width, out);
}

}  // namespace

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { strip(); }

void RatPoly::strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::from_sympoly(const SymPoly& f) {
    if (f.vars() != 1) throw DomainError("from_sympoly requires a one-variable polynomial");
    std::vector<Rat> c(std::max(0, f.degree()) + 1, Rat(0));
    for (const auto& [lambda, v] : f.coeffs()) c[lambda.degree()] = v;
    return RatPoly(std::move(c));
}

Rat RatPoly::coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int RatPoly::sign_at(const Rat& x) const { return sgn(eval(x)); }

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return RatPoly(std::move(d));
}

RatPoly RatPoly::squarefree_part() const {
    if (degree() <= 0) return *this;
    RatPoly g = poly_gcd(*this, derivative());
    if (g.degree() == 0) return monic(*this);
    RatPoly q;
    divmod(*this, g, &q, nullptr);
    return monic(q);
}

RatPoly RatPoly::operator-() const {
    std::vector<Rat> c = c_;
    for (auto& x : c) x = -x;
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(c));
}

int sturm_count(const RatPoly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw DomainError("sturm_count of the zero polynomial");
    if (!(a < b)) return 0;
    auto chain = sturm_chain(p.squarefree_part());
    return count_halfopen(chain, a, b);
}

std::vector<RootInterval> isolate_roots(const RatPoly& p, const Rat& a, const Rat& b,
                                        const Rat& width) {
    if (p.is_zero()) throw DomainError("isolate_roots of the zero polynomial");
    if (width <= 0) throw DomainError("isolate_roots needs a positive width");
    std::vector<RootInterval> out;
    if (!(a < b)) return out;
    auto chain = sturm_chain(p.squarefree_part());
    isolate_rec(chain, a, b, width, out);
    return out;
}

bool nonpositive_on(const RatPoly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) return true;
    if (a > b) throw DomainError("nonpositive_on: empty interval");
    if (sgn(p.eval(a)) > 0 || sgn(p.eval(b)) > 0) return false;
    if (a == b) return true;

    RatPoly sp = p.squarefree_part();
    RatPoly d = p.derivative();
    if (d.is_zero()) return true;  // constant, already checked at a
    RatPoly g = poly_gcd(sp, d.squarefree_part());
    auto sp_chain = sturm_chain(sp);
    auto g_chain = g.degree() >= 1 ? sturm_chain(g) : std::vector<RatPoly>{};

    // The maximum over [a, b] sits at an endpoint or a critical point; decide
    // the sign of p at each critical point by interval refinement.
    for (const auto& iv : isolate_roots(d, a, b, (b - a) / 16)) {
        Rat lo = iv.lo, hi = iv.hi;
        auto d_chain = sturm_chain(d.squarefree_part());
        while (true) {
            bool common = !g_chain.empty() && count_halfopen(g_chain, lo, hi) >= 1;
            if (common) break;  // p vanishes at this critical point
            if (count_halfopen(sp_chain, lo, hi) == 0 && sp.sign_at(lo) != 0) {
                if (p.sign_at(lo) > 0) return false;
                break;
            }
            Rat mid = (lo + hi) / 2;
            if (count_halfopen(d_chain, mid, hi) == 1)
                lo = mid;
            else
                hi = mid;
        }
    }
    return true;
}

}  // namespace grasslp
