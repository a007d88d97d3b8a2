#include "grasslp/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace grasslp {

namespace {

void validate_and_strip(std::vector<int>& parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw DomainError("partition parts must be non-negative");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
    validate_and_strip(parts_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    validate_and_strip(parts_);
}

int Partition::degree() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

int Partition::part(int i) const {
    if (i < 1) throw DomainError("partition part index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i)
        if (parts_[i] < other.parts_[i]) return false;
    return true;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    int n = std::max(length(), o.length());
    for (int i = 1; i <= n; ++i)
        if (auto c = part(i) <=> o.part(i); c != 0) return c;
    return std::strong_ordering::equal;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < length(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

std::vector<int> u_set(const Partition& kappa, int m) {
    std::vector<int> u;
    for (int i = 1; i <= m; ++i)
        if (i == 1 || kappa.part(i - 1) > kappa.part(i)) u.push_back(i);
    return u;
}

std::vector<int> d_set(const Partition& kappa) {
    std::vector<int> d;
    for (int i = 1; i <= kappa.length(); ++i)
        if (kappa.part(i) > kappa.part(i + 1)) d.push_back(i);
    return d;
}

Partition raise_part(const Partition& kappa, int i, int m) {
    if (i < 1 || i > m || !(i == 1 || kappa.part(i - 1) > kappa.part(i)))
        throw DomainError("index " + std::to_string(i) + " not admissible for raising " +
                          kappa.to_string());
    std::vector<int> parts(kappa.parts());
    parts.resize(std::max<size_t>(parts.size(), i), 0);
    parts[i - 1] += 1;
    return Partition(std::move(parts));
}

Partition lower_part(const Partition& kappa, int i) {
    if (i < 1 || !(kappa.part(i) > kappa.part(i + 1)))
        throw DomainError("index " + std::to_string(i) + " not admissible for lowering " +
                          kappa.to_string());
    std::vector<int> parts(kappa.parts());
    parts[i - 1] -= 1;
    return Partition(std::move(parts));
}

std::vector<int> q_values(const Partition& kappa, int m) {
    if (kappa.length() > m) throw DomainError("partition longer than m");
    std::vector<int> q(m);
    for (int i = 1; i <= m; ++i) q[i - 1] = 2 * kappa.part(i) - i + m;
    return q;
}

int PartitionIndexSet::count_of_degree(int d) const {
    if (d < 0 || d > k) return 0;
    return degree_begin[d + 1] - degree_begin[d];
}

int PartitionIndexSet::index_of(const Partition& kappa) const {
    auto it = std::lower_bound(list.begin(), list.end(), kappa);
    if (it == list.end() || !(*it == kappa)) return -1;
    return static_cast<int>(it - list.begin());
}

std::vector<Partition> partitions_of_degree(int m, int d) {
    std::vector<Partition> out;
    std::vector<int> parts;
    // descending parts, recursive fill
    auto rec = [&](auto&& self, int remaining, int maxpart, int slots) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        if (slots == 0) return;
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p, slots - 1);
            parts.pop_back();
        }
    };
    rec(rec, d, d, m);
    std::sort(out.begin(), out.end());
    return out;
}

PartitionIndexSet enumerate_partitions(int m, int k) {
    if (m < 1 || k < 0) throw DomainError("enumerate_partitions requires m >= 1, k >= 0");
    PartitionIndexSet set;
    set.m = m;
    set.k = k;
    set.degree_begin.assign(k + 2, 0);
    for (int d = 0; d <= k; ++d) {
        set.degree_begin[d] = static_cast<int>(set.list.size());
        auto level = partitions_of_degree(m, d);
        set.list.insert(set.list.end(), level.begin(), level.end());
    }
    set.degree_begin[k + 1] = static_cast<int>(set.list.size());
    return set;
}

Int dim_gl(const Partition& kappa, int r) {
    if (kappa.length() > r) throw DomainError("dim_gl: partition longer than rank");
    Rat prod = 1;
    for (int i = 1; i < r; ++i)
        for (int j = i + 1; j <= r; ++j)
            prod *= frac(kappa.part(i) - kappa.part(j) + j - i, j - i);
    prod.canonicalize();
    if (prod.get_den() != 1)
        throw InternalConsistencyError("dim_gl produced a non-integer for " + kappa.to_string());
    return prod.get_num();
}

Rat dim_on_ratio(const Partition& kappa, int i, int m, int n) {
    if (n < 2 * m) throw DomainError("dim_on_ratio requires n >= 2m");
    auto q = q_values(kappa, m);
    if (i < 1 || i > m) throw DomainError("dim_on_ratio: bad index");
    const int N = n - 2 * m;
    const int qi = q[i - 1];
    Rat ratio = 1;
    for (int j = 1; j <= m; ++j) {
        if (j == i) continue;
        const int qj = q[j - 1];
        ratio *= frac(qi - qj + 2, qi - qj);
        ratio *= frac(qi + qj + N + 2, qi + qj + N);
    }
    // Final factor; at q_i = 0 the cancelled form (N+4)(N+1)/2 is the correct
    // continuation (it reproduces the classical harmonic dimensions, e.g.
    // dim = 9 for the degree-2 harmonics of R^4).
    if (qi == 0) {
        ratio *= frac((N + 4) * (N + 1), 2);
    } else {
        ratio *= frac(2 * qi + N + 4, 2 * qi + N);
        ratio *= frac((qi + N) * (qi + N + 1), (qi + 1) * (qi + 2));
    }
    ratio.canonicalize();
    return ratio;
}

namespace {

struct DimOnKey {
    int m, n;
    std::vector<int> parts;
    bool operator<(const DimOnKey& o) const {
        return std::tie(m, n, parts) < std::tie(o.m, o.n, o.parts);
    }
};

std::map<DimOnKey, Int> g_dim_on_cache;
std::mutex g_dim_on_mutex;

Rat dim_on_rec(const Partition& kappa, int m, int n) {
    if (kappa.empty()) return 1;
    {
        std::lock_guard lock(g_dim_on_mutex);
        auto it = g_dim_on_cache.find({m, n, kappa.parts()});
        if (it != g_dim_on_cache.end()) return Rat(it->second);
    }
    const int i = d_set(kappa).back();  // lower the smallest lowerable part
    Partition below = lower_part(kappa, i);
    Rat value = dim_on_rec(below, m, n) * dim_on_ratio(below, i, m, n);
    value.canonicalize();
    if (value.get_den() != 1)
        throw InternalConsistencyError("dim_on produced a non-integer for 2*" +
                                       kappa.to_string() + " with n=" + std::to_string(n));
    {
        std::lock_guard lock(g_dim_on_mutex);
        g_dim_on_cache.emplace(DimOnKey{m, n, kappa.parts()}, Int(value.get_num()));
    }
    return value;
}

}  // namespace

Int dim_on(const Partition& two_kappa, int m, int n) {
    if (two_kappa.length() > m) throw DomainError("dim_on: partition longer than m");
    if (n < 2 * m) throw DomainError("dim_on requires n >= 2m");
    std::vector<int> halved(two_kappa.parts());
    for (int& p : halved) {
        if (p % 2) throw DomainError("dim_on expects a partition with even parts");
        p /= 2;
    }
    return dim_on_rec(Partition(std::move(halved)), m, n).get_num();
}

}  // namespace grasslp
