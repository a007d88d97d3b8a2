#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "grasslp/rational.hpp"

namespace grasslp {

/// Integer partition: weakly decreasing non-negative parts, trailing zeros
/// stripped so every mathematical object has exactly one representation.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int degree() const;
    bool empty() const { return parts_.empty(); }

    /// i-th part, 1-based; 0 beyond the length.
    int part(int i) const;
    const std::vector<int>& parts() const { return parts_; }

    /// Containment order: this_i >= other_i for all i.
    bool contains(const Partition& other) const;

    /// Graded lexicographic total order: degree first, then ascending lex.
    /// This order fixes every matrix row/column layout in the library.
    std::strong_ordering operator<=>(const Partition& o) const;
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    std::string to_string() const;  // "(2,1)", "()" for the empty partition

private:
    std::vector<int> parts_;
};

/// Indices i where part i can be raised by one: {1} plus {i : k_{i-1} > k_i},
/// capped at m.
std::vector<int> u_set(const Partition& kappa, int m);

/// Indices i where part i can be lowered by one: {i : k_i > k_{i+1}}.
std::vector<int> d_set(const Partition& kappa);

/// kappa with part i incremented; throws DomainError when i is not in u_set.
Partition raise_part(const Partition& kappa, int i, int m);

/// kappa with part i decremented; throws DomainError when i is not in d_set.
Partition lower_part(const Partition& kappa, int i);

/// q_i = 2*kappa_i - i + m for i = 1..m; strictly decreasing.
std::vector<int> q_values(const Partition& kappa, int m);

/// All partitions with length <= m and degree <= k, in graded-lex order.
struct PartitionIndexSet {
    int m = 0;
    int k = 0;
    std::vector<Partition> list;
    /// degree_begin[d] = offset of the first degree-d entry; size k+2.
    std::vector<int> degree_begin;

    int total() const { return static_cast<int>(list.size()); }
    int count_of_degree(int d) const;
    /// Position in the global order, -1 if absent.
    int index_of(const Partition& kappa) const;
};

PartitionIndexSet enumerate_partitions(int m, int k);

/// Partitions of exactly degree d with length <= m, ascending lex.
std::vector<Partition> partitions_of_degree(int m, int d);

/// Weyl dimension of the GL(r) module indexed by kappa:
/// prod_{1<=i<j<=r} (k_i - k_j + j - i)/(j - i).
Int dim_gl(const Partition& kappa, int r);

/// Multiplicative step d_{2 kappa^{(i)}} / d_{2 kappa} for the dimension of
/// the O(n) module V_n^{2 kappa}, with q_i and N = n - 2m as in q_values.
Rat dim_on_ratio(const Partition& kappa, int i, int m, int n);

/// Dimension of V_n^{2 kappa}, computed by multiplying dim_on_ratio along a
/// raising path from the empty partition. Input is 2*kappa (even parts).
/// Throws InternalConsistencyError when the product is not an integer.
Int dim_on(const Partition& two_kappa, int m, int n);

}  // namespace grasslp
