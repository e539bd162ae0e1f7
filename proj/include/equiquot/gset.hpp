#pragma once

#include <random>
#include <string>
#include <vector>

#include "equiquot/group.hpp"

namespace equiquot {

/// A finite G-set with labeled points and a dense action table, one row per
/// group element. The axioms are verified exhaustively at construction.
class GSet {
public:
    GSet() = default;
    /// Action given on generators only; extended along the closure.
    GSet(GroupPtr group, std::vector<std::string> labels,
         const std::vector<std::vector<int>>& generator_action);
    /// Full table, one row per group element (element order of the group).
    static GSet from_full_table(GroupPtr group, std::vector<std::string> labels,
                                std::vector<std::vector<int>> table);

    const GroupPtr& group() const { return group_; }
    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int x) const { return labels_[x]; }
    /// Image of point x under group element index g.
    int act(int g, int x) const { return table_[g][x]; }
    const std::vector<std::vector<int>>& table() const { return table_; }

private:
    GroupPtr group_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> table_;

    void verify() const;
};

std::vector<std::vector<int>> orbits(const GSet& X);
PermGroup stabilizer(const GSet& X, int x);
/// Least point of each orbit, in increasing order.
std::vector<int> quotient(const GSet& X);

GSet trivial_gset(GroupPtr G, std::vector<std::string> labels);
/// G acting on itself by left translation.
GSet left_translation_gset(GroupPtr G);
/// Left multiplication on cosets G/K.
GSet coset_gset(GroupPtr G, const PermGroup& K);
/// The natural action of G (a subgroup of Sigma_degree) on {0,...,degree-1}.
GSet natural_gset(GroupPtr G, std::vector<std::string> labels = {});
GSet disjoint_union(const GSet& A, const GSet& B);
/// X^n with labels over `alphabet`, under a group of degree n permuting the
/// coordinates.
GSet power_gset(GroupPtr G, const std::vector<std::string>& alphabet, int n);

/// Points (g,x) with g*x = x; the group acts by conjugation on g and by the
/// original action on x.
GSet inertia(const GSet& X);

struct ExtendedQuotient {
    int size = 0;                      ///< orbit count of the inertia set
    int class_formula_size = 0;       ///< sum over [g] of |X^g / Z(g)|
    std::vector<std::vector<int>> inertia_orbits;
};
/// Both counts are computed and must agree; throws on mismatch.
ExtendedQuotient extended_quotient(const GSet& X);

/// G x_K Y for K <= G.
GSet induce(GroupPtr G, const PermGroup& K, const GSet& Y);

struct Stratum {
    GroupPtr N;        ///< the common stabilizer
    GroupPtr G_norm;   ///< normalizer of N in G
    GroupPtr H;        ///< G_norm / N
    ExactSequence seq;
    GSet Y;            ///< points with stabilizer exactly N, as a G_norm-set
};
/// One stratum per conjugacy class of occurring point stabilizers.
std::vector<Stratum> stratify(const GSet& X);

/// An element of the toy equivariant Grothendieck ring: a formal Z-linear
/// combination of symbols {pt}^K, with K canonicalized up to isomorphism at
/// small order and by (name, order) beyond.
struct K0Class {
    std::vector<std::pair<GroupPtr, long long>> terms;

    K0Class& add_term(GroupPtr K, long long coeff);
    K0Class operator+(const K0Class& o) const;
    K0Class operator*(const K0Class& o) const;   ///< {pt}^K * {pt}^L = {pt}^{KxL}
    /// Term-by-term equality up to group identity.
    bool operator==(const K0Class& o) const;
    std::string to_string() const;
};

K0Class k0_point(GroupPtr K);
K0Class k0_class(const GSet& X);
/// iner {pt}^K = sum over [g] in C(K) of {pt}^{Z(g)}, extended linearly.
K0Class iner_k0(const K0Class& c);
long long gamma(const K0Class& c);
/// gamma(iner^m(k0_class(X))); m = 1 gives |X /^ex G|.
long long orbifold_euler(const GSet& X, int m);

/// Random disjoint union of coset G-sets, at most max_points points.
GSet random_gset(GroupPtr G, int max_points, std::mt19937& rng);

} // namespace equiquot
