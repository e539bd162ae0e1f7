#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "equiquot/perm.hpp"

namespace equiquot {

struct ConjugacyClass {
    int representative = 0;        ///< index of the least member
    std::vector<int> members;      ///< sorted element indices
};

/// A finite permutation group with a fully enumerated, lexicographically
/// sorted element list. All canonical choices (class representatives,
/// coset labels) use the least element in this ordering.
class PermGroup {
public:
    PermGroup() = default;
    PermGroup(int degree, std::vector<Perm> generators, std::string name = "");

    int degree() const { return degree_; }
    int order() const { return static_cast<int>(elements_.size()); }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    const std::vector<Perm>& generators() const { return generators_; }
    const std::vector<Perm>& elements() const { return elements_; }
    const Perm& element(int i) const { return elements_[i]; }

    /// -1 when the permutation is not an element.
    int index_of(const Perm& p) const;
    bool contains(const Perm& p) const { return index_of(p) >= 0; }
    int identity_index() const { return identity_index_; }

    int mult(int i, int j) const { return index_of(elements_[i] * elements_[j]); }
    int inv(int i) const { return index_of(elements_[i].inverse()); }
    int element_order(int i) const { return elements_[i].order(); }
    int exponent() const;

    const std::vector<ConjugacyClass>& conjugacy_classes() const;
    int class_of(int element_index) const;
    /// Class of the inverse of a representative of class c.
    int inverse_class(int c) const;

    std::vector<int> minimal_generating_indices() const;

private:
    int degree_ = 0;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;
    std::string name_;
    int identity_index_ = 0;
    std::unordered_map<Perm, int, PermHash> index_;
    mutable std::vector<ConjugacyClass> classes_;
    mutable std::vector<int> class_of_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

/// Homomorphism given by its full element-level table; validated on
/// construction against the whole multiplication table.
struct GroupHom {
    GroupPtr source;
    GroupPtr target;
    std::vector<int> images;   ///< source element index -> target element index

    GroupHom() = default;
    GroupHom(GroupPtr src, GroupPtr tgt, std::vector<int> imgs);
};

/// 1 -> N -> G -> H -> 1 with N realized as a subgroup of G and H as the
/// coset permutation group.
struct ExactSequence {
    GroupPtr N;
    GroupPtr G;
    GroupPtr H;
    GroupHom inclusion;
    GroupHom projection;
    std::vector<int> section;  ///< H element index -> least G-element preimage
    std::string name;

    void validate() const;
};

// -- subgroup machinery ------------------------------------------------------

PermGroup subgroup_generated(int degree, const std::vector<Perm>& gens,
                             std::string name = "");
bool is_subgroup_of(const PermGroup& K, const PermGroup& G);
bool is_normal_in(const PermGroup& N, const PermGroup& G);
PermGroup centralizer(const PermGroup& G, const Perm& g);
PermGroup normalizer(const PermGroup& G, const PermGroup& K);
PermGroup intersection(const PermGroup& A, const PermGroup& B);
/// Conjugacy of subgroups inside G, by exhaustive search over G.
bool conjugate_subgroups(const PermGroup& G, const PermGroup& A, const PermGroup& B);

/// Quotient of G by a normal subgroup N, as the action on left cosets.
ExactSequence quotient_sequence(const PermGroup& G, const PermGroup& N,
                                std::string name = "");

// -- constructions -----------------------------------------------------------

PermGroup symmetric_group(int n);
PermGroup cyclic_group(int n);
PermGroup trivial_group(int degree = 1);
PermGroup direct_product(const PermGroup& A, const PermGroup& B);
/// n-fold direct power acting on n disjoint copies of T's domain.
PermGroup direct_power(const PermGroup& T, int n);

/// action[h][i] = image of N-element i under the automorphism attached to
/// H-element h. Verified to be a homomorphism H -> Aut(N).
ExactSequence semidirect_product(const PermGroup& N, const PermGroup& H,
                                 const std::vector<std::vector<int>>& action,
                                 std::string name = "");

ExactSequence wreath_product(const PermGroup& T, int n, std::string name = "");

struct HeisenbergGroup {
    ExactSequence seq;
    Perm x, y, z;   ///< z = [x,y] generates the center
};
/// Unitriangular 3x3 matrices over Z/n, acting on themselves by translation.
HeisenbergGroup heisenberg_group(int n);

/// N = (Z/n)^3 with H = (Z/n)^2 acting by unitriangular matrices
/// (v1,v2,v3) -> (v1 + a*v2 + b*v3, v2, v3).
ExactSequence exs0_sequence(int n);

/// Split sequence 1 -> 2T -> 2T x| A4 -> A4 -> 1, where 2T is the binary
/// tetrahedral group (the unit Hurwitz quaternions) and A4 = 2T/{+-1} acts
/// by conjugation through lifts.
ExactSequence a4_cover_sequence();

// -- isomorphism -------------------------------------------------------------

/// Brute-force generator-image search; intended for orders <= 64.
bool isomorphic(const PermGroup& A, const PermGroup& B);

/// Canonicalization rule for K0 bookkeeping: isomorphism search up to
/// order 64, name+order comparison beyond.
bool same_group_identity(const PermGroup& A, const PermGroup& B);

} // namespace equiquot
