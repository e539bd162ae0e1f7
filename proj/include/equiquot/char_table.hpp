#pragma once

#include <vector>

#include "equiquot/cyclotomic.hpp"
#include "equiquot/group.hpp"

namespace equiquot {

/// A class function on a group, one exact cyclotomic value per conjugacy
/// class (in the group's fixed class order).
struct ClassFunction {
    GroupPtr group;
    std::vector<Cyclotomic> values;

    const Cyclotomic& at_class(int c) const { return values[c]; }
    Cyclotomic at_element(int e) const { return values[group->class_of(e)]; }
    bool operator==(const ClassFunction& o) const;
};

/// The complex character table, computed exactly by the Burnside-Dixon
/// method (modular eigenvector computation plus discrete-log lifting).
/// Rows are sorted by degree, then lexicographically on values; both
/// orthogonality relations are verified exactly before returning.
struct CharTable {
    GroupPtr group;
    std::vector<ClassFunction> rows;
    std::vector<long long> degrees;

    int num_irreducibles() const { return static_cast<int>(rows.size()); }
};

CharTable character_table(GroupPtr G);

ClassFunction trivial_character(GroupPtr G);
ClassFunction regular_character(GroupPtr G);

/// chi a class function on a group containing N's elements.
ClassFunction restrict_cf(const ClassFunction& chi, GroupPtr N);
/// chi on K with K <= G.
ClassFunction induce_char(const ClassFunction& chi, GroupPtr G);
/// (1/|G|) sum over g of a(g) * conj(b(g)); rational for characters.
Rational inner(const ClassFunction& a, const ClassFunction& b);

/// Multiplicity of row w of `sub` in restrict_cf(chi, sub.group).
long long restriction_multiplicity(const ClassFunction& chi, const CharTable& sub, int w);

/// action[h] = permutation of the rows of `tn` (the table of seq.N) under
/// chi -> (g -> chi(lift(h)^{-1} g lift(h))). Independent of the lift.
std::vector<std::vector<int>> h_action_on_irr(const ExactSequence& seq, const CharTable& tn);

/// action[h] = permutation of C(N) under n -> lift(h) n lift(h)^{-1}.
std::vector<std::vector<int>> h_action_on_classes(const ExactSequence& seq);

/// e_W = (deg W / |N|) sum_g chi_W(g^{-1}) g, one coefficient vector per row
/// of the table, indexed by group element.
std::vector<std::vector<Cyclotomic>> central_idempotents(const CharTable& t);

} // namespace equiquot
