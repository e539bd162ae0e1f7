#pragma once

#include <string>
#include <vector>

#include "equiquot/char_table.hpp"
#include "equiquot/cyclotomic.hpp"
#include "equiquot/group.hpp"

namespace equiquot {

using CycMat = std::vector<std::vector<Cyclotomic>>;

CycMat cyc_identity(int n);
CycMat cyc_mul(const CycMat& a, const CycMat& b);
bool cyc_eq(const CycMat& a, const CycMat& b);
/// Rank of a list of row vectors over the cyclotomic field.
int cyc_rank(std::vector<std::vector<Cyclotomic>> rows);

/// A matrix representation with one invertible matrix per group element;
/// multiplicativity is verified on generator * element pairs at
/// construction (complete by induction on word length).
struct MatRep {
    GroupPtr group;
    int dim = 0;
    std::vector<CycMat> images;   ///< per element index

    ClassFunction character() const;
};

/// Builds a representation from generator images.
MatRep mat_rep(GroupPtr G, const std::vector<CycMat>& generator_images);
/// G on k[G] by left translation (permutation matrices).
MatRep regular_rep(GroupPtr G);
/// N <= G acting on k[G] by left translation.
MatRep left_translation_rep(GroupPtr G, GroupPtr N);

/// An algebra given by structure constants; associativity and unitality are
/// verified on all basis triples at construction. The optional H-action is
/// a basis permutation per H-element, verified to be by automorphisms.
struct FinAlgebra {
    int dim = 0;
    std::vector<std::string> labels;
    /// products[i][j] = sparse expansion of b_i * b_j
    std::vector<std::vector<std::vector<std::pair<int, Cyclotomic>>>> products;
    std::vector<std::pair<int, Cyclotomic>> unit;   ///< expansion of 1
    std::vector<std::vector<int>> h_basis_action;   ///< optional, may be empty
    std::vector<CycMat> matrix_basis;               ///< set when built from matrices

    void verify() const;
};

/// The commutant End_N(V) of a representation of N, with structure
/// constants in a reduced-echelon matrix basis. The opposite-algebra flip
/// of the source material is NOT applied here; callers that need the
/// opposite convention must flip explicitly.
FinAlgebra commutant(const MatRep& rho);

/// O(H) * G with basis delta_h (x) g and product
/// (phi (x) g)(phi' (x) g') = (phi * R_{pi(g)} phi') (x) gg'.
/// Carries the H-action by left translation on the O(H) factor.
FinAlgebra skew_group_algebra(const ExactSequence& seq);

/// Structured record of the checks certifying that xi(delta_h (x) g),
/// the composition of right translation by g and multiplication by the
/// pulled-back delta function, is an H-equivariant algebra isomorphism
/// from O(H) * G onto End_N(O(G)).
struct XiProof {
    std::string sequence_name;
    int skew_dim = 0;              ///< |H| * |G|
    int commutant_dim = 0;         ///< dim End_N(O(G)), solved independently
    long long expected_dim = 0;    ///< |H|^2 * |N|
    bool multiplicative = false;   ///< on all basis pairs
    bool injective = false;        ///< image rank equals skew_dim
    bool lands_in_commutant = false;
    bool h_equivariant = false;    ///< L_h xi(a) L_h^{-1} = xi(h . a)
    bool pass = false;
};

XiProof verify_xi(const ExactSequence& seq);

/// Checks for the mod-n Heisenberg group: irreducibility of the induced
/// representation V from a faithful central character, bijectivity of
/// k[G]/I_zeta -> End(V), and the cyclic presentation of the twisted
/// quotient (l l' = zeta^{-1} l' l with l^n = l'^n = 1).
struct HeisenbergProof {
    int n = 0;
    long long induced_degree = 0;
    Rational inner_product = 0;      ///< <chi_V, chi_V>, must be 1
    bool irreducible = false;
    bool quotient_matches_endo = false;   ///< rank n^2 onto End(V)
    bool cyclic_presentation = false;
    bool pass = false;
};

HeisenbergProof verify_heisenberg_lemma(int n);

} // namespace equiquot
