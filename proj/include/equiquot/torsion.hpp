#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "equiquot/cyclotomic.hpp"   // BigInt

namespace equiquot {

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<BigInt>> entries;   ///< row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries(r, std::vector<BigInt>(c, 0)) {}
    static IntMatrix identity(int n);

    BigInt& at(int i, int j) { return entries[i][j]; }
    const BigInt& at(int i, int j) const { return entries[i][j]; }
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && entries == o.entries;
    }
    bool is_zero() const;
};

/// Determinant by fraction-free elimination.
BigInt determinant(const IntMatrix& a);

struct SnfResult {
    IntMatrix U, D, V;
};

/// U*A*V = D diagonal with d1 | d2 | ..., U and V unimodular. All three
/// postconditions are verified exactly before returning.
SnfResult smith_normal_form(const IntMatrix& a);

/// Columns form a basis of the integer kernel lattice of A.
IntMatrix kernel_lattice(const IntMatrix& a);

/// X with A*X = B over the integers, when it exists.
std::optional<IntMatrix> solve_exact(const IntMatrix& a, const IntMatrix& b);

/// Canonical form of a finitely generated abelian group.
struct FgAbGroup {
    long long free_rank = 0;
    std::vector<BigInt> invariant_factors;   ///< d1 | d2 | ..., each >= 2

    static FgAbGroup free(long long r);
    static FgAbGroup cyclic(const BigInt& n);

    /// Generators: torsion generators first, then free generators; relation
    /// matrix is the diagonal of invariant factors padded with free rows.
    IntMatrix presentation() const;
    int num_generators() const {
        return static_cast<int>(invariant_factors.size()) + static_cast<int>(free_rank);
    }
    bool is_torsion_free() const { return invariant_factors.empty(); }
    bool operator==(const FgAbGroup& o) const {
        return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
    }
    std::string to_string() const;
};

/// Z^rows modulo the column span of the relation matrix.
FgAbGroup cokernel(const IntMatrix& relations);
FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

/// The torsion order, prod of invariant factors. All of the inequalities
/// below are order inequalities (the multiplicative form of the additive
/// log-based measure).
BigInt tau(const FgAbGroup& a);

/// The subgroup of cokernel(relations) generated by the columns of gens.
FgAbGroup subgroup_from_generators(const IntMatrix& relations, const IntMatrix& gens);

/// Extension of quot by sub: generators stacked, with coupling mapping each
/// relation of quot to an element of sub (any integer coupling yields a
/// genuine extension). coupling is num_generators(sub) x num_relations(quot).
FgAbGroup extension_group(const FgAbGroup& sub, const FgAbGroup& quot,
                          const IntMatrix& coupling);

/// Verdicts for the four torsion-order inequalities:
///   (i)   subgroups: tau(B) <= tau(A)
///   (ii)  surjections that are rational isomorphisms: tau(B) <= tau(A),
///         with equality exactly when the kernel is trivial
///   (iii) extensions: tau(A) <= tau(A') * tau(A'')
///   (iv)  finite filtrations: tau(A) <= prod_i tau(gr_i A)
struct Tau0Proof {
    BigInt tau_ambient = 1, tau_sub = 1, tau_quotient = 1;
    bool kernel_trivial = false;
    BigInt tau_extension = 1, tau_pieces_product = 1;
    bool subgroup_ineq = false;
    bool surjection_ineq = false;
    bool equality_iff_injective = false;
    bool extension_ineq = false;
    bool filtration_ineq = false;
    bool pass = false;
};

/// ambient: relation matrix of A; sub_gens: generators of a subgroup for (i);
/// extra: additional relations for the surjection of (ii), required to lie in
/// the rational span of ambient (throws otherwise); pieces and couplings
/// build the filtered group for (iii) and (iv).
Tau0Proof tau0_checks(const IntMatrix& ambient, const IntMatrix& sub_gens,
                      const IntMatrix& extra, const std::vector<FgAbGroup>& pieces,
                      const std::vector<IntMatrix>& couplings);

Tau0Proof random_tau0_instance(std::mt19937& rng);

/// Integer cohomology data with finite support.
struct GradedGroup {
    std::map<int, FgAbGroup> degrees;

    FgAbGroup at(int i) const;
    int max_degree() const;
    BigInt tau_even() const;
    BigInt tau_odd() const;
    long long rank(int i) const;
};

/// { "degrees": { "0": {"rank":1,"torsion":[]}, "2": {"rank":10,"torsion":[2]} } }
GradedGroup graded_from_json(const std::string& text);
std::string graded_to_json(const GradedGroup& g);

/// One page of a first-quadrant-style spectral sequence with at most one
/// round of installed differentials d_r: (i,j) -> (i+r, j-r+1).
struct SSPage {
    std::map<std::pair<int, int>, FgAbGroup> grid;
    int differential_round = 0;   ///< 0 when no differentials installed
    /// matrix per source position, on canonical generators of the entries
    std::map<std::pair<int, int>, IntMatrix> differentials;

    FgAbGroup diagonal(int p) const;
    BigInt diagonal_tau(int p) const;
    std::vector<int> diagonals() const;
};

/// Even rows carry H, odd rows vanish; rows are laid out so that total
/// degrees 0 and 1 each see one full period of the even and odd parts.
SSPage ah_e2(const GradedGroup& h);

/// Rows j = 2r, each a copy of the base cohomology, for r = 0..rmax.
/// rmax defaults to d-1, the cohomology range of a projective-space fiber
/// of relative dimension d-1; the endpoint is an explicit parameter.
SSPage leray_e2_projective_fibers(const GradedGroup& h_base, int d, int rmax = -1);

struct TurnResult {
    SSPage page;                        ///< differentials consumed
    std::vector<int> dropped_diagonals; ///< strict torsion decrease
};

/// Replaces every entry by its homology (kernel of the outgoing map modulo
/// image of the incoming one). Requires every differential to be rationally
/// trivial (images are torsion in the target), the hypothesis under which
/// the degeneration bound holds; verifies d compose d = 0 and that no
/// diagonal torsion order ever increases, throwing on violation.
TurnResult turn_page(const SSPage& page);

/// H^p(M x M') when every degree of the second factor is torsion-free
/// (throws otherwise).
GradedGroup kunneth_torsion_free(const GradedGroup& h_m, const GradedGroup& h_mprime);

/// Certifies the strict torsion bound for a fibration with projective-space
/// fibers of relative dimension d-1, given a nonzero d3 on the transgression
/// positions (0,2r) -> (3,2r-2). The K-theory comparison hypothesis is a
/// caller-asserted flag recorded verbatim, never computed.
struct FibrationAudit {
    int d = 0;
    int rows = 0;
    BigInt base_odd_tau = 1;
    BigInt bound = 1;          ///< base_odd_tau^rows, the pre-differential bound
    BigInt after_tau = 1;      ///< odd-diagonal torsion after the d3 round
    bool d3_nonzero = false;
    bool strict = false;
    std::string hypothesis;    ///< the asserted, not computed, input
    std::string conclusion;    ///< empty when not certified
    bool certified = false;
};

FibrationAudit audit_fibration_bound(const GradedGroup& h_base, int d,
                                     const IntMatrix& d3_spec, int rmax = -1);

} // namespace equiquot
