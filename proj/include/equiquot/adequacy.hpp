#pragma once

#include <string>
#include <vector>

#include "equiquot/char_table.hpp"
#include "equiquot/group.hpp"
#include "equiquot/gset.hpp"

namespace equiquot {

/// Outcome of the extension feasibility search: non-negative integers m_i
/// with sum_i m_i * mult(W, Res chi_i) = 1 for every irreducible W of N.
struct ExtensionWitness {
    bool exists = false;
    /// One multiplicity per row of character_table(G); empty when !exists.
    std::vector<long long> multiplicities;
};

ExtensionWitness extension_exists(const ExactSequence& seq);

/// The obstruction class vanishes exactly when the full sum of irreducibles
/// of N extends to G (decidable over an algebraically closed base field).
bool theta_vanishes(const ExactSequence& seq);

/// Stabilizer census of one H-action: for each orbit, the order of the
/// point stabilizer in H and the orbit size.
struct OrbitCensus {
    std::vector<std::pair<int, int>> entries;   ///< (stabilizer order, orbit size), sorted
};

struct ConditionIII {
    bool pass = false;
    OrbitCensus class_side;   ///< H-orbits on conjugacy classes of N
    OrbitCensus char_side;    ///< H-orbits on irreducibles of N
};

/// Equality of the two stabilizer-type multisets (up to conjugacy in H).
ConditionIII condition_iii(const ExactSequence& seq);

struct S0Report {
    std::string sequence_name;
    std::string cond_i = "assumed: base field algebraically closed of characteristic zero";
    bool cond_ii = false;
    std::vector<long long> witness;
    ConditionIII cond_iii;
    bool in_s0 = false;
};

S0Report in_s0(const ExactSequence& seq);

struct AdequacyReport {
    bool adequate = false;
    std::vector<S0Report> strata;
    /// Asserted as a certified consequence when adequate; empty otherwise.
    std::string conclusion;
};

/// Checks every stabilizer-type sequence 1 -> N_x -> Norm(N_x) -> H_x -> 1.
AdequacyReport is_s0_adequate(const GSet& X);

struct ComponentsReport {
    int count = 0;                       ///< |Irr(N)/H|
    std::vector<int> quotient_sizes;     ///< |X/H_r| per orbit representative
};

/// Decomposition count for a free H-set X when conditions (i) and (ii) hold.
ComponentsReport components_free_case(const ExactSequence& seq, const GSet& X);

} // namespace equiquot
