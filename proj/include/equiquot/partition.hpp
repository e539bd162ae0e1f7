#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equiquot/group.hpp"

namespace equiquot {

/// A partition of n in multiplicity form: multiplicities[i-1] parts of
/// size i, so n = sum i * multiplicities[i-1]. Trailing zeros trimmed.
struct Partition {
    std::vector<int> multiplicities;

    int n() const;
    int count_parts() const;
    bool operator==(const Partition& o) const { return multiplicities == o.multiplicities; }
    bool operator<(const Partition& o) const;
    std::string to_string() const;
};

/// All partitions of n, in a fixed canonical order.
std::vector<Partition> partitions(int n);

/// The block-cyclic representative of the conjugacy class attached to a
/// partition: n1 fixed points, then n2 2-cycles on consecutive pairs, etc.
Perm g_of_partition(const Partition& p);

Partition cycle_type(const Perm& g);

/// |Z(g_p)| = prod_i i^{n_i} * n_i!
long long centralizer_order_formula(const Partition& p);

/// H_p = Sigma_{n1} x Sigma_{n2} x ... permuting the blocks of equal size,
/// as a subgroup of Sigma_n in the block layout of g_of_partition.
PermGroup block_permuting_subgroup(const Partition& p);

/// N_p = Sigma_1^{n1} x Sigma_2^{n2} x ... (Young product on the blocks).
PermGroup young_product_subgroup(const Partition& p);

/// B_p = product of the cyclic groups generated by the individual cycles of
/// g_p. Abelian, contains g_p, and Z(g_p) = B_p x| H_p. Note the direct
/// product <g_p> x H_p is proper in Z(g_p) once some n_i >= 2 with i >= 2.
PermGroup cycle_subgroup(const Partition& p);

} // namespace equiquot
