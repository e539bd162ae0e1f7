#pragma once

#include <string>
#include <vector>

#include "equiquot/adequacy.hpp"
#include "equiquot/partition.hpp"

namespace equiquot {

/// Integer power series in t truncated at a fixed degree; all arithmetic is
/// exact and closed under truncation.
struct TruncSeries {
    int degree = 0;
    std::vector<long long> coefficients;   ///< indices 0..degree

    explicit TruncSeries(int D) : degree(D), coefficients(D + 1, 0) {}
    static TruncSeries one(int D);

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    /// t -> t^i
    TruncSeries substitute(int i) const;
    bool operator==(const TruncSeries& o) const {
        return degree == o.degree && coefficients == o.coefficients;
    }
};

/// Multiset count C(x+n-1, n), the number of n-th symmetric power points of
/// an x-point set.
long long sym_power_count(long long x, int n);

/// sum_n sym_power_count(x, n) t^n, which equals (1-t)^{-x} truncated.
TruncSeries kapranov_zeta(long long x, int D);

/// sum over partitions p of n of prod_j sym_power_count(x, n_j); the point
/// count of the extended quotient of X^n by Sigma_n.
long long ext_quot_sym_count(long long x, int n);

/// Independent oracle: builds X^n as a Sigma_n-set and counts the extended
/// quotient directly. Throws when x^n * n! exceeds `budget`.
long long brute_force_ext_quot(int x, int n, long long budget = 2000000);

/// Three-way coefficientwise comparison of prod_{i=1}^{D} Z(x, t^i) against
/// the partition-sum count and (up to brute_max) the direct enumeration.
struct GsIdentityProof {
    long long x = 0;
    int degree = 0;
    int brute_max = 0;
    std::vector<long long> product_side;
    std::vector<long long> partition_side;
    std::vector<long long> brute_side;   ///< -1 where enumeration was skipped
    int first_mismatch = -1;
    bool pass = false;
};

GsIdentityProof verify_gs_identity(long long x, int D, int brute_max = 4,
                                   long long budget = 2000000);

/// For every partition p of n: N_p (Young product), G_p = N_p x| H_p
/// (block permutations), and the S0 verdict of the resulting sequence.
struct SigmaAdequacyReport {
    int n = 0;
    std::vector<Partition> parts;
    std::vector<S0Report> verdicts;
    bool all_pass = false;
};

SigmaAdequacyReport sigma_n_adequacy(int n);

} // namespace equiquot
