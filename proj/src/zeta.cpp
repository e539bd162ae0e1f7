#include "equiquot/zeta.hpp"

#include <memory>
#include <stdexcept>

#include "equiquot/gset.hpp"

namespace equiquot {

TruncSeries TruncSeries::one(int D) {
    TruncSeries s(D);
    s.coefficients[0] = 1;
    return s;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    if (degree != o.degree) throw std::invalid_argument("TruncSeries: degree mismatch");
    TruncSeries out(degree);
    for (int i = 0; i <= degree; ++i)
        out.coefficients[i] = coefficients[i] + o.coefficients[i];
    return out;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    if (degree != o.degree) throw std::invalid_argument("TruncSeries: degree mismatch");
    TruncSeries out(degree);
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; i + j <= degree; ++j)
            out.coefficients[i + j] += coefficients[i] * o.coefficients[j];
    return out;
}

TruncSeries TruncSeries::substitute(int i) const {
    if (i < 1) throw std::invalid_argument("TruncSeries: substitution power must be >= 1");
    TruncSeries out(degree);
    for (int k = 0; k <= degree && k * i <= degree; ++k)
        out.coefficients[k * i] = coefficients[k];
    return out;
}

long long sym_power_count(long long x, int n) {
    if (x < 0 || n < 0) throw std::invalid_argument("sym_power_count: negative input");
    // C(x+n-1, n)
    long long num = 1;
    for (int k = 1; k <= n; ++k) num = num * (x - 1 + k) / k;
    return num;
}

TruncSeries kapranov_zeta(long long x, int D) {
    TruncSeries s(D);
    for (int n = 0; n <= D; ++n) s.coefficients[n] = sym_power_count(x, n);
    return s;
}

long long ext_quot_sym_count(long long x, int n) {
    long long total = 0;
    for (const Partition& p : partitions(n)) {
        // tuples fixed by g of type p, modulo Z(g): one factor S^{n_i}(X)
        // per part size i, where n_i is the multiplicity of that size
        long long term = 1;
        for (int ni : p.multiplicities) term *= sym_power_count(x, ni);
        total += term;
    }
    return total;
}

long long brute_force_ext_quot(int x, int n, long long budget) {
    if (n == 0) return 1;
    if (x == 0) return 0;
    long long cost = 1;
    for (int i = 0; i < n; ++i) {
        cost *= x;
        cost *= i + 1;
        if (cost > budget) throw std::runtime_error("brute_force_ext_quot: budget exceeded");
    }
    std::vector<std::string> alphabet;
    for (int a = 0; a < x; ++a) alphabet.push_back(std::string(1, static_cast<char>('a' + a)));
    GroupPtr sn = std::make_shared<PermGroup>(symmetric_group(n));
    GSet X = power_gset(sn, alphabet, n);
    return extended_quotient(X).size;
}

GsIdentityProof verify_gs_identity(long long x, int D, int brute_max, long long budget) {
    GsIdentityProof proof;
    proof.x = x;
    proof.degree = D;
    proof.brute_max = brute_max;

    // factors with i > D are congruent to 1 modulo t^{D+1}
    TruncSeries prod = TruncSeries::one(D);
    TruncSeries z = kapranov_zeta(x, D);
    for (int i = 1; i <= D; ++i) prod = prod * z.substitute(i);
    proof.product_side = prod.coefficients;

    for (int n = 0; n <= D; ++n) proof.partition_side.push_back(ext_quot_sym_count(x, n));

    proof.brute_side.assign(D + 1, -1);
    for (int n = 0; n <= D && n <= brute_max; ++n) {
        try {
            proof.brute_side[n] = brute_force_ext_quot(static_cast<int>(x), n, budget);
        } catch (const std::runtime_error&) {
            break;   // budget exceeded; leave the rest skipped
        }
    }

    proof.pass = true;
    for (int n = 0; n <= D; ++n) {
        bool ok = proof.product_side[n] == proof.partition_side[n] &&
                  (proof.brute_side[n] == -1 || proof.brute_side[n] == proof.product_side[n]);
        if (!ok) {
            proof.pass = false;
            proof.first_mismatch = n;
            break;
        }
    }
    return proof;
}

SigmaAdequacyReport sigma_n_adequacy(int n) {
    SigmaAdequacyReport rep;
    rep.n = n;
    rep.all_pass = true;
    for (const Partition& p : partitions(n)) {
        PermGroup np = young_product_subgroup(p);
        PermGroup hp = block_permuting_subgroup(p);
        std::vector<Perm> gens = np.generators();
        for (const Perm& g : hp.generators()) gens.push_back(g);
        PermGroup gp = subgroup_generated(n, gens, "G_" + p.to_string());
        S0Report s = in_s0(quotient_sequence(gp, np, "sigma" + std::to_string(n) +
                                                         "_" + p.to_string()));
        rep.all_pass = rep.all_pass && s.in_s0;
        rep.parts.push_back(p);
        rep.verdicts.push_back(std::move(s));
    }
    return rep;
}

} // namespace equiquot
