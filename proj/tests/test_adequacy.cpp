#include "doctest.h"

#include <memory>
#include <numeric>

#include "equiquot/adequacy.hpp"
#include "equiquot/partition.hpp"

using namespace equiquot;

namespace {

GroupPtr ptr(PermGroup g) { return std::make_shared<PermGroup>(std::move(g)); }

ExactSequence z3_by_z2() {
    PermGroup n = cyclic_group(3), h = cyclic_group(2);
    std::vector<std::vector<int>> act(2, std::vector<int>(3));
    for (int i = 0; i < 3; ++i) act[0][i] = i;
    for (int i = 0; i < 3; ++i) act[1][i] = n.inv(i);
    return semidirect_product(n, h, act, "z3xz2");
}

} // namespace

TEST_CASE("abelian N in a semidirect product: theta vanishes") {
    CHECK(theta_vanishes(z3_by_z2()));
    auto ex = exs0_sequence(2);
    CHECK(theta_vanishes(ex));
    // witness re-restriction is validated inside extension_exists
    auto w = extension_exists(ex);
    CHECK(w.exists);
    long long used = std::accumulate(w.multiplicities.begin(), w.multiplicities.end(), 0LL);
    CHECK(used >= 1);
}

TEST_CASE("wreath products: theta vanishes") {
    CHECK(theta_vanishes(wreath_product(cyclic_group(2), 2)));
    CHECK(theta_vanishes(wreath_product(cyclic_group(2), 3)));
    CHECK(theta_vanishes(wreath_product(cyclic_group(3), 2)));
}

TEST_CASE("heisenberg center sequences: theta does not vanish") {
    CHECK_FALSE(theta_vanishes(heisenberg_group(2).seq));
    CHECK_FALSE(theta_vanishes(heisenberg_group(3).seq));
}

TEST_CASE("binary tetrahedral cover of A4: theta does not vanish") {
    CHECK_FALSE(theta_vanishes(a4_cover_sequence()));
}

TEST_CASE("trivial N: theta vanishes") {
    PermGroup h = symmetric_group(3);
    auto seq = quotient_sequence(h, trivial_group(3));
    CHECK(theta_vanishes(seq));
}

TEST_CASE("condition iii verdicts") {
    // heisenberg: condition (iii) holds (both actions trivial)
    auto h2 = heisenberg_group(2);
    ConditionIII c = condition_iii(h2.seq);
    CHECK(c.pass);

    // abelian G: always holds
    PermGroup a = direct_product(cyclic_group(2), cyclic_group(4));
    PermGroup sub = subgroup_generated(a.degree(), {a.element(1)});
    // pick a genuine normal subgroup: generated by an element of order 2
    for (int i = 0; i < a.order(); ++i)
        if (a.element_order(i) == 2) {
            sub = subgroup_generated(a.degree(), {a.element(i)});
            break;
        }
    CHECK(condition_iii(quotient_sequence(a, sub)).pass);

    // (Z/2)^3 x| (Z/2)^2 fails with the known censuses
    auto ex = exs0_sequence(2);
    ConditionIII bad = condition_iii(ex);
    CHECK_FALSE(bad.pass);
    // class side: 2 fixed points (stab order 4) and 6 points with stab order 2,
    // i.e. 3 orbits of size 2
    std::vector<std::pair<int, int>> cls_expect{{2, 2}, {2, 2}, {2, 2}, {4, 1}, {4, 1}};
    std::sort(cls_expect.begin(), cls_expect.end());
    CHECK(bad.class_side.entries == cls_expect);
    // character side: 4 fixed characters and one free orbit of size 4
    std::vector<std::pair<int, int>> irr_expect{{1, 4}, {4, 1}, {4, 1}, {4, 1}, {4, 1}};
    std::sort(irr_expect.begin(), irr_expect.end());
    CHECK(bad.char_side.entries == irr_expect);
}

TEST_CASE("in_s0 composite verdicts") {
    CHECK(in_s0(wreath_product(cyclic_group(2), 2)).in_s0);
    S0Report h = in_s0(heisenberg_group(2).seq);
    CHECK_FALSE(h.in_s0);
    CHECK_FALSE(h.cond_ii);
    CHECK(h.cond_iii.pass);
    S0Report e = in_s0(exs0_sequence(2));
    CHECK_FALSE(e.in_s0);
    CHECK(e.cond_ii);
    CHECK_FALSE(e.cond_iii.pass);
}

TEST_CASE("free actions are adequate") {
    GroupPtr s3 = ptr(symmetric_group(3));
    AdequacyReport rep = is_s0_adequate(left_translation_gset(s3));
    CHECK(rep.adequate);
    CHECK(rep.strata.size() == 1);
    CHECK(!rep.conclusion.empty());
}

TEST_CASE("powers under the symmetric group are adequate") {
    for (int n = 2; n <= 4; ++n) {
        GroupPtr sn = ptr(symmetric_group(n));
        std::vector<std::string> alphabet = {"a", "b"};
        AdequacyReport rep = is_s0_adequate(power_gset(sn, alphabet, n));
        CHECK(rep.adequate);
    }
    GroupPtr s3 = ptr(symmetric_group(3));
    CHECK(is_s0_adequate(power_gset(s3, {"a", "b", "c"}, 3)).adequate);
}

TEST_CASE("regular H-set through the exS0 group is not adequate") {
    auto ex = exs0_sequence(2);
    // G acts on H by left translation through the projection
    std::vector<std::string> labels;
    for (const Perm& p : ex.H->elements()) labels.push_back(p.to_cycle_string());
    std::vector<std::vector<int>> rows;
    for (const Perm& gen : ex.G->generators()) {
        int himg = ex.projection.images[ex.G->index_of(gen)];
        std::vector<int> row(ex.H->order());
        for (int x = 0; x < ex.H->order(); ++x)
            row[x] = ex.H->index_of(ex.H->element(himg) * ex.H->element(x));
        rows.push_back(std::move(row));
    }
    GSet X(ex.G, labels, rows);
    AdequacyReport rep = is_s0_adequate(X);
    CHECK_FALSE(rep.adequate);
    CHECK(rep.strata.size() == 1);
    CHECK(rep.conclusion.empty());
}

TEST_CASE("component counts in the free case") {
    // trivial N: one component of size |X/H|
    PermGroup s3 = symmetric_group(3);
    auto seq = quotient_sequence(s3, trivial_group(3));
    GSet reg = left_translation_gset(seq.H);
    ComponentsReport r = components_free_case(seq, reg);
    CHECK(r.count == static_cast<int>(character_table(seq.N).rows.size()));
    // N central with G = N x H: |N| components each of size |X/H|
    PermGroup n2 = cyclic_group(2), h2 = cyclic_group(2);
    std::vector<std::vector<int>> triv(2);
    for (auto& row : triv) { row = {0, 1}; }
    auto prod = semidirect_product(n2, h2, triv, "z2xz2");
    GSet regh = left_translation_gset(prod.H);
    ComponentsReport rc = components_free_case(prod, regh);
    CHECK(rc.count == 2);
    for (int s : rc.quotient_sizes) CHECK(s == 1);
    // exS0(2) on the regular H-set: 5 components
    auto ex = exs0_sequence(2);
    GSet regex = left_translation_gset(ex.H);
    ComponentsReport re = components_free_case(ex, regex);
    CHECK(re.count == 5);
}

TEST_CASE("theta verdict is isomorphism invariant") {
    // relabel the permutation domain of the heisenberg(2) construction
    auto h = heisenberg_group(2);
    Perm relabel({3, 1, 5, 0, 7, 2, 6, 4});
    Perm inv = relabel.inverse();
    auto conj = [&](const Perm& p) { return relabel * p * inv; };
    std::vector<Perm> ngens, ggens;
    for (const Perm& p : h.seq.N->generators()) ngens.push_back(conj(p));
    for (const Perm& p : h.seq.G->generators()) ggens.push_back(conj(p));
    PermGroup g2(8, ggens, "relabeled");
    PermGroup n2(8, ngens, "relabeledN");
    auto seq2 = quotient_sequence(g2, n2, "relabeled-heis2");
    CHECK(theta_vanishes(seq2) == theta_vanishes(h.seq));
}

TEST_CASE("sigma_n partition sequences are in S0") {
    // the normalizer sequences of Young products inside Sigma_n, n <= 4
    for (int n = 2; n <= 4; ++n) {
        PermGroup sn = symmetric_group(n);
        for (const auto& p : partitions(n)) {
            PermGroup np = young_product_subgroup(p);
            PermGroup gp = normalizer(sn, np);
            auto seq = quotient_sequence(gp, np, "sigma" + std::to_string(n) + p.to_string());
            CHECK(in_s0(seq).in_s0);
        }
    }
}
