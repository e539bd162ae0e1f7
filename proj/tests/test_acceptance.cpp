#include "doctest.h"

#include <chrono>
#include <iostream>
#include <memory>
#include <random>

#include "equiquot/adequacy.hpp"
#include "equiquot/corpus.hpp"
#include "equiquot/partition.hpp"
#include "equiquot/skew.hpp"
#include "equiquot/torsion.hpp"
#include "equiquot/zeta.hpp"

using namespace equiquot;

namespace {

GroupPtr ptr(PermGroup g) { return std::make_shared<PermGroup>(std::move(g)); }

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void verdict(int criterion, bool pass, const std::string& what) {
    std::cout << "criterion " << criterion << ": " << (pass ? "pass" : "FAIL") << " - "
              << what << std::endl;
    CHECK(pass);
}

} // namespace

TEST_CASE("1: symmetric-group classes are counted by partitions") {
    Stopwatch sw;
    std::vector<long long> expected{1, 2, 3, 5, 7, 11, 15};
    bool ok = true;
    for (int n = 1; n <= 7; ++n) {
        long long classes =
            static_cast<long long>(ptr(symmetric_group(n))->conjugacy_classes().size());
        ok = ok && classes == expected[n - 1];
    }
    double t = sw.seconds();
    verdict(1, ok && t < 10.0,
            "class counts 1,2,3,5,7,11,15 for n = 1..7 (" + std::to_string(t) + "s)");
}

TEST_CASE("2: centralizer order and splitting for every cycle type, n <= 6") {
    // the centralizer is the cycle group B extended by the block permutations
    // H, with the defining permutation central; the literal direct product
    // <g> x H coincides with B x| H exactly when <g> already equals B, i.e.
    // when the cycle lengths above 1 are distinct and pairwise coprime
    Stopwatch sw;
    bool ok = true;
    for (int n = 2; n <= 6; ++n) {
        PermGroup sn = symmetric_group(n);
        for (const Partition& p : partitions(n)) {
            Perm g = g_of_partition(p);
            PermGroup z = centralizer(sn, g);
            ok = ok && z.order() == centralizer_order_formula(p);
            PermGroup bp = cycle_subgroup(p);
            PermGroup hp = block_permuting_subgroup(p);
            ok = ok && is_subgroup_of(bp, z) && is_subgroup_of(hp, z) &&
                 is_normal_in(bp, z) && intersection(bp, hp).order() == 1 &&
                 static_cast<long long>(bp.order()) * hp.order() == z.order() &&
                 z.contains(g);
            for (const Perm& w : z.elements()) ok = ok && w * g == g * w;
            bool cyclic_b = g.order() == bp.order();
            bool literal = static_cast<long long>(g.order()) * hp.order() == z.order();
            ok = ok && (literal == cyclic_b);
        }
    }
    double t = sw.seconds();
    verdict(2, ok && t < 30.0,
            "|Z(g)| = prod i^n_i n_i! with internal splitting, n <= 6 (" +
                std::to_string(t) + "s)");
}

TEST_CASE("3: extended-quotient oracle equivalence on 200 random G-sets") {
    std::mt19937 rng(20250823);
    std::vector<GroupPtr> pool{
        ptr(symmetric_group(4)),
        ptr(cyclic_group(6)),
        ptr(direct_product(symmetric_group(3), cyclic_group(2))),
        heisenberg_group(3).seq.G,
        exs0_sequence(2).G,
        wreath_product(cyclic_group(2), 3).G,
        a4_cover_sequence().N,
    };
    bool ok = true;
    int checked = 0;
    for (int t = 0; t < 210; ++t) {
        const GroupPtr& g = pool[t % pool.size()];
        ok = ok && g->order() <= 48;
        GSet x = random_gset(g, 64, rng);
        ok = ok && x.size() <= 64;
        ExtendedQuotient eq = extended_quotient(x);
        ok = ok && eq.size == eq.class_formula_size;
        ++checked;
    }
    verdict(3, ok && checked >= 200,
            "inertia orbit count = sum |X^g/Z(g)| on " + std::to_string(checked) +
                " random G-sets");
}

TEST_CASE("4: counting zeta identity, three ways") {
    Stopwatch sw;
    bool ok = true;
    for (long long x = 0; x <= 3; ++x) {
        GsIdentityProof p = verify_gs_identity(x, 6, 4);
        ok = ok && p.pass;
        for (int n = 0; n <= 4; ++n) ok = ok && p.brute_side[n] >= 0;
    }
    ok = ok && verify_gs_identity(1, 6).product_side ==
                   std::vector<long long>{1, 1, 2, 3, 5, 7, 11};
    double t = sw.seconds();
    verdict(4, ok && t < 60.0,
            "product, partition formula, and enumeration agree for x <= 3, D = 6 (" +
                std::to_string(t) + "s)");
}

TEST_CASE("5: extension-criterion verdicts on the example families") {
    bool ok = true;
    // abelian-N semidirect products vanish
    {
        PermGroup n3 = cyclic_group(3), h2 = cyclic_group(2);
        std::vector<std::vector<int>> act(2, std::vector<int>(3));
        for (int i = 0; i < 3; ++i) act[0][i] = i;
        for (int i = 0; i < 3; ++i) act[1][i] = n3.inv(i);
        ok = ok && theta_vanishes(semidirect_product(n3, h2, act, "z3xz2"));
    }
    ok = ok && theta_vanishes(wreath_product(cyclic_group(2), 2));
    ok = ok && theta_vanishes(wreath_product(cyclic_group(3), 2));
    ok = ok && !theta_vanishes(heisenberg_group(2).seq);
    ok = ok && !theta_vanishes(heisenberg_group(3).seq);
    ok = ok && !theta_vanishes(a4_cover_sequence());
    S0Report ex = in_s0(exs0_sequence(2));
    ok = ok && ex.cond_ii && !ex.cond_iii.pass;
    // per orbit: 2 fixed classes and 3 two-point class orbits versus 4 fixed
    // characters and one free character orbit
    ok = ok && ex.cond_iii.class_side.entries ==
                   std::vector<std::pair<int, int>>{{2, 2}, {2, 2}, {2, 2}, {4, 1}, {4, 1}};
    ok = ok && ex.cond_iii.char_side.entries ==
                   std::vector<std::pair<int, int>>{{1, 4}, {4, 1}, {4, 1}, {4, 1}, {4, 1}};
    verdict(5, ok, "vanishing for abelian-N and wreaths; failure for the central "
                   "extensions; census mismatch for (Z/2)^3 x| (Z/2)^2");
}

TEST_CASE("6: symmetric-power stabilizer sequences pass, n <= 5") {
    bool ok = true;
    for (int n = 1; n <= 5; ++n) ok = ok && sigma_n_adequacy(n).all_pass;
    verdict(6, ok, "every partition sequence N_p x| H_p is in the good class, n <= 5");
}

TEST_CASE("7: the twisted-function-algebra isomorphism") {
    bool ok = true;
    XiProof a = verify_xi(heisenberg_group(2).seq);
    PermGroup s3 = symmetric_group(3);
    PermGroup a3 = subgroup_generated(3, {Perm({1, 2, 0})}, "a3");
    XiProof b = verify_xi(quotient_sequence(s3, a3, "s3-over-a3"));
    PermGroup n3 = cyclic_group(3), h2 = cyclic_group(2);
    std::vector<std::vector<int>> act(2, std::vector<int>(3));
    for (int i = 0; i < 3; ++i) act[0][i] = i;
    for (int i = 0; i < 3; ++i) act[1][i] = n3.inv(i);
    XiProof c = verify_xi(semidirect_product(n3, h2, act, "z3xz2"));
    for (const XiProof* p : {&a, &b, &c})
        ok = ok && p->pass && p->skew_dim == p->commutant_dim &&
             p->commutant_dim == p->expected_dim;
    verdict(7, ok, "multiplicative, bijective, equivariant, with |H||G| = |H|^2|N|");
}

TEST_CASE("8: the cyclic-algebra lemma for the mod-n Heisenberg group") {
    bool ok = true;
    for (int n = 2; n <= 3; ++n) {
        HeisenbergProof p = verify_heisenberg_lemma(n);
        ok = ok && p.pass && p.inner_product == Rational(1);
    }
    verdict(8, ok, "induced module irreducible and the quotient matches its "
                   "endomorphism algebra, n = 2, 3");
}

TEST_CASE("9: Smith normal form on 1000 random matrices") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> dim(1, 8), entry(-50, 50);
    bool ok = true;
    for (int t = 0; t < 1000; ++t) {
        IntMatrix a(dim(rng), dim(rng));
        for (auto& row : a.entries)
            for (auto& v : row) v = entry(rng);
        try {
            smith_normal_form(a);   // throws when any postcondition fails
        } catch (...) {
            ok = false;
        }
    }
    verdict(9, ok, "U*A*V = D, unimodular transforms, divisibility chain, 1000 trials");
}

TEST_CASE("10: torsion-order calculus and the strict fibration bound") {
    bool ok = true;
    std::mt19937 rng(77);
    for (int t = 0; t < 500; ++t) ok = ok && random_tau0_instance(rng).pass;

    // one differential round never raises any diagonal (throws otherwise)
    std::uniform_int_distribution<int> coin(0, 1), small(0, 3), fac(2, 6);
    for (int t = 0; t < 100; ++t) {
        SSPage page;
        page.differential_round = 3;
        for (int j = 2; j <= 6; j += 2) {
            FgAbGroup src = FgAbGroup::free(small(rng));
            FgAbGroup tgt = FgAbGroup::free(small(rng));
            if (coin(rng)) tgt.invariant_factors.push_back(fac(rng));
            page.grid[{0, j}] = src;
            page.grid[{3, j - 2}] = tgt;
            IntMatrix d(tgt.num_generators(), src.num_generators());
            for (int i = 0; i < static_cast<int>(tgt.invariant_factors.size()); ++i)
                for (int c = 0; c < d.cols; ++c) d.entries[i][c] = small(rng) - 1;
            page.differentials[{0, j}] = d;
        }
        try {
            TurnResult turned = turn_page(page);
            for (int p : page.diagonals())
                ok = ok && turned.page.diagonal_tau(p) <= page.diagonal_tau(p);
        } catch (...) {
            ok = false;
        }
    }

    GradedGroup base;
    {
        GradedGroup enriques, elliptic;
        enriques.degrees[0] = FgAbGroup::free(1);
        enriques.degrees[2] = FgAbGroup{10, {2}};
        enriques.degrees[3] = FgAbGroup{0, {2}};
        enriques.degrees[4] = FgAbGroup::free(1);
        elliptic.degrees[0] = FgAbGroup::free(1);
        elliptic.degrees[1] = FgAbGroup::free(2);
        elliptic.degrees[2] = FgAbGroup::free(1);
        base = kunneth_torsion_free(enriques, elliptic);
    }
    ok = ok && base.tau_odd() == 16;   // 2^(2g+2) with g = 1
    IntMatrix d3(base.at(3).num_generators(), base.at(0).num_generators());
    d3.entries[0][0] = 1;
    FibrationAudit audit = audit_fibration_bound(base, 2, d3);
    ok = ok && audit.certified && audit.after_tau < audit.bound && audit.bound == 256;
    verdict(10, ok, "500 inequality instances, monotone page turns, and the strict "
                    "odd-torsion bound on the product fixture (base 2^4)");
}

TEST_CASE("11: byte-identical corpus reports under a fixed seed") {
    std::string a = corpus_run(FIXTURE_DIR, "", 1234).dump(2);
    std::string b = corpus_run(FIXTURE_DIR, "", 1234).dump(2);
    bool ok = !a.empty() && a == b;
    // and the corpus itself passes
    ok = ok && corpus_run(FIXTURE_DIR, "", 1234)["all_pass"].get<bool>();
    verdict(11, ok, "two full corpus runs with the same seed serialize identically");
}
