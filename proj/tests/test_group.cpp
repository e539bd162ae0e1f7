#include "doctest.h"

#include <numeric>

#include "equiquot/group.hpp"
#include "equiquot/partition.hpp"

using namespace equiquot;

TEST_CASE("symmetric group classes biject with partitions") {
    for (int n = 1; n <= 5; ++n) {
        PermGroup g = symmetric_group(n);
        CHECK(g.conjugacy_classes().size() == partitions(n).size());
    }
    CHECK(symmetric_group(4).conjugacy_classes().size() == 5);
}

TEST_CASE("class equation") {
    for (const PermGroup& g : {symmetric_group(4), cyclic_group(6),
                               heisenberg_group(2).seq.G.operator*(),
                               *exs0_sequence(2).G}) {
        int total = 0;
        for (const auto& c : g.conjugacy_classes()) {
            total += static_cast<int>(c.members.size());
            CHECK(g.order() % static_cast<int>(c.members.size()) == 0);
        }
        CHECK(total == g.order());
    }
}

TEST_CASE("abelian group has |G| classes") {
    PermGroup g = direct_product(cyclic_group(4), cyclic_group(2));
    CHECK(g.conjugacy_classes().size() == static_cast<std::size_t>(g.order()));
}

TEST_CASE("orbit-stabilizer for conjugation") {
    PermGroup g = symmetric_group(4);
    for (const auto& c : g.conjugacy_classes()) {
        PermGroup z = centralizer(g, g.element(c.representative));
        CHECK(z.order() * static_cast<int>(c.members.size()) == g.order());
    }
}

TEST_CASE("centralizer of identity is G") {
    PermGroup g = symmetric_group(3);
    CHECK(centralizer(g, Perm::identity(3)).order() == 6);
}

TEST_CASE("centralizer of a transposition in sym3 has order 2") {
    PermGroup g = symmetric_group(3);
    CHECK(centralizer(g, Perm({1, 0, 2})).order() == 2);
}

TEST_CASE("normalizer cases") {
    PermGroup s3 = symmetric_group(3);
    PermGroup k = subgroup_generated(3, {Perm({1, 0, 2})});
    CHECK(normalizer(s3, k).order() == 2);   // self-normalizing
    PermGroup a3 = subgroup_generated(3, {Perm({1, 2, 0})});
    CHECK(normalizer(s3, a3).order() == 6);  // normal
}

TEST_CASE("heisenberg groups") {
    auto h2 = heisenberg_group(2);
    CHECK(h2.seq.G->order() == 8);
    CHECK(h2.seq.N->order() == 2);
    CHECK(h2.seq.G->conjugacy_classes().size() == 5);
    // z = [x,y] and N = <z>
    Perm comm = h2.x * h2.y * h2.x.inverse() * h2.y.inverse();
    CHECK(comm == h2.z);
    CHECK(h2.seq.N->contains(h2.z));

    auto h3 = heisenberg_group(3);
    CHECK(h3.seq.G->order() == 27);
    CHECK(h3.seq.G->conjugacy_classes().size() == 11);   // n^2 + n - 1
    // N is the center
    PermGroup z3 = centralizer(*h3.seq.G, h3.x);
    PermGroup zfull = intersection(z3, centralizer(*h3.seq.G, h3.y));
    CHECK(zfull.order() == h3.seq.N->order());
}

TEST_CASE("wreath products") {
    auto w1 = wreath_product(cyclic_group(3), 1);
    CHECK(w1.G->order() == 3);
    auto w22 = wreath_product(cyclic_group(2), 2);
    CHECK(w22.G->order() == 8);
    CHECK(isomorphic(*w22.G, *heisenberg_group(2).seq.G));   // both dihedral-8
    auto w32 = wreath_product(cyclic_group(3), 2);
    CHECK(w32.G->order() == 18);
}

TEST_CASE("semidirect with trivial action is direct product") {
    PermGroup n = cyclic_group(3), h = cyclic_group(2);
    std::vector<std::vector<int>> triv(h.order());
    for (auto& row : triv) {
        row.resize(n.order());
        std::iota(row.begin(), row.end(), 0);
    }
    auto seq = semidirect_product(n, h, triv);
    CHECK(seq.G->order() == 6);
    CHECK(isomorphic(*seq.G, cyclic_group(6)));
}

TEST_CASE("Z/3 x| Z/2 is sym3") {
    PermGroup n = cyclic_group(3), h = cyclic_group(2);
    // The nontrivial H-element inverts N.
    std::vector<std::vector<int>> act(2, std::vector<int>(3));
    for (int i = 0; i < 3; ++i) act[0][i] = i;
    for (int i = 0; i < 3; ++i) act[1][i] = n.inv(i);
    int nontrivial = 1 - h.identity_index();
    if (nontrivial != 1) std::swap(act[0], act[1]);
    auto seq = semidirect_product(n, h, act);
    CHECK(seq.G->order() == 6);
    CHECK(isomorphic(*seq.G, symmetric_group(3)));
}

TEST_CASE("exS0 group of order 32") {
    auto seq = exs0_sequence(2);
    CHECK(seq.G->order() == 32);
    CHECK(seq.N->order() == 8);
    CHECK(seq.H->order() == 4);
}

TEST_CASE("a4 cover: split sequence of order 288") {
    auto seq = a4_cover_sequence();
    CHECK(seq.G->order() == 288);
    CHECK(seq.N->order() == 24);
    CHECK(seq.H->order() == 12);
    // H = A4: no subgroup of order 6, 3 classes of... just check class count 4
    CHECK(seq.H->conjugacy_classes().size() == 4);
}

TEST_CASE("partitions and cycle types") {
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(0).size() == 1);
    CHECK(partitions(6).size() == 11);
    // identity has cycle type (n)
    Partition id_type = cycle_type(Perm::identity(5));
    CHECK(id_type.multiplicities == std::vector<int>{5});
    for (const auto& p : partitions(6))
        CHECK(cycle_type(g_of_partition(p)) == p);
}

TEST_CASE("centralizer of g_p in sym n") {
    for (int n = 2; n <= 5; ++n) {
        PermGroup sn = symmetric_group(n);
        for (const auto& p : partitions(n)) {
            PermGroup z = centralizer(sn, g_of_partition(p));
            CHECK(z.order() == centralizer_order_formula(p));
        }
    }
}

TEST_CASE("centralizer is B_p x| H_p internally, with g_p central") {
    for (int n = 2; n <= 4; ++n) {
        PermGroup sn = symmetric_group(n);
        for (const auto& p : partitions(n)) {
            Perm g = g_of_partition(p);
            PermGroup z = centralizer(sn, g);
            PermGroup bp = cycle_subgroup(p);
            PermGroup hp = block_permuting_subgroup(p);
            CHECK(is_subgroup_of(hp, z));
            CHECK(is_subgroup_of(bp, z));
            CHECK(is_normal_in(bp, z));
            CHECK(intersection(bp, hp).order() == 1);
            CHECK(bp.order() * hp.order() == z.order());
            // g_p itself is central in Z(g_p), so <g_p> x H_p always embeds.
            PermGroup cyc = subgroup_generated(n, {g});
            CHECK(is_subgroup_of(cyc, centralizer(z, g)));
            CHECK(intersection(cyc, hp).order() == 1);
            // The embedding is onto exactly when no block size >= 2 repeats.
            bool repeats = false;
            for (std::size_t i = 1; i < p.multiplicities.size(); ++i)
                if (p.multiplicities[i] >= 2) repeats = true;
            CHECK((cyc.order() * hp.order() == z.order()) == !repeats);
        }
    }
}

TEST_CASE("young product normalizer is generated by N_p and H_p") {
    PermGroup s4 = symmetric_group(4);
    for (const auto& p : partitions(4)) {
        PermGroup np = young_product_subgroup(p);
        PermGroup gp = normalizer(s4, np);
        std::vector<Perm> gens = np.generators();
        auto hg = block_permuting_subgroup(p).generators();
        gens.insert(gens.end(), hg.begin(), hg.end());
        CHECK(subgroup_generated(4, gens).order() == gp.order());
    }
}

TEST_CASE("isomorphism testing") {
    CHECK(isomorphic(cyclic_group(4), cyclic_group(4)));
    CHECK_FALSE(isomorphic(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))));
    CHECK_FALSE(isomorphic(symmetric_group(3), cyclic_group(6)));
    CHECK(isomorphic(symmetric_group(4), symmetric_group(4)));
}

TEST_CASE("quotient sequence validation") {
    PermGroup s4 = symmetric_group(4);
    PermGroup v4 = subgroup_generated(4, {Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1})});
    auto seq = quotient_sequence(s4, v4);
    CHECK(seq.H->order() == 6);
    CHECK(isomorphic(*seq.H, symmetric_group(3)));
}
