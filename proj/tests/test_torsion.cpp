#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "equiquot/torsion.hpp"

using namespace equiquot;

namespace {

IntMatrix mat(std::vector<std::vector<long long>> rows) {
    IntMatrix m(static_cast<int>(rows.size()),
                rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.entries[i][j] = rows[i][j];
    return m;
}

FgAbGroup grp(long long rank, std::vector<long long> factors) {
    FgAbGroup g;
    g.free_rank = rank;
    for (long long f : factors) g.invariant_factors.push_back(f);
    return g;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

GradedGroup load_fixture(const std::string& name) {
    return graded_from_json(slurp(std::string(FIXTURE_DIR) + "/" + name + ".json"));
}

} // namespace

TEST_CASE("smith normal form on fixed matrices") {
    SnfResult id = smith_normal_form(IntMatrix::identity(3));
    CHECK(id.D == IntMatrix::identity(3));
    SnfResult diag = smith_normal_form(mat({{2, 0}, {0, 4}}));
    CHECK(diag.D == mat({{2, 0}, {0, 4}}));
    SnfResult mixed = smith_normal_form(mat({{2, 4}, {6, 8}}));
    CHECK(mixed.D == mat({{2, 0}, {0, 4}}));
}

TEST_CASE("smith normal form on random matrices") {
    // postconditions (UAV = D, unimodularity, chain) are verified internally
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> dim(1, 6), entry(-50, 50);
    for (int trial = 0; trial < 200; ++trial) {
        int r = dim(rng), c = dim(rng);
        IntMatrix a(r, c);
        for (auto& row : a.entries)
            for (auto& v : row) v = entry(rng);
        SnfResult s = smith_normal_form(a);
        if (r == c) {
            BigInt prod = 1;
            for (int i = 0; i < r; ++i) prod *= s.D.entries[i][i];
            BigInt det = determinant(a);
            CHECK((det < 0 ? BigInt(-det) : det) == prod);
        }
    }
}

TEST_CASE("kernel lattices and exact solving") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        int r = dim(rng), c = dim(rng);
        IntMatrix a(r, c);
        for (auto& row : a.entries)
            for (auto& v : row) v = entry(rng);
        IntMatrix k = kernel_lattice(a);
        CHECK((a * k).is_zero());
        int rank = 0;
        SnfResult s = smith_normal_form(a);
        for (int i = 0; i < std::min(r, c); ++i)
            if (s.D.entries[i][i] != 0) ++rank;
        CHECK(k.cols == c - rank);

        IntMatrix x(c, 2);
        for (auto& row : x.entries)
            for (auto& v : row) v = entry(rng);
        auto sol = solve_exact(a, a * x);
        REQUIRE(sol.has_value());
        CHECK(a * *sol == a * x);
    }
    CHECK_FALSE(solve_exact(mat({{2}}), mat({{1}})).has_value());
}

TEST_CASE("cokernels and tau") {
    CHECK(cokernel(mat({{2, 0}, {0, 4}})) == grp(0, {2, 4}));
    CHECK(cokernel(mat({{2, 4}, {6, 8}})) == grp(0, {2, 4}));
    CHECK(cokernel(IntMatrix(3, 0)) == grp(3, {}));
    CHECK(tau(grp(5, {})) == 1);
    CHECK(tau(grp(0, {2, 4})) == 8);
    CHECK(tau(direct_sum(grp(1, {2}), grp(2, {6}))) == 12);
    // canonical merge: Z/2 + Z/4 + Z/3 = Z/2 + Z/12
    CHECK(direct_sum(grp(0, {2, 4}), grp(0, {3})) == grp(0, {2, 12}));
}

TEST_CASE("subgroups and extensions") {
    // 2Z/4Z inside Z/4
    CHECK(subgroup_from_generators(mat({{4}}), mat({{2}})) == grp(0, {2}));
    // a full-rank sublattice of Z^2 is free
    CHECK(subgroup_from_generators(IntMatrix(2, 0), mat({{2, 0}, {0, 3}})) == grp(2, {}));

    // Z by Z/2 with a lift of order 4 recovers Z (the 2Z subgroup picture)
    CHECK(extension_group(grp(1, {}), grp(0, {2}), mat({{1}})) == grp(1, {}));
    // nonsplit Z/2 . Z/2 = Z/4, split = Z/2 + Z/2; tau = 4 both ways
    FgAbGroup nonsplit = extension_group(grp(0, {2}), grp(0, {2}), mat({{1}}));
    FgAbGroup split = extension_group(grp(0, {2}), grp(0, {2}), mat({{0}}));
    CHECK(nonsplit == grp(0, {4}));
    CHECK(split == grp(0, {2, 2}));
    CHECK(tau(nonsplit) == 4);
    CHECK(tau(split) == 4);
}

TEST_CASE("torsion-order inequalities on random instances") {
    std::mt19937 rng(991);
    int trivial_kernels = 0, nontrivial_kernels = 0;
    for (int trial = 0; trial < 500; ++trial) {
        Tau0Proof p = random_tau0_instance(rng);
        CHECK(p.pass);
        (p.kernel_trivial ? trivial_kernels : nontrivial_kernels)++;
    }
    // both equality regimes of inequality (ii) must actually occur
    CHECK(trivial_kernels > 0);
    CHECK(nontrivial_kernels > 0);
}

TEST_CASE("non-exact surjection data is rejected") {
    // quotienting Z by an extra relation changes the rank
    CHECK_THROWS_AS(tau0_checks(IntMatrix(1, 0), IntMatrix(1, 0), mat({{2}}),
                                {grp(0, {2}), grp(0, {2})}, {mat({{0}})}),
                    std::invalid_argument);
}

TEST_CASE("graded groups round-trip through json") {
    GradedGroup enriques = load_fixture("enriques");
    CHECK(enriques.at(0) == grp(1, {}));
    CHECK(enriques.at(2) == grp(10, {2}));
    CHECK(enriques.at(3) == grp(0, {2}));
    CHECK(enriques.tau_odd() == 2);
    CHECK(enriques.tau_even() == 2);
    GradedGroup again = graded_from_json(graded_to_json(enriques));
    CHECK(again.degrees == enriques.degrees);
}

TEST_CASE("periodic page layout") {
    SSPage point = ah_e2(load_fixture("point"));
    CHECK(point.grid.size() == 1);
    CHECK(point.grid.at({0, 0}) == grp(1, {}));

    SSPage curve = ah_e2(load_fixture("curve_genus2"));
    CHECK(curve.diagonal(0).free_rank == 2);
    CHECK(curve.diagonal(1).free_rank == 4);

    SSPage enr = ah_e2(load_fixture("enriques"));
    CHECK(enr.diagonal_tau(1) == 2);
    CHECK(enr.diagonal_tau(0) == 2);
}

TEST_CASE("projective-fiber pages repeat the base in even rows") {
    GradedGroup enriques = load_fixture("enriques");
    SSPage flat = leray_e2_projective_fibers(enriques, 1);
    for (const auto& [pos, g] : flat.grid) {
        CHECK(pos.second == 0);
        CHECK(g == enriques.at(pos.first));
    }
    for (int d = 2; d <= 3; ++d) {
        SSPage page = leray_e2_projective_fibers(enriques, d);
        BigInt odd = 1;
        for (int p : page.diagonals())
            if (p % 2 != 0) odd *= page.diagonal_tau(p);
        BigInt bound = 1;
        for (int i = 0; i < d; ++i) bound *= enriques.tau_odd();
        CHECK(odd == bound);
    }
}

TEST_CASE("turning a page computes homology and never raises torsion") {
    SSPage quiet = leray_e2_projective_fibers(load_fixture("enriques"), 2);
    TurnResult same = turn_page(quiet);
    CHECK(same.page.grid == quiet.grid);
    CHECK(same.dropped_diagonals.empty());

    // d3 from a Z generator onto Z/4 torsion kills it
    SSPage page;
    page.grid[{0, 2}] = grp(1, {});
    page.grid[{3, 0}] = grp(0, {4});
    page.differential_round = 3;
    page.differentials[{0, 2}] = mat({{1}});
    TurnResult turned = turn_page(page);
    CHECK(turned.page.grid.at({3, 0}) == grp(0, {}));
    CHECK(turned.page.grid.at({0, 2}) == grp(1, {}));
    CHECK(turned.dropped_diagonals == std::vector<int>{3});

    // partial hit: Z -> Z/4 landing on twice the generator leaves Z/2
    page.differentials[{0, 2}] = mat({{2}});
    CHECK(turn_page(page).page.grid.at({3, 0}) == grp(0, {2}));
}

TEST_CASE("random pages never gain torsion on any diagonal") {
    // sources only in column 0, so no composable differentials arise
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> coin(0, 1), small(0, 3), fac(2, 6);
    for (int trial = 0; trial < 100; ++trial) {
        SSPage page;
        page.differential_round = 3;
        for (int j = 2; j <= 6; j += 2) {
            FgAbGroup src = grp(small(rng), {});
            FgAbGroup tgt;
            tgt.free_rank = small(rng);
            if (coin(rng)) tgt.invariant_factors.push_back(fac(rng));
            page.grid[{0, j}] = src;
            page.grid[{3, j - 2}] = tgt;
            // rationally trivial: nonzero entries only on torsion generators
            IntMatrix d(tgt.num_generators(), src.num_generators());
            for (int i = 0; i < static_cast<int>(tgt.invariant_factors.size()); ++i)
                for (int j2 = 0; j2 < d.cols; ++j2) d.entries[i][j2] = small(rng) - 1;
            page.differentials[{0, j}] = d;
        }
        TurnResult turned = turn_page(page);   // throws if torsion grows
        for (int p : page.diagonals()) CHECK(turned.page.diagonal_tau(p) <= page.diagonal_tau(p));
    }
}

TEST_CASE("kunneth with a torsion-free factor") {
    GradedGroup enriques = load_fixture("enriques");
    GradedGroup point = load_fixture("point");
    GradedGroup same = kunneth_torsion_free(enriques, point);
    for (const auto& [d, g] : enriques.degrees) CHECK(same.at(d) == g);

    for (int g = 1; g <= 3; ++g) {
        GradedGroup curve = load_fixture("curve_genus" + std::to_string(g));
        GradedGroup prod = kunneth_torsion_free(enriques, curve);
        BigInt expect = 1;
        for (int i = 0; i < 2 * g + 2; ++i) expect *= 2;
        CHECK(prod.tau_odd() == expect);
        // rank bookkeeping is the convolution of Betti numbers
        for (int p = 0; p <= 6; ++p) {
            long long want = 0;
            for (int i = 0; i <= p; ++i) want += enriques.rank(i) * curve.rank(p - i);
            CHECK(prod.rank(p) == want);
        }
    }
    CHECK_THROWS(kunneth_torsion_free(point, enriques));
}

TEST_CASE("fibration audit certifies the strict torsion bound") {
    GradedGroup enriques = load_fixture("enriques");
    GradedGroup elliptic = load_fixture("curve_genus1");
    GradedGroup base = kunneth_torsion_free(enriques, elliptic);
    CHECK(base.tau_odd() == 16);

    // d3 sends the degree-0 generator onto one torsion generator of H^3
    IntMatrix d3(base.at(3).num_generators(), base.at(0).num_generators());
    d3.entries[0][0] = 1;
    FibrationAudit audit = audit_fibration_bound(base, 2, d3);
    CHECK(audit.certified);
    CHECK(audit.strict);
    CHECK(audit.bound == 256);
    CHECK(audit.after_tau == 128);
    CHECK(!audit.conclusion.empty());
    CHECK(!audit.hypothesis.empty());

    FibrationAudit declined =
        audit_fibration_bound(base, 2, IntMatrix(base.at(3).num_generators(),
                                                 base.at(0).num_generators()));
    CHECK_FALSE(declined.certified);
    CHECK(declined.conclusion.empty());

    // the family over growing genus stays strict
    for (int g = 1; g <= 3; ++g) {
        GradedGroup b = kunneth_torsion_free(enriques,
                                             load_fixture("curve_genus" + std::to_string(g)));
        IntMatrix m(b.at(3).num_generators(), b.at(0).num_generators());
        m.entries[0][0] = 1;
        FibrationAudit a = audit_fibration_bound(b, 2, m);
        CHECK(a.certified);
        CHECK(a.after_tau < a.bound);
    }
}
