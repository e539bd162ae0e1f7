#include "equiquot/adequacy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace equiquot {

ExtensionWitness extension_exists(const ExactSequence& seq) {
    CharTable tg = character_table(seq.G);
    CharTable tn = character_table(seq.N);
    const int rows = tg.num_irreducibles();
    const int cols = tn.num_irreducibles();

    // mult[i][w] = multiplicity of W_w in Res^G_N chi_i
    std::vector<std::vector<long long>> mult(rows, std::vector<long long>(cols));
    for (int i = 0; i < rows; ++i)
        for (int w = 0; w < cols; ++w)
            mult[i][w] = restriction_multiplicity(tg.rows[i], tn, w);

    // Every W must be hit exactly once, so usable rows have entries in {0,1}
    // and multiplicities are 0 or 1: this is exact cover.
    std::vector<int> usable;
    for (int i = 0; i < rows; ++i) {
        bool ok = true;
        for (int w = 0; w < cols; ++w)
            if (mult[i][w] > 1) ok = false;
        if (ok) usable.push_back(i);
    }
    // deterministic search order: degree descending, then row index
    std::sort(usable.begin(), usable.end(), [&](int a, int b) {
        if (tg.degrees[a] != tg.degrees[b]) return tg.degrees[a] > tg.degrees[b];
        return a < b;
    });

    std::vector<char> covered(cols, 0);
    std::vector<int> chosen;
    std::vector<char> used(rows, 0);
    std::function<bool(int)> dfs = [&](int done) -> bool {
        if (done == cols) return true;
        int w = 0;
        while (covered[w]) ++w;
        for (int i : usable) {
            if (used[i] || mult[i][w] != 1) continue;
            bool clash = false;
            for (int v = 0; v < cols; ++v)
                if (mult[i][v] == 1 && covered[v]) clash = true;
            if (clash) continue;
            int gain = 0;
            for (int v = 0; v < cols; ++v)
                if (mult[i][v] == 1) { covered[v] = 1; ++gain; }
            used[i] = 1;
            chosen.push_back(i);
            if (dfs(done + gain)) return true;
            chosen.pop_back();
            used[i] = 0;
            for (int v = 0; v < cols; ++v)
                if (mult[i][v] == 1) covered[v] = 0;
        }
        return false;
    };

    ExtensionWitness out;
    if (dfs(0)) {
        out.exists = true;
        out.multiplicities.assign(rows, 0);
        for (int i : chosen) out.multiplicities[i] = 1;
        // re-restrict and confirm the witness covers each W exactly once
        for (int w = 0; w < cols; ++w) {
            long long total = 0;
            for (int i = 0; i < rows; ++i) total += out.multiplicities[i] * mult[i][w];
            if (total != 1) throw std::logic_error("extension_exists: witness check failed");
        }
    }
    return out;
}

bool theta_vanishes(const ExactSequence& seq) { return extension_exists(seq).exists; }

namespace {

// The stabilizer in H of a point under a permutation action given per
// H-element, as a subgroup of H.
PermGroup point_stabilizer(const PermGroup& H, const std::vector<std::vector<int>>& act,
                           int x) {
    std::vector<Perm> gens;
    for (int h = 0; h < H.order(); ++h)
        if (act[h][x] == x) gens.push_back(H.element(h));
    return PermGroup(H.degree(), gens, "stab");
}

struct Census {
    OrbitCensus summary;
    std::vector<PermGroup> stabilizers;   ///< one per orbit
};

Census census_of_action(const PermGroup& H, const std::vector<std::vector<int>>& act,
                        int num_points) {
    Census out;
    std::vector<char> seen(num_points, 0);
    for (int x = 0; x < num_points; ++x) {
        if (seen[x]) continue;
        std::vector<int> orbit;
        orbit.push_back(x);
        seen[x] = 1;
        for (std::size_t q = 0; q < orbit.size(); ++q)
            for (int h = 0; h < H.order(); ++h) {
                int y = act[h][orbit[q]];
                if (!seen[y]) {
                    seen[y] = 1;
                    orbit.push_back(y);
                }
            }
        PermGroup stab = point_stabilizer(H, act, x);
        out.summary.entries.emplace_back(stab.order(), static_cast<int>(orbit.size()));
        out.stabilizers.push_back(std::move(stab));
    }
    std::sort(out.summary.entries.begin(), out.summary.entries.end());
    return out;
}

// Multiset equality of stabilizer conjugacy types in H.
bool same_stabilizer_types(const PermGroup& H, std::vector<PermGroup> a,
                           std::vector<PermGroup> b) {
    if (a.size() != b.size()) return false;
    std::vector<char> used(b.size(), 0);
    for (const auto& s : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j] || b[j].order() != s.order()) continue;
            if (conjugate_subgroups(H, s, b[j])) {
                used[j] = 1;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

} // namespace

ConditionIII condition_iii(const ExactSequence& seq) {
    CharTable tn = character_table(seq.N);
    auto act_irr = h_action_on_irr(seq, tn);
    auto act_cls = h_action_on_classes(seq);
    Census cls = census_of_action(*seq.H, act_cls,
                                  static_cast<int>(seq.N->conjugacy_classes().size()));
    Census irr = census_of_action(*seq.H, act_irr, tn.num_irreducibles());
    ConditionIII out;
    out.class_side = cls.summary;
    out.char_side = irr.summary;
    out.pass = same_stabilizer_types(*seq.H, cls.stabilizers, irr.stabilizers);
    return out;
}

S0Report in_s0(const ExactSequence& seq) {
    S0Report rep;
    rep.sequence_name = seq.name;
    ExtensionWitness w = extension_exists(seq);
    rep.cond_ii = w.exists;
    rep.witness = w.multiplicities;
    rep.cond_iii = condition_iii(seq);
    rep.in_s0 = rep.cond_ii && rep.cond_iii.pass;
    return rep;
}

AdequacyReport is_s0_adequate(const GSet& X) {
    AdequacyReport rep;
    rep.adequate = true;
    for (const Stratum& st : stratify(X)) {
        S0Report s = in_s0(st.seq);
        if (s.sequence_name.empty())
            s.sequence_name = "stabilizer type of order " + std::to_string(st.N->order());
        rep.adequate = rep.adequate && s.in_s0;
        rep.strata.push_back(std::move(s));
    }
    if (rep.adequate)
        rep.conclusion =
            "certified consequence: the motivic measure of the quotient pair agrees, "
            "mu^G(X) = mu(X/^ex G)";
    return rep;
}

ComponentsReport components_free_case(const ExactSequence& seq, const GSet& X) {
    if (X.group()->order() != seq.H->order() || !(X.group()->elements() == seq.H->elements()))
        throw std::invalid_argument("components_free_case: X must be an H-set");
    for (int x = 0; x < X.size(); ++x)
        if (stabilizer(X, x).order() != 1)
            throw std::invalid_argument("components_free_case: H-action must be free");
    if (!extension_exists(seq).exists)
        throw std::invalid_argument("components_free_case: condition (ii) must hold");

    CharTable tn = character_table(seq.N);
    auto act_irr = h_action_on_irr(seq, tn);
    Census irr = census_of_action(*seq.H, act_irr, tn.num_irreducibles());
    ComponentsReport out;
    out.count = static_cast<int>(irr.stabilizers.size());
    for (const PermGroup& hr : irr.stabilizers) {
        // |X / H_r|: orbits of the stabilizer subgroup on X
        std::vector<int> elems;
        for (const Perm& p : hr.elements()) elems.push_back(X.group()->index_of(p));
        std::vector<char> seen(X.size(), 0);
        int orbits_count = 0;
        for (int x = 0; x < X.size(); ++x) {
            if (seen[x]) continue;
            ++orbits_count;
            std::vector<int> stack{x};
            seen[x] = 1;
            while (!stack.empty()) {
                int y = stack.back();
                stack.pop_back();
                for (int g : elems) {
                    int z = X.act(g, y);
                    if (!seen[z]) {
                        seen[z] = 1;
                        stack.push_back(z);
                    }
                }
            }
        }
        out.quotient_sizes.push_back(orbits_count);
    }
    return out;
}

} // namespace equiquot
