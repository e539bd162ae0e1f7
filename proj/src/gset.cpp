#include "equiquot/gset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace equiquot {

GSet::GSet(GroupPtr group, std::vector<std::string> labels,
           const std::vector<std::vector<int>>& generator_action)
    : group_(std::move(group)), labels_(std::move(labels)) {
    const int n = static_cast<int>(labels_.size());
    const auto& gens = group_->generators();
    if (generator_action.size() != gens.size())
        throw std::invalid_argument("GSet: one action row per generator required");
    for (const auto& row : generator_action) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("GSet: action row size mismatch");
        std::vector<char> hit(n, 0);
        for (int v : row) {
            if (v < 0 || v >= n || hit[v])
                throw std::invalid_argument("GSet: action row not a bijection");
            hit[v] = 1;
        }
    }
    table_.assign(group_->order(), {});
    std::vector<char> known(group_->order(), 0);
    const int id = group_->identity_index();
    table_[id].resize(n);
    std::iota(table_[id].begin(), table_[id].end(), 0);
    known[id] = 1;
    std::queue<int> q;
    q.push(id);
    while (!q.empty()) {
        int e = q.front();
        q.pop();
        for (std::size_t j = 0; j < gens.size(); ++j) {
            int f = group_->index_of(gens[j] * group_->element(e));
            if (known[f]) continue;
            known[f] = 1;
            table_[f].resize(n);
            for (int x = 0; x < n; ++x)
                table_[f][x] = generator_action[j][table_[e][x]];
            q.push(f);
        }
    }
    verify();
}

GSet GSet::from_full_table(GroupPtr group, std::vector<std::string> labels,
                           std::vector<std::vector<int>> table) {
    GSet X;
    X.group_ = std::move(group);
    X.labels_ = std::move(labels);
    X.table_ = std::move(table);
    if (X.table_.size() != static_cast<std::size_t>(X.group_->order()))
        throw std::invalid_argument("GSet: table must have one row per element");
    X.verify();
    return X;
}

void GSet::verify() const {
    const int n = size();
    const int id = group_->identity_index();
    for (int x = 0; x < n; ++x)
        if (table_[id][x] != x) throw std::invalid_argument("GSet: identity must act trivially");
    // Compatibility on generator * element pairs; complete by induction on
    // word length.
    for (const Perm& gen : group_->generators()) {
        int g = group_->index_of(gen);
        for (int h = 0; h < group_->order(); ++h) {
            int gh = group_->index_of(gen * group_->element(h));
            for (int x = 0; x < n; ++x)
                if (table_[gh][x] != table_[g][table_[h][x]])
                    throw std::invalid_argument("GSet: action not compatible with multiplication");
        }
    }
}

std::vector<std::vector<int>> orbits(const GSet& X) {
    const int n = X.size();
    std::vector<int> root(n, -1);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < n; ++x) {
        if (root[x] >= 0) continue;
        std::vector<int> orb{x};
        root[x] = x;
        std::queue<int> q;
        q.push(x);
        while (!q.empty()) {
            int y = q.front();
            q.pop();
            for (int g = 0; g < X.group()->order(); ++g) {
                int z = X.act(g, y);
                if (root[z] < 0) {
                    root[z] = x;
                    orb.push_back(z);
                    q.push(z);
                }
            }
        }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

PermGroup stabilizer(const GSet& X, int x) {
    if (x < 0 || x >= X.size()) throw std::out_of_range("stabilizer: point not in set");
    std::vector<Perm> fix;
    for (int g = 0; g < X.group()->order(); ++g)
        if (X.act(g, x) == x) fix.push_back(X.group()->element(g));
    return PermGroup(X.group()->degree(), fix, "Stab");
}

std::vector<int> quotient(const GSet& X) {
    std::vector<int> reps;
    for (const auto& orb : orbits(X)) reps.push_back(orb.front());
    std::sort(reps.begin(), reps.end());
    return reps;
}

GSet trivial_gset(GroupPtr G, std::vector<std::string> labels) {
    const int n = static_cast<int>(labels.size());
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> rows(G->generators().size(), id);
    return GSet(std::move(G), std::move(labels), rows);
}

GSet left_translation_gset(GroupPtr G) {
    std::vector<std::string> labels;
    for (const Perm& p : G->elements()) labels.push_back(p.to_cycle_string());
    std::vector<std::vector<int>> rows;
    for (const Perm& gen : G->generators()) {
        std::vector<int> row(G->order());
        for (int x = 0; x < G->order(); ++x)
            row[x] = G->index_of(gen * G->element(x));
        rows.push_back(std::move(row));
    }
    return GSet(std::move(G), std::move(labels), rows);
}

GSet coset_gset(GroupPtr G, const PermGroup& K) {
    if (!is_subgroup_of(K, *G)) throw std::invalid_argument("coset_gset: K must be a subgroup");
    const int n = G->order();
    std::vector<int> coset(n, -1);
    std::vector<int> reps;
    // Elements are lex sorted, so the first unassigned member is the least
    // element of its coset.
    for (int e = 0; e < n; ++e) {
        if (coset[e] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(e);
        for (const Perm& k : K.elements())
            coset[G->index_of(G->element(e) * k)] = c;
    }
    std::vector<std::string> labels;
    for (int r : reps) labels.push_back(G->element(r).to_cycle_string() + "K");
    std::vector<std::vector<int>> rows;
    for (const Perm& gen : G->generators()) {
        std::vector<int> row(reps.size());
        for (std::size_t c = 0; c < reps.size(); ++c)
            row[c] = coset[G->index_of(gen * G->element(reps[c]))];
        rows.push_back(std::move(row));
    }
    return GSet(std::move(G), std::move(labels), rows);
}

GSet natural_gset(GroupPtr G, std::vector<std::string> labels) {
    const int n = G->degree();
    if (labels.empty())
        for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("natural_gset: need one label per domain point");
    std::vector<std::vector<int>> rows;
    for (const Perm& gen : G->generators()) rows.push_back(gen.images());
    return GSet(std::move(G), std::move(labels), rows);
}

GSet disjoint_union(const GSet& A, const GSet& B) {
    if (A.group() != B.group() && !(A.group()->elements() == B.group()->elements()))
        throw std::invalid_argument("disjoint_union: same group required");
    std::vector<std::string> labels = A.labels();
    for (const auto& l : B.labels()) labels.push_back(l);
    std::vector<std::vector<int>> table(A.group()->order());
    for (int g = 0; g < A.group()->order(); ++g) {
        table[g] = A.table()[g];
        for (int x = 0; x < B.size(); ++x)
            table[g].push_back(A.size() + B.act(g, x));
    }
    return GSet::from_full_table(A.group(), std::move(labels), std::move(table));
}

GSet power_gset(GroupPtr G, const std::vector<std::string>& alphabet, int n) {
    if (G->degree() != n) throw std::invalid_argument("power_gset: group degree must equal n");
    const int a = static_cast<int>(alphabet.size());
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= a;
    std::vector<std::string> labels;
    std::vector<int> digits(n, 0);
    for (long long p = 0; p < total; ++p) {
        long long v = p;
        std::string lab;
        for (int i = 0; i < n; ++i) {
            digits[i] = static_cast<int>(v % a);
            v /= a;
        }
        for (int i = 0; i < n; ++i) lab += alphabet[digits[i]];
        labels.push_back(lab);
    }
    // (g.t)(i) = t(g^{-1}(i))
    std::vector<std::vector<int>> rows;
    for (const Perm& gen : G->generators()) {
        Perm gi = gen.inverse();
        std::vector<int> row(total);
        for (long long p = 0; p < total; ++p) {
            long long v = p;
            for (int i = 0; i < n; ++i) {
                digits[i] = static_cast<int>(v % a);
                v /= a;
            }
            long long q = 0;
            for (int i = n - 1; i >= 0; --i) q = q * a + digits[gi(i)];
            row[p] = static_cast<int>(q);
        }
        rows.push_back(std::move(row));
    }
    return GSet(std::move(G), std::move(labels), rows);
}

GSet inertia(const GSet& X) {
    const GroupPtr& G = X.group();
    std::vector<std::pair<int, int>> pts;
    for (int g = 0; g < G->order(); ++g)
        for (int x = 0; x < X.size(); ++x)
            if (X.act(g, x) == x) pts.emplace_back(g, x);
    std::map<std::pair<int, int>, int> index;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        index[pts[i]] = static_cast<int>(i);
        labels.push_back("(" + G->element(pts[i].first).to_cycle_string() + ";" +
                         X.label(pts[i].second) + ")");
    }
    std::vector<std::vector<int>> table(G->order(), std::vector<int>(pts.size()));
    for (int h = 0; h < G->order(); ++h) {
        const Perm& ph = G->element(h);
        Perm phi = ph.inverse();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            int cg = G->index_of(ph * G->element(pts[i].first) * phi);
            table[h][i] = index.at({cg, X.act(h, pts[i].second)});
        }
    }
    return GSet::from_full_table(G, std::move(labels), std::move(table));
}

ExtendedQuotient extended_quotient(const GSet& X) {
    ExtendedQuotient out;
    GSet in = inertia(X);
    out.inertia_orbits = orbits(in);
    out.size = static_cast<int>(out.inertia_orbits.size());
    // Independent count: sum over conjugacy classes of |X^g / Z(g)|.
    const GroupPtr& G = X.group();
    int total = 0;
    for (const auto& cls : G->conjugacy_classes()) {
        int g = cls.representative;
        std::vector<int> fixed;
        for (int x = 0; x < X.size(); ++x)
            if (X.act(g, x) == x) fixed.push_back(x);
        std::vector<int> cent;
        const Perm& pg = G->element(g);
        for (int z = 0; z < G->order(); ++z)
            if (G->element(z) * pg == pg * G->element(z)) cent.push_back(z);
        // orbits of the centralizer on the fixed points
        std::map<int, int> pos;
        for (std::size_t i = 0; i < fixed.size(); ++i) pos[fixed[i]] = static_cast<int>(i);
        std::vector<char> seen(fixed.size(), 0);
        for (std::size_t i = 0; i < fixed.size(); ++i) {
            if (seen[i]) continue;
            ++total;
            std::queue<int> q;
            q.push(static_cast<int>(i));
            seen[i] = 1;
            while (!q.empty()) {
                int y = q.front();
                q.pop();
                for (int z : cent) {
                    int img = pos.at(X.act(z, fixed[y]));
                    if (!seen[img]) {
                        seen[img] = 1;
                        q.push(img);
                    }
                }
            }
        }
    }
    out.class_formula_size = total;
    if (out.size != out.class_formula_size)
        throw std::logic_error("extended_quotient: inertia-orbit and class-formula counts differ");
    return out;
}

GSet induce(GroupPtr G, const PermGroup& K, const GSet& Y) {
    if (!is_subgroup_of(K, *G)) throw std::invalid_argument("induce: K must be a subgroup of G");
    if (K.order() != Y.group()->order() || !(K.elements() == Y.group()->elements()))
        throw std::invalid_argument("induce: Y must be a K-set");
    const int n = G->order();
    std::vector<int> coset(n, -1);
    std::vector<int> reps;
    for (int e = 0; e < n; ++e) {
        if (coset[e] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(e);
        for (const Perm& k : K.elements())
            coset[G->index_of(G->element(e) * k)] = c;
    }
    const int m = static_cast<int>(reps.size());
    std::vector<std::string> labels;
    for (int c = 0; c < m; ++c)
        for (int y = 0; y < Y.size(); ++y)
            labels.push_back(G->element(reps[c]).to_cycle_string() + "|" + Y.label(y));
    std::vector<std::vector<int>> table(n, std::vector<int>(m * Y.size()));
    for (int g = 0; g < n; ++g) {
        for (int c = 0; c < m; ++c) {
            Perm gr = G->element(g) * G->element(reps[c]);
            int c2 = coset[G->index_of(gr)];
            Perm k = G->element(reps[c2]).inverse() * gr;
            int ky = Y.group()->index_of(k);
            for (int y = 0; y < Y.size(); ++y)
                table[g][c * Y.size() + y] = c2 * Y.size() + Y.act(ky, y);
        }
    }
    return GSet::from_full_table(std::move(G), std::move(labels), std::move(table));
}

std::vector<Stratum> stratify(const GSet& X) {
    const GroupPtr& G = X.group();
    // Group points by their exact stabilizer (as an element-index set).
    std::map<std::vector<int>, std::vector<int>> by_stab;
    for (int x = 0; x < X.size(); ++x) {
        std::vector<int> s;
        for (int g = 0; g < G->order(); ++g)
            if (X.act(g, x) == x) s.push_back(g);
        by_stab[s].push_back(x);
    }
    // Pick one representative subgroup per conjugacy class of stabilizers.
    std::vector<Stratum> out;
    std::vector<PermGroup> reps;
    for (const auto& [sidx, pts] : by_stab) {
        std::vector<Perm> gens;
        for (int g : sidx) gens.push_back(G->element(g));
        PermGroup N(G->degree(), gens, "N");
        bool found = false;
        for (const auto& r : reps)
            if (r.order() == N.order() && conjugate_subgroups(*G, r, N)) found = true;
        if (found) continue;
        reps.push_back(N);

        Stratum st;
        st.N = std::make_shared<PermGroup>(N);
        st.G_norm = std::make_shared<PermGroup>(normalizer(*G, N));
        st.seq = quotient_sequence(*st.G_norm, N);
        st.H = st.seq.H;
        // Points with stabilizer exactly N form a G_norm-set.
        const auto& pts_exact = by_stab.at(sidx);
        std::vector<std::string> labels;
        for (int x : pts_exact) labels.push_back(X.label(x));
        std::map<int, int> pos;
        for (std::size_t i = 0; i < pts_exact.size(); ++i) pos[pts_exact[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> rows;
        for (const Perm& gen : st.G_norm->generators()) {
            int g = G->index_of(gen);
            std::vector<int> row(pts_exact.size());
            for (std::size_t i = 0; i < pts_exact.size(); ++i)
                row[i] = pos.at(X.act(g, pts_exact[i]));
            rows.push_back(std::move(row));
        }
        st.Y = GSet(st.G_norm, std::move(labels), rows);
        out.push_back(std::move(st));
    }
    return out;
}

K0Class& K0Class::add_term(GroupPtr K, long long coeff) {
    if (coeff == 0) return *this;
    for (auto& [grp, c] : terms) {
        if (same_group_identity(*grp, *K)) {
            c += coeff;
            if (c == 0)
                terms.erase(std::remove_if(terms.begin(), terms.end(),
                                           [](const auto& t) { return t.second == 0; }),
                            terms.end());
            return *this;
        }
    }
    terms.emplace_back(std::move(K), coeff);
    return *this;
}

K0Class K0Class::operator+(const K0Class& o) const {
    K0Class out = *this;
    for (const auto& [grp, c] : o.terms) out.add_term(grp, c);
    return out;
}

K0Class K0Class::operator*(const K0Class& o) const {
    K0Class out;
    for (const auto& [a, ca] : terms)
        for (const auto& [b, cb] : o.terms)
            out.add_term(std::make_shared<PermGroup>(direct_product(*a, *b)), ca * cb);
    return out;
}

bool K0Class::operator==(const K0Class& o) const {
    if (terms.size() != o.terms.size()) return false;
    std::vector<char> used(o.terms.size(), 0);
    for (const auto& [grp, c] : terms) {
        bool found = false;
        for (std::size_t j = 0; j < o.terms.size(); ++j) {
            if (used[j] || o.terms[j].second != c) continue;
            if (same_group_identity(*grp, *o.terms[j].first)) {
                used[j] = 1;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::string K0Class::to_string() const {
    std::vector<std::pair<GroupPtr, long long>> sorted = terms;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first->order() != b.first->order()) return a.first->order() < b.first->order();
        return a.first->name() < b.first->name();
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [grp, c] : sorted) {
        if (!first) out << " + ";
        first = false;
        out << c << "*{pt}^(" << grp->name() << "|" << grp->order() << ")";
    }
    return first ? "0" : out.str();
}

K0Class k0_point(GroupPtr K) {
    K0Class c;
    c.add_term(std::move(K), 1);
    return c;
}

K0Class k0_class(const GSet& X) {
    K0Class c;
    for (const auto& orb : orbits(X))
        c.add_term(std::make_shared<PermGroup>(stabilizer(X, orb.front())), 1);
    return c;
}

K0Class iner_k0(const K0Class& c) {
    K0Class out;
    for (const auto& [K, coeff] : c.terms)
        for (const auto& cls : K->conjugacy_classes())
            out.add_term(std::make_shared<PermGroup>(
                             centralizer(*K, K->element(cls.representative))),
                         coeff);
    return out;
}

long long gamma(const K0Class& c) {
    long long total = 0;
    for (const auto& [grp, coeff] : c.terms) total += coeff;
    return total;
}

long long orbifold_euler(const GSet& X, int m) {
    if (m < 1) throw std::invalid_argument("orbifold_euler: m >= 1");
    K0Class c = k0_class(X);
    for (int i = 0; i < m; ++i) c = iner_k0(c);
    return gamma(c);
}

GSet random_gset(GroupPtr G, int max_points, std::mt19937& rng) {
    if (max_points < 1) throw std::invalid_argument("random_gset: max_points >= 1");
    GSet X;
    bool have = false;
    int used = 0, orbit_no = 0;
    std::uniform_int_distribution<int> ngens(1, 3);
    std::uniform_int_distribution<int> pick(0, G->order() - 1);
    for (int attempt = 0; attempt < 24; ++attempt) {
        std::vector<Perm> gens;
        int k = ngens(rng);
        for (int i = 0; i < k; ++i) gens.push_back(G->element(pick(rng)));
        PermGroup K(G->degree(), gens);
        int s = G->order() / K.order();
        if (used + s > max_points) continue;
        GSet orb = coset_gset(G, K);
        std::vector<std::string> labels;
        for (const auto& l : orb.labels())
            labels.push_back("o" + std::to_string(orbit_no) + "." + l);
        orb = GSet::from_full_table(G, std::move(labels), orb.table());
        X = have ? disjoint_union(X, orb) : orb;
        have = true;
        used += s;
        ++orbit_no;
        if (used >= max_points / 2 && orbit_no >= 2) break;
    }
    if (!have) {
        std::vector<Perm> all(G->elements());
        X = coset_gset(G, PermGroup(G->degree(), all));
    }
    return X;
}

} // namespace equiquot
