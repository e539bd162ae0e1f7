#include "equiquot/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace equiquot {

namespace {

std::vector<Perm> enumerate_closure(int degree, const std::vector<Perm>& gens) {
    std::unordered_map<Perm, int, PermHash> seen;
    std::vector<Perm> out;
    out.push_back(Perm::identity(degree));
    seen.emplace(out[0], 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const Perm& g : gens) {
            Perm p = out[i] * g;
            if (seen.emplace(p, static_cast<int>(out.size())).second)
                out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::string name)
    : degree_(degree), generators_(std::move(generators)), name_(std::move(name)) {
    for (const Perm& g : generators_)
        if (g.degree() != degree_)
            throw std::invalid_argument("PermGroup: generator degree mismatch");
    elements_ = enumerate_closure(degree_, generators_);
    for (std::size_t i = 0; i < elements_.size(); ++i)
        index_.emplace(elements_[i], static_cast<int>(i));
    identity_index_ = index_.at(Perm::identity(degree_));
}

int PermGroup::index_of(const Perm& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

int PermGroup::exponent() const {
    int e = 1;
    for (const Perm& g : elements_)
        e = static_cast<int>(std::lcm<long long>(e, g.order()));
    return e;
}

const std::vector<ConjugacyClass>& PermGroup::conjugacy_classes() const {
    if (!classes_.empty() || elements_.empty()) return classes_;
    class_of_.assign(elements_.size(), -1);
    // Conjugation orbits, seeded from the least unclassified element.
    for (int i = 0; i < order(); ++i) {
        if (class_of_[i] >= 0) continue;
        int cid = static_cast<int>(classes_.size());
        ConjugacyClass cls;
        cls.representative = i;
        std::vector<int> stack{i};
        class_of_[i] = cid;
        while (!stack.empty()) {
            int j = stack.back();
            stack.pop_back();
            cls.members.push_back(j);
            for (const Perm& g : generators_) {
                Perm c = g * elements_[j] * g.inverse();
                int k = index_of(c);
                if (class_of_[k] < 0) {
                    class_of_[k] = cid;
                    stack.push_back(k);
                }
            }
        }
        std::sort(cls.members.begin(), cls.members.end());
        classes_.push_back(std::move(cls));
    }
    return classes_;
}

int PermGroup::class_of(int element_index) const {
    conjugacy_classes();
    return class_of_[element_index];
}

int PermGroup::inverse_class(int c) const {
    const auto& cls = conjugacy_classes();
    return class_of_[inv(cls[c].representative)];
}

std::vector<int> PermGroup::minimal_generating_indices() const {
    std::vector<int> gens;
    std::vector<Perm> cur;
    std::size_t size = 1;
    for (int i = 0; i < order(); ++i) {
        if (size == elements_.size()) break;
        std::vector<Perm> trial = cur;
        trial.push_back(elements_[i]);
        auto closure = enumerate_closure(degree_, trial);
        if (closure.size() > size) {
            cur = std::move(trial);
            size = closure.size();
            gens.push_back(i);
        }
    }
    return gens;
}

GroupHom::GroupHom(GroupPtr src, GroupPtr tgt, std::vector<int> imgs)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
    if (images.size() != static_cast<std::size_t>(source->order()))
        throw std::invalid_argument("GroupHom: image table size mismatch");
    for (int i = 0; i < source->order(); ++i)
        for (int j = 0; j < source->order(); ++j)
            if (images[source->mult(i, j)] != target->mult(images[i], images[j]))
                throw std::invalid_argument("GroupHom: not multiplicative");
}

void ExactSequence::validate() const {
    if (!is_normal_in(*N, *G))
        throw std::logic_error("ExactSequence: N is not normal in G");
    if (static_cast<long long>(N->order()) * H->order() != G->order())
        throw std::logic_error("ExactSequence: |G| != |N|*|H|");
    // projection surjective with kernel exactly N; fibers of equal size |N|.
    std::vector<int> fiber(H->order(), 0);
    for (int i = 0; i < G->order(); ++i) {
        ++fiber[projection.images[i]];
        bool in_n = N->contains(G->element(i));
        if (in_n != (projection.images[i] == H->identity_index()))
            throw std::logic_error("ExactSequence: kernel is not N");
    }
    for (int f : fiber)
        if (f != N->order())
            throw std::logic_error("ExactSequence: projection fiber size mismatch");
    for (int h = 0; h < H->order(); ++h)
        if (projection.images[section[h]] != h)
            throw std::logic_error("ExactSequence: section mismatch");
}

// -- subgroup machinery ------------------------------------------------------

PermGroup subgroup_generated(int degree, const std::vector<Perm>& gens,
                             std::string name) {
    return PermGroup(degree, gens, std::move(name));
}

bool is_subgroup_of(const PermGroup& K, const PermGroup& G) {
    if (K.degree() != G.degree()) return false;
    for (const Perm& k : K.elements())
        if (!G.contains(k)) return false;
    return true;
}

bool is_normal_in(const PermGroup& N, const PermGroup& G) {
    if (!is_subgroup_of(N, G)) return false;
    for (const Perm& g : G.generators()) {
        Perm gi = g.inverse();
        for (const Perm& n : N.generators())
            if (!N.contains(g * n * gi)) return false;
    }
    return true;
}

PermGroup centralizer(const PermGroup& G, const Perm& g) {
    if (!G.contains(g))
        throw std::invalid_argument("centralizer: element not in group");
    std::vector<Perm> members;
    for (const Perm& h : G.elements())
        if (h * g == g * h) members.push_back(h);
    return PermGroup(G.degree(), members,
                     G.name().empty() ? "" : "Z_" + G.name());
}

PermGroup normalizer(const PermGroup& G, const PermGroup& K) {
    if (!is_subgroup_of(K, G))
        throw std::invalid_argument("normalizer: not a subgroup");
    std::vector<Perm> members;
    for (const Perm& g : G.elements()) {
        Perm gi = g.inverse();
        bool ok = true;
        for (const Perm& k : K.elements())
            if (!K.contains(g * k * gi)) { ok = false; break; }
        if (ok) members.push_back(g);
    }
    return PermGroup(G.degree(), members);
}

PermGroup intersection(const PermGroup& A, const PermGroup& B) {
    std::vector<Perm> members;
    for (const Perm& a : A.elements())
        if (B.contains(a)) members.push_back(a);
    return PermGroup(A.degree(), members);
}

bool conjugate_subgroups(const PermGroup& G, const PermGroup& A, const PermGroup& B) {
    if (A.order() != B.order()) return false;
    for (const Perm& g : G.elements()) {
        Perm gi = g.inverse();
        bool ok = true;
        for (const Perm& a : A.generators())
            if (!B.contains(g * a * gi)) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

ExactSequence quotient_sequence(const PermGroup& G, const PermGroup& N,
                                std::string name) {
    if (!is_normal_in(N, G))
        throw std::invalid_argument("quotient_sequence: N not normal in G");
    const int n = G.order();
    // Left cosets gN, labeled by their least member; cosets sorted by label.
    std::vector<int> coset_label(n, -1);
    std::vector<int> labels;
    for (int i = 0; i < n; ++i) {
        if (coset_label[i] >= 0) continue;
        for (const Perm& m : N.elements()) {
            int j = G.index_of(G.element(i) * m);
            coset_label[j] = i;   // i is least: elements are visited in order
        }
        labels.push_back(i);
    }
    std::map<int, int> coset_id;
    for (std::size_t c = 0; c < labels.size(); ++c) coset_id[labels[c]] = static_cast<int>(c);
    const int q = static_cast<int>(labels.size());

    auto act = [&](const Perm& g) {
        std::vector<int> im(q);
        for (int c = 0; c < q; ++c) {
            int j = G.index_of(g * G.element(labels[c]));
            im[c] = coset_id.at(coset_label[j]);
        }
        return Perm(im);
    };

    std::vector<Perm> hgens;
    for (const Perm& g : G.generators()) hgens.push_back(act(g));
    auto Hp = std::make_shared<PermGroup>(q, hgens,
                                          name.empty() ? "" : name + "/N");
    auto Gp = std::make_shared<PermGroup>(G);
    auto Np = std::make_shared<PermGroup>(N);

    std::vector<int> proj(n);
    for (int i = 0; i < n; ++i) proj[i] = Hp->index_of(act(G.element(i)));
    std::vector<int> incl(N.order());
    for (int i = 0; i < N.order(); ++i) incl[i] = G.index_of(N.element(i));

    ExactSequence seq;
    seq.N = Np;
    seq.G = Gp;
    seq.H = Hp;
    seq.inclusion = GroupHom(Np, Gp, incl);
    seq.projection = GroupHom(Gp, Hp, proj);
    seq.section.assign(Hp->order(), -1);
    for (int i = 0; i < n; ++i)
        if (seq.section[proj[i]] < 0) seq.section[proj[i]] = i;
    seq.name = std::move(name);
    seq.validate();
    return seq;
}

// -- constructions -----------------------------------------------------------

PermGroup symmetric_group(int n) {
    std::vector<Perm> gens;
    if (n >= 2) {
        std::vector<int> t(n);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[0], t[1]);
        gens.emplace_back(t);
        if (n >= 3) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
            gens.emplace_back(c);
        }
    }
    return PermGroup(std::max(n, 1), gens, "sym" + std::to_string(n));
}

PermGroup cyclic_group(int n) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    std::vector<Perm> gens;
    if (n >= 2) gens.emplace_back(c);
    return PermGroup(std::max(n, 1), gens, "cyclic" + std::to_string(n));
}

PermGroup trivial_group(int degree) {
    return PermGroup(degree, {}, "trivial");
}

PermGroup direct_product(const PermGroup& A, const PermGroup& B) {
    const int da = A.degree(), db = B.degree();
    std::vector<Perm> gens;
    for (const Perm& a : A.generators()) {
        std::vector<int> im(da + db);
        for (int i = 0; i < da; ++i) im[i] = a(i);
        for (int i = 0; i < db; ++i) im[da + i] = da + i;
        gens.emplace_back(im);
    }
    for (const Perm& b : B.generators()) {
        std::vector<int> im(da + db);
        for (int i = 0; i < da; ++i) im[i] = i;
        for (int i = 0; i < db; ++i) im[da + i] = da + b(i);
        gens.emplace_back(im);
    }
    std::string name;
    if (!A.name().empty() && !B.name().empty()) name = A.name() + "x" + B.name();
    return PermGroup(da + db, gens, name);
}

PermGroup direct_power(const PermGroup& T, int n) {
    const int d = T.degree();
    std::vector<Perm> gens;
    for (int b = 0; b < n; ++b) {
        for (const Perm& t : T.generators()) {
            std::vector<int> im(n * d);
            std::iota(im.begin(), im.end(), 0);
            for (int i = 0; i < d; ++i) im[b * d + i] = b * d + t(i);
            gens.emplace_back(im);
        }
    }
    std::string name = T.name().empty() ? "" : T.name() + "^" + std::to_string(n);
    return PermGroup(std::max(n * d, 1), gens, name);
}

ExactSequence semidirect_product(const PermGroup& N, const PermGroup& H,
                                 const std::vector<std::vector<int>>& action,
                                 std::string name) {
    const int nn = N.order(), nh = H.order();
    if (static_cast<int>(action.size()) != nh)
        throw std::invalid_argument("semidirect_product: action table size");
    // Exhaustive check: each map is an automorphism, and h -> phi_h is a
    // homomorphism.
    for (int h = 0; h < nh; ++h) {
        const auto& phi = action[h];
        std::vector<char> seen(nn, 0);
        for (int v : phi) {
            if (v < 0 || v >= nn || seen[v])
                throw std::invalid_argument("semidirect_product: action not bijective");
            seen[v] = 1;
        }
        for (int i = 0; i < nn; ++i)
            for (int j = 0; j < nn; ++j)
                if (phi[N.mult(i, j)] != N.mult(phi[i], phi[j]))
                    throw std::invalid_argument(
                        "semidirect_product: action value is not an automorphism");
    }
    for (int h1 = 0; h1 < nh; ++h1)
        for (int h2 = 0; h2 < nh; ++h2)
            for (int i = 0; i < nn; ++i)
                if (action[H.mult(h1, h2)][i] != action[h1][action[h2][i]])
                    throw std::invalid_argument(
                        "semidirect_product: action is not a homomorphism");

    // G acts on the set N x H: (a,s) . (n,h) = (a * phi_s(n), s*h).
    const int deg = nn * nh;
    auto point = [&](int n_idx, int h_idx) { return n_idx * nh + h_idx; };
    auto as_perm = [&](int a, int s) {
        std::vector<int> im(deg);
        for (int n_idx = 0; n_idx < nn; ++n_idx)
            for (int h_idx = 0; h_idx < nh; ++h_idx)
                im[point(n_idx, h_idx)] =
                    point(N.mult(a, action[s][n_idx]), H.mult(s, h_idx));
        return Perm(im);
    };

    std::vector<Perm> gens;
    for (const Perm& g : N.generators()) gens.push_back(as_perm(N.index_of(g), H.identity_index()));
    for (const Perm& g : H.generators()) gens.push_back(as_perm(N.identity_index(), H.index_of(g)));
    PermGroup G(deg, gens, name);
    if (G.order() != nn * nh)
        throw std::logic_error("semidirect_product: unexpected order");

    std::vector<Perm> n_in_g;
    for (int i = 0; i < nn; ++i) n_in_g.push_back(as_perm(i, H.identity_index()));
    PermGroup Nsub(deg, n_in_g, N.name());
    auto seq = quotient_sequence(G, Nsub, std::move(name));
    return seq;
}

ExactSequence wreath_product(const PermGroup& T, int n, std::string name) {
    PermGroup N = direct_power(T, n);
    PermGroup H = symmetric_group(n);
    const int d = T.degree();
    // sigma acts on block-diagonal permutations by conjugation with the
    // block-permuting permutation; this is exactly coordinate permutation.
    std::vector<std::vector<int>> action(H.order(), std::vector<int>(N.order()));
    for (int h = 0; h < H.order(); ++h) {
        const Perm& s = H.element(h);
        std::vector<int> bim(n * d);
        for (int b = 0; b < n; ++b)
            for (int i = 0; i < d; ++i) bim[b * d + i] = s(b) * d + i;
        Perm blocks(bim);
        Perm blocks_inv = blocks.inverse();
        for (int i = 0; i < N.order(); ++i)
            action[h][i] = N.index_of(blocks * N.element(i) * blocks_inv);
    }
    if (name.empty())
        name = (T.name().empty() ? "T" : T.name()) + "wr" + std::to_string(n);
    return semidirect_product(N, H, action, std::move(name));
}

HeisenbergGroup heisenberg_group(int n) {
    if (n < 2) throw std::invalid_argument("heisenberg_group: n >= 2 required");
    // Elements (a,b,c) ~ the matrix [[1,a,c],[0,1,b],[0,0,1]];
    // (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'). Regular action on n^3.
    const int deg = n * n * n;
    auto id_of = [&](int a, int b, int c) { return (a * n + b) * n + c; };
    auto left = [&](int a, int b, int c) {
        std::vector<int> im(deg);
        for (int a2 = 0; a2 < n; ++a2)
            for (int b2 = 0; b2 < n; ++b2)
                for (int c2 = 0; c2 < n; ++c2)
                    im[id_of(a2, b2, c2)] =
                        id_of((a + a2) % n, (b + b2) % n, (c + c2 + a * b2) % n);
        return Perm(im);
    };
    Perm x = left(1, 0, 0), y = left(0, 1, 0), z = left(0, 0, 1);
    PermGroup G(deg, {x, y}, "heisenberg" + std::to_string(n));
    PermGroup N(deg, {z});
    HeisenbergGroup out{quotient_sequence(G, N, G.name()), x, y, z};
    return out;
}

ExactSequence exs0_sequence(int n) {
    PermGroup Zn = cyclic_group(n);
    PermGroup N = direct_power(Zn, 3);
    PermGroup H = direct_power(Zn, 2);
    N.set_name("(Z/" + std::to_string(n) + ")^3");
    H.set_name("(Z/" + std::to_string(n) + ")^2");

    // Read off the coordinate tuple of an element of a direct power of Z/n
    // from the image of each block's base point.
    auto coords = [n](const Perm& p, int blocks) {
        std::vector<int> v(blocks);
        for (int b = 0; b < blocks; ++b) v[b] = p(b * n) - b * n;
        return v;
    };
    auto n_elt = [&](int v1, int v2, int v3) {
        std::vector<int> im(3 * n);
        for (int i = 0; i < n; ++i) {
            im[i] = (i + v1) % n;
            im[n + i] = n + (i + v2) % n;
            im[2 * n + i] = 2 * n + (i + v3) % n;
        }
        return N.index_of(Perm(im));
    };

    std::vector<std::vector<int>> action(H.order(), std::vector<int>(N.order()));
    for (int h = 0; h < H.order(); ++h) {
        auto ab = coords(H.element(h), 2);
        for (int i = 0; i < N.order(); ++i) {
            auto v = coords(N.element(i), 3);
            action[h][i] =
                n_elt((v[0] + ab[0] * v[1] + ab[1] * v[2]) % n, v[1], v[2]);
        }
    }
    return semidirect_product(N, H, action, "exS0_" + std::to_string(n));
}

namespace {

// Unit Hurwitz quaternions, with coordinates doubled to stay integral.
struct Quat {
    std::array<int, 4> c;   // 2*(w,x,y,z)
    bool operator<(const Quat& o) const { return c < o.c; }
    bool operator==(const Quat& o) const { return c == o.c; }
};

Quat qmul(const Quat& a, const Quat& b) {
    auto [w1, x1, y1, z1] = a.c;
    auto [w2, x2, y2, z2] = b.c;
    std::array<int, 4> r{w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
                         w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
                         w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
                         w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2};
    for (int& v : r) {
        if (v % 2 != 0) throw std::logic_error("qmul: non-integral product");
        v /= 2;
    }
    return Quat{r};
}

} // namespace

ExactSequence a4_cover_sequence() {
    // The 24 unit Hurwitz quaternions: +-1, +-i, +-j, +-k and (+-1+-i+-j+-k)/2.
    std::vector<Quat> units;
    for (int axis = 0; axis < 4; ++axis)
        for (int s : {-2, 2}) {
            Quat q{{0, 0, 0, 0}};
            q.c[axis] = s;
            units.push_back(q);
        }
    for (int s0 : {-1, 1})
        for (int s1 : {-1, 1})
            for (int s2 : {-1, 1})
                for (int s3 : {-1, 1})
                    units.push_back(Quat{{s0, s1, s2, s3}});
    std::sort(units.begin(), units.end());
    auto idx = [&](const Quat& q) {
        return static_cast<int>(std::lower_bound(units.begin(), units.end(), q) -
                                units.begin());
    };
    // Regular action.
    auto left = [&](const Quat& q) {
        std::vector<int> im(24);
        for (int i = 0; i < 24; ++i) im[i] = idx(qmul(q, units[i]));
        return Perm(im);
    };
    Quat i_unit{{0, 2, 0, 0}};
    Quat omega{{1, 1, 1, 1}};   // (1+i+j+k)/2, order 6
    PermGroup N(24, {left(i_unit), left(omega)}, "2T");
    if (N.order() != 24) throw std::logic_error("a4_cover: 2T construction failed");

    PermGroup center(24, {left(Quat{{-2, 0, 0, 0}})});
    ExactSequence inner = quotient_sequence(N, center, "2T");
    const PermGroup& H = *inner.H;   // abstractly A4

    // H acts on N by conjugation through any lift; well defined since the
    // kernel of the projection is central.
    std::vector<std::vector<int>> action(H.order(), std::vector<int>(24));
    for (int h = 0; h < H.order(); ++h) {
        const Perm& lift = N.element(inner.section[h]);
        Perm lift_inv = lift.inverse();
        for (int i = 0; i < 24; ++i)
            action[h][i] = N.index_of(lift * N.element(i) * lift_inv);
    }
    return semidirect_product(N, H, action, "a4cover");
}

// -- isomorphism -------------------------------------------------------------

namespace {

std::vector<int> order_profile(const PermGroup& G) {
    std::vector<int> v;
    v.reserve(G.order());
    for (int i = 0; i < G.order(); ++i) v.push_back(G.element_order(i));
    std::sort(v.begin(), v.end());
    return v;
}

// Try to extend generator images to a full isomorphism by closing the
// partial map under multiplication.
bool extends_to_isomorphism(const PermGroup& A, const PermGroup& B,
                            const std::vector<int>& gens,
                            const std::vector<int>& imgs) {
    std::vector<int> map(A.order(), -1);
    std::vector<char> hit(B.order(), 0);
    map[A.identity_index()] = B.identity_index();
    hit[B.identity_index()] = 1;
    std::vector<int> frontier{A.identity_index()};
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        int a = frontier[i];
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            int a2 = A.mult(a, gens[gi]);
            int b2 = B.mult(map[a], imgs[gi]);
            if (map[a2] < 0) {
                if (hit[b2]) return false;
                map[a2] = b2;
                hit[b2] = 1;
                frontier.push_back(a2);
            } else if (map[a2] != b2) {
                return false;
            }
        }
    }
    if (frontier.size() != static_cast<std::size_t>(A.order())) return false;
    // The closure respects right multiplication by generators by
    // construction; verify full multiplicativity.
    for (int i = 0; i < A.order(); ++i)
        for (int j = 0; j < A.order(); ++j)
            if (map[A.mult(i, j)] != B.mult(map[i], map[j])) return false;
    return true;
}

bool iso_search(const PermGroup& A, const PermGroup& B,
                const std::vector<int>& gens, std::vector<int>& imgs,
                std::size_t pos) {
    if (pos == gens.size())
        return extends_to_isomorphism(A, B, gens, imgs);
    int want = A.element_order(gens[pos]);
    for (int b = 0; b < B.order(); ++b) {
        if (B.element_order(b) != want) continue;
        imgs[pos] = b;
        if (iso_search(A, B, gens, imgs, pos + 1)) return true;
    }
    return false;
}

} // namespace

bool isomorphic(const PermGroup& A, const PermGroup& B) {
    if (A.order() != B.order()) return false;
    if (order_profile(A) != order_profile(B)) return false;
    if (A.conjugacy_classes().size() != B.conjugacy_classes().size()) return false;
    auto gens = A.minimal_generating_indices();
    std::vector<int> imgs(gens.size(), -1);
    return iso_search(A, B, gens, imgs, 0);
}

bool same_group_identity(const PermGroup& A, const PermGroup& B) {
    if (A.order() != B.order()) return false;
    if (A.order() <= 64) return isomorphic(A, B);
    return A.name() == B.name();
}

} // namespace equiquot
