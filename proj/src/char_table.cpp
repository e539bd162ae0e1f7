#include "equiquot/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace equiquot {

namespace {

long long mulmod(long long a, long long b, long long p) {
    return static_cast<long long>(static_cast<__int128>(a) * b % p);
}

long long powmod(long long a, long long k, long long p) {
    long long r = 1 % p;
    a %= p;
    while (k > 0) {
        if (k & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        k >>= 1;
    }
    return r;
}

long long invmod(long long a, long long p) { return powmod(a, p - 2, p); }

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long long primitive_root(long long p) {
    std::vector<long long> factors;
    long long m = p - 1;
    for (long long d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        factors.push_back(d);
        while (m % d == 0) m /= d;
    }
    if (m > 1) factors.push_back(m);
    for (long long g = 2; g < p; ++g) {
        bool ok = true;
        for (long long q : factors)
            if (powmod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;

// Solve B * x = y where the r x d matrix B has full column rank d.
// Returns coordinates of each column of Y (r x m) in the column space.
Mat coordinates_in_basis(const Mat& basis_cols, const Mat& y_cols, long long p) {
    const int r = static_cast<int>(basis_cols[0].size());
    const int d = static_cast<int>(basis_cols.size());
    const int m = static_cast<int>(y_cols.size());
    // augmented elimination on [B | Y]
    Mat a(r, Vec(d + m, 0));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < d; ++j) a[i][j] = basis_cols[j][i];
        for (int j = 0; j < m; ++j) a[i][d + j] = y_cols[j][i];
    }
    int row = 0;
    std::vector<int> pivot_of_col(d, -1);
    for (int col = 0; col < d && row < r; ++col) {
        int piv = -1;
        for (int i = row; i < r; ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv < 0) throw std::logic_error("coordinates_in_basis: rank deficient");
        std::swap(a[piv], a[row]);
        long long inv = invmod(a[row][col], p);
        for (int j = col; j < d + m; ++j) a[row][j] = mulmod(a[row][j], inv, p);
        for (int i = 0; i < r; ++i) {
            if (i == row || a[i][col] == 0) continue;
            long long f = a[i][col];
            for (int j = col; j < d + m; ++j)
                a[i][j] = (a[i][j] - mulmod(f, a[row][j], p) % p + p) % p;
        }
        pivot_of_col[col] = row;
        ++row;
    }
    Mat x(m, Vec(d, 0));
    for (int j = 0; j < m; ++j) {
        for (int col = 0; col < d; ++col) x[j][col] = a[pivot_of_col[col]][d + j];
        // consistency: remaining rows must be zero
        for (int i = d; i < r; ++i)
            if (a[i][d + j] != 0)
                throw std::logic_error("coordinates_in_basis: vector outside subspace");
    }
    return x;
}

long long det_mod(Mat a, long long p) {
    const int n = static_cast<int>(a.size());
    long long det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != col) { std::swap(a[piv], a[col]); det = p - det; }
        det = mulmod(det, a[col][col], p);
        long long inv = invmod(a[col][col], p);
        for (int i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            long long f = mulmod(a[i][col], inv, p);
            for (int j = col; j < n; ++j)
                a[i][j] = (a[i][j] - mulmod(f, a[col][j], p) % p + p) % p;
        }
    }
    return det % p;
}

// Characteristic polynomial of an n x n matrix by evaluation of
// det(lambda*I - M) at n+1 points and Lagrange interpolation.
Vec char_poly(const Mat& m, long long p) {
    const int n = static_cast<int>(m.size());
    std::vector<long long> xs(n + 1), ys(n + 1);
    for (int t = 0; t <= n; ++t) {
        Mat a = m;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) a[i][j] = (p - a[i][j]) % p;
            a[i][i] = (a[i][i] + t) % p;
        }
        xs[t] = t;
        ys[t] = det_mod(a, p);
    }
    // Lagrange interpolation to coefficient form
    Vec poly(n + 1, 0);
    for (int t = 0; t <= n; ++t) {
        Vec basis{1};
        long long denom = 1;
        for (int u = 0; u <= n; ++u) {
            if (u == t) continue;
            Vec next(basis.size() + 1, 0);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                next[i + 1] = (next[i + 1] + basis[i]) % p;
                next[i] = (next[i] + mulmod(basis[i], p - xs[u] % p, p)) % p;
            }
            basis = std::move(next);
            denom = mulmod(denom, (xs[t] - xs[u] % p + p) % p, p);
        }
        long long c = mulmod(ys[t], invmod(denom, p), p);
        for (std::size_t i = 0; i < basis.size(); ++i)
            poly[i] = (poly[i] + mulmod(c, basis[i], p)) % p;
    }
    return poly;
}

Vec poly_roots(const Vec& poly, long long p) {
    Vec roots;
    for (long long x = 0; x < p; ++x) {
        long long v = 0;
        for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i)
            v = (mulmod(v, x, p) + poly[i]) % p;
        if (v == 0) roots.push_back(x);
    }
    return roots;
}

// Kernel basis of a (singular) square matrix mod p.
Mat kernel_basis(Mat a, long long p) {
    const int n = static_cast<int>(a.size());
    std::vector<int> pivot_col_of_row;
    std::vector<char> is_pivot(n, 0);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[row]);
        long long inv = invmod(a[row][col], p);
        for (int j = 0; j < n; ++j) a[row][j] = mulmod(a[row][j], inv, p);
        for (int i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            long long f = a[i][col];
            for (int j = 0; j < n; ++j)
                a[i][j] = (a[i][j] - mulmod(f, a[row][j], p) % p + p) % p;
        }
        pivot_col_of_row.push_back(col);
        is_pivot[col] = 1;
        ++row;
    }
    Mat out;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        Vec v(n, 0);
        v[col] = 1;
        for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
            v[pivot_col_of_row[i]] = (p - a[i][col]) % p;
        out.push_back(std::move(v));
    }
    return out;
}

long long isqrt_ll(long long v) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

} // namespace

bool ClassFunction::operator==(const ClassFunction& o) const {
    return group == o.group ? values == o.values
                            : group->elements() == o.group->elements() && values == o.values;
}

CharTable character_table(GroupPtr G) {
    const auto& classes = G->conjugacy_classes();
    const int r = static_cast<int>(classes.size());
    const long long n = G->order();
    const int e = G->exponent();
    const int k0 = G->class_of(G->identity_index());

    // modulus p = 1 (mod e), p > 2*sqrt(n)*n
    long long bound = static_cast<long long>(std::ceil(2.0 * std::sqrt(static_cast<double>(n)) * n));
    long long p = 0;
    for (long long cand = (bound / e + 1) * e + 1;; cand += e) {
        if (is_prime(cand)) { p = cand; break; }
        if (cand > bound + 1000000LL * e)
            throw std::runtime_error("character_table: modulus search failed");
    }

    // class multiplication coefficients a[i][j][k] = #{u in C_i : u^{-1} g_k in C_j}
    std::vector<Mat> amat(r, Mat(r, Vec(r, 0)));
    for (int k = 0; k < r; ++k) {
        const Perm& gk = G->element(classes[k].representative);
        for (int i = 0; i < r; ++i)
            for (int u : classes[i].members) {
                int j = G->class_of(G->index_of(G->element(u).inverse() * gk));
                ++amat[i][j][k];
            }
    }
    // (A_i)_{jk} = a_{ijk}; common eigenvectors w satisfy A_i w = w_i w.
    auto apply = [&](int i, const Vec& w) {
        Vec out(r, 0);
        for (int j = 0; j < r; ++j) {
            long long s = 0;
            for (int k = 0; k < r; ++k)
                s = (s + mulmod(amat[i][j][k] % p, w[k], p)) % p;
            out[j] = s;
        }
        return out;
    };

    // iterative splitting of class space into common eigenlines
    std::vector<Mat> subspaces;
    {
        Mat whole;
        for (int j = 0; j < r; ++j) {
            Vec v(r, 0);
            v[j] = 1;
            whole.push_back(std::move(v));
        }
        subspaces.push_back(std::move(whole));
    }
    for (int i = 0; i < r; ++i) {
        if (i == k0) continue;
        std::vector<Mat> next;
        for (Mat& sub : subspaces) {
            const int d = static_cast<int>(sub.size());
            if (d == 1) { next.push_back(std::move(sub)); continue; }
            Mat image;
            for (const Vec& b : sub) image.push_back(apply(i, b));
            Mat coords = coordinates_in_basis(sub, image, p);   // columns of M
            Mat m(d, Vec(d, 0));
            for (int col = 0; col < d; ++col)
                for (int rowi = 0; rowi < d; ++rowi) m[rowi][col] = coords[col][rowi];
            Vec roots = poly_roots(char_poly(m, p), p);
            if (roots.size() <= 1) { next.push_back(std::move(sub)); continue; }
            for (long long lam : roots) {
                Mat shifted = m;
                for (int t = 0; t < d; ++t) shifted[t][t] = (shifted[t][t] - lam % p + p) % p;
                Mat ker = kernel_basis(shifted, p);
                Mat piece;
                for (const Vec& coef : ker) {
                    Vec v(r, 0);
                    for (int t = 0; t < d; ++t)
                        for (int q = 0; q < r; ++q)
                            v[q] = (v[q] + mulmod(coef[t], sub[t][q], p)) % p;
                    piece.push_back(std::move(v));
                }
                if (!piece.empty()) next.push_back(std::move(piece));
            }
        }
        subspaces = std::move(next);
        bool done = true;
        for (const auto& s : subspaces)
            if (s.size() > 1) done = false;
        if (done) break;
    }
    if (static_cast<int>(subspaces.size()) != r)
        throw std::logic_error("character_table: eigenspace splitting incomplete");

    // inverse class sizes mod p
    Vec csize(r), csize_inv(r);
    for (int k = 0; k < r; ++k) {
        csize[k] = static_cast<long long>(classes[k].members.size()) % p;
        csize_inv[k] = invmod(csize[k], p);
    }

    // recover degrees and modular character values
    struct ModRow { long long deg; Vec chi; };
    std::vector<ModRow> mod_rows;
    for (const Mat& sub : subspaces) {
        Vec w = sub[0];
        if (w[k0] == 0) throw std::logic_error("character_table: eigenvector vanishes at identity");
        long long scale = invmod(w[k0], p);
        for (auto& v : w) v = mulmod(v, scale, p);
        Vec t(r);
        for (int k = 0; k < r; ++k) t[k] = mulmod(w[k], csize_inv[k], p);
        long long s = 0;
        for (int k = 0; k < r; ++k)
            s = (s + mulmod(csize[k], mulmod(t[k], t[G->inverse_class(k)], p), p)) % p;
        long long d2 = mulmod(n % p, invmod(s, p), p);
        long long d = isqrt_ll(d2);
        if (d * d != d2 || d < 1 || d * d > n)
            throw std::logic_error("character_table: degree recovery failed");
        Vec chi(r);
        for (int k = 0; k < r; ++k) chi[k] = mulmod(d % p, t[k], p);
        mod_rows.push_back({d, std::move(chi)});
    }

    // lift to cyclotomic values via discrete Fourier inversion over GF(p)
    long long z = primitive_root(p);
    long long theta = powmod(z, (p - 1) / e, p);   // primitive e-th root mod p
    // power map: class of g_k^l
    std::vector<std::vector<int>> power_class(r);
    for (int k = 0; k < r; ++k) {
        const Perm& gk = G->element(classes[k].representative);
        int s = gk.order();
        Perm cur = Perm::identity(G->degree());
        for (int l = 0; l < s; ++l) {
            power_class[k].push_back(G->class_of(G->index_of(cur)));
            cur = cur * gk;
        }
    }

    CharTable table;
    table.group = G;
    for (const ModRow& row : mod_rows) {
        ClassFunction cf;
        cf.group = G;
        cf.values.resize(r);
        for (int k = 0; k < r; ++k) {
            int s = static_cast<int>(power_class[k].size());
            long long theta_s = powmod(theta, e / s, p);
            long long s_inv = invmod(s, p);
            Cyclotomic val(0);
            for (int b = 0; b < s; ++b) {
                long long m = 0;
                for (int l = 0; l < s; ++l) {
                    long long tw = powmod(theta_s, static_cast<long long>(b) * l % (p - 1), p);
                    m = (m + mulmod(invmod(tw, p), row.chi[power_class[k][l]], p)) % p;
                }
                m = mulmod(m, s_inv, p);
                if (m > row.deg)
                    throw std::logic_error("character_table: multiplicity lift out of range");
                if (m != 0)
                    val += Cyclotomic(m) * Cyclotomic::root_of_unity(e, (e / s) * static_cast<long long>(b));
            }
            cf.values[k] = val;
        }
        if (!(cf.values[k0] == Cyclotomic(row.deg)))
            throw std::logic_error("character_table: lifted degree mismatch");
        table.rows.push_back(std::move(cf));
        table.degrees.push_back(row.deg);
    }

    // deterministic row order: by degree, then lexicographically on values
    std::vector<int> order(r);
    for (int i = 0; i < r; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (table.degrees[a] != table.degrees[b]) return table.degrees[a] < table.degrees[b];
        for (int k = 0; k < r; ++k) {
            if (table.rows[a].values[k] == table.rows[b].values[k]) continue;
            return table.rows[a].values[k] < table.rows[b].values[k];
        }
        return false;
    });
    CharTable sorted;
    sorted.group = G;
    for (int i : order) {
        sorted.rows.push_back(std::move(table.rows[i]));
        sorted.degrees.push_back(table.degrees[i]);
    }

    // exact verification of both orthogonality relations
    long long sum_sq = 0;
    for (long long d : sorted.degrees) sum_sq += d * d;
    if (sum_sq != n) throw std::logic_error("character_table: sum of squared degrees is not |G|");
    for (int a = 0; a < r; ++a)
        for (int b = a; b < r; ++b) {
            Cyclotomic s(0);
            for (int k = 0; k < r; ++k)
                s += Cyclotomic(static_cast<long long>(classes[k].members.size())) *
                     sorted.rows[a].values[k] * sorted.rows[b].values[k].conj();
            if (!(s == Cyclotomic(a == b ? n : 0)))
                throw std::logic_error("character_table: row orthogonality failed");
        }
    for (int k = 0; k < r; ++k)
        for (int l = k; l < r; ++l) {
            Cyclotomic s(0);
            for (int a = 0; a < r; ++a)
                s += sorted.rows[a].values[k] * sorted.rows[a].values[l].conj();
            long long expected = (k == l) ? n / static_cast<long long>(classes[k].members.size()) : 0;
            if (!(s == Cyclotomic(expected)))
                throw std::logic_error("character_table: column orthogonality failed");
        }
    return sorted;
}

ClassFunction trivial_character(GroupPtr G) {
    ClassFunction cf;
    cf.values.assign(G->conjugacy_classes().size(), Cyclotomic(1));
    cf.group = std::move(G);
    return cf;
}

ClassFunction regular_character(GroupPtr G) {
    ClassFunction cf;
    cf.group = G;
    cf.values.assign(G->conjugacy_classes().size(), Cyclotomic(0));
    cf.values[G->class_of(G->identity_index())] = Cyclotomic(G->order());
    return cf;
}

ClassFunction restrict_cf(const ClassFunction& chi, GroupPtr N) {
    ClassFunction out;
    out.group = N;
    for (const auto& cls : N->conjugacy_classes()) {
        const Perm& rep = N->element(cls.representative);
        int g = chi.group->index_of(rep);
        if (g < 0) throw std::invalid_argument("restrict_cf: not a subgroup element");
        out.values.push_back(chi.at_element(g));
    }
    return out;
}

ClassFunction induce_char(const ClassFunction& chi, GroupPtr G) {
    const GroupPtr& K = chi.group;
    ClassFunction out;
    out.group = G;
    Rational scale(1, K->order());
    for (const auto& cls : G->conjugacy_classes()) {
        const Perm& c = G->element(cls.representative);
        Cyclotomic s(0);
        for (const Perm& g : G->elements()) {
            Perm conj = g.inverse() * c * g;
            int k = K->index_of(conj);
            if (k >= 0) s += chi.at_element(k);
        }
        out.values.push_back(Cyclotomic(scale) * s);
    }
    return out;
}

Rational inner(const ClassFunction& a, const ClassFunction& b) {
    if (a.group->order() != b.group->order() || !(a.group->elements() == b.group->elements()))
        throw std::invalid_argument("inner: class functions on different groups");
    const auto& classes = a.group->conjugacy_classes();
    Cyclotomic s(0);
    for (std::size_t k = 0; k < classes.size(); ++k)
        s += Cyclotomic(static_cast<long long>(classes[k].members.size())) *
             a.values[k] * b.values[k].conj();
    Cyclotomic result = s / Cyclotomic(a.group->order());
    if (!result.is_rational()) throw std::logic_error("inner: non-rational inner product");
    return result.rational_value();
}

long long restriction_multiplicity(const ClassFunction& chi, const CharTable& sub, int w) {
    Rational m = inner(restrict_cf(chi, sub.group), sub.rows[w]);
    if (denominator(m) != 1) throw std::logic_error("restriction_multiplicity: non-integral");
    return static_cast<long long>(numerator(m));
}

std::vector<std::vector<int>> h_action_on_irr(const ExactSequence& seq, const CharTable& tn) {
    const GroupPtr& N = seq.N;
    const GroupPtr& G = seq.G;
    const int rows = tn.num_irreducibles();
    const auto& nclasses = N->conjugacy_classes();
    std::vector<std::vector<int>> action;
    for (int h = 0; h < seq.H->order(); ++h) {
        const Perm& lift = G->element(seq.section[h]);
        Perm lift_inv = lift.inverse();
        // conjugation permutation on N-classes, n -> lift^{-1} n lift
        std::vector<int> cls_image(nclasses.size());
        for (std::size_t c = 0; c < nclasses.size(); ++c) {
            Perm moved = lift_inv * N->element(nclasses[c].representative) * lift;
            int idx = N->index_of(moved);
            if (idx < 0) throw std::logic_error("h_action_on_irr: N not normal under lifts");
            cls_image[c] = N->class_of(idx);
        }
        std::vector<int> perm(rows, -1);
        for (int i = 0; i < rows; ++i) {
            std::vector<Cyclotomic> moved(nclasses.size());
            for (std::size_t c = 0; c < nclasses.size(); ++c)
                moved[c] = tn.rows[i].values[cls_image[c]];
            for (int j = 0; j < rows; ++j)
                if (tn.rows[j].values == moved) { perm[i] = j; break; }
            if (perm[i] < 0) throw std::logic_error("h_action_on_irr: image is not an irreducible");
        }
        action.push_back(std::move(perm));
    }
    return action;
}

std::vector<std::vector<int>> h_action_on_classes(const ExactSequence& seq) {
    const GroupPtr& N = seq.N;
    const GroupPtr& G = seq.G;
    const auto& nclasses = N->conjugacy_classes();
    std::vector<std::vector<int>> action;
    for (int h = 0; h < seq.H->order(); ++h) {
        const Perm& lift = G->element(seq.section[h]);
        Perm lift_inv = lift.inverse();
        std::vector<int> perm(nclasses.size());
        for (std::size_t c = 0; c < nclasses.size(); ++c) {
            Perm moved = lift * N->element(nclasses[c].representative) * lift_inv;
            int idx = N->index_of(moved);
            if (idx < 0) throw std::logic_error("h_action_on_classes: N not normal under lifts");
            perm[c] = N->class_of(idx);
        }
        action.push_back(std::move(perm));
    }
    return action;
}

std::vector<std::vector<Cyclotomic>> central_idempotents(const CharTable& t) {
    const GroupPtr& N = t.group;
    std::vector<std::vector<Cyclotomic>> out;
    for (int i = 0; i < t.num_irreducibles(); ++i) {
        Cyclotomic scale(Rational(t.degrees[i], N->order()));
        std::vector<Cyclotomic> coeffs(N->order());
        for (int g = 0; g < N->order(); ++g)
            coeffs[g] = scale * t.rows[i].at_element(N->inv(g));
        out.push_back(std::move(coeffs));
    }
    return out;
}

} // namespace equiquot
