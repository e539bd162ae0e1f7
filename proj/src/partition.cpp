#include "equiquot/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace equiquot {

int Partition::n() const {
    int total = 0;
    for (std::size_t i = 0; i < multiplicities.size(); ++i)
        total += static_cast<int>(i + 1) * multiplicities[i];
    return total;
}

int Partition::count_parts() const {
    int total = 0;
    for (int m : multiplicities) total += m;
    return total;
}

bool Partition::operator<(const Partition& o) const {
    return multiplicities < o.multiplicities;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < multiplicities.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(multiplicities[i]);
    }
    return s + ")";
}

namespace {

void trim(Partition& p) {
    while (!p.multiplicities.empty() && p.multiplicities.back() == 0)
        p.multiplicities.pop_back();
}

void enumerate(int remaining, int max_part, Partition& cur,
               std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition p = cur;
        trim(p);
        out.push_back(std::move(p));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        ++cur.multiplicities[part - 1];
        enumerate(remaining - part, part, cur, out);
        --cur.multiplicities[part - 1];
    }
}

} // namespace

std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions: n >= 0");
    std::vector<Partition> out;
    Partition cur;
    cur.multiplicities.assign(std::max(n, 1), 0);
    enumerate(n, n, cur, out);
    if (n == 0) out.assign(1, Partition{});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Start offsets of the blocks in the layout: n1 singletons, n2 pairs, ...
std::vector<std::pair<int, int>> block_layout(const Partition& p) {
    std::vector<std::pair<int, int>> blocks;   // (offset, size)
    int off = 0;
    for (std::size_t i = 0; i < p.multiplicities.size(); ++i) {
        int size = static_cast<int>(i + 1);
        for (int b = 0; b < p.multiplicities[i]; ++b) {
            blocks.emplace_back(off, size);
            off += size;
        }
    }
    return blocks;
}

} // namespace

Perm g_of_partition(const Partition& p) {
    const int n = p.n();
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    for (auto [off, size] : block_layout(p))
        for (int i = 0; i < size; ++i) im[off + i] = off + (i + 1) % size;
    return Perm(im);
}

Partition cycle_type(const Perm& g) {
    Partition p;
    p.multiplicities.assign(g.degree(), 0);
    std::vector<char> seen(g.degree(), 0);
    for (int i = 0; i < g.degree(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = g(j);
            ++len;
        }
        ++p.multiplicities[len - 1];
    }
    while (!p.multiplicities.empty() && p.multiplicities.back() == 0)
        p.multiplicities.pop_back();
    return p;
}

long long centralizer_order_formula(const Partition& p) {
    long long total = 1;
    for (std::size_t i = 0; i < p.multiplicities.size(); ++i) {
        long long part = static_cast<long long>(i + 1);
        for (int m = 0; m < p.multiplicities[i]; ++m) total *= part * (m + 1);
    }
    return total;
}

PermGroup block_permuting_subgroup(const Partition& p) {
    const int n = p.n();
    std::vector<Perm> gens;
    int off = 0;
    for (std::size_t i = 0; i < p.multiplicities.size(); ++i) {
        const int size = static_cast<int>(i + 1);
        const int count = p.multiplicities[i];
        // Adjacent block swaps generate Sigma_{count} on the equal-size blocks.
        for (int b = 0; b + 1 < count; ++b) {
            std::vector<int> im(n);
            std::iota(im.begin(), im.end(), 0);
            for (int k = 0; k < size; ++k) {
                im[off + b * size + k] = off + (b + 1) * size + k;
                im[off + (b + 1) * size + k] = off + b * size + k;
            }
            gens.emplace_back(im);
        }
        off += size * count;
    }
    return PermGroup(std::max(n, 1), gens, "H_" + p.to_string());
}

PermGroup cycle_subgroup(const Partition& p) {
    const int n = p.n();
    std::vector<Perm> gens;
    for (auto [off, size] : block_layout(p)) {
        if (size < 2) continue;
        std::vector<int> c(n);
        std::iota(c.begin(), c.end(), 0);
        for (int k = 0; k < size; ++k) c[off + k] = off + (k + 1) % size;
        gens.emplace_back(c);
    }
    return PermGroup(std::max(n, 1), gens, "B_" + p.to_string());
}

PermGroup young_product_subgroup(const Partition& p) {
    const int n = p.n();
    std::vector<Perm> gens;
    for (auto [off, size] : block_layout(p)) {
        if (size < 2) continue;
        std::vector<int> t(n);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[off], t[off + 1]);
        gens.emplace_back(t);
        if (size >= 3) {
            std::vector<int> c(n);
            std::iota(c.begin(), c.end(), 0);
            for (int k = 0; k < size; ++k) c[off + k] = off + (k + 1) % size;
            gens.emplace_back(c);
        }
    }
    return PermGroup(std::max(n, 1), gens, "N_" + p.to_string());
}

} // namespace equiquot
