#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace equiquot {

/// A permutation of {0,...,m-1}, stored as its image list.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);

    static Perm identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    /// (a*b)(x) = a(b(x))
    Perm operator*(const Perm& rhs) const;
    Perm inverse() const;
    bool is_identity() const;
    int order() const;

    bool operator==(const Perm& rhs) const { return images_ == rhs.images_; }
    /// Lexicographic order on image lists; used for all canonical choices.
    bool operator<(const Perm& rhs) const { return images_ < rhs.images_; }

    std::string to_cycle_string() const;

private:
    std::vector<int> images_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : p.images()) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace equiquot
