#include "equiquot/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace equiquot {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw std::invalid_argument("Perm: image list is not a bijection");
        seen[v] = 1;
    }
}

Perm Perm::identity(int degree) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    return Perm(std::move(im));
}

Perm Perm::operator*(const Perm& rhs) const {
    if (degree() != rhs.degree())
        throw std::invalid_argument("Perm: degree mismatch");
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < im.size(); ++i)
        im[i] = images_[rhs.images_[i]];
    Perm p;
    p.images_ = std::move(im);
    return p;
}

Perm Perm::inverse() const {
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < im.size(); ++i)
        im[images_[i]] = static_cast<int>(i);
    Perm p;
    p.images_ = std::move(im);
    return p;
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i)) return false;
    return true;
}

int Perm::order() const {
    Perm p = *this;
    int n = 1;
    while (!p.is_identity()) {
        p = p * *this;
        ++n;
    }
    return n;
}

std::string Perm::to_cycle_string() const {
    std::string out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == static_cast<int>(i)) continue;
        out += '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) out += ' ';
            out += std::to_string(j);
            first = false;
            j = static_cast<std::size_t>(images_[j]);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

} // namespace equiquot
