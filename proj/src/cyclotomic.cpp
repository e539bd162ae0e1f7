#include "equiquot/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace equiquot {

int euler_phi(int e) {
    int result = e, n = e;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        result -= result / p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, num / den with den monic.
std::vector<BigInt> poly_div_exact(std::vector<BigInt> num,
                                   const std::vector<BigInt>& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    std::vector<BigInt> q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
        BigInt c = num[i];
        if (c == 0) continue;
        q[i - dd] = c;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (const BigInt& c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

std::map<int, std::vector<BigInt>> phi_cache;
std::mutex phi_mutex;

} // namespace

const std::vector<BigInt>& cyclotomic_polynomial(int e) {
    if (e < 1) throw std::invalid_argument("cyclotomic_polynomial: e >= 1");
    std::lock_guard<std::mutex> lock(phi_mutex);
    auto it = phi_cache.find(e);
    if (it != phi_cache.end()) return it->second;
    // (x^e - 1) / prod of Phi_d over proper divisors d of e.
    std::vector<BigInt> p(e + 1, 0);
    p[0] = -1;
    p[e] = 1;
    for (int d = 1; d < e; ++d) {
        if (e % d) continue;
        auto dit = phi_cache.find(d);
        if (dit == phi_cache.end()) {
            // Divisors are visited in increasing order on the first call for
            // each e, but a cold cache for d can happen; recurse via unlock.
            phi_mutex.unlock();
            cyclotomic_polynomial(d);
            phi_mutex.lock();
            dit = phi_cache.find(d);
        }
        p = poly_div_exact(std::move(p), dit->second);
    }
    return phi_cache.emplace(e, std::move(p)).first->second;
}

namespace {

// Remainder of a rational polynomial modulo the monic Phi_e; result has
// exactly phi(e) coefficients.
std::vector<Rational> reduce_mod_phi(std::vector<Rational> v, int e) {
    const auto& phi = cyclotomic_polynomial(e);
    const int deg = static_cast<int>(phi.size()) - 1;
    for (int i = static_cast<int>(v.size()) - 1; i >= deg; --i) {
        Rational c = v[i];
        if (c == 0) continue;
        for (int j = 0; j <= deg; ++j) v[i - deg + j] -= c * Rational(phi[j]);
    }
    v.resize(deg);
    return v;
}

} // namespace

void Cyclotomic::normalize() {
    bool rational = true;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) rational = false;
    if (rational && conductor_ != 1) {
        Rational c0 = coeffs_.empty() ? Rational(0) : coeffs_[0];
        conductor_ = 1;
        coeffs_.assign(1, std::move(c0));
    }
    if (coeffs_.empty()) coeffs_.assign(1, Rational(0));
}

Cyclotomic Cyclotomic::root_of_unity(int e, long long k) {
    if (e < 1) throw std::invalid_argument("root_of_unity: e >= 1");
    k %= e;
    if (k < 0) k += e;
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v[static_cast<std::size_t>(k)] = 1;
    Cyclotomic z;
    z.conductor_ = e;
    z.coeffs_ = reduce_mod_phi(std::move(v), e);
    z.normalize();
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::logic_error("rational_value: not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(int E) const {
    if (E % conductor_) throw std::invalid_argument("promoted: conductor must divide E");
    if (E == conductor_) return *this;
    const int step = E / conductor_;
    std::vector<Rational> v(static_cast<std::size_t>(E), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * step] = coeffs_[i];
    Cyclotomic z;
    z.conductor_ = E;
    z.coeffs_ = reduce_mod_phi(std::move(v), E);
    return z;   // deliberately not normalized down; caller wanted conductor E
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    int E = std::lcm(conductor_, o.conductor_);
    Cyclotomic a = promoted(E), b = o.promoted(E);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    a.normalize();
    return a;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic a = *this;
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    int E = std::lcm(conductor_, o.conductor_);
    Cyclotomic a = promoted(E), b = o.promoted(E);
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    Cyclotomic z;
    z.conductor_ = E;
    z.coeffs_ = reduce_mod_phi(std::move(prod), E);
    z.normalize();
    return z;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: division by zero");
    if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]);
    // Extended Euclid in Q[x] for a(x) and Phi_e(x); the gcd is a nonzero
    // constant since Phi_e is irreducible and deg a < deg Phi_e.
    const auto& phi_int = cyclotomic_polynomial(conductor_);
    std::vector<Rational> r0(phi_int.begin(), phi_int.end());
    std::vector<Rational> r1 = coeffs_;
    auto trim = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(r1);
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};   // coeffs of a(x)
    while (true) {
        // r0 = q*r1 + r2
        std::vector<Rational> rem = r0;
        std::vector<Rational> q(rem.size() > r1.size() ? rem.size() - r1.size() + 1 : 1,
                                Rational(0));
        while (rem.size() >= r1.size()) {
            Rational c = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            q[shift] += c;
            for (std::size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
            trim(rem);
            if (rem.empty()) break;
        }
        // s2 = s0 - q*s1
        std::vector<Rational> s2 = s0;
        s2.resize(std::max(s2.size(), q.size() + s1.size()), Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        trim(s2);
        if (rem.empty()) {
            if (r1.size() != 1) throw std::logic_error("Cyclotomic: gcd not constant");
            Rational g = r1[0];
            Cyclotomic z;
            z.conductor_ = conductor_;
            z.coeffs_ = reduce_mod_phi(std::move(s1), conductor_);
            for (auto& c : z.coeffs_) c /= g;
            z.normalize();
            return z;
        }
        r0 = std::move(r1); r1 = std::move(rem);
        s0 = std::move(s1); s1 = std::move(s2);
    }
}

Cyclotomic Cyclotomic::galois(long long k) const {
    const int e = conductor_;
    long long km = ((k % e) + e) % e;
    if (std::gcd(static_cast<long long>(e), km) != 1)
        throw std::invalid_argument("galois: k must be prime to the conductor");
    std::vector<Rational> v(static_cast<std::size_t>(e), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[(i * static_cast<std::size_t>(km)) % e] += coeffs_[i];
    Cyclotomic z;
    z.conductor_ = e;
    z.coeffs_ = reduce_mod_phi(std::move(v), e);
    z.normalize();
    return z;
}

Cyclotomic Cyclotomic::conj() const {
    if (conductor_ == 1) return *this;
    return galois(conductor_ - 1);
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    int E = std::lcm(conductor_, o.conductor_);
    return promoted(E).coeffs_ == o.promoted(E).coeffs_;
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
    int E = std::lcm(conductor_, o.conductor_);
    return promoted(E).coeffs_ < o.promoted(E).coeffs_;
}

std::string Cyclotomic::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        Rational a = (!first && c < 0) ? Rational(-c) : c;
        first = false;
        if (i == 0) { out << a; continue; }
        if (a != 1) out << a << "*";
        out << "z" << conductor_;
        if (i > 1) out << "^" << i;
    }
    return out.str();
}

} // namespace equiquot
