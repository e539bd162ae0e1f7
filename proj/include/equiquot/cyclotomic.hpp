#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace equiquot {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An element of Q(zeta_e), stored as rational coefficients of
/// 1, zeta, ..., zeta^{phi(e)-1}, reduced modulo the e-th cyclotomic
/// polynomial. Rational values are normalized down to conductor 1, so
/// arithmetic is exact and equality is decidable.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclotomic(Rational r) : conductor_(1), coeffs_{std::move(r)} {}
    explicit Cyclotomic(long long n) : Cyclotomic(Rational(n)) {}

    /// zeta_e^k
    static Cyclotomic root_of_unity(int e, long long k = 1);

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Only valid when is_rational().
    Rational rational_value() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic inverse() const;
    Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    /// Complex conjugation, zeta -> zeta^{-1}.
    Cyclotomic conj() const;
    /// Galois twist zeta -> zeta^k; requires gcd(k, conductor) = 1.
    Cyclotomic galois(long long k) const;

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
    /// Deterministic total order (after promotion to a common conductor).
    bool operator<(const Cyclotomic& o) const;

    /// Representation at a larger conductor E with conductor | E.
    Cyclotomic promoted(int E) const;

    std::string to_string() const;

private:
    int conductor_;
    std::vector<Rational> coeffs_;

    void normalize();
};

/// The e-th cyclotomic polynomial, as integer coefficients (degree phi(e)).
const std::vector<BigInt>& cyclotomic_polynomial(int e);

int euler_phi(int e);

} // namespace equiquot
