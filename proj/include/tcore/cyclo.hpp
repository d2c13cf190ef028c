#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "tcore/rational.hpp"

namespace tcore {

/// Element of the cyclotomic field Q(xi_m), xi_m = exp(2 pi i / m), stored in
/// the power basis 1, xi, ..., xi^{phi(m)-1} reduced modulo Phi_m. The
/// representation is canonical, so equality is coefficientwise.
///
/// Conductor 1 is the rational subfield. A conductor-1 element combines with
/// an element of any conductor; two elements with different conductors > 1
/// are a conductor mismatch.
class CycloNum {
public:
    CycloNum() : m_(1), c_{Rational(0)} {}
    CycloNum(const Rational& r) : m_(1), c_{r} {}  // NOLINT: implicit embedding Q -> Q(xi)
    CycloNum(long v) : m_(1), c_{Rational(v)} {}   // NOLINT
    CycloNum(int v) : m_(1), c_{Rational(v)} {}    // NOLINT

    /// Coefficients in the power basis; length must be phi(m).
    static CycloNum from_coeffs(int m, std::vector<Rational> coeffs);

    /// xi_m^k for any integer k.
    static CycloNum root_of_unity(int m, long k);

    /// The rational r as an element of Q(xi_m).
    static CycloNum constant(int m, const Rational& r);

    int conductor() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    std::optional<Rational> as_rational() const;

    /// The same element viewed in Q(xi_m); requires conductor() == 1 or m.
    CycloNum promoted(int m) const;

    /// Galois action xi -> xi^k, gcd(k, m) = 1.
    CycloNum galois(long k) const;

    /// Complex conjugate (galois(-1)).
    CycloNum conj() const { return galois(-1); }

    CycloNum inverse() const;

    std::complex<double> to_complex() const;

    /// "p/q" for rationals, otherwise "[c0, c1, ...]_m".
    std::string to_string() const;

    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum& operator/=(const CycloNum& o) { return *this *= o.inverse(); }

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
    CycloNum operator-() const;

    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

private:
    CycloNum(int m, std::vector<Rational> c) : m_(m), c_(std::move(c)) {}
    static int common_conductor(int a, int b);

    int m_;
    std::vector<Rational> c_;
};

inline bool is_zero(const CycloNum& x) { return x.is_zero(); }
inline CycloNum inverse(const CycloNum& x) { return x.inverse(); }

/// Euler phi.
int euler_phi(int m);

/// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int m);

}  // namespace tcore
