#pragma once

#include <string>

#include "tcore/rational.hpp"

namespace tcore {

/// a + b*sqrt(d) in Q(sqrt d), d a squarefree integer other than 1. Elements
/// with b = 0 are plain rationals and combine with any radicand; d = 0 marks
/// such an element that has not been attached to a field yet.
///
/// Houses the half powers q^{1/2} of a fixed rational q that is not a perfect
/// square (for perfect squares the radicand never appears).
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(const Rational& a) : a_(a) {}  // NOLINT: implicit embedding
    QuadraticNumber(long a) : a_(a) {}             // NOLINT
    QuadraticNumber(int a) : a_(a) {}              // NOLINT
    QuadraticNumber(Rational a, Rational b, long d);

    /// sqrt(q) for a positive rational q, as c * sqrt(d) with d squarefree.
    static QuadraticNumber sqrt_of(const Rational& q);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    long radicand() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    QuadraticNumber conj() const;
    QuadraticNumber inverse() const;
    double to_double() const;
    std::string to_string() const;

    QuadraticNumber& operator+=(const QuadraticNumber& o);
    QuadraticNumber& operator-=(const QuadraticNumber& o);
    QuadraticNumber& operator*=(const QuadraticNumber& o);
    QuadraticNumber& operator/=(const QuadraticNumber& o) { return *this *= o.inverse(); }
    friend QuadraticNumber operator+(QuadraticNumber a, const QuadraticNumber& b) { return a += b; }
    friend QuadraticNumber operator-(QuadraticNumber a, const QuadraticNumber& b) { return a -= b; }
    friend QuadraticNumber operator*(QuadraticNumber a, const QuadraticNumber& b) { return a *= b; }
    friend QuadraticNumber operator/(QuadraticNumber a, const QuadraticNumber& b) { return a /= b; }
    QuadraticNumber operator-() const { return QuadraticNumber(-a_, -b_, d_); }

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y);
    friend bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(x == y); }

private:
    long merge_radicand(const QuadraticNumber& o) const;

    Rational a_ = 0;
    Rational b_ = 0;
    long d_ = 0;
};

inline bool is_zero(const QuadraticNumber& x) { return x.is_zero(); }
inline QuadraticNumber inverse(const QuadraticNumber& x) { return x.inverse(); }

QuadraticNumber pow(const QuadraticNumber& x, long e);

}  // namespace tcore
