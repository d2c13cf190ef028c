#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "tcore/cyclo.hpp"
#include "tcore/rational.hpp"

namespace tcore {

using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                               boost::multiprecision::et_off>;

/// Sets the working binary precision of newly created BigFloat values on
/// this thread for the guard's lifetime.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

    static unsigned bits_to_digits10(unsigned bits);

private:
    unsigned saved_digits_;
};

/// Complex number over BigFloat at the precision in force when it was made.
class BigComplex {
public:
    BigComplex() : re_(0), im_(0) {}
    BigComplex(BigFloat re, BigFloat im = BigFloat(0)) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
    BigComplex(double re) : re_(re), im_(0) {}                                                        // NOLINT

    static BigComplex from_rational(const Rational& r);
    static BigComplex from_cyclo(const CycloNum& c);
    /// exp(2 pi i k / m).
    static BigComplex root_of_unity(long m, long k);
    /// r * exp(i * angle).
    static BigComplex polar(const BigFloat& r, const BigFloat& angle);

    const BigFloat& real() const { return re_; }
    const BigFloat& imag() const { return im_; }

    BigFloat norm() const { return re_ * re_ + im_ * im_; }
    BigFloat abs() const;
    BigComplex conj() const { return BigComplex(re_, -im_); }
    BigComplex inverse() const;
    /// Principal branch, argument in (-pi, pi].
    BigComplex sqrt() const;
    bool is_finite() const;

    BigComplex& operator+=(const BigComplex& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    BigComplex& operator-=(const BigComplex& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator*=(const BigFloat& r)
    {
        re_ *= r;
        im_ *= r;
        return *this;
    }
    BigComplex& operator/=(const BigComplex& o) { return *this *= o.inverse(); }

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator*(BigComplex a, const BigFloat& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
    BigComplex operator-() const { return BigComplex(-re_, -im_); }

    std::string to_string(int digits = 30) const;

private:
    BigFloat re_;
    BigFloat im_;
};

BigFloat big_pi();
BigFloat to_bigfloat(const Rational& r);

}  // namespace tcore
