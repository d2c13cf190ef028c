#include "tcore/quadratic.hpp"

#include <cmath>
#include <stdexcept>

namespace tcore {

QuadraticNumber::QuadraticNumber(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d)
{
    if (sgn(b_) == 0) {
        d_ = d;
    } else if (d == 1 || d == 0) {
        throw std::invalid_argument("radicand must be squarefree and different from 0 and 1");
    }
}

QuadraticNumber QuadraticNumber::sqrt_of(const Rational& q)
{
    if (sgn(q) <= 0) {
        throw std::domain_error("sqrt_of needs a positive rational");
    }
    if (auto r = rational_sqrt(q)) {
        return QuadraticNumber(*r);
    }
    // sqrt(n/d) = sqrt(n*d)/d; pull squares out of n*d.
    BigInt nd = q.get_num() * q.get_den();
    BigInt square_part = 1;
    BigInt rest = nd;
    for (unsigned long p = 2; p * p <= rest; ++p) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p * p)) {
            rest /= p * p;
            square_part *= p;
        }
    }
    if (!rest.fits_slong_p()) {
        throw std::overflow_error("radicand too large");
    }
    Rational c(square_part, q.get_den());
    c.canonicalize();
    return QuadraticNumber(Rational(0), c, rest.get_si());
}

long QuadraticNumber::merge_radicand(const QuadraticNumber& o) const
{
    if (sgn(b_) == 0) {
        return sgn(o.b_) == 0 ? (d_ ? d_ : o.d_) : o.d_;
    }
    if (sgn(o.b_) != 0 && o.d_ != d_) {
        throw std::invalid_argument("radicand mismatch");
    }
    return d_;
}

QuadraticNumber QuadraticNumber::conj() const { return QuadraticNumber(a_, -b_, d_); }

QuadraticNumber QuadraticNumber::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    Rational norm = a_ * a_ - b_ * b_ * d_;
    return QuadraticNumber(a_ / norm, -b_ / norm, d_);
}

double QuadraticNumber::to_double() const
{
    return a_.get_d() + (sgn(b_) ? b_.get_d() * std::sqrt(static_cast<double>(d_)) : 0.0);
}

std::string QuadraticNumber::to_string() const
{
    if (sgn(b_) == 0) {
        return a_.get_str();
    }
    return a_.get_str() + " + " + b_.get_str() + "*sqrt(" + std::to_string(d_) + ")";
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o)
{
    d_ = merge_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o)
{
    d_ = merge_radicand(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o)
{
    long d = merge_radicand(o);
    if (sgn(b_) == 0 && sgn(o.b_) == 0) {
        a_ *= o.a_;
    } else {
        Rational a = a_ * o.a_ + b_ * o.b_ * d;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
    }
    d_ = d;
    return *this;
}

bool operator==(const QuadraticNumber& x, const QuadraticNumber& y)
{
    if (x.a_ != y.a_ || x.b_ != y.b_) {
        return false;
    }
    return sgn(x.b_) == 0 || x.d_ == y.d_;
}

QuadraticNumber pow(const QuadraticNumber& x, long e)
{
    if (e < 0) {
        return pow(x.inverse(), -e);
    }
    QuadraticNumber result(1);
    QuadraticNumber base = x;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        base *= base;
        e >>= 1;
    }
    return result;
}

}  // namespace tcore
