#include "tcore/bigcomplex.hpp"

#include <cmath>
#include <sstream>

namespace tcore {

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_digits_(BigFloat::default_precision())
{
    BigFloat::default_precision(bits_to_digits10(bits));
}

PrecisionGuard::~PrecisionGuard() { BigFloat::default_precision(saved_digits_); }

unsigned PrecisionGuard::bits_to_digits10(unsigned bits)
{
    return static_cast<unsigned>(std::ceil(static_cast<double>(bits) * 0.30102999566398120)) + 1;
}

BigFloat big_pi()
{
    BigFloat pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    return pi;
}

BigFloat to_bigfloat(const Rational& r)
{
    BigFloat num(r.get_num().get_str());
    BigFloat den(r.get_den().get_str());
    return num / den;
}

BigComplex BigComplex::from_rational(const Rational& r) { return BigComplex(to_bigfloat(r)); }

BigComplex BigComplex::root_of_unity(long m, long k)
{
    long kk = k % m;
    if (kk < 0) {
        kk += m;
    }
    // exact values on the axes keep conjugate symmetry of grids exact
    if (kk == 0) {
        return BigComplex(BigFloat(1));
    }
    if (2 * kk == m) {
        return BigComplex(BigFloat(-1));
    }
    if (4 * kk == m) {
        return BigComplex(BigFloat(0), BigFloat(1));
    }
    if (4 * kk == 3 * m) {
        return BigComplex(BigFloat(0), BigFloat(-1));
    }
    BigFloat ang = 2 * big_pi() * BigFloat(kk) / BigFloat(m);
    return BigComplex(boost::multiprecision::cos(ang), boost::multiprecision::sin(ang));
}

BigComplex BigComplex::polar(const BigFloat& r, const BigFloat& angle)
{
    return BigComplex(r * boost::multiprecision::cos(angle), r * boost::multiprecision::sin(angle));
}

BigComplex BigComplex::from_cyclo(const CycloNum& c)
{
    BigComplex out;
    const auto& coeffs = c.coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (sgn(coeffs[i]) == 0) {
            continue;
        }
        out += root_of_unity(c.conductor(), static_cast<long>(i)) * to_bigfloat(coeffs[i]);
    }
    return out;
}

BigFloat BigComplex::abs() const { return boost::multiprecision::sqrt(norm()); }

BigComplex BigComplex::inverse() const
{
    BigFloat n = norm();
    return BigComplex(re_ / n, -im_ / n);
}

BigComplex BigComplex::sqrt() const
{
    // sqrt(z) = sqrt((|z|+x)/2) + i sign(y) sqrt((|z|-x)/2)
    BigFloat r = abs();
    if (r == 0) {
        return BigComplex();
    }
    BigFloat a = boost::multiprecision::sqrt((r + re_) / 2);
    BigFloat b = boost::multiprecision::sqrt((r - re_) / 2);
    if (im_ < 0) {
        b = -b;
    }
    return BigComplex(a, b);
}

bool BigComplex::is_finite() const
{
    return boost::multiprecision::isfinite(re_) && boost::multiprecision::isfinite(im_);
}

BigComplex& BigComplex::operator*=(const BigComplex& o)
{
    BigFloat re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
}

std::string BigComplex::to_string(int digits) const
{
    std::ostringstream os;
    os.precision(digits);
    os << re_ << (im_ < 0 ? " - " : " + ") << boost::multiprecision::abs(im_) << "i";
    return os.str();
}

}  // namespace tcore
