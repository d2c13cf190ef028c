#include "tcore/rational.hpp"

#include <cctype>
#include <mutex>
#include <vector>

namespace tcore {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    BigInt n(std::string(num[0] == '+' ? num.substr(1) : num));
    BigInt d{std::string(den)};
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::optional<Rational> rational_sqrt(const Rational& r)
{
    if (sgn(r) < 0) {
        return std::nullopt;
    }
    const BigInt& n = r.get_num();
    const BigInt& d = r.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
        return std::nullopt;
    }
    BigInt sn = sqrt(n);
    BigInt sd = sqrt(d);
    Rational out(sn, sd);
    out.canonicalize();
    return out;
}

Rational pow(const Rational& r, long e)
{
    if (e < 0) {
        return pow(inverse(r), -e);
    }
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), r.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), r.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    Rational out(n, d);
    out.canonicalize();
    return out;
}

Rational factorial(unsigned n)
{
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return Rational(0);
    }
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational bernoulli(unsigned n)
{
    static std::mutex mu;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    while (table.size() <= n) {
        const long m = static_cast<long>(table.size());
        Rational acc = 0;
        for (long k = 0; k < m; ++k) {
            acc += binomial(m + 1, k) * table[static_cast<std::size_t>(k)];
        }
        table.push_back(-acc / Rational(m + 1));
    }
    return table[n];
}

}  // namespace tcore
