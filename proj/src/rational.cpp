#include "specmom/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace specmom {

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt int_pow(const BigInt& base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

BigRat rat_pow(const BigRat& base, unsigned long exponent) {
    BigRat out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), exponent);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), exponent);
    return out;  // base canonical => powers canonical
}

std::string rat_to_string(const BigRat& value) {
    return value.get_str();
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

BigRat parse_rational(const std::string& raw) {
    const auto bad = [&] { throw std::invalid_argument("not a rational: '" + raw + "'"); };

    std::string text = raw;
    if (!text.empty() && text[0] == '+') text.erase(0, 1);  // mpz_set_str rejects '+'

    if (auto slash = text.find('/'); slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den)) bad();
        const BigInt denominator(den);
        if (denominator == 0) throw std::invalid_argument("zero denominator: '" + raw + "'");
        BigRat q{BigInt(num), denominator};
        q.canonicalize();
        return q;
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (!is_integer_token(whole.empty() ? "0" : whole) || frac.empty()) bad();
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c))) bad();
        const bool neg = !whole.empty() && whole[0] == '-';
        BigInt scaled(whole.empty() || whole == "-" || whole == "+" ? "0" : whole);
        BigInt den = 1;
        for (char c : frac) {
            scaled = scaled * 10 + (neg ? -(c - '0') : (c - '0'));
            den *= 10;
        }
        BigRat q(scaled, den);
        q.canonicalize();
        return q;
    }
    if (!is_integer_token(text)) bad();
    return BigRat(BigInt(text));
}

double rat_to_double(const BigRat& value) {
    return value.get_d();
}

}  // namespace specmom
