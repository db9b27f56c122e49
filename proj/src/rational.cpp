#include "rde/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rde {

namespace {

BigInt pow10(unsigned exp) {
    BigInt r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= 10;
    return r;
}

}  // namespace

Rational rational_from_decimal(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&]() -> void {
        throw std::invalid_argument("not a decimal literal: '" + std::string(text) + "'");
    };
    if (text.empty()) fail();

    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = (text[pos] == '-');
        ++pos;
    }

    std::string digits;  // integer and fractional digits concatenated
    std::size_t frac_len = 0;
    bool any_digit = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        digits += text[pos++];
        any_digit = true;
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits += text[pos++];
            ++frac_len;
            any_digit = true;
        }
    }
    if (!any_digit) fail();

    long long exp10 = 0;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool exp_neg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            exp_neg = (text[pos] == '-');
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            exp10 = exp10 * 10 + (text[pos++] - '0');
            if (exp10 > 1000000) fail();
        }
        if (exp_neg) exp10 = -exp10;
    }
    if (pos != text.size()) fail();

    // cpp_int's string constructor reads a leading 0 as an octal prefix
    std::size_t first = digits.find_first_not_of('0');
    if (first != std::string::npos) digits.erase(0, first);
    BigInt mantissa(digits.empty() ? "0" : digits);
    if (negative) mantissa = -mantissa;
    long long net = exp10 - static_cast<long long>(frac_len);
    Rational value(mantissa);
    if (net > 0)
        value *= Rational(pow10(static_cast<unsigned>(net)));
    else if (net < 0)
        value /= Rational(pow10(static_cast<unsigned>(-net)));
    return value;
}

bool has_finite_decimal(const Rational& value) {
    BigInt den = boost::multiprecision::denominator(value);
    while (den % 2 == 0) den /= 2;
    while (den % 5 == 0) den /= 5;
    return den == 1;
}

std::string decimal_from_rational(const Rational& value) {
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    unsigned twos = 0, fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1)
        throw std::domain_error("value has no finite decimal expansion: " + fraction_string(value));

    unsigned exp = std::max(twos, fives);
    BigInt scaled = num;
    for (unsigned i = twos; i < exp; ++i) scaled *= 2;
    for (unsigned i = fives; i < exp; ++i) scaled *= 5;

    bool negative = scaled < 0;
    std::string s = BigInt(boost::multiprecision::abs(scaled)).str();
    std::string out;
    if (exp == 0) {
        out = s;
    } else {
        if (s.size() <= exp) s.insert(0, exp - s.size() + 1, '0');
        out = s.substr(0, s.size() - exp) + "." + s.substr(s.size() - exp);
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return negative ? "-" + out : out;
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

std::size_t decimal_digit_bound(const Rational& value) {
    auto bits = [](const BigInt& v) -> std::size_t {
        if (v == 0) return 1;
        return boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
    };
    std::size_t total = bits(boost::multiprecision::numerator(value)) +
                        bits(boost::multiprecision::denominator(value));
    // bits * log10(2), rounded up
    return static_cast<std::size_t>(total * 0.30103) + 1;
}

std::string fraction_string(const Rational& value) {
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace rde
