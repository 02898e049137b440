#include "netsparsity/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace netsparsity {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_natural(std::string_view digits) {
    return mpz_class(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string original(text);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational result;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("not a number: '" + original + "'");
        mpz_class d = parse_natural(den);
        if (d == 0) throw std::invalid_argument("zero denominator: '" + original + "'");
        result = Rational(parse_natural(num), d);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            throw std::invalid_argument("not a number: '" + original + "'");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class w = whole.empty() ? mpz_class(0) : parse_natural(whole);
        mpz_class f = frac.empty() ? mpz_class(0) : parse_natural(frac);
        result = Rational(w * scale + f, scale);
    } else {
        if (!all_digits(text)) throw std::invalid_argument("not a number: '" + original + "'");
        result = Rational(parse_natural(text));
    }
    result.canonicalize();
    return negative ? Rational(-result) : result;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Rational from_int128(Int128 value) {
    const bool negative = value < 0;
    UInt128 magnitude = negative ? -static_cast<UInt128>(value) : static_cast<UInt128>(value);
    mpz_class hi(static_cast<unsigned long>(magnitude >> 64));
    mpz_class lo(static_cast<unsigned long>(magnitude & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class z = (hi << 64) + lo;
    if (negative) z = -z;
    return Rational(z);
}

// Nearest double. mpq get_d truncates, which turns 16/25 into 0.6399999999999999.
double to_double(const Rational& value) {
    const mpz_class& num = value.get_num();
    const mpz_class& den = value.get_den();
    if (mpz_sizeinbase(num.get_mpz_t(), 2) <= 53 && mpz_sizeinbase(den.get_mpz_t(), 2) <= 53)
        return num.get_d() / den.get_d();  // both exact, IEEE division rounds once
    if (num == 0) return 0.0;
    const mpf_class f(value, 256);
    mp_exp_t exp = 0;
    std::string digits = f.get_str(exp, 10, 40);
    std::string text;
    if (!digits.empty() && digits[0] == '-') {
        text = "-";
        digits.erase(0, 1);
    }
    text += "0." + digits + "e" + std::to_string(exp);
    return std::strtod(text.c_str(), nullptr);
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_fixed(const Rational& value, int digits) {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational scaled = value * scale;
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    // round half away from zero
    mpz_class twice = 2 * scaled.get_num() + scaled.get_den();
    mpz_class rounded = twice / (2 * scaled.get_den());
    std::string digits_str = rounded.get_str();
    if (digits > 0) {
        if (digits_str.size() <= static_cast<std::size_t>(digits))
            digits_str.insert(0, static_cast<std::size_t>(digits) + 1 - digits_str.size(), '0');
        digits_str.insert(digits_str.size() - static_cast<std::size_t>(digits), ".");
    }
    if (negative && rounded != 0) digits_str.insert(0, "-");
    return digits_str;
}

}  // namespace netsparsity
