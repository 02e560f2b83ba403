#pragma once
// bigint.hpp - exact integer scalar used throughout the library.
//
// BigInt is GMP's mpz_class: every quantity that can grow past machine
// words (solution coordinates, scaled root enclosures, discriminants)
// lives in one of these. File formats carry BigInts as plain decimal
// strings, never in exponent notation.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace pqf {

using BigInt = mpz_class;

inline std::string to_dec(const BigInt& n) { return n.get_str(10); }

/// Parses a decimal integer (optional leading '-'). Rejects anything else.
inline BigInt from_dec(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bare sign is not an integer");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("bad integer literal: " + s);
    return BigInt(s, 10);
}

inline BigInt pow10(unsigned long k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

/// ceil(log10(n)) for n >= 1; 0 for n = 1.
inline unsigned long ceil_log10(const BigInt& n) {
    if (n < 1) throw std::domain_error("ceil_log10 requires n >= 1");
    std::string s = n.get_str(10);
    bool pow_of_ten = s[0] == '1' && s.find_first_not_of('0', 1) == std::string::npos;
    return pow_of_ten ? s.size() - 1 : s.size();
}

/// Accepts "12345" or "<mant>e<exp>" (e.g. "1e500" = 10^500); always exact.
inline BigInt parse_magnitude(const std::string& s) {
    std::size_t e = s.find_first_of("eE");
    if (e == std::string::npos) return from_dec(s);
    BigInt mant = from_dec(s.substr(0, e));
    BigInt exp = from_dec(s.substr(e + 1));
    if (exp < 0 || !exp.fits_ulong_p())
        throw std::invalid_argument("bad exponent in: " + s);
    return mant * pow10(exp.get_ui());
}

}  // namespace pqf
