#pragma once
// cf.hpp - certified continued-fraction expansion of theta = g^(1/4).
//
// The expansion is certified by sandwiching: theta is enclosed between two
// rationals lo = r/10^P and hi = (r+1)/10^P with r = floor((g*10^(4P))^(1/4)),
// both expansions are run side by side, and only the common prefix of their
// partial quotients is emitted. Reals sharing a quotient prefix form an
// interval, so every emitted quotient is a true partial quotient of any
// number between lo and hi, in particular of theta.

#include "pqf/arith.hpp"
#include "pqf/bigint.hpp"

#include <utility>
#include <vector>

namespace pqf {

/// Two-sided decimal enclosure of g^(1/4): lo = root_scaled/10^P,
/// hi = (root_scaled+1)/10^P, with lo < g^(1/4) < hi and hi-lo = 10^-P.
struct RootEnclosure {
    BigInt g;
    unsigned long precision_digits = 0;
    BigInt root_scaled;  // floor(g^(1/4) * 10^P)
    BigInt scale;        // 10^P

    BigInt lo_num() const { return root_scaled; }
    BigInt hi_num() const { return root_scaled + 1; }
};

inline RootEnclosure root_enclosure(const BigInt& g, unsigned long precision_digits) {
    if (g < 2) throw std::invalid_argument("root_enclosure: g must be >= 2");
    if (precision_digits < 16) throw std::invalid_argument("root_enclosure: need P >= 16");
    if (is_perfect_square(g))
        throw std::invalid_argument("root_enclosure: g is a perfect square (x^4 - g reducible)");
    RootEnclosure enc;
    enc.g = g;
    enc.precision_digits = precision_digits;
    enc.scale = pow10(precision_digits);
    BigInt scaled = g * pow10(4 * precision_digits);
    enc.root_scaled = int_kth_root(scaled, 4);
    return enc;
}

/// Partial quotients and convergents of g^(1/4), certified up to the point
/// where the lo/hi expansions agree. complete = true iff the denominators
/// passed q_bound inside the certified prefix.
struct ConvergentStream {
    std::vector<BigInt> quotients;                       // a_0, a_1, ...
    std::vector<std::pair<BigInt, BigInt>> convergents;  // (p_k, q_k), coprime
    bool complete = false;

    std::size_t certified_depth() const { return quotients.size(); }
};

/// Precision policy: decimal digits needed to certify convergents up to a
/// denominator bound, with a 200-digit guard. Monotone in q_bound.
inline unsigned long required_precision(const BigInt& q_bound) {
    if (q_bound < 1) throw std::invalid_argument("required_precision: q_bound must be >= 1");
    return 2 * ceil_log10(q_bound) + 200;
}

inline ConvergentStream certified_cf(const RootEnclosure& enc, const BigInt& q_bound) {
    if (q_bound < 1) throw std::invalid_argument("certified_cf: q_bound must be >= 1");

    ConvergentStream out;
    // sanity cap on a single quotient; agreement past this means the
    // enclosure is too coarse and the caller should retry with higher P
    BigInt cap = pow10(2 * enc.precision_digits);

    // Euclid states for the two endpoint rationals
    BigInt n0 = enc.lo_num(), d0 = enc.scale;
    BigInt n1 = enc.hi_num(), d1 = enc.scale;

    BigInt p_prev(1), p_prev2(0);  // p_{-1}, p_{-2}
    BigInt q_prev(0), q_prev2(1);  // q_{-1}, q_{-2}

    BigInt a0, a1, r;
    while (true) {
        if (d0 == 0 || d1 == 0) break;  // an endpoint expansion terminated
        mpz_fdiv_qr(a0.get_mpz_t(), r.get_mpz_t(), n0.get_mpz_t(), d0.get_mpz_t());
        n0 = d0;
        d0 = r;
        mpz_fdiv_qr(a1.get_mpz_t(), r.get_mpz_t(), n1.get_mpz_t(), d1.get_mpz_t());
        n1 = d1;
        d1 = r;
        if (a0 != a1) break;   // prefixes diverged
        if (a0 > cap) break;   // pathological agreement guard
        BigInt p = a0 * p_prev + p_prev2;
        BigInt q = a0 * q_prev + q_prev2;
        out.quotients.push_back(a0);
        out.convergents.emplace_back(p, q);
        p_prev2 = std::move(p_prev);
        p_prev = std::move(p);
        q_prev2 = std::move(q_prev);
        q_prev = std::move(q);
        if (q_prev > q_bound) {
            out.complete = true;
            break;
        }
    }
    return out;
}

}  // namespace pqf
