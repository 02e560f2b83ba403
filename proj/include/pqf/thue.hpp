#pragma once
// thue.hpp - all "small" solutions of a^4 - g*b^4 = +-1 below a height bound.
//
// Completeness of the convergent search, for the record: a solution with
// b >= 1 has a >= b >= 1 and satisfies
//     |a/b - theta| = 1 / (b^4 (a/b + theta) ((a/b)^2 + theta^2)),
// theta = g^(1/4). With g >= 2 both cofactors exceed 2, so
// |theta - a/b| < 1/(2b^2), and by Legendre's criterion a/b is a convergent
// of theta (in lowest terms: a common divisor of a and b would divide +-1).
// Searching the certified convergents with q <= H therefore sees every
// solution with max(|a|,|b|) <= H; a small direct enumeration in b is run
// first as an independent belt.
//
// Note on reducibility: for g >= 2 the form x^4 - g factors over Q exactly
// when g is a perfect square (x^4 - h^2 = (x^2-h)(x^2+h)); those g are
// reported as skipped_reducible, never as solved-empty.

#include "pqf/arith.hpp"
#include "pqf/bigint.hpp"
#include "pqf/cf.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace pqf {

/// One +-orbit representative: a >= 1, b >= 0, gcd(a,b) = 1 and
/// a^4 - g*b^4 = sign exactly.
struct ThueSolution {
    BigInt a;
    BigInt b;
    int sign = +1;

    friend bool operator==(const ThueSolution& l, const ThueSolution& r) {
        return l.a == r.a && l.b == r.b && l.sign == r.sign;
    }
    friend bool operator<(const ThueSolution& l, const ThueSolution& r) {
        if (l.b != r.b) return l.b < r.b;
        if (l.a != r.a) return l.a < r.a;
        return l.sign < r.sign;
    }
};

enum class ThueStatus { solved, skipped_reducible, precision_failure };

inline const char* to_string(ThueStatus s) {
    switch (s) {
        case ThueStatus::solved: return "solved";
        case ThueStatus::skipped_reducible: return "skipped_reducible";
        case ThueStatus::precision_failure: return "precision_failure";
    }
    return "?";
}

struct ThueResult {
    BigInt g;
    BigInt height;
    ThueStatus status = ThueStatus::solved;
    std::vector<ThueSolution> solutions;  // sorted by b ascending
    unsigned long precision_used = 0;
};

struct SolveOptions {
    std::optional<unsigned long> precision;  // override required_precision(H)
    unsigned max_retries = 3;                // doublings of P on an uncertified stream
    unsigned long direct_belt = 1000;        // phase-1 enumeration bound on b
};

namespace detail {

/// a^4 - g*b^4 quick residue classes: fourth powers are 0,1 mod 16 and
/// 0,1 mod 5, so most candidates die on two word-sized divisions.
inline bool fourth_power_candidate(const BigInt& t) {
    unsigned long m16 = mpz_fdiv_ui(t.get_mpz_t(), 16);
    if (m16 > 1) return false;
    unsigned long m5 = mpz_fdiv_ui(t.get_mpz_t(), 5);
    return m5 <= 1;
}

/// Exact fourth-power witness via GMP's root primitive (kept deliberately
/// separate from int_kth_root so the brute-force route shares no code with
/// the Newton path it cross-checks elsewhere).
inline std::optional<BigInt> exact_fourth_root(const BigInt& t) {
    if (t < 1) return std::nullopt;
    if (!fourth_power_candidate(t)) return std::nullopt;
    BigInt a;
    if (mpz_root(a.get_mpz_t(), t.get_mpz_t(), 4) != 0) return a;
    return std::nullopt;
}

}  // namespace detail

/// Independent oracle: every normalized solution with b <= B, found by
/// testing g*b^4 +- 1 for fourth powers, one b at a time.
inline std::vector<ThueSolution> brute_small(const BigInt& g, unsigned long B) {
    if (g < 2) throw std::invalid_argument("brute_small: g must be >= 2");
    std::vector<ThueSolution> out;
    BigInt b4, t;
    for (unsigned long b = 0; b <= B; ++b) {
        mpz_ui_pow_ui(b4.get_mpz_t(), b, 4);
        t = g * b4;
        for (int sign : {+1, -1}) {
            BigInt cand = t + sign;
            if (auto a = detail::exact_fourth_root(cand)) {
                out.push_back({*a, BigInt(b), sign});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All solutions of a^4 - g*b^4 = +-1 with max(|a|,|b|) <= H, as one
/// normalized representative per (+-a,+-b) orbit, sorted by b.
inline ThueResult solve_small(const BigInt& g, const BigInt& H, const SolveOptions& opt = {}) {
    if (g < 2) throw std::invalid_argument("solve_small: g must be >= 2");
    if (H < 1) throw std::invalid_argument("solve_small: H must be >= 1");

    ThueResult res;
    res.g = g;
    res.height = H;

    if (is_perfect_square(g)) {
        res.status = ThueStatus::skipped_reducible;
        return res;
    }

    std::map<std::pair<BigInt, BigInt>, int> found;
    found[{BigInt(1), BigInt(0)}] = +1;  // 1^4 - g*0^4 = 1

    // phase 1: direct enumeration belt, independent of the convergent path
    {
        BigInt belt = BigInt(opt.direct_belt);
        if (belt > H) belt = H;
        BigInt b4, t;
        for (BigInt b = 1; b <= belt; ++b) {
            mpz_pow_ui(b4.get_mpz_t(), b.get_mpz_t(), 4);
            t = g * b4;
            for (int sign : {+1, -1}) {
                BigInt cand = t + sign;
                if (auto a = detail::exact_fourth_root(cand)) {
                    if (*a <= H) found[{*a, b}] = sign;
                }
            }
        }
    }

    // phase 2: certified convergents of g^(1/4) with denominator up to H
    unsigned long P = opt.precision ? *opt.precision : required_precision(H);
    bool certified = false;
    for (unsigned attempt = 0;; ++attempt) {
        res.precision_used = P;
        RootEnclosure enc = root_enclosure(g, P);
        ConvergentStream st = certified_cf(enc, H);
        BigInt r, q4;
        for (const auto& [p, q] : st.convergents) {
            if (q > H || p > H) continue;
            mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), 4);
            mpz_pow_ui(q4.get_mpz_t(), q.get_mpz_t(), 4);
            r -= g * q4;  // p^4 - g*q^4
            if (r == 1 || r == -1) found[{p, q}] = static_cast<int>(r.get_si());
        }
        if (st.complete) {
            certified = true;
            break;
        }
        if (attempt == opt.max_retries) break;
        P *= 2;
    }
    res.status = certified ? ThueStatus::solved : ThueStatus::precision_failure;

    res.solutions.reserve(found.size());
    for (const auto& [ab, sign] : found) {
        BigInt gc;
        mpz_gcd(gc.get_mpz_t(), ab.first.get_mpz_t(), ab.second.get_mpz_t());
        if (gc != 1) throw std::logic_error("solve_small: non-coprime solution, solver bug");
        res.solutions.push_back({ab.first, ab.second, sign});
    }
    std::sort(res.solutions.begin(), res.solutions.end());
    return res;
}

/// Consistency gate: a quartic binomial unit equation has at most one
/// solution in positive integers (Bennett), so two or more positive pairs
/// in one result can only mean a solver bug.
struct BennettCheck {
    bool ok = true;
    std::vector<ThueSolution> positive_pairs;
};

inline BennettCheck assert_bennett(const std::vector<ThueSolution>& solutions) {
    BennettCheck chk;
    for (const auto& s : solutions)
        if (s.a >= 1 && s.b >= 1) chk.positive_pairs.push_back(s);
    chk.ok = chk.positive_pairs.size() <= 1;
    return chk;
}

inline BennettCheck assert_bennett(const ThueResult& result) { return assert_bennett(result.solutions); }

}  // namespace pqf
