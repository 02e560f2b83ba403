#pragma once
// arith.hpp - exact integer primitives: k-th roots, perfect-power tests,
// squarefree sieve, residue classes. Everything here is integer-exact;
// no floating point participates in any result.

#include "pqf/bigint.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pqf {

/// floor(n^(1/k)) for n >= 0, k >= 1, by integer Newton iteration.
///
/// The start value 2^ceil(bits(n)/k) is always >= the true root, the
/// iteration x <- ((k-1)x + n/x^(k-1))/k decreases monotonically to a
/// fixed point, and a final two-sided correction pins the exact floor.
inline BigInt int_kth_root(const BigInt& n, unsigned long k) {
    if (k == 0) throw std::domain_error("int_kth_root: k must be >= 1");
    if (n < 0) throw std::domain_error("int_kth_root: negative operand");
    if (k == 1 || n <= 1) return n;

    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    BigInt x;
    mpz_ui_pow_ui(x.get_mpz_t(), 2, (bits + k - 1) / k);

    BigInt next, pw;
    while (true) {
        mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), k - 1);  // x^(k-1)
        next = ((k - 1) * x + n / pw) / k;
        if (next >= x) break;
        x = next;
    }
    // two-sided correction: establish x^k <= n < (x+1)^k
    mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), k);
    while (pw > n) {
        --x;
        mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), k);
    }
    BigInt xp1 = x + 1;
    mpz_pow_ui(pw.get_mpz_t(), xp1.get_mpz_t(), k);
    while (pw <= n) {
        x = xp1;
        ++xp1;
        mpz_pow_ui(pw.get_mpz_t(), xp1.get_mpz_t(), k);
    }
    return x;
}

/// Exact square root witness: h with h^2 = g, or nullopt.
inline std::optional<BigInt> exact_sqrt(const BigInt& g) {
    if (g < 0) return std::nullopt;
    BigInt h = int_kth_root(g, 2);
    if (h * h == g) return h;
    return std::nullopt;
}

inline bool is_perfect_square(const BigInt& g) { return exact_sqrt(g).has_value(); }

/// Nonnegative residue of m modulo 4 (floor convention, so -2 -> 2).
inline int mod4_class(const BigInt& m) {
    return static_cast<int>(mpz_fdiv_ui(m.get_mpz_t(), 4));
}

/// Squarefree flags for 2..limit with the smallest square divisor kept as
/// a witness (0 means squarefree). Immutable once built; shareable across
/// threads.
class SquarefreeTable {
  public:
    explicit SquarefreeTable(std::uint64_t limit) : limit_(limit), smallest_sq_(limit + 1, 0) {
        if (limit < 2) throw std::invalid_argument("SquarefreeTable: limit must be >= 2");
        // primes p <= sqrt(limit), then mark multiples of p^2
        std::uint64_t root = 1;
        while ((root + 1) * (root + 1) <= limit) ++root;
        std::vector<bool> composite(root + 1, false);
        for (std::uint64_t p = 2; p <= root; ++p) {
            if (composite[p]) continue;
            for (std::uint64_t q = p * p; q <= root; q += p) composite[q] = true;
            const std::uint64_t p2 = p * p;
            for (std::uint64_t n = p2; n <= limit; n += p2)
                if (smallest_sq_[n] == 0) smallest_sq_[n] = static_cast<std::uint32_t>(p2);
        }
    }

    std::uint64_t limit() const { return limit_; }

    bool is_squarefree(std::uint64_t n) const { return witness(n) == 0; }

    /// Smallest square divisor > 1 of n, or 0 when n is squarefree.
    std::uint32_t witness(std::uint64_t n) const {
        if (n < 2 || n > limit_) throw std::out_of_range("SquarefreeTable: n out of range");
        return smallest_sq_[n];
    }

  private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> smallest_sq_;
};

/// Smallest square divisor > 1 of |n| by trial division (0 when squarefree).
/// Unbounded input, intended for one-off queries where no sieve is at hand;
/// cost is ~|n|^(1/3) trial divisions.
inline BigInt trial_smallest_square_divisor(const BigInt& n_in) {
    BigInt n = abs(n_in);
    if (n < 2) return 0;
    BigInt d(2), d3;
    while (true) {
        d3 = d * d * d;
        if (d3 > n) break;
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            BigInt q = n / d;
            if (mpz_divisible_p(q.get_mpz_t(), d.get_mpz_t())) return d * d;
            n = q;  // d extracted exactly once; d is prime here (smaller factors gone)
        }
        ++d;
    }
    // remaining cofactor has at most two prime factors, both > cbrt
    if (auto h = exact_sqrt(n); h && *h > 1) return n;
    return 0;
}

}  // namespace pqf
