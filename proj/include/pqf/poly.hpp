#pragma once
// poly.hpp - dense integer polynomials, just enough for exact resultants
// and discriminants: coefficient vectors over BigInt, Sylvester matrix,
// Bareiss fraction-free determinant.

#include "pqf/bigint.hpp"

#include <cstddef>
#include <vector>

namespace pqf {

/// coeffs[i] is the coefficient of x^i; normalized (no trailing zeros).
using Poly = std::vector<BigInt>;

inline void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline long poly_deg(const Poly& f) { return static_cast<long>(f.size()) - 1; }  // deg(0) = -1

inline Poly poly_derivative(const Poly& f) {
    Poly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(BigInt(static_cast<long>(i)) * f[i]);
    poly_trim(d);
    return d;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    poly_trim(c);
    return c;
}

/// Exact determinant by Bareiss fraction-free elimination (all interior
/// divisions exact). Consumes the matrix.
inline BigInt bareiss_det(std::vector<std::vector<BigInt>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev(1), t;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

/// Res(A, B) via the (degA+degB) x (degA+degB) Sylvester matrix.
/// Degenerate degrees: Res(c, B) = c^degB, Res(A, c) = c^degA.
inline BigInt resultant(const Poly& a_in, const Poly& b_in) {
    Poly a = a_in, b = b_in;
    poly_trim(a);
    poly_trim(b);
    const long da = poly_deg(a), db = poly_deg(b);
    if (da < 0 || db < 0) return 0;
    if (da == 0 && db == 0) return 1;
    if (da == 0) {
        BigInt r;
        mpz_pow_ui(r.get_mpz_t(), a[0].get_mpz_t(), static_cast<unsigned long>(db));
        return r;
    }
    if (db == 0) {
        BigInt r;
        mpz_pow_ui(r.get_mpz_t(), b[0].get_mpz_t(), static_cast<unsigned long>(da));
        return r;
    }
    const std::size_t n = static_cast<std::size_t>(da + db);
    std::vector<std::vector<BigInt>> syl(n, std::vector<BigInt>(n, BigInt(0)));
    for (long row = 0; row < db; ++row)
        for (long i = 0; i <= da; ++i) syl[row][row + i] = a[da - i];
    for (long row = 0; row < da; ++row)
        for (long i = 0; i <= db; ++i) syl[db + row][row + i] = b[db - i];
    return bareiss_det(syl);
}

/// Discriminant of a monic polynomial: (-1)^(n(n-1)/2) * Res(f, f').
inline BigInt discriminant_monic(const Poly& f_in) {
    Poly f = f_in;
    poly_trim(f);
    const long n = poly_deg(f);
    if (n < 1) throw std::invalid_argument("discriminant_monic: degree must be >= 1");
    if (f.back() != 1) throw std::invalid_argument("discriminant_monic: polynomial not monic");
    BigInt res = resultant(f, poly_derivative(f));
    return ((n * (n - 1) / 2) % 2 == 0) ? res : -res;
}

}  // namespace pqf
