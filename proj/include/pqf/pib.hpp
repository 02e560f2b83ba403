#pragma once
// pib.hpp - generators of power integral bases in K = Q(m^(1/4)).
//
// For squarefree m = 2,3 (mod 4), m != +-1, the ring of integers of K has
// the basis {1, alpha, alpha^2, alpha^3} with alpha = m^(1/4). An element
// theta = x*alpha + y*alpha^2 + z*alpha^3 generates a power integral basis
// exactly when its index is 1. The index form factors through the pair
//     u = x^2 - m z^2,   v = y^2 - x z,
// with u(u^2 + 4 m v^2) = +-1, which forces u = +-1 and v = 0. For m < -1
// that pins (x,y,z) = (1,0,0); for m > 1 it makes x and z perfect squares,
// x = a^2, z = b^2, y = +-ab, with a^4 - m b^4 = +-1 the binomial Thue
// equation in (a,b).
//
// Two independent verification routes are kept deliberately separate:
//  * index_form_eval evaluates the u/v witness above;
//  * index_via_discriminant rebuilds the index from first principles via
//    the characteristic polynomial of theta and disc(theta) = I^2 * D_K.

#include "pqf/arith.hpp"
#include "pqf/bigint.hpp"
#include "pqf/poly.hpp"
#include "pqf/thue.hpp"

#include <array>
#include <optional>
#include <vector>

namespace pqf {

enum class AdmissReason { not_squarefree, bad_mod4, is_square };

inline const char* to_string(AdmissReason r) {
    switch (r) {
        case AdmissReason::not_squarefree: return "not_squarefree";
        case AdmissReason::bad_mod4: return "bad_mod4";
        case AdmissReason::is_square: return "is_square";
    }
    return "?";
}

/// m together with the admissibility verdict for the basis hypotheses:
/// squarefree and m = 2,3 (mod 4).
struct FieldParam {
    BigInt m;
    bool admissible = false;
    std::vector<AdmissReason> reasons;
};

namespace detail {

inline FieldParam make_field_param(const BigInt& m, bool squarefree) {
    FieldParam fp;
    fp.m = m;
    if (!squarefree) fp.reasons.push_back(AdmissReason::not_squarefree);
    int r4 = mod4_class(m);
    if (r4 != 2 && r4 != 3) fp.reasons.push_back(AdmissReason::bad_mod4);
    if (m > 0 && is_perfect_square(m)) fp.reasons.push_back(AdmissReason::is_square);
    fp.admissible = fp.reasons.empty();
    return fp;
}

}  // namespace detail

/// Sieve-backed classification; |m| must lie within the table.
inline FieldParam classify_m(const BigInt& m, const SquarefreeTable& table) {
    BigInt am = abs(m);
    if (am < 2) throw std::invalid_argument("classify_m: |m| must be >= 2");
    if (!am.fits_ulong_p() || am.get_ui() > table.limit())
        throw std::out_of_range("classify_m: |m| beyond table limit");
    return detail::make_field_param(m, table.is_squarefree(am.get_ui()));
}

/// Trial-division classification for m beyond any prebuilt sieve.
inline FieldParam classify_m_direct(const BigInt& m) {
    if (abs(m) < 2) throw std::invalid_argument("classify_m_direct: |m| must be >= 2");
    return detail::make_field_param(m, trial_smallest_square_divisor(m) == 0);
}

/// Witness of the index-form evaluation at (x,y,z):
/// u = x^2 - m z^2, v = y^2 - x z, F_value = u(u^2 + 4 m v^2).
/// F_value = +-1 iff theta = x*alpha + y*alpha^2 + z*alpha^3 generates a
/// power integral basis.
struct IndexFormWitness {
    BigInt u;
    BigInt v;
    BigInt F_value;
};

inline IndexFormWitness index_form_eval(const BigInt& m, const BigInt& x, const BigInt& y,
                                        const BigInt& z) {
    if (m == 0) throw std::invalid_argument("index_form_eval: m must be nonzero");
    IndexFormWitness w;
    w.u = x * x - m * z * z;
    w.v = y * y - x * z;
    w.F_value = w.u * (w.u * w.u + 4 * m * w.v * w.v);
    return w;
}

namespace detail {

/// 4x4 multiplication matrix of theta = x*alpha + y*alpha^2 + z*alpha^3 on
/// the basis {1, alpha, alpha^2, alpha^3}, alpha^4 = m. Column j holds the
/// coordinates of theta * alpha^j.
inline std::array<std::array<BigInt, 4>, 4> theta_matrix(const BigInt& m, const BigInt& x,
                                                         const BigInt& y, const BigInt& z) {
    std::array<std::array<BigInt, 4>, 4> a;
    const BigInt xm = x * m, ym = y * m, zm = z * m;
    a[0] = {BigInt(0), zm, ym, xm};
    a[1] = {x, BigInt(0), zm, ym};
    a[2] = {y, x, BigInt(0), zm};
    a[3] = {z, y, x, BigInt(0)};
    return a;
}

inline BigInt det3(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                   const BigInt& e, const BigInt& f, const BigInt& g, const BigInt& h,
                   const BigInt& i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

/// Characteristic polynomial det(tI - M) = t^4 - e1 t^3 + e2 t^2 - e3 t + e4
/// with e_k the sum of principal k x k minors. Monic, degree 4, exact.
inline Poly charpoly4(const std::array<std::array<BigInt, 4>, 4>& M) {
    BigInt e1 = M[0][0] + M[1][1] + M[2][2] + M[3][3];

    BigInt e2(0);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) e2 += M[i][i] * M[j][j] - M[i][j] * M[j][i];

    BigInt e3(0);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                e3 += det3(M[i][i], M[i][j], M[i][k], M[j][i], M[j][j], M[j][k], M[k][i], M[k][j],
                           M[k][k]);

    BigInt e4(0);  // det(M), Laplace along the first row
    {
        const int rows[3] = {1, 2, 3};
        for (int c = 0; c < 4; ++c) {
            if (M[0][c] == 0) continue;
            int cols[3], t = 0;
            for (int j = 0; j < 4; ++j)
                if (j != c) cols[t++] = j;
            BigInt minor = det3(M[rows[0]][cols[0]], M[rows[0]][cols[1]], M[rows[0]][cols[2]],
                                M[rows[1]][cols[0]], M[rows[1]][cols[1]], M[rows[1]][cols[2]],
                                M[rows[2]][cols[0]], M[rows[2]][cols[1]], M[rows[2]][cols[2]]);
            e4 += (c % 2 == 0 ? minor : -minor) * M[0][c];
        }
    }

    return Poly{e4, -e3, e2, -e1, BigInt(1)};
}

}  // namespace detail

/// Characteristic polynomial of theta, monic degree 4 (coefficients low to
/// high). Equals the minimal polynomial exactly when theta is primitive.
inline Poly theta_charpoly(const BigInt& m, const BigInt& x, const BigInt& y, const BigInt& z) {
    return detail::charpoly4(detail::theta_matrix(m, x, y, z));
}

/// Field discriminant D_K = disc(x^4 - m), computed (not transcribed).
inline BigInt field_discriminant(const BigInt& m) {
    if (m == 0) throw std::invalid_argument("field_discriminant: m must be nonzero");
    return discriminant_monic(Poly{-m, BigInt(0), BigInt(0), BigInt(0), BigInt(1)});
}

/// Index of theta by the discriminant route: disc(theta) = I^2 * D_K.
/// Returns nullopt when theta is not primitive (characteristic polynomial
/// not squarefree), where the index is undefined.
inline std::optional<BigInt> index_with_field_disc(const BigInt& m, const BigInt& field_disc,
                                                   const BigInt& x, const BigInt& y,
                                                   const BigInt& z) {
    BigInt d = discriminant_monic(theta_charpoly(m, x, y, z));
    if (d == 0) return std::nullopt;
    if (!mpz_divisible_p(d.get_mpz_t(), field_disc.get_mpz_t()))
        throw std::logic_error("index_with_field_disc: disc not a multiple of D_K");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), d.get_mpz_t(), field_disc.get_mpz_t());
    auto root = exact_sqrt(q);
    if (!root) throw std::logic_error("index_with_field_disc: disc ratio not a square");
    return *root;
}

inline std::optional<BigInt> index_via_discriminant(const BigInt& m, const BigInt& x,
                                                    const BigInt& y, const BigInt& z) {
    return index_with_field_disc(m, field_discriminant(m), x, y, z);
}

/// Coordinates of one power-integral-basis generator class,
/// theta = x*alpha + y*alpha^2 + z*alpha^3 (the constant coordinate is
/// irrelevant up to equivalence). Normalized to x >= 1; the two y signs of
/// a nontrivial class are listed as separate entries.
struct Generator {
    BigInt x;
    BigInt y;
    BigInt z;

    friend bool operator==(const Generator& l, const Generator& r) {
        return l.x == r.x && l.y == r.y && l.z == r.z;
    }
    friend bool operator<(const Generator& l, const Generator& r) {
        if (l.x != r.x) return l.x < r.x;
        if (l.z != r.z) return l.z < r.z;
        return l.y < r.y;
    }
};

struct GeneratorsResult {
    FieldParam field;
    BigInt height_gen;   // coordinate bound on max(|x|,|y|,|z|)
    BigInt thue_height;  // derived bound on max(a,b)
    ThueStatus status = ThueStatus::solved;
    unsigned long precision_used = 0;
    std::vector<ThueSolution> thue_solutions;  // the (a,b) pairs behind the generators
    std::vector<Generator> generators;
};

namespace detail {

/// Dual verification of an emitted generator; a failure here is a bug, not
/// an input condition.
inline void verify_generator(const BigInt& m, const BigInt& field_disc, const Generator& gen) {
    IndexFormWitness w = index_form_eval(m, gen.x, gen.y, gen.z);
    if (!(w.F_value == 1 || w.F_value == -1))
        throw std::logic_error("generator verification: index form value not +-1");
    if (!(w.u == 1 || w.u == -1) || w.v != 0)
        throw std::logic_error("generator verification: u/v witness malformed");
    auto idx = index_with_field_disc(m, field_disc, gen.x, gen.y, gen.z);
    if (!idx || *idx != 1)
        throw std::logic_error("generator verification: discriminant route index != 1");
}

}  // namespace detail

/// All generator classes for admissible m > 1 with coordinates bounded by
/// height_gen. The Thue height is sqrt(height_gen) since x = a^2, z = b^2.
/// Every returned generator has passed both verification routes.
inline GeneratorsResult generators_for_m(const FieldParam& field, const BigInt& height_gen,
                                         const SolveOptions& opt = {}) {
    if (!field.admissible) throw std::invalid_argument("generators_for_m: m not admissible");
    if (field.m <= 1) throw std::invalid_argument("generators_for_m: requires m > 1");
    if (height_gen < 1) throw std::invalid_argument("generators_for_m: height_gen must be >= 1");

    GeneratorsResult out;
    out.field = field;
    out.height_gen = height_gen;
    out.thue_height = int_kth_root(height_gen, 2);

    ThueResult tr = solve_small(field.m, out.thue_height, opt);
    out.status = tr.status;  // admissible m is never a perfect square
    out.precision_used = tr.precision_used;
    out.thue_solutions = tr.solutions;

    const BigInt dk = field_discriminant(field.m);
    for (const ThueSolution& s : tr.solutions) {
        if (s.b == 0) {
            out.generators.push_back({s.a * s.a, BigInt(0), BigInt(0)});
            detail::verify_generator(field.m, dk, out.generators.back());
            continue;
        }
        BigInt x = s.a * s.a, y = s.a * s.b, z = s.b * s.b;
        out.generators.push_back({x, y, z});
        detail::verify_generator(field.m, dk, out.generators.back());
        out.generators.push_back({x, -y, z});
        detail::verify_generator(field.m, dk, out.generators.back());
    }
    return out;
}

/// For admissible m < -1 the index form has the single solution class
/// (1,0,0): u = x^2 + |m| z^2 = +-1 forces x = 1, z = 0, then v = y^2 = 0.
inline GeneratorsResult generators_negative_m(const FieldParam& field) {
    if (!field.admissible) throw std::invalid_argument("generators_negative_m: m not admissible");
    if (field.m >= -1) throw std::invalid_argument("generators_negative_m: requires m < -1");
    GeneratorsResult out;
    out.field = field;
    out.height_gen = 1;
    out.thue_height = 1;
    out.status = ThueStatus::solved;
    out.generators.push_back({BigInt(1), BigInt(0), BigInt(0)});
    detail::verify_generator(field.m, field_discriminant(field.m), out.generators.back());
    return out;
}

/// One member of the parametric family m = ((s^4 t +- 1)^4 - 1) / s^4,
/// which carries the built-in positive solution (s^4 t +- 1, s).
struct FamilyPoint {
    BigInt m;
    ThueSolution predicted;  // sign is always +1: a^4 - m s^4 = 1
};

inline FamilyPoint family_m(unsigned long s, unsigned long t, int sign) {
    if (s < 1 || t < 1) throw std::invalid_argument("family_m: s,t must be >= 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("family_m: sign must be +-1");
    BigInt s4;
    mpz_ui_pow_ui(s4.get_mpz_t(), s, 4);
    BigInt a = s4 * BigInt(static_cast<long>(t)) + sign;
    if (a < 2) throw std::invalid_argument("family_m: parameters give a < 2, m degenerate");
    BigInt num;
    mpz_pow_ui(num.get_mpz_t(), a.get_mpz_t(), 4);
    num -= 1;
    if (!mpz_divisible_p(num.get_mpz_t(), s4.get_mpz_t()))
        throw std::logic_error("family_m: (s^4 t +- 1)^4 - 1 not divisible by s^4");
    FamilyPoint fp;
    fp.m = num / s4;
    fp.predicted = {a, BigInt(static_cast<long>(s)), +1};
    return fp;
}

}  // namespace pqf
