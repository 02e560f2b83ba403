#pragma once
// oracle.hpp - brute-force cross-checks for the solver paths.
//
// The audits deliberately take the dumb route: direct enumeration plus
// fourth-power testing on the Thue side, exhaustive small-coordinate index
// evaluation on the generator side. They share no search logic with the
// convergent-based solver they judge. Boxes are kept tiny on purpose.

#include "pqf/arith.hpp"
#include "pqf/bigint.hpp"
#include "pqf/pib.hpp"
#include "pqf/thue.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pqf {

template <typename Item>
struct AuditReport {
    BigInt subject;
    std::vector<Item> oracle_set;
    std::vector<Item> solver_set;
    bool agreement = false;
    std::vector<Item> only_in_oracle;
    std::vector<Item> only_in_solver;
    ThueStatus solver_status = ThueStatus::solved;
};

namespace detail {

template <typename Item>
void finalize_audit(AuditReport<Item>& rep) {
    std::sort(rep.oracle_set.begin(), rep.oracle_set.end());
    rep.oracle_set.erase(std::unique(rep.oracle_set.begin(), rep.oracle_set.end()),
                         rep.oracle_set.end());
    std::sort(rep.solver_set.begin(), rep.solver_set.end());
    rep.solver_set.erase(std::unique(rep.solver_set.begin(), rep.solver_set.end()),
                         rep.solver_set.end());
    std::set_difference(rep.oracle_set.begin(), rep.oracle_set.end(), rep.solver_set.begin(),
                        rep.solver_set.end(), std::back_inserter(rep.only_in_oracle));
    std::set_difference(rep.solver_set.begin(), rep.solver_set.end(), rep.oracle_set.begin(),
                        rep.oracle_set.end(), std::back_inserter(rep.only_in_solver));
    rep.agreement = rep.solver_status == ThueStatus::solved && rep.only_in_oracle.empty() &&
                    rep.only_in_solver.empty();
}

}  // namespace detail

/// Audits solve_small against direct enumeration over b <= B. The solver is
/// run at a height covering every a that can pair with b <= B (a^4 <= g B^4
/// + 1), then its output is restricted to b <= B so both sides describe the
/// same region.
inline AuditReport<ThueSolution> audit_thue(const BigInt& g, unsigned long B,
                                            const SolveOptions& opt = {}) {
    if (g < 2 || is_perfect_square(g)) throw std::invalid_argument("audit_thue: g must be >= 2 and non-square");
    if (B < 1) throw std::invalid_argument("audit_thue: B must be >= 1");

    AuditReport<ThueSolution> rep;
    rep.subject = g;
    rep.oracle_set = brute_small(g, B);

    const BigInt bound(B);
    BigInt a_cover = int_kth_root(g * bound * bound * bound * bound + 1, 4) + 1;
    ThueResult tr = solve_small(g, a_cover, opt);
    rep.solver_status = tr.status;
    for (const ThueSolution& s : tr.solutions)
        if (s.b <= bound) rep.solver_set.push_back(s);

    detail::finalize_audit(rep);
    return rep;
}

/// Audits generators_for_m against exhaustive index evaluation over the box
/// 1 <= x <= C, |y| <= C, 0 <= z <= C. The cost guard C <= 100 keeps the
/// O(C^3) enumeration honest.
inline AuditReport<Generator> audit_generators(const BigInt& m, unsigned long C,
                                               const SolveOptions& opt = {}) {
    if (m < 2) throw std::invalid_argument("audit_generators: m must be >= 2");
    if (C < 1 || C > 100) throw std::invalid_argument("audit_generators: C must be in [1,100]");
    FieldParam field = classify_m_direct(m);
    if (!field.admissible) throw std::invalid_argument("audit_generators: m not admissible");

    AuditReport<Generator> rep;
    rep.subject = m;

    const BigInt dk = field_discriminant(m);
    const long Cl = static_cast<long>(C);
    for (long x = 1; x <= Cl; ++x)
        for (long y = -Cl; y <= Cl; ++y)
            for (long z = 0; z <= Cl; ++z) {
                auto idx = index_with_field_disc(m, dk, BigInt(x), BigInt(y), BigInt(z));
                if (idx && *idx == 1) rep.oracle_set.push_back({BigInt(x), BigInt(y), BigInt(z)});
            }

    const BigInt box(Cl);
    GeneratorsResult gr = generators_for_m(field, box, opt);
    rep.solver_status = gr.status;
    for (const Generator& gen : gr.generators)
        if (gen.x <= box && abs(gen.y) <= box && gen.z <= box) rep.solver_set.push_back(gen);

    detail::finalize_audit(rep);
    return rep;
}

}  // namespace pqf
