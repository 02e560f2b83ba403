#include <pqf/thue.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

using namespace pqf;

namespace {

ThueSolution sol(long a, long b, int sign) { return {BigInt(a), BigInt(b), sign}; }

std::vector<ThueSolution> with_trivial(std::vector<ThueSolution> v) {
    v.insert(v.begin(), sol(1, 0, +1));
    return v;
}

}  // namespace

TEST_CASE("brute force finds the classical small rows") {
    CHECK(brute_small(BigInt(5), 10) == with_trivial({sol(3, 2, +1)}));
    CHECK(brute_small(BigInt(15), 10) == with_trivial({sol(2, 1, +1)}));
    CHECK(brute_small(BigInt(17), 10) == with_trivial({sol(2, 1, -1)}));
    CHECK(brute_small(BigInt(39), 10) == with_trivial({sol(5, 2, +1)}));
    CHECK(brute_small(BigInt(82), 10) == with_trivial({sol(3, 1, -1)}));
    CHECK(brute_small(BigInt(150), 10) == with_trivial({sol(7, 2, +1)}));
    CHECK(brute_small(BigInt(2), 10) == with_trivial({sol(1, 1, -1)}));
    CHECK(brute_small(BigInt(6), 100) == with_trivial({}));
    CHECK(brute_small(BigInt(7140), 30) == with_trivial({sol(239, 26, +1)}));
}

TEST_CASE("solver matches brute force on a dense small range") {
    for (long g = 2; g <= 300; ++g) {
        if (is_perfect_square(BigInt(g))) continue;
        ThueResult r = solve_small(BigInt(g), BigInt(1000));
        REQUIRE(r.status == ThueStatus::solved);
        // restrict brute force to the same box: a and b both <= 1000
        std::vector<ThueSolution> expect;
        for (const ThueSolution& s : brute_small(BigInt(g), 1000))
            if (s.a <= 1000) expect.push_back(s);
        CHECK(r.solutions == expect);
    }
}

TEST_CASE("solver fixtures at larger heights") {
    ThueResult r = solve_small(BigInt(5), pow10(20));
    CHECK(r.status == ThueStatus::solved);
    CHECK(r.solutions == with_trivial({sol(3, 2, +1)}));

    r = solve_small(BigInt(2), pow10(20));
    CHECK(r.solutions == with_trivial({sol(1, 1, -1)}));

    r = solve_small(BigInt(7140), pow10(20));
    CHECK(r.solutions == with_trivial({sol(239, 26, +1)}));

    // 61535 and 69729 carry b=4 solutions; 63^4 = 15752961, 65^4 = 17850625.
    r = solve_small(BigInt(61535), pow10(20));
    CHECK(r.solutions == with_trivial({sol(63, 4, +1)}));
    r = solve_small(BigInt(69729), pow10(20));
    CHECK(r.solutions == with_trivial({sol(65, 4, +1)}));
}

TEST_CASE("height bound is honored exactly") {
    CHECK(solve_small(BigInt(7140), BigInt(238)).solutions == with_trivial({}));
    CHECK(solve_small(BigInt(7140), BigInt(239)).solutions == with_trivial({sol(239, 26, +1)}));
    CHECK(solve_small(BigInt(2), BigInt(1)).solutions == with_trivial({sol(1, 1, -1)}));
}

TEST_CASE("square coefficients are refused as reducible") {
    for (long g : {4L, 9L, 16L, 9834496L}) {
        ThueResult r = solve_small(BigInt(g), pow10(10));
        CHECK(r.status == ThueStatus::skipped_reducible);
        CHECK(r.solutions.empty());
    }
}

TEST_CASE("starved precision is reported, not papered over") {
    SolveOptions opt;
    opt.precision = 16;
    opt.max_retries = 0;
    ThueResult r = solve_small(BigInt(5), pow10(100), opt);
    CHECK(r.status == ThueStatus::precision_failure);
    CHECK(r.precision_used == 16);

    // with retries enabled the ladder doubles, and the last rung is recorded
    opt.max_retries = 3;
    r = solve_small(BigInt(5), pow10(100), opt);
    CHECK(r.status == ThueStatus::precision_failure);
    CHECK(r.precision_used == 128);
}

TEST_CASE("default retry ladder records the final precision") {
    ThueResult r = solve_small(BigInt(5), pow10(20));
    CHECK(r.precision_used == required_precision(pow10(20)));
}

TEST_CASE("solutions are normalized, coprime, sorted") {
    for (long g : {2L, 5L, 17L, 82L, 150L, 257L}) {
        ThueResult r = solve_small(BigInt(g), pow10(10));
        for (std::size_t i = 0; i < r.solutions.size(); ++i) {
            const ThueSolution& s = r.solutions[i];
            CHECK(s.a >= 1);
            CHECK(s.b >= 0);
            BigInt gc;
            mpz_gcd(gc.get_mpz_t(), s.a.get_mpz_t(), s.b.get_mpz_t());
            CHECK(gc == 1);
            BigInt lhs;
            mpz_pow_ui(lhs.get_mpz_t(), s.a.get_mpz_t(), 4);
            BigInt b4;
            mpz_pow_ui(b4.get_mpz_t(), s.b.get_mpz_t(), 4);
            lhs -= BigInt(g) * b4;
            CHECK(lhs == s.sign);
            if (i > 0) CHECK(r.solutions[i - 1] < s);
        }
    }
}

TEST_CASE("height monotonicity") {
    for (long g : {5L, 39L, 7140L}) {
        auto small = solve_small(BigInt(g), BigInt(100)).solutions;
        auto large = solve_small(BigInt(g), pow10(10)).solutions;
        for (const ThueSolution& s : small)
            CHECK(std::find(large.begin(), large.end(), s) != large.end());
    }
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(solve_small(BigInt(1), BigInt(10)), std::invalid_argument);
    CHECK_THROWS_AS(solve_small(BigInt(5), BigInt(0)), std::invalid_argument);
    CHECK_THROWS_AS(brute_small(BigInt(1), 10), std::invalid_argument);
}

TEST_CASE("at most one positive pair per coefficient") {
    CHECK(assert_bennett(with_trivial({sol(3, 2, +1)})).ok);
    CHECK(assert_bennett(with_trivial({})).ok);
    BennettCheck bad = assert_bennett(with_trivial({sol(3, 2, +1), sol(9, 5, -1)}));
    CHECK(!bad.ok);
    CHECK(bad.positive_pairs.size() == 2);

    for (long g : {2L, 5L, 150L, 7140L}) {
        CHECK(assert_bennett(solve_small(BigInt(g), pow10(10))).ok);
    }
}
