#include <pqf/cf.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace pqf;

TEST_CASE("required_precision scales with the log of the bound") {
    CHECK(required_precision(BigInt(1)) == 200);
    CHECK(required_precision(BigInt(9)) == 202);
    CHECK(required_precision(BigInt(10000)) == 208);
    CHECK(required_precision(pow10(100)) == 400);
    CHECK(required_precision(pow10(500)) == 1200);
}

TEST_CASE("root enclosure brackets the fourth root") {
    for (long g : {2L, 3L, 5L, 150L, 7140L, 9834495L}) {
        RootEnclosure enc = root_enclosure(BigInt(g), 40);
        CHECK(enc.scale == pow10(40));
        BigInt target = BigInt(g) * pow10(160);
        BigInt lo4, hi4;
        mpz_pow_ui(lo4.get_mpz_t(), enc.root_scaled.get_mpz_t(), 4);
        BigInt r1 = enc.root_scaled + 1;
        mpz_pow_ui(hi4.get_mpz_t(), r1.get_mpz_t(), 4);
        CHECK(lo4 <= target);
        CHECK(target < hi4);
    }
}

TEST_CASE("root enclosure rejects invalid inputs") {
    CHECK_THROWS_AS(root_enclosure(BigInt(1), 40), std::invalid_argument);
    CHECK_THROWS_AS(root_enclosure(BigInt(4), 40), std::invalid_argument);    // 2^2
    CHECK_THROWS_AS(root_enclosure(BigInt(9834496), 40), std::invalid_argument);  // 3136^2
    CHECK_THROWS_AS(root_enclosure(BigInt(2), 8), std::invalid_argument);
}

TEST_CASE("certified quotients are a prefix of any higher-precision run") {
    for (long g : {2L, 5L, 150L, 7140L}) {
        ConvergentStream lo = certified_cf(root_enclosure(BigInt(g), 30), pow10(60));
        ConvergentStream hi = certified_cf(root_enclosure(BigInt(g), 120), pow10(60));
        REQUIRE(lo.quotients.size() <= hi.quotients.size());
        for (std::size_t i = 0; i < lo.quotients.size(); ++i)
            CHECK(lo.quotients[i] == hi.quotients[i]);
    }
}

TEST_CASE("convergents satisfy the classical recurrences and bracketing") {
    RootEnclosure enc = root_enclosure(BigInt(5), 60);
    ConvergentStream st = certified_cf(enc, pow10(20));
    REQUIRE(st.complete);
    REQUIRE(st.convergents.size() >= 3);

    const auto& cv = st.convergents;
    for (std::size_t k = 0; k + 1 < cv.size(); ++k) {
        // p_{k+1} q_k - p_k q_{k+1} = (-1)^k
        BigInt det = cv[k + 1].first * cv[k].second - cv[k].first * cv[k + 1].second;
        CHECK(abs(det) == 1);
        CHECK(cv[k].second <= cv[k + 1].second);
    }
    for (std::size_t k = 1; k < st.quotients.size(); ++k) CHECK(st.quotients[k] >= 1);

    // Even-index convergents sit below the root, odd-index ones above.
    for (std::size_t k = 0; k < cv.size(); ++k) {
        const auto& [p, q] = cv[k];
        if (k % 2 == 0)
            CHECK(p * enc.scale <= enc.hi_num() * q);
        else
            CHECK(p * enc.scale >= enc.lo_num() * q);
    }
}

TEST_CASE("completion flag reflects the certified denominator bound") {
    ConvergentStream st = certified_cf(root_enclosure(BigInt(17), 212), pow10(6));
    REQUIRE(st.complete);
    CHECK(st.convergents.back().second > pow10(6));

    // 16 digits cannot certify denominators beyond ~10^16.
    ConvergentStream starved = certified_cf(root_enclosure(BigInt(17), 16), pow10(40));
    CHECK(!starved.complete);
}

TEST_CASE("known solutions appear among the convergents") {
    // a^4 - g b^4 = 1 at (7,2) for g=150 and (239,26) for g=7140 forces a/b
    // to approximate g^(1/4) well enough to be a convergent.
    auto contains = [](const ConvergentStream& st, long p, long q) {
        for (const auto& [pp, qq] : st.convergents)
            if (pp == p && qq == q) return true;
        return false;
    };
    CHECK(contains(certified_cf(root_enclosure(BigInt(150), 208), pow10(4)), 7, 2));
    CHECK(contains(certified_cf(root_enclosure(BigInt(7140), 208), pow10(4)), 239, 26));
    CHECK(contains(certified_cf(root_enclosure(BigInt(2), 208), pow10(4)), 1, 1));
}

TEST_CASE("first quotient is the integer part of the fourth root") {
    // floor(g^(1/4)) for g = 2, 17, 150, 7140: 1, 2, 3, 9.
    CHECK(certified_cf(root_enclosure(BigInt(2), 40), BigInt(10)).quotients.at(0) == 1);
    CHECK(certified_cf(root_enclosure(BigInt(17), 40), BigInt(10)).quotients.at(0) == 2);
    CHECK(certified_cf(root_enclosure(BigInt(150), 40), BigInt(10)).quotients.at(0) == 3);
    CHECK(certified_cf(root_enclosure(BigInt(7140), 40), BigInt(10)).quotients.at(0) == 9);
}
