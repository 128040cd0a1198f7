#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motivic/moduli.hpp"

#include <filesystem>
#include <numeric>

using namespace motivic;

namespace {

HilbCache& test_cache() {
    static HilbCache cache(std::filesystem::temp_directory_path() /
                           ("motivic-test-moduli-" + std::to_string(::getpid())));
    return cache;
}

}  // namespace

TEST_CASE("chi0 worked examples") {
    CHECK(chi0(4, 1) == -5);
    CHECK(chi0(5, -7) == -7);
    CHECK(chi0(6, 5) == -7);
    CHECK(chi0(3, 1) == -4);
    CHECK_THROWS_AS(chi0(0, 1), std::invalid_argument);
}

TEST_CASE("chi0 uniqueness scan") {
    for (int d = 1; d <= 60; ++d)
        for (long chi = -3L * d; chi <= 3L * d; ++chi)
            CHECK_NOTHROW(chi0(d, chi));  // throws on zero or multiple matches
}

TEST_CASE("chi0 extended window") {
    auto v = chi0_extended(4, 1);
    CHECK(v == std::vector<long>{-9, -7, -5, -3});
    // every value in the strict window reappears in the extended one
    for (int d = 1; d <= 20; ++d)
        for (long chi = -2L * d; chi <= 2L * d; ++chi) {
            auto ext = chi0_extended(d, chi);
            long strict = chi0(d, chi);
            CHECK(std::find(ext.begin(), ext.end(), strict) != ext.end());
        }
}

TEST_CASE("rho") {
    CHECK(rho(5) == 4);
    CHECK(rho(4) == 3);
    CHECK(rho(9) == 7);
    CHECK(rho(1) == 7);
    CHECK(rho(2) == 1);
    CHECK(rho(6) == 5);
    CHECK(rho(12) == 7);
    CHECK(rho(13) == 12);
    CHECK(rho(26) == 25);
}

TEST_CASE("params worked examples") {
    ModuliParams p = params(4, 1);
    CHECK(p.chi0 == -5);
    CHECK(p.rho == 3);
    CHECK(p.dbar == 7);
    CHECK(p.shift == 3);
    CHECK(p.dim_m == 17);
    CHECK(p.level_scheme == 14);
    CHECK(p.stable_threshold == 29);
    CHECK(p.coprime);

    ModuliParams q = params(3, 1);
    CHECK(q.chi0 == -4);
    CHECK(q.rho == 2);
    CHECK(q.dbar == 4);
    CHECK(q.shift == 2);
    CHECK(q.dim_m == 10);
    CHECK(q.level_scheme == 8);
    CHECK(q.stable_threshold == 17);

    ModuliParams r = params(5, 2);
    CHECK(r.chi0 == -7);
    CHECK(r.rho == 4);
    CHECK(r.dbar == 12);
    CHECK(r.shift == 2);
    CHECK(r.dim_m == 26);
    CHECK(r.level_scheme == 22);
    CHECK(r.stable_threshold == 45);
}

TEST_CASE("shift plus twice dbar is the moduli dimension") {
    for (int d = 1; d <= 30; ++d)
        for (long chi = -3L * d; chi <= 3L * d; ++chi) {
            if (std::gcd(static_cast<long>(d), chi < 0 ? -chi : chi) != 1) continue;
            ModuliParams p = params(d, chi);
            CHECK(p.shift + 2 * p.dbar == p.dim_m);
            CHECK(p.stable_threshold == 1 + 2 * (p.dim_m - p.rho));
        }
}

TEST_CASE("motivic_tail d=4 chi=1") {
    MotivicTail t = motivic_tail(4, 1, test_cache());
    CHECK_FALSE(t.vacuous);
    CHECK_FALSE(t.semistable_only);
    CHECK(t.level == 14);
    CHECK(t.tail.coefficient(17) == 1);
    CHECK(t.tail.coefficient(16) == 2);
    CHECK(t.tail.coefficient(14) == 0);  // truncated at the level
    CHECK(t.tail.min_degree() > t.level);
    CHECK(t.tail.max_degree() == t.params.dim_m);
    for (const auto& [deg, c] : t.tail.coeffs()) CHECK(c > 0);
}

TEST_CASE("motivic_tail non-coprime and degenerate") {
    MotivicTail ss = motivic_tail(4, 2, test_cache());
    CHECK(ss.semistable_only);
    CHECK_FALSE(ss.vacuous);
    CHECK(ss.tail.coefficient(17) == 1);

    MotivicTail v = motivic_tail(1, 1, test_cache());
    CHECK(v.vacuous);
    CHECK(v.tail.is_zero());
}

TEST_CASE("betti_tail d=4 chi=1") {
    BettiTail bt = betti_tail(4, 1, test_cache());
    CHECK(bt.entries.size() == 2u * rho(4));
    auto b = [&](long i) -> mpz_class {
        for (const auto& [j, v] : bt.entries)
            if (j == i) return v;
        REQUIRE(false);
        return 0;
    };
    CHECK(b(34) == 1);
    CHECK(b(33) == 0);
    CHECK(b(32) == 2);
    CHECK(b(31) == 0);
    CHECK(b(29) == 0);
    for (const auto& [i, v] : bt.entries) {
        if (i % 2 != 0) CHECK(v == 0);
        CHECK(v >= 0);
    }
    for (const auto& [p, h] : bt.hodge_diag) CHECK(h == b(2 * p));

    CHECK_THROWS_AS(betti_tail(4, 2, test_cache()), std::invalid_argument);
}

TEST_CASE("betti_tail small d invariants") {
    for (int d = 2; d <= 8; ++d)
        for (long chi = 1; chi <= d; ++chi) {
            if (std::gcd(static_cast<long>(d), chi) != 1) continue;
            BettiTail bt = betti_tail(d, chi, test_cache());
            CHECK(bt.entries.size() == 2u * rho(d));
            CHECK(bt.entries.back().first == 2 * bt.params.dim_m);
            CHECK(bt.entries.back().second == 1);
            for (const auto& [i, v] : bt.entries) {
                CHECK(v >= 0);
                if (i % 2 != 0) CHECK(v == 0);
            }
        }
}

TEST_CASE("verify_chi_independence small degrees") {
    for (int d = 3; d <= 6; ++d) {
        ChiIndependenceReport rep = verify_chi_independence(d, test_cache());
        CHECK(rep.passed);
        CHECK_FALSE(rep.vacuous);
        CHECK(rep.chi0_values.front() == -2L * d - 1);
        CHECK(rep.chi0_values.back() == -d + 1);
    }
    CHECK_THROWS_AS(verify_chi_independence(2, test_cache()), std::invalid_argument);
}

TEST_CASE("duality symmetry") {
    CHECK(duality_symmetry(4, 1));
    CHECK(duality_symmetry(7, 3));
    CHECK(duality_symmetry(5, 0));
    for (int d = 1; d <= 15; ++d)
        for (long chi = -2L * d; chi <= 2L * d; ++chi) CHECK(duality_symmetry(d, chi));
}
