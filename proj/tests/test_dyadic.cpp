#include <catch2/catch_amalgamated.hpp>

#include "symmcfg/dyadic.hpp"

using namespace symmcfg;

TEST_CASE("dyadic decomposition") {
    auto d = decompose(12);
    CHECK(d.valuation == 2);
    CHECK(d.odd_part == 3);
    CHECK(decompose(1).valuation == 0);
    CHECK(decompose(1).odd_part == 1);
    CHECK(decompose(8).valuation == 3);
    CHECK(decompose(8).odd_part == 1);
    CHECK_THROWS_MATCHES(decompose(0), SymmError,
                         Catch::Matchers::Predicate<SymmError>(
                             [](const SymmError& e) { return e.code() == errc::non_positive; }));
}

TEST_CASE("phi and rho bijections") {
    auto [x, y] = phi(12);
    CHECK(x == 2);
    CHECK(y == 2);
    CHECK(phi_inverse(x, y) == 12);
    auto [xr, er] = rho(12);
    CHECK(xr == 2);
    CHECK(er == 4);
    CHECK(rho_inverse(xr, er) == 12);
}

TEST_CASE("oplus fold on pinned values") {
    CHECK(oplus_fold(std::vector<Int>{4, 6}) == 40);
    CHECK(oplus_fold(std::vector<Int>{1, 1, 1}) == 5);
    CHECK(oplus_fold(std::vector<Int>{17}) == 17);
    CHECK(oplus(Int(4), Int(6)) == 40);
}

TEST_CASE("otimes fold on pinned values") {
    CHECK(otimes_fold(std::vector<Int>{4, 6}) == 28);
    CHECK(otimes_fold(std::vector<Int>{3, 5}) == 23);
    CHECK(otimes_fold(std::vector<Int>{17}) == 17);
    CHECK(otimes(Int(4), Int(6)) == 28);
}

TEST_CASE("dyadic family generator, oplus side") {
    auto vals = gen_dyadic_family(DyadicFamilyKind::oplus_hj, std::vector<Int>{3},
                                  std::vector<Int>{5}, 1);
    REQUIRE(vals.size() == 1);
    CHECK(vals[0].value == 9);
    CHECK(vals[0].closed_form_matches);
    CHECK(vals[0].exponent_form_matches);

    // fold of c copies alone
    auto solo = gen_dyadic_family(DyadicFamilyKind::oplus_hj, std::vector<Int>{},
                                  std::vector<Int>{7}, 1);
    CHECK(solo[0].value == 7);
    CHECK(solo[0].closed_form_matches);
}

TEST_CASE("dyadic family generator, otimes side") {
    auto vals = gen_dyadic_family(DyadicFamilyKind::otimes_hj, std::vector<Int>{3},
                                  std::vector<Int>{5}, 1);
    REQUIRE(vals.size() == 1);
    CHECK(vals[0].value == 23);
    // literal prefactor x = prod f(b_i) = f(3) = 0 collapses the displayed
    // form to 0; the exponent reading 2^(x f(a)^c) reproduces the fold
    CHECK(vals[0].closed_form == 0);
    CHECK_FALSE(vals[0].closed_form_matches);
    CHECK(vals[0].exponent_form_matches);

    // empty fixed part: both readings coincide with the fold
    auto empty = gen_dyadic_family(DyadicFamilyKind::otimes_hj, std::vector<Int>{},
                                   std::vector<Int>{12}, 2);
    CHECK(empty[0].value == otimes(Int(12), Int(12)));
    CHECK(empty[0].closed_form_matches);
    CHECK(empty[0].exponent_form_matches);

    // fixed part with valuation 4: the display's multiplicative prefactor
    // x = prod f(b_i) = 4 disagrees with the fold, the exponent form agrees
    auto deep = gen_dyadic_family(DyadicFamilyKind::otimes_hj, std::vector<Int>{16},
                                  std::vector<Int>{6}, 1);
    CHECK(deep[0].value == 112);  // 2^(4*1) * G_{1,1}(1,3) = 16 * 7
    CHECK(deep[0].closed_form == 56);
    CHECK_FALSE(deep[0].closed_form_matches);
    CHECK(deep[0].exponent_form == 112);
    CHECK(deep[0].exponent_form_matches);

    CHECK_THROWS_AS(
        gen_dyadic_family(DyadicFamilyKind::otimes_hj, std::vector<Int>{3}, std::vector<Int>{5}, 0),
        SymmError);
}

TEST_CASE("otimes on odd numbers is the (1,1) star") {
    auto ctx = make_context(1, 1);
    for (long m = 1; m <= 99; m += 2)
        for (long n = 1; n <= 99; n += 2)
            REQUIRE(otimes(Int(m), Int(n)) == star(ctx, Int(m), Int(n)));
}
