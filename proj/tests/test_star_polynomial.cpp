#include <catch2/catch_amalgamated.hpp>

#include "symmcfg/star_polynomial.hpp"

using namespace symmcfg;

TEST_CASE("single-variable star polynomial on pinned values") {
    // P = 1^(x) with zero constant: coeffs ascending {a0, a1}
    StarPolynomial p{make_context(2, 1), {0, 1}};
    CHECK(eval_star_poly(p, 3).as_integer() == 13);  // 3^3 = 27 = 2c + 1
    CHECK(eval_star_poly(p, 0).as_integer() == 0);   // constant = identity

    StarPolynomial p11{make_context(1, 1), {0, 1}};
    CHECK(eval_star_poly(p11, -1) == ExactScalar(-1, 2));  // image 2^(-1)
}

TEST_CASE("constant_is_identity marks the pointed class") {
    auto ctx = make_context(2, 1);  // identity 0
    CHECK(constant_is_identity(StarPolynomial{ctx, {0, 1}}));
    CHECK_FALSE(constant_is_identity(StarPolynomial{ctx, {1, 1}}));
    auto c23 = make_context(2, 3);  // identity -1
    CHECK(constant_is_identity(StarPolynomial{c23, {-1, 4}}));
}

TEST_CASE("multivariable star polynomial") {
    // 2^(xy) under (1,0): plain powers of 2
    MultiStarPolynomial pxy{make_context(1, 0), 2, {{{1, 1}, 2}}};
    CHECK(eval_multi_star_poly(pxy, std::vector<Int>{2, 3}).as_integer() == 64);

    // 1^(x) (*) 1^(y) under (1,1)
    MultiStarPolynomial psum{make_context(1, 1), 2, {{{1, 0}, 1}, {{0, 1}, 1}}};
    CHECK(eval_multi_star_poly(psum, std::vector<Int>{1, 1}).as_integer() == 3);

    // empty star product is the identity (unital contexts only)
    MultiStarPolynomial empty{make_context(1, 1), 2, {}};
    CHECK(eval_multi_star_poly(empty, std::vector<Int>{5, 7}).as_integer() == 0);
    MultiStarPolynomial empty_nonunital{make_context(3, 0), 1, {}};
    CHECK_THROWS_MATCHES(eval_multi_star_poly(empty_nonunital, std::vector<Int>{1}), SymmError,
                         Catch::Matchers::Predicate<SymmError>([](const SymmError& e) {
                             return e.code() == errc::non_unital_identity;
                         }));
}

TEST_CASE("polynomial error paths") {
    MultiStarPolynomial p{make_context(1, 1), 2, {{{1, 0}, 1}}};
    CHECK_THROWS_MATCHES(eval_multi_star_poly(p, std::vector<Int>{1}), SymmError,
                         Catch::Matchers::Predicate<SymmError>([](const SymmError& e) {
                             return e.code() == errc::bad_argument;
                         }));

    // image of the coefficient is 0 and the exponent is negative
    StarPolynomial zero_img{make_context(1, 1), {0, -1}};
    CHECK_THROWS_MATCHES(eval_star_poly(zero_img, -1), SymmError,
                         Catch::Matchers::Predicate<SymmError>([](const SymmError& e) {
                             return e.code() == errc::division_by_zero_image;
                         }));
}
