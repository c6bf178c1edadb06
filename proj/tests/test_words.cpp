#include <catch2/catch_amalgamated.hpp>

#include "symmcfg/words.hpp"

using namespace symmcfg;

TEST_CASE("line points") {
    CHECK(line_points(VariableWord{{0, 1}}, 2) ==
          std::vector<Word>{{1, 1}, {2, 1}});
    CHECK(line_points(VariableWord{{0, 0}}, 2) ==
          std::vector<Word>{{1, 1}, {2, 2}});
    CHECK(line_points(VariableWord{{1, 0, 2}}, 3) ==
          std::vector<Word>{{1, 1, 2}, {1, 2, 2}, {1, 3, 2}});
    CHECK_THROWS_MATCHES(line_points(VariableWord{{1, 2}}, 2), SymmError,
                         Catch::Matchers::Predicate<SymmError>(
                             [](const SymmError& e) { return e.code() == errc::no_variable; }));
}

TEST_CASE("count_lines formula and enumeration agree") {
    CHECK(count_lines(2, 2) == 5);
    CHECK(count_lines(1, 3) == 7);
    CHECK(count_lines(3, 1) == 1);
    for (int t = 1; t <= 3; ++t)
        for (int N = 1; N <= 4; ++N) {
            Int n = 0;
            for_each_line(t, N, [&](const std::vector<int>&) { ++n; });
            REQUIRE(n == count_lines(t, N));
        }
}

TEST_CASE("beiglboeck pattern") {
    auto words = beiglboeck_pattern({}, {1}, {2}, {1, 2});
    REQUIRE(words.size() == 2);
    CHECK(words[0] == LocatedWord{{1, 1}, {2, 1}});
    CHECK(words[1] == LocatedWord{{1, 2}, {2, 2}});

    auto ext = beiglboeck_pattern({{3, 1}}, {}, {1, 2}, {1});
    REQUIRE(ext.size() == 2);
    CHECK(ext[0] == LocatedWord{{1, 1}, {3, 1}});
    CHECK(ext[1] == LocatedWord{{2, 1}, {3, 1}});

    CHECK_THROWS_MATCHES(beiglboeck_pattern({}, {1, 2}, {2}, {1}), SymmError,
                         Catch::Matchers::Predicate<SymmError>(
                             [](const SymmError& e) { return e.code() == errc::domain_overlap; }));
}

TEST_CASE("eval_word_star") {
    CHECK(eval_word_star(make_context(1, 1), {{2, 1}, {5, 2}}) == 107);  // 3*6*6 = 108
    CHECK(eval_word_star(make_context(1, 0), {{2, 3}}) == 8);
    CHECK(eval_word_star(make_context(1, 1), {{2, 0}, {7, 0}}) == 0);  // identity
    CHECK_THROWS_MATCHES(eval_word_star(make_context(3, 0), {{2, 0}}), SymmError,
                         Catch::Matchers::Predicate<SymmError>([](const SymmError& e) {
                             return e.code() == errc::non_unital_identity;
                         }));
    CHECK_THROWS_AS(eval_word_star(make_context(1, 1), {{0, 1}}), SymmError);
}

TEST_CASE("phj grid points") {
    PhjPattern diag;
    diag.N = 2;
    diag.q = 2;
    diag.d = 1;
    diag.gamma = {1, 2};
    diag.base.comps = {{1, 1}};
    auto points = phj_points(diag);
    REQUIRE(points.size() == 2);
    CHECK(points[0].comps[0] == std::vector<int>{1, 1});
    CHECK(points[1].comps[0] == std::vector<int>{2, 2});

    PhjPattern two;
    two.N = 2;
    two.q = 2;
    two.d = 2;
    two.gamma = {1};
    two.base.comps = {{1, 1}, {1, 1, 1, 1}};
    CHECK(phj_points(two).size() == 4);  // q^d

    PhjPattern single;
    single.N = 3;
    single.q = 3;
    single.d = 1;
    single.gamma = {1};
    single.base.comps = {{2, 1, 2}};
    auto pts = phj_points(single);
    REQUIRE(pts.size() == 3);
    for (int a = 1; a <= 3; ++a) {
        CHECK(pts[static_cast<std::size_t>(a - 1)].comps[0] ==
              std::vector<int>{a, 1, 2});  // only coordinate 1 varies
    }
}

TEST_CASE("hj numbers at trivial sizes") {
    auto r = hj_number(2, 2, 4);
    REQUIRE(r.value.has_value());
    CHECK(*r.value == 2);

    CHECK(hj_number(1, 5, 3).value == 1);          // a single word is a line
    CHECK_FALSE(hj_number(3, 2, 1).value.has_value());  // [3]^1 is 2-colorable
}

TEST_CASE("hj search is worker independent") {
    AvoiderOptions one;
    one.workers = 1;
    AvoiderOptions four;
    four.workers = 4;
    auto a = hj_number(2, 2, 3, one);
    auto b = hj_number(2, 2, 3, four);
    CHECK(a.value == b.value);
    CHECK(a.nodes == b.nodes);
    CHECK(a.lines == b.lines);
}
