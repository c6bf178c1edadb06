#include <catch2/catch_amalgamated.hpp>

#include "symmcfg/search.hpp"

using namespace symmcfg;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

FamilyDescriptor ap(long len) {
    FamilyDescriptor d;
    d.kind = FamilyKind::ap_plain;
    d.len = len;
    return d;
}

FamilyDescriptor star_schur_11() {
    FamilyDescriptor d;
    d.kind = FamilyKind::star_schur;
    d.ctx = make_context(1, 1);
    return d;
}

Coloring pattern_coloring(long long lo, long long hi, int r,
                          const std::function<int(long long)>& f) {
    Coloring c;
    c.lo = lo;
    c.hi = hi;
    c.r = r;
    for (long long v = lo; v <= hi; ++v) c.colors.push_back(static_cast<std::uint8_t>(f(v)));
    return c;
}

// literal all-colorings regularity oracle over a window
bool brute_regular(const FamilyDescriptor& desc, int r, Window w,
                   std::span<const ParamRange> box) {
    std::vector<std::vector<long long>> instances;
    SearchStats stats;
    enumerate_instances(desc, w, box, SearchBudget{}, stats, [&](const Instance& ins) {
        std::vector<long long> e;
        for (const Int& x : ins.elements) e.push_back(x.convert_to<long long>());
        instances.push_back(std::move(e));
        return true;
    });
    const std::size_t width = static_cast<std::size_t>(w.hi - w.lo + 1);
    std::vector<int> col(width, 0);
    while (true) {
        bool avoided = true;
        for (const auto& ins : instances) {
            bool mono = true;
            for (std::size_t i = 1; i < ins.size(); ++i)
                if (col[static_cast<std::size_t>(ins[i] - w.lo)] !=
                    col[static_cast<std::size_t>(ins[0] - w.lo)]) {
                    mono = false;
                    break;
                }
            if (mono) {
                avoided = false;
                break;
            }
        }
        if (avoided) return false;
        std::size_t i = width;
        while (i > 0 && col[i - 1] == r - 1) col[--i] = 0;
        if (i == 0) return true;
        ++col[i - 1];
    }
}

} // namespace

TEST_CASE("enumerate_instances: ap over a window, lexicographic order") {
    std::vector<ParamRange> box{{1, 5}, {1, 2}};
    std::vector<std::vector<Int>> got;
    SearchStats stats;
    bool done = enumerate_instances(ap(3), Window{1, 5}, box, SearchBudget{}, stats,
                                    [&](const Instance& ins) {
                                        got.push_back(ins.elements);
                                        return true;
                                    });
    CHECK(done);
    REQUIRE(got.size() == 4);
    CHECK(got[0] == ints({1, 2, 3}));
    CHECK(got[1] == ints({1, 3, 5}));
    CHECK(got[2] == ints({2, 3, 4}));
    CHECK(got[3] == ints({3, 4, 5}));
    CHECK(stats.instances == 4);
}

TEST_CASE("enumerate_instances: star_schur window membership and empty box") {
    std::vector<ParamRange> box{{1, 3}, {1, 3}};
    std::vector<std::vector<Int>> got;
    SearchStats stats;
    enumerate_instances(star_schur_11(), Window{1, 11}, box, SearchBudget{}, stats,
                        [&](const Instance& ins) {
                            got.push_back(ins.elements);
                            return true;
                        });
    // degenerate (x == y) excluded by default; (2,3) and (3,2) both inside
    CHECK(got.size() == 6);
    CHECK(std::count(got.begin(), got.end(), ints({2, 3, 11})) == 2);

    std::vector<ParamRange> empty{{3, 1}, {1, 3}};
    SearchStats s2;
    std::size_t n = 0;
    CHECK(enumerate_instances(star_schur_11(), Window{1, 11}, empty, SearchBudget{}, s2,
                              [&](const Instance&) {
                                  ++n;
                                  return true;
                              }));
    CHECK(n == 0);
}

TEST_CASE("find_witness on fixed colorings") {
    auto constant = pattern_coloring(1, 9, 2, [](long long) { return 0; });
    std::vector<ParamRange> box{{1, 9}, {1, 9}};
    auto rep = find_witness(constant, ap(3), box, SearchBudget{});
    REQUIRE(rep.outcome == SearchOutcome::witness_found);
    CHECK(rep.witness->params == ints({1, 1}));
    CHECK(rep.witness->elements == ints({1, 2, 3}));
    CHECK(rep.witness->color == 0);

    auto parity = pattern_coloring(1, 9, 2, [](long long v) { return static_cast<int>(v & 1); });
    rep = find_witness(parity, ap(3), box, SearchBudget{});
    REQUIRE(rep.outcome == SearchOutcome::witness_found);
    CHECK(rep.witness->params == ints({1, 2}));
    CHECK(rep.witness->elements == ints({1, 3, 5}));
    CHECK(rep.witness->color == 1);

    // star-schur under parity: first nondegenerate witness is x=1, y=3
    auto parity30 = pattern_coloring(1, 30, 2, [](long long v) { return static_cast<int>(v & 1); });
    std::vector<ParamRange> box30{{1, 30}, {1, 30}};
    rep = find_witness(parity30, star_schur_11(), box30, SearchBudget{});
    REQUIRE(rep.outcome == SearchOutcome::witness_found);
    CHECK(rep.witness->params == ints({1, 3}));
    CHECK(rep.witness->elements == ints({1, 3, 7}));

    // with degenerates allowed the earlier x=1, y=1 pair wins
    rep = find_witness(parity30, star_schur_11(), box30, SearchBudget{}, true);
    REQUIRE(rep.outcome == SearchOutcome::witness_found);
    CHECK(rep.witness->params == ints({1, 1}));
    CHECK(rep.witness->elements == ints({1, 3}));

    // len-5 progressions inside [2,8] are consecutive runs; parity breaks each
    auto parity8 = pattern_coloring(2, 8, 2, [](long long v) { return static_cast<int>(v & 1); });
    std::vector<ParamRange> b2{{2, 8}, {1, 8}};
    auto none = find_witness(parity8, ap(5), b2, SearchBudget{});
    CHECK(none.outcome == SearchOutcome::no_witness);
}

TEST_CASE("find_avoiding_coloring on the van der Waerden window") {
    std::vector<ParamRange> box8{{1, 8}, {1, 8}};
    auto rep8 = find_avoiding_coloring(ap(3), 2, Window{1, 8}, box8, SearchBudget{});
    REQUIRE(rep8.outcome == SearchOutcome::avoiding_coloring_found);
    REQUIRE(rep8.avoiding.has_value());
    CHECK(rep8.avoiding->colors.size() == 8);

    std::vector<ParamRange> box9{{1, 9}, {1, 9}};
    auto rep9 = find_avoiding_coloring(ap(3), 2, Window{1, 9}, box9, SearchBudget{});
    CHECK(rep9.outcome == SearchOutcome::regular);

    // one color: regular as soon as one instance fits
    std::vector<ParamRange> box3{{1, 3}, {1, 3}};
    CHECK(find_avoiding_coloring(ap(3), 1, Window{1, 3}, box3, SearchBudget{}).outcome ==
          SearchOutcome::regular);
}

TEST_CASE("minimal_window pins the van der Waerden number") {
    auto res = minimal_window(ap(3), 2, Domain::nat, 20, SearchBudget{});
    REQUIRE(res.value.has_value());
    CHECK(*res.value == 9);
    REQUIRE(res.avoider_below.has_value());
    CHECK(res.avoider_below->hi == 8);

    auto pairs = minimal_window(ap(2), 1, Domain::nat, 5, SearchBudget{});
    REQUIRE(pairs.value.has_value());
    CHECK(*pairs.value == 2);
}

TEST_CASE("engine verdict equals the literal all-colorings oracle on small windows") {
    for (long long n = 1; n <= 11; ++n) {
        Window w{1, n};
        auto box = default_param_box(ap(3), Domain::nat, n);
        bool brute = brute_regular(ap(3), 2, w, box);
        auto rep = find_avoiding_coloring(ap(3), 2, w, box, SearchBudget{});
        REQUIRE((rep.outcome == SearchOutcome::regular) == brute);
    }
    for (long long n = 1; n <= 12; ++n) {
        Window w{1, n};
        auto box = default_param_box(star_schur_11(), Domain::nat, n);
        bool brute = brute_regular(star_schur_11(), 2, w, box);
        auto rep = find_avoiding_coloring(star_schur_11(), 2, w, box, SearchBudget{});
        REQUIRE((rep.outcome == SearchOutcome::regular) == brute);
    }
}

TEST_CASE("integer domain windows assign by absolute value") {
    // {x, y, x (*) y} over [-n, n] with (1,0): multiplicative triples
    FamilyDescriptor mult;
    mult.kind = FamilyKind::star_schur;
    mult.ctx = make_context(1, 0);
    auto box = default_param_box(mult, Domain::integers, 4);
    auto rep = find_avoiding_coloring(mult, 2, Window{-4, 4}, box, SearchBudget{});
    // {x, y, xy} with |values| <= 4 admits an avoider at this size
    CHECK(rep.outcome == SearchOutcome::avoiding_coloring_found);
}

TEST_CASE("search reports are worker independent") {
    std::vector<ParamRange> box{{1, 9}, {1, 9}};
    auto one = find_avoiding_coloring(ap(3), 2, Window{1, 9}, box, SearchBudget{}, false, 1);
    auto four = find_avoiding_coloring(ap(3), 2, Window{1, 9}, box, SearchBudget{}, false, 4);
    CHECK(one.outcome == four.outcome);
    CHECK(one.stats.nodes == four.stats.nodes);
    CHECK(one.stats.instances == four.stats.instances);
    CHECK(one.stats.branches == four.stats.branches);
}

TEST_CASE("budget exhaustion surfaces") {
    SearchBudget tiny;
    tiny.max_instances = 3;
    std::vector<ParamRange> box{{1, 9}, {1, 9}};
    SearchStats stats;
    bool completed = enumerate_instances(ap(3), Window{1, 9}, box, tiny, stats,
                                         [](const Instance&) { return true; });
    CHECK_FALSE(completed);

    SearchBudget small_nodes;
    small_nodes.max_nodes = 2;
    auto rep = find_avoiding_coloring(ap(3), 2, Window{1, 9}, box, small_nodes);
    CHECK(rep.outcome == SearchOutcome::budget_exhausted);
}
