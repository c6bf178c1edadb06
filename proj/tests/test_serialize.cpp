#include <catch2/catch_amalgamated.hpp>

#include "symmcfg/serialize.hpp"

using namespace symmcfg;

TEST_CASE("integers round-trip, huge ones as strings") {
    CHECK(to_json(Int(42)) == json(42));
    CHECK(int_from_json(json(-7)) == -7);
    Int huge = ipow(Int(10), 40) + 1;
    json j = to_json(huge);
    REQUIRE(j.is_string());
    CHECK(int_from_json(j) == huge);
}

TEST_CASE("descriptor JSON round-trips") {
    FamilyDescriptor d;
    d.kind = FamilyKind::ap_plain;
    d.len = 3;
    d.values = {Int(1), Int(2)};
    auto back = descriptor_from_json(descriptor_to_json(d));
    CHECK(back.kind == FamilyKind::ap_plain);
    CHECK(back.len == 3);
    CHECK(back.values == d.values);

    FamilyDescriptor vdw;
    vdw.kind = FamilyKind::poly_vdw;
    vdw.ctx = make_context(3, 1);
    vdw.tuples = {{1}, {2, 5}};
    auto vdw_back = descriptor_from_json(descriptor_to_json(vdw));
    REQUIRE(vdw_back.ctx.has_value());
    CHECK(vdw_back.ctx->l == 3);
    CHECK(vdw_back.tuples == vdw.tuples);
    CHECK(vdw_back.values.empty());  // search mode: free parameters open

    FamilyDescriptor deu;
    deu.kind = FamilyKind::deuber_star;
    deu.ctx = make_context(1, 0);
    DeuberSpec spec;
    spec.m = 1;
    spec.bases = {{2, 3}, {5}};
    spec.selections = {{0, 1}, {0}};
    spec.families = {{MultiStarPolynomial{*deu.ctx, 1, {{{1}, 2}}}}};
    deu.deuber = spec;
    auto deu_back = descriptor_from_json(descriptor_to_json(deu));
    REQUIRE(deu_back.deuber.has_value());
    CHECK(deu_back.deuber->bases == spec.bases);
    CHECK(deu_back.deuber->selections == spec.selections);
    CHECK(generate(deu_back).elements == generate(deu).elements);

    CHECK_THROWS_AS(descriptor_from_json(json{{"kind", "nope"}, {"params", json::object()}}),
                    SymmError);
}

TEST_CASE("descriptor JSON accepts a concrete mpc descriptor") {
    json j = {
        {"kind", "mpc_set"},
        {"ctx", nullptr},
        {"params", {{"m", 1}, {"p", 1}, {"c", 1}, {"s", {1, 2}}}},
    };
    auto d = descriptor_from_json(j);
    CHECK(generate(d).elements == std::vector<Int>{1, 2, 3});
}

TEST_CASE("report JSON carries the documented shape and no wall time") {
    FamilyDescriptor d;
    d.kind = FamilyKind::ap_plain;
    d.len = 3;
    std::vector<ParamRange> box{{1, 9}, {1, 9}};
    auto rep = find_avoiding_coloring(d, 2, Window{1, 8}, box, SearchBudget{});
    json j = report_to_json(rep, d);
    CHECK(j.at("outcome") == "avoiding_coloring_found");
    CHECK(j.at("witness").is_null());
    REQUIRE(j.at("avoiding").is_string());
    CHECK(j.at("avoiding").get<std::string>().size() == 8);
    CHECK(j.at("stats").contains("nodes"));
    CHECK_FALSE(j.at("stats").contains("wall_ms"));

    Coloring c = parse_coloring("1 8 2\n" + j.at("avoiding").get<std::string>() + "\n");
    CHECK(c.colors.size() == 8);
}

TEST_CASE("coloring text format") {
    Coloring c;
    c.lo = -2;
    c.hi = 2;
    c.r = 3;
    c.colors = {0, 1, 2, 1, 0};
    std::string text = format_coloring(c);
    CHECK(text == "-2 2 3\n01210\n");
    Coloring back = parse_coloring(text);
    CHECK(back.lo == c.lo);
    CHECK(back.colors == c.colors);
    CHECK(back.color_of(0) == 2);

    CHECK_THROWS_AS(parse_coloring("1 3 2\n012\n"), SymmError);   // digit out of range
    CHECK_THROWS_AS(parse_coloring("1 3 2\n01\n"), SymmError);    // wrong length
    CHECK_THROWS_AS(parse_coloring("3 1 2\n\n"), SymmError);      // empty window
}
