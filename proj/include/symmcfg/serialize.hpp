#pragma once

// JSON forms of family descriptors and search reports.
//
// Descriptor: {"kind": string, "ctx": {"l": int, "k": int} | null,
//              "params": object} with kind-specific params (see README).
// Report:     {"outcome": string, "witness": object|null,
//              "avoiding": string|null, "stats": object}; the avoiding
// coloring is the base-36 digit string in window order. Stats carry only
// schedule-independent counters so identical searches dump identical bytes.

#include <json.hpp>

#include <limits>
#include <string>

#include "symmcfg/families.hpp"
#include "symmcfg/search.hpp"

namespace symmcfg {

using json = nlohmann::json;

inline json to_json(const Int& v) {
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw SymmError(errc::bad_descriptor, "expected an integer (number or decimal string)");
}

inline json to_json(const std::vector<Int>& xs) {
    json a = json::array();
    for (const Int& x : xs) a.push_back(to_json(x));
    return a;
}

inline std::vector<Int> int_list_from_json(const json& j) {
    if (!j.is_array()) throw SymmError(errc::bad_descriptor, "expected an array of integers");
    std::vector<Int> out;
    for (const auto& e : j) out.push_back(int_from_json(e));
    return out;
}

inline std::vector<std::vector<Int>> int_lists_from_json(const json& j) {
    if (!j.is_array()) throw SymmError(errc::bad_descriptor, "expected an array of arrays");
    std::vector<std::vector<Int>> out;
    for (const auto& e : j) out.push_back(int_list_from_json(e));
    return out;
}

inline json to_json(const MultiStarPolynomial& p) {
    json mono = json::array();
    for (const auto& [exps, coeff] : p.monomials)
        mono.push_back({{"exps", to_json(exps)}, {"coeff", to_json(coeff)}});
    return {{"arity", p.arity}, {"monomials", mono}};
}

inline MultiStarPolynomial multi_poly_from_json(const json& j, const SymmetricContext& ctx) {
    MultiStarPolynomial p;
    p.ctx = ctx;
    p.arity = j.at("arity").get<int>();
    for (const auto& m : j.at("monomials"))
        p.monomials.emplace_back(int_list_from_json(m.at("exps")), int_from_json(m.at("coeff")));
    validate(p);
    return p;
}

inline json descriptor_to_json(const FamilyDescriptor& d) {
    json params = json::object();
    const auto names = free_param_names(d);
    auto put_values = [&](const char* list_name, std::size_t offset, std::size_t count) {
        if (d.values.empty()) return;
        json a = json::array();
        for (std::size_t i = 0; i < count; ++i) a.push_back(to_json(d.values[offset + i]));
        params[list_name] = a;
    };
    auto put_named = [&]() {
        if (d.values.empty()) return;
        for (std::size_t i = 0; i < names.size(); ++i) params[names[i]] = to_json(d.values[i]);
    };

    switch (d.kind) {
        case FamilyKind::ap_plain:
            params["len"] = d.len;
            put_named();
            break;
        case FamilyKind::star_schur: put_named(); break;
        case FamilyKind::geo_arith_add:
        case FamilyKind::geo_arith_star:
            params["m"] = d.m;
            put_named();
            break;
        case FamilyKind::gap:
            params["order"] = d.m;
            params["n"] = d.n;
            put_values("a", 0, static_cast<std::size_t>(d.m) + 1);
            break;
        case FamilyKind::poly_progression: {
            json ps = json::array();
            for (const auto& poly : d.polys) ps.push_back(to_json(poly));
            params["polys"] = ps;
            put_named();
            break;
        }
        case FamilyKind::poly_vdw: {
            json ts = json::array();
            for (const auto& t : d.tuples) ts.push_back(to_json(t));
            params["tuples"] = ts;
            put_named();
            break;
        }
        case FamilyKind::symmetric_system:
            params["n"] = d.n;
            put_values("xs", 0, static_cast<std::size_t>(d.n));
            break;
        case FamilyKind::mpc_set:
            params["m"] = d.m;
            params["p"] = d.p;
            params["c"] = to_json(d.c);
            put_values("s", 0, static_cast<std::size_t>(d.m) + 1);
            break;
        case FamilyKind::deuber_star: {
            const DeuberSpec& spec = *d.deuber;
            json bases = json::array();
            for (const auto& b : spec.bases) bases.push_back(to_json(b));
            json sels = json::array();
            for (const auto& s : spec.selections) sels.push_back(s);
            json fams = json::array();
            for (const auto& fam : spec.families) {
                json fj = json::array();
                for (const auto& poly : fam) fj.push_back(to_json(poly));
                fams.push_back(fj);
            }
            params["m"] = spec.m;
            params["bases"] = bases;
            params["selections"] = sels;
            params["families"] = fams;
            break;
        }
        case FamilyKind::cst_corollary: {
            json ts = json::array();
            for (const auto& t : d.tuples) ts.push_back(to_json(t));
            params["L"] = d.L;
            params["tuples"] = ts;
            put_values("xs", 0, static_cast<std::size_t>(d.L));
            put_values("zs", static_cast<std::size_t>(d.L), static_cast<std::size_t>(d.L));
            break;
        }
    }

    json j{{"kind", family_kind_name(d.kind)}, {"params", params}};
    if (d.ctx)
        j["ctx"] = {{"l", to_json(d.ctx->l)}, {"k", to_json(d.ctx->k)}};
    else
        j["ctx"] = nullptr;
    return j;
}

inline FamilyDescriptor descriptor_from_json(const json& j) {
    FamilyDescriptor d;
    const std::string kind = j.at("kind").get<std::string>();
    auto k = family_kind_from(kind);
    if (!k) throw SymmError(errc::bad_descriptor, "unknown family kind '" + kind + "'");
    d.kind = *k;
    if (j.contains("ctx") && !j.at("ctx").is_null()) {
        const json& c = j.at("ctx");
        d.ctx = make_context(int_from_json(c.at("l")), int_from_json(c.at("k")));
    }
    const json params = j.value("params", json::object());

    auto named_values = [&](std::initializer_list<const char*> names) {
        std::vector<Int> vals;
        for (const char* n : names) {
            if (!params.contains(n)) return;  // search mode: free parameters open
            vals.push_back(int_from_json(params.at(n)));
        }
        d.values = std::move(vals);
    };
    auto list_values = [&](std::initializer_list<const char*> lists) {
        std::vector<Int> vals;
        for (const char* n : lists) {
            if (!params.contains(n)) return;
            for (const Int& v : int_list_from_json(params.at(n))) vals.push_back(v);
        }
        d.values = std::move(vals);
    };

    switch (d.kind) {
        case FamilyKind::ap_plain:
            d.len = params.at("len").get<long>();
            named_values({"a", "d"});
            break;
        case FamilyKind::star_schur: named_values({"x", "y"}); break;
        case FamilyKind::geo_arith_add:
        case FamilyKind::geo_arith_star:
            d.m = params.at("m").get<long>();
            named_values({"x", "y", "z"});
            break;
        case FamilyKind::gap:
            d.m = params.at("order").get<long>();
            d.n = params.at("n").get<long>();
            list_values({"a"});
            break;
        case FamilyKind::poly_progression:
            d.polys = int_lists_from_json(params.at("polys"));
            named_values({"a", "b", "d"});
            break;
        case FamilyKind::poly_vdw:
            d.tuples = int_lists_from_json(params.at("tuples"));
            named_values({"dprime", "c"});
            break;
        case FamilyKind::symmetric_system:
            if (params.contains("xs")) {
                d.values = int_list_from_json(params.at("xs"));
                d.n = static_cast<long>(d.values.size());
            }
            if (params.contains("n")) d.n = params.at("n").get<long>();
            break;
        case FamilyKind::mpc_set:
            d.m = params.at("m").get<long>();
            d.p = params.at("p").get<long>();
            d.c = int_from_json(params.at("c"));
            list_values({"s"});
            break;
        case FamilyKind::deuber_star: {
            if (!d.ctx) throw SymmError(errc::bad_descriptor, "deuber_star needs a context");
            DeuberSpec spec;
            spec.m = params.at("m").get<int>();
            spec.bases = int_lists_from_json(params.at("bases"));
            for (const auto& s : params.at("selections"))
                spec.selections.push_back(s.get<std::vector<int>>());
            for (const auto& fam : params.at("families")) {
                std::vector<MultiStarPolynomial> fs;
                for (const auto& poly : fam) fs.push_back(multi_poly_from_json(poly, *d.ctx));
                spec.families.push_back(std::move(fs));
            }
            d.deuber = std::move(spec);
            break;
        }
        case FamilyKind::cst_corollary:
            d.L = params.at("L").get<long>();
            d.tuples = int_lists_from_json(params.at("tuples"));
            list_values({"xs", "zs"});
            break;
    }
    validate(d);
    return d;
}

inline json instance_to_json(const FamilyDescriptor& d, const Instance& ins) {
    json j;
    j["kind"] = family_kind_name(d.kind);
    j["elements"] = to_json(ins.elements);
    j["raw_count"] = ins.raw_count;
    j["degenerate"] = ins.degenerate;
    json prov = json::object();
    const auto names = free_param_names(d);
    for (std::size_t i = 0; i < names.size() && i < ins.provenance.size(); ++i)
        prov[names[i]] = to_json(ins.provenance[i]);
    j["provenance"] = prov;
    return j;
}

inline json stats_to_json(const SearchStats& s) {
    // wall time deliberately omitted: reports must be byte-stable across runs
    return {{"nodes", s.nodes},
            {"instances", s.instances},
            {"skipped", s.skipped},
            {"branches", s.branches}};
}

inline json report_to_json(const SearchReport& rep, const FamilyDescriptor& desc) {
    json j;
    j["outcome"] = outcome_name(rep.outcome);
    if (rep.witness) {
        json w;
        json prms = json::object();
        const auto names = free_param_names(desc);
        for (std::size_t i = 0; i < names.size() && i < rep.witness->params.size(); ++i)
            prms[names[i]] = to_json(rep.witness->params[i]);
        w["params"] = prms;
        w["elements"] = to_json(rep.witness->elements);
        w["color"] = rep.witness->color;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    if (rep.avoiding)
        j["avoiding"] = color_digits(*rep.avoiding);
    else
        j["avoiding"] = nullptr;
    j["stats"] = stats_to_json(rep.stats);
    return j;
}

} // namespace symmcfg
