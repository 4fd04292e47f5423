// Command-line front end: classification, orbit reduction, unit-group
// decision, unit verification, conjecture sweeps and the (x^m, x+1) family,
// with text or JSON output.
//
// Exit codes: 0 definite result, 1 verification failure, 2 parse/usage
// error, 3 budget-exhausted Unknown.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "ugq/sweep.hpp"
#include "ugq/unitgroup.hpp"

using json = nlohmann::ordered_json;
using namespace ugq;

namespace {

constexpr int kSchemaVersion = 1;

json poly_json(const Poly& p) { return format_poly(p); }

json degree_json(const Degree& d) {
    if (d.is_neg_inf()) return nullptr;
    return d.value();
}

json make_document(const std::string& command, const json& inputs, const json& result) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["result"] = result;
    return doc;
}

void print_flat(const json& node, const std::string& path) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items())
            print_flat(value, path.empty() ? key : path + "." + key);
    } else if (node.is_array()) {
        std::size_t i = 0;
        for (const auto& value : node) print_flat(value, path + "[" + std::to_string(i++) + "]");
        if (node.empty()) std::cout << path << ": []\n";
    } else {
        std::cout << path << ": " << (node.is_string() ? node.get<std::string>() : node.dump())
                  << "\n";
    }
}

void emit(const json& doc, bool as_json) {
    if (as_json)
        std::cout << doc.dump(2) << "\n";
    else
        print_flat(doc, "");
}

json minimal_json(const MinimalRep& mr) {
    json out;
    out["g"] = poly_json(mr.pair.g);
    out["h"] = poly_json(mr.pair.h);
    out["type"] = to_string(mr.type);
    return out;
}

json unit_result_json(const UnitGroupResult& r) {
    json res;
    res["verdict"] = to_string(r.verdict);
    res["provenance"] = r.provenance;
    res["reduced"]["g"] = poly_json(r.reduced.g);
    res["reduced"]["h"] = poly_json(r.reduced.h);
    res["reduced"]["type"] = to_string(r.reduced_type);
    res["shift"] = poly_json(r.shift);
    if (r.unit) {
        res["unit"]["a"] = poly_json(r.unit->a);
        res["unit"]["b"] = poly_json(r.unit->b);
        const ParamPair& amb = r.unit->ambient;
        if (classify_type(amb) == OrbitClass::Type3 && amb.h.degree() > Degree(0) &&
            !r.unit->b.is_zero())
            res["unit"]["case"] = to_string(classify_case(*r.unit));
    }
    if (r.verdict == Verdict::Unknown) res["max_deg_b_searched"] = r.max_deg_b_searched;
    res["search"]["stages_examined"] = r.stats.stages_examined;
    res["search"]["stages_pruned"] = r.stats.stages_pruned;
    res["search"]["candidates_tested"] = r.stats.candidates_tested;
    return res;
}

struct CommonArgs {
    std::string g_text, h_text;
    bool as_json = false;
};

int run_classify(const CommonArgs& args, bool reduce_only) {
    const ParamPair pair{parse_poly(args.g_text), parse_poly(args.h_text)};
    const MinimalRep mr = minimal_representative(pair);
    json result;
    if (!reduce_only) result["class"] = to_string(classify_type(pair));
    result["minimal"] = minimal_json(mr);
    result["shift"] = poly_json(mr.shift);
    json inputs;
    inputs["g"] = args.g_text.empty() ? "0" : poly_json(pair.g);
    inputs["h"] = poly_json(pair.h);
    emit(make_document(reduce_only ? "reduce" : "classify", inputs, result), args.as_json);
    return 0;
}

json input_pair_json(const ParamPair& pair) {
    json inputs;
    inputs["g"] = poly_json(pair.g);
    inputs["h"] = poly_json(pair.h);
    return inputs;
}

int run_unit_group(const CommonArgs& args, int max_deg_b, bool no_prune, double time_limit) {
    const ParamPair pair{parse_poly(args.g_text), parse_poly(args.h_text)};
    SearchBudget budget;
    budget.max_deg_b = max_deg_b;
    if (time_limit > 0) budget.time_limit_seconds = time_limit;
    SearchOptions opts;
    opts.prune = !no_prune;
    const UnitGroupResult r = unit_group(pair, budget, opts);
    emit(make_document("unit-group", input_pair_json(pair), unit_result_json(r)), args.as_json);
    return r.verdict == Verdict::Unknown ? 3 : 0;
}

int run_verify(const CommonArgs& args, const std::string& a_text, const std::string& b_text) {
    const ParamPair pair{parse_poly(args.g_text), parse_poly(args.h_text)};
    const RingElem u{parse_poly(a_text), parse_poly(b_text), pair};
    const Poly residual = eval_quadratic_form(pair, u.a, u.b) + Poly::one();

    json inputs = input_pair_json(pair);
    inputs["a"] = poly_json(u.a);
    inputs["b"] = poly_json(u.b);

    json result;
    const bool ok = residual.is_zero();
    result["is_unit"] = ok;
    result["residual"] = poly_json(residual);
    if (ok) {
        const RingElem inv = inverse_unit(u);
        result["inverse"]["a"] = poly_json(inv.a);
        result["inverse"]["b"] = poly_json(inv.b);
        if (classify_type(pair) == OrbitClass::Type3 && pair.h.degree() > Degree(0) &&
            !u.b.is_zero())
            result["case"] = to_string(classify_case(u));
    }
    emit(make_document("verify", inputs, result), args.as_json);
    return ok ? 0 : 1;
}

int run_sweep(int deg_g, int max_deg_b, bool as_json, bool as_table, bool no_prune) {
    SearchBudget budget;
    budget.max_deg_b = max_deg_b;
    SearchOptions opts;
    opts.prune = !no_prune;
    const SweepReport rep = sweep_conjecture(deg_g, budget, opts);

    if (as_table) {
        std::printf("deg g | max deg b\n");
        std::printf("%5d | %d\n", rep.deg_g, rep.max_deg_b);
        std::printf("pairs: %llu, resolved: %llu, unknown: %zu\n",
                    static_cast<unsigned long long>(rep.pairs_total),
                    static_cast<unsigned long long>(rep.pairs_resolved),
                    rep.pairs_unknown.size());
        return rep.pairs_unknown.empty() ? 0 : 3;
    }

    json result;
    result["deg_g"] = rep.deg_g;
    result["budget_max_deg_b"] = rep.budget_max_deg_b;
    result["pairs_total"] = rep.pairs_total;
    result["pairs_resolved"] = rep.pairs_resolved;
    result["max_deg_b"] = rep.max_deg_b;
    result["achievers"] = json::array();
    for (const auto& p : rep.achievers)
        result["achievers"].push_back({{"g", poly_json(p.g)}, {"h", poly_json(p.h)}});
    result["pairs_unknown"] = json::array();
    for (const auto& p : rep.pairs_unknown)
        result["pairs_unknown"].push_back({{"g", poly_json(p.g)}, {"h", poly_json(p.h)}});
    result["records"] = json::array();
    for (const PairRecord& rec : rep.records) {
        json r;
        r["g"] = poly_json(rec.pair.g);
        r["h"] = poly_json(rec.pair.h);
        r["verdict"] = to_string(rec.verdict);
        r["provenance"] = rec.provenance;
        r["fast_path"] = rec.fast_path;
        r["deg_a"] = degree_json(rec.deg_a);
        r["deg_b"] = degree_json(rec.deg_b);
        r["wall_ms"] = rec.wall_ms;
        result["records"].push_back(std::move(r));
    }
    json inputs;
    inputs["deg_g"] = deg_g;
    emit(make_document("sweep", inputs, result), as_json);
    return rep.pairs_unknown.empty() ? 0 : 3;
}

int run_family(int m_max, int max_deg_b, bool as_json) {
    SearchBudget budget;
    budget.max_deg_b = max_deg_b;
    const auto entries = family_xm(m_max, budget);
    bool any_unknown = false;
    json result;
    result["m_max"] = m_max;
    result["budget_max_deg_b"] = max_deg_b;
    result["entries"] = json::array();
    for (const FamilyEntry& e : entries) {
        json r;
        r["m"] = e.m;
        if (e.unit) {
            r["deg_b"] = e.deg_b;
            r["nu_x_b"] = e.nu_x_b;
            r["a"] = poly_json(e.unit->a);
            r["b"] = poly_json(e.unit->b);
        } else {
            r["deg_b"] = nullptr;
            any_unknown = true;
        }
        result["entries"].push_back(std::move(r));
    }
    json inputs;
    inputs["m_max"] = m_max;
    emit(make_document("family", inputs, result), as_json);
    return any_unknown ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unit groups of F2[x,y]/(y^2 + gy + h)"};
    app.require_subcommand(1);

    CommonArgs args;
    int max_deg_b = 64;
    int deg_g = 1;
    int m_max = 5;
    std::string a_text, b_text;
    bool no_prune = false, as_table = false;
    double time_limit = 0;

    auto add_gh = [&](CLI::App* cmd) {
        cmd->add_option("--g", args.g_text, "polynomial g")->required();
        cmd->add_option("--h", args.h_text, "polynomial h")->required();
        cmd->add_flag("--json", args.as_json, "machine-readable output");
    };

    CLI::App* classify = app.add_subcommand("classify", "type of (g, h) and its reduction");
    add_gh(classify);

    CLI::App* reduce = app.add_subcommand("reduce", "minimal representative and shift");
    add_gh(reduce);

    CLI::App* unitgrp = app.add_subcommand("unit-group", "decide the unit group");
    add_gh(unitgrp);
    unitgrp->add_option("--max-deg-b", max_deg_b, "search budget on deg b");
    unitgrp->add_flag("--no-prune", no_prune, "disable stage pruning");
    unitgrp->add_option("--time-limit", time_limit, "wall-clock limit in seconds");

    CLI::App* verify = app.add_subcommand("verify", "check a + by against the unit equation");
    add_gh(verify);
    verify->add_option("--a", a_text, "coordinate a")->required();
    verify->add_option("--b", b_text, "coordinate b")->required();

    bool sweep_json = false;
    CLI::App* sweep = app.add_subcommand("sweep", "all Type 3 pairs of a given deg g");
    sweep->add_option("--deg-g", deg_g, "degree of g")->required();
    sweep->add_option("--max-deg-b", max_deg_b, "search budget on deg b");
    sweep->add_flag("--json", sweep_json, "machine-readable output");
    sweep->add_flag("--table", as_table, "two-column summary table");
    sweep->add_flag("--no-prune", no_prune, "disable stage pruning");

    bool family_json = false;
    CLI::App* family = app.add_subcommand("family", "the (x^m, x+1) family");
    family->add_option("--m-max", m_max, "largest m")->required();
    family->add_option("--max-deg-b", max_deg_b, "search budget on deg b");
    family->add_flag("--json", family_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return run_classify(args, false);
        if (reduce->parsed()) return run_classify(args, true);
        if (unitgrp->parsed()) return run_unit_group(args, max_deg_b, no_prune, time_limit);
        if (verify->parsed()) return run_verify(args, a_text, b_text);
        if (sweep->parsed()) return run_sweep(deg_g, max_deg_b, sweep_json, as_table, no_prune);
        if (family->parsed()) return run_family(m_max, max_deg_b, family_json);
    } catch (const PolyParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
