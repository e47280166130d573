// addikit: command-line front end for the constructions, bounds and certificates.
//
// Every subcommand prints one JSON document on stdout (or a plain table with
// --format table). Exit status: 0 success, 2 infeasible verdict or failed
// assertion, 1 usage or input error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <addikit/addikit.hpp>
#include <addikit/io.hpp>
#include <addikit/reproduce.hpp>

#include "CLI11.hpp"

namespace {

using addikit::io::json;
using namespace addikit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFalsified = 2;

struct Globals {
    unsigned jobs = 1;
    std::string format = "json";
    bool timing = false;
};

LinearCode load_code(const std::string& spec) {
    if (spec == "hamming74") return codes::hamming74();
    if (spec == "simplex73") return codes::simplex73();
    return io::linear_code_from_json(io::read_json_file(spec));
}

Vector parse_reps(const std::string& list) {
    Vector out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(static_cast<Rep>(v));
        } catch (const std::exception&) {
            raise(ErrorCode::ParseError, "bad element '" + item + "' in list '" + list + "'");
        }
    }
    return out;
}

json budget_json(const Budget& b) { return {{"max_enumeration", b.max_enumeration}}; }

// Flattens a report into "key: value" lines for --format table.
void print_table(const json& j, const std::string& prefix = "") {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) print_table(v, prefix.empty() ? k : prefix + "." + k);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) print_table(j[i], prefix + "[" + std::to_string(i) + "]");
    } else {
        std::cout << prefix << ": " << j.dump() << "\n";
    }
}

int emit(const Globals& g, const std::string& subcommand, const json& inputs, const json& outputs, const Budget& budget,
         std::chrono::steady_clock::time_point start, int status) {
    json report = {{"subcommand", subcommand},
                   {"inputs", inputs},
                   {"outputs", outputs},
                   {"budget", budget_json(budget)},
                   {"version", ADDIKIT_VERSION},
                   {"status", status == kExitOk ? "ok" : "falsified"}};
    if (g.timing) {
        report["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    if (g.format == "table") {
        print_table(report);
    } else {
        std::cout << report.dump(2) << "\n";
    }
    return status;
}

json construction_a_json(const ConstructionAResult& r) {
    json out = {{"code", io::additive_code_to_json(r.code)},
                {"semifield", io::semifield_to_json(r.semifield)},
                {"bound", guarantee_name(r.guarantee)},
                {"guaranteed_d", r.guaranteed_d}};
    if (r.actual_d) {
        out["params"] = io::params_report({r.code.n(), r.code.k(), r.code.h(), r.code.q(), *r.actual_d},
                                          static_cast<std::int64_t>(r.guaranteed_d));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"addikit: additive codes from linear codes, with bounds and non-linearity certificates"};
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--jobs", g.jobs, "worker threads for enumerations (results do not depend on it)")->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_flag("--timing", g.timing, "include wall-clock timing in the report");

    // construct-a
    auto* cmd_a = app.add_subcommand("construct-a", "additive code from a linear code and a partial semifield");
    std::string a_code;
    std::uint32_t a_h = 0;
    std::string a_semifield, a_change, a_basis;
    bool a_no_verify = false;
    cmd_a->add_option("--code", a_code, "generator file, or hamming74 / simplex73")->required();
    cmd_a->add_option("--h", a_h, "extension degree h")->required()->check(CLI::PositiveNumber);
    cmd_a->add_option("--semifield", a_semifield, "partial semifield file (default: Desarguesian)");
    cmd_a->add_option("--basis-change", a_change, "k x k nonsingular matrix file applied as G -> BG");
    cmd_a->add_option("--basis", a_basis, "comma-separated F_{q^h} reps for e_1..e_h");
    cmd_a->add_flag("--no-verify", a_no_verify, "skip the brute-force distance");

    // construct-b
    auto* cmd_b = app.add_subcommand("construct-b", "norm/trace construction over F_q x F_{q^s} x F_{q^st}");
    std::uint64_t b_q = 0;
    std::uint32_t b_s = 0, b_t = 0, b_h = 0;
    std::string b_lambdas;
    bool b_no_verify = false, b_emit_code = false;
    cmd_b->add_option("--q", b_q)->required();
    cmd_b->add_option("--s", b_s)->required()->check(CLI::PositiveNumber);
    cmd_b->add_option("--t", b_t)->required()->check(CLI::PositiveNumber);
    cmd_b->add_option("--h", b_h)->required()->check(CLI::PositiveNumber);
    cmd_b->add_option("--lambdas", b_lambdas, "comma-separated F_{q^s} reps");
    cmd_b->add_flag("--no-verify", b_no_verify, "skip the brute-force distance");
    cmd_b->add_flag("--emit-code", b_emit_code, "include the generator matrix");

    // mindist
    auto* cmd_md = app.add_subcommand("mindist", "exhaustive minimum distance");
    std::string md_code, md_additive;
    bool md_csv = false;
    auto* md_code_opt = cmd_md->add_option("--code", md_code, "linear code file, or hamming74 / simplex73");
    auto* md_add_opt = cmd_md->add_option("--additive", md_additive, "additive code file");
    md_code_opt->excludes(md_add_opt);
    cmd_md->add_flag("--weights-csv", md_csv, "print the weight distribution of a linear code as CSV");

    // ghw
    auto* cmd_ghw = app.add_subcommand("ghw", "generalised Hamming weights");
    std::string ghw_code;
    std::size_t ghw_j = 0;
    bool ghw_csv = false;
    cmd_ghw->add_option("--code", ghw_code, "generator file, or hamming74 / simplex73")->required();
    cmd_ghw->add_option("--j", ghw_j, "single index (default: full hierarchy)");
    cmd_ghw->add_flag("--csv", ghw_csv, "print the hierarchy as CSV");

    // bound
    auto* cmd_bound = app.add_subcommand("bound", "Griesmer-type bounds");
    cmd_bound->require_subcommand(1);
    std::uint64_t bn = 0, br = 0, bh = 0, bq = 0, bd = 0, bk = 0, bj = 0;
    auto* bound_g = cmd_bound->add_subcommand("griesmer", "minimal n of a linear [n,k,d]_q code");
    bound_g->add_option("--k", bk)->required();
    bound_g->add_option("--d", bd)->required();
    bound_g->add_option("--q", bq)->required();
    auto* bound_ghw = cmd_bound->add_subcommand("ghw", "lower bound on d_j from d");
    bound_ghw->add_option("--j", bj)->required();
    bound_ghw->add_option("--d", bd)->required();
    bound_ghw->add_option("--q", bq)->required();
    auto* bound_add = cmd_bound->add_subcommand("additive", "additive Griesmer verdict (or max d without --d)");
    bound_add->add_option("--n", bn)->required();
    bound_add->add_option("--r", br)->required();
    bound_add->add_option("--h", bh)->required();
    bound_add->add_option("--q", bq)->required();
    auto* bound_add_d = bound_add->add_option("--d", bd);

    // certify-nonlinear
    auto* cmd_cert = app.add_subcommand("certify-nonlinear", "search for a rank witness against F_{q^h}-linearity");
    std::uint64_t c_q = 0;
    std::uint32_t c_s = 0, c_t = 0, c_h = 0;
    std::size_t c_max_m = 3;
    cmd_cert->add_option("--q", c_q)->required();
    cmd_cert->add_option("--s", c_s)->required()->check(CLI::PositiveNumber);
    cmd_cert->add_option("--t", c_t)->required()->check(CLI::PositiveNumber);
    cmd_cert->add_option("--h", c_h)->required()->check(CLI::PositiveNumber);
    cmd_cert->add_option("--max-m", c_max_m, "largest subset size")->check(CLI::Range(2, 16));

    // reproduce
    auto* cmd_rep = app.add_subcommand("reproduce", "run a named reproduction, or all of them");
    std::string rep_name;
    std::vector<std::string> rep_choices = reproduce::names();
    rep_choices.push_back("all");
    cmd_rep->add_option("name", rep_name)->required()->check(CLI::IsMember(rep_choices));

    CLI11_PARSE(app, argc, argv);

    const auto start = std::chrono::steady_clock::now();
    try {
        const Budget budget = Budget::from_env();

        if (*cmd_a) {
            const LinearCode code = load_code(a_code);
            const Field& fq = code.field();
            const Extension ext(fq, Field::create(fq.characteristic(), fq.degree() * a_h));
            const PartialSemifield semifield = a_semifield.empty()
                                                   ? desarguesian_partial_semifield(fq, code.k(), a_h)
                                                   : io::semifield_from_json(io::read_json_file(a_semifield));
            ConstructionAOptions opt{a_basis.empty() ? Vector{} : parse_reps(a_basis), !a_no_verify, budget, g.jobs};
            const auto result =
                a_change.empty()
                    ? construct_a(code, semifield, ext, opt)
                    : construct_a_with_basis_change(code, semifield, ext,
                                                    io::matrix_from_json(fq, io::read_json_file(a_change)), opt);
            json inputs = {{"code", a_code}, {"h", a_h}, {"semifield", a_semifield.empty() ? "desarguesian" : a_semifield}};
            if (!a_change.empty()) inputs["basis_change"] = a_change;
            return emit(g, "construct-a", inputs, construction_a_json(result), budget, start,
                        result.bound_met() ? kExitOk : kExitFalsified);
        }

        if (*cmd_b) {
            TowerContext ctx = TowerContext::for_q(b_q, b_s, b_t, b_h);
            ConstructionBOptions opt;
            if (!b_lambdas.empty()) opt.lambdas = parse_reps(b_lambdas);
            opt.verify = !b_no_verify;
            opt.budget = budget;
            opt.jobs = g.jobs;
            const auto r = construct_b(ctx, opt);
            json out = {{"n", r.code.n()},
                        {"k", r.code.k()},
                        {"h", r.code.h()},
                        {"dim", dimension_fraction(r.code.k(), r.code.h())},
                        {"fq_rank", rank(r.code.expanded())},
                        {"bound_d", r.bound_d},
                        {"exact_d", r.exact_d ? json(*r.exact_d) : json(nullptr)},
                        {"family_size", r.family.size()},
                        {"lambdas", r.lambdas},
                        {"thetas", r.thetas}};
            if (r.exact_d) out["params"] = io::params_report(r.code.params(budget, g.jobs), r.bound_d);
            if (b_emit_code) out["code"] = io::additive_code_to_json(r.code);
            return emit(g, "construct-b", {{"q", b_q}, {"s", b_s}, {"t", b_t}, {"h", b_h}, {"lambdas", b_lambdas}}, out,
                        budget, start, r.bound_met() ? kExitOk : kExitFalsified);
        }

        if (*cmd_md) {
            if (!md_additive.empty()) {
                const auto code = io::additive_code_from_json(io::read_json_file(md_additive));
                const auto p = code.params(budget, g.jobs);
                return emit(g, "mindist", {{"additive", md_additive}},
                            {{"n", p.n}, {"k", p.k}, {"h", p.h}, {"dim", p.dim()}, {"q", p.q}, {"d", p.d}}, budget, start,
                            kExitOk);
            }
            if (md_code.empty()) throw CLI::RequiredError("--code or --additive");
            const LinearCode code = load_code(md_code);
            if (md_csv) {
                std::cout << io::weight_csv(weight_distribution(code, budget));
                return kExitOk;
            }
            return emit(g, "mindist", {{"code", md_code}},
                        {{"n", code.n()}, {"k", code.k()}, {"q", code.q()}, {"d", min_distance(code, budget, g.jobs)}},
                        budget, start, kExitOk);
        }

        if (*cmd_ghw) {
            const LinearCode code = load_code(ghw_code);
            if (ghw_j != 0) {
                return emit(g, "ghw", {{"code", ghw_code}, {"j", ghw_j}},
                            {{"j", ghw_j}, {"d_j", ghw(code, ghw_j, budget, g.jobs)}}, budget, start, kExitOk);
            }
            const auto hierarchy = ghw_hierarchy(code, budget, g.jobs);
            if (ghw_csv) {
                std::cout << io::ghw_csv(hierarchy);
                return kExitOk;
            }
            return emit(g, "ghw", {{"code", ghw_code}}, {{"hierarchy", hierarchy}}, budget, start, kExitOk);
        }

        if (*cmd_bound) {
            if (*bound_g) {
                return emit(g, "bound griesmer", {{"k", bk}, {"d", bd}, {"q", bq}},
                            {{"min_n", griesmer_linear(bk, bd, bq)}}, budget, start, kExitOk);
            }
            if (*bound_ghw) {
                return emit(g, "bound ghw", {{"j", bj}, {"d", bd}, {"q", bq}},
                            {{"lower_bound", ghw_lower_bound(bj, bd, bq)}}, budget, start, kExitOk);
            }
            json inputs = {{"n", bn}, {"r", br}, {"h", bh}, {"q", bq}};
            if (bound_add_d->count() == 0) {
                const auto max_d = additive_griesmer_max_d(bn, br, bh, bq);
                return emit(g, "bound additive", inputs, {{"max_d", max_d}}, budget, start, kExitOk);
            }
            inputs["d"] = bd;
            const auto v = additive_griesmer_check(bn, br, bh, bq, bd);
            return emit(g, "bound additive", inputs, io::verdict_to_json(v), budget, start,
                        v.feasible ? kExitOk : kExitFalsified);
        }

        if (*cmd_cert) {
            const auto ctx = TowerContext::for_q(c_q, c_s, c_t, c_h);
            const auto family = build_norm_trace_family(ctx, choose_lambdas(ctx));
            const bool precheck = divisibility_precheck(c_s, c_t, c_h);
            auto out = io::certificate_to_json(certify_nonlinear(family, c_max_m, budget, g.jobs));
            out["precheck_holds"] = precheck;
            return emit(g, "certify-nonlinear", {{"q", c_q}, {"s", c_s}, {"t", c_t}, {"h", c_h}, {"max_m", c_max_m}}, out,
                        budget, start, kExitOk);
        }

        if (*cmd_rep) {
            const auto selected = rep_name == "all" ? reproduce::names() : std::vector<std::string>{rep_name};
            json results = json::array();
            bool all_passed = true;
            for (const auto& name : selected) {
                const auto o = reproduce::run(name, g.jobs);
                all_passed = all_passed && o.passed;
                results.push_back({{"name", o.name}, {"passed", o.passed}, {"details", o.details}});
            }
            return emit(g, "reproduce", {{"name", rep_name}}, {{"results", results}, {"all_passed", all_passed}}, budget,
                        start, all_passed ? kExitOk : kExitFalsified);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::InternalInconsistency || e.code() == ErrorCode::RankDeficientMember
                   ? kExitFalsified
                   : kExitUsage;
    }
    return kExitUsage;
}
