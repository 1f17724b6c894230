#ifndef SMIRNOV_CLI_HPP
#define SMIRNOV_CLI_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "campaign.hpp"
#include "io.hpp"
#include "operators.hpp"
#include "reductions.hpp"
#include "sharpness.hpp"

namespace smirnov
{

enum ExitCode : int
{
    kExitPass = 0,
    kExitCounterexample = 1,
    kExitUsage = 2,
    kExitNonConvergence = 3,
};

namespace detail
{

inline std::string schema_string(const ParamSchema& s)
{
    std::string out;
    auto add = [&](const char* name) {
        if (!out.empty())
            out += ',';
        out += name;
    };
    if (s.a)
        add("a");
    if (s.alpha == AlphaDomain::disk)
        add("alpha");
    if (s.alpha == AlphaDomain::omega)
        add("alpha in closure(Omega_|z|)");
    if (s.beta)
        add("beta");
    if (s.R)
        add("R");
    if (s.k)
        add("k");
    add(s.z == PointDomain::unit_circle ? "|z|=1" : "|z|>=1");
    return out;
}

inline int cmd_list(bool as_json, std::ostream& out)
{
    if (as_json) {
        json arr = json::array();
        for (const auto& e : registry())
            arr.push_back({{"id", e.id},
                           {"title", e.title},
                           {"citation", e.citation},
                           {"hypothesis", std::string(to_string(e.hypothesis))},
                           {"direction", e.direction == Direction::le ? "<=" : ">="},
                           {"params", schema_string(e.params)},
                           {"sharp_family", std::string(to_string(e.family))},
                           {"note", e.note}});
        out << arr.dump(2) << '\n';
        return kExitPass;
    }
    for (const auto& e : registry()) {
        out << e.id << "  [" << to_string(e.hypothesis) << ", " << (e.direction == Direction::le ? "<=" : ">=")
            << ", " << schema_string(e.params) << "]  " << e.citation << '\n';
    }
    return kExitPass;
}

inline int cmd_verify(CampaignConfig cfg, std::ostream& out)
{
    const CampaignReport report = run_campaign(cfg);
    write_outputs(report);
    for (const auto& e : report.entries) {
        out << e.entry << ": " << e.passes << "/" << e.trials << " pass, " << e.failures << " fail, " << e.errors
            << " error, min relative slack " << (std::isfinite(e.min_slack) ? e.min_slack : 0.0);
        if (e.sharpness_gap)
            out << ", sharpness gap " << *e.sharpness_gap;
        out << '\n';
        if (e.counterexample)
            out << "  counterexample: " << to_json(*e.counterexample).dump() << '\n';
    }
    for (const auto& r : report.reductions)
        out << "link " << r.link << ": " << (r.pass ? "ok" : "MISMATCH") << '\n';
    return report.exit_code();
}

inline int cmd_sharpness(const std::vector<std::string>& ids, std::ostream& out)
{
    bool any = false;
    for (const auto& id : resolve_entries(ids)) {
        const InequalityEntry& e = find_entry(id);
        if (e.family == Family::none)
            continue;
        any = true;
        const SharpnessResult r = sharpness_gap(id);
        out << id << "  family " << to_string(e.family) << "  gap " << r.min_gap << "  over " << r.points
            << " points" << (std::abs(r.min_gap) <= 1e-6 ? "  (sharp)" : "") << '\n';
    }
    if (!any)
        throw DomainError("no extremal family registered for the requested entries");
    return kExitPass;
}

inline int cmd_reduce(const std::vector<std::string>& ids, std::size_t trials, std::uint64_t seed, std::ostream& out)
{
    std::vector<std::string> all;
    for (const auto& id : ids) {
        if (id == "all")
            for (const auto& l : links())
                all.push_back(l.id);
        else
            all.push_back(find_link(id).id);
    }
    bool ok = true;
    for (const auto& id : all) {
        const ReductionReport r = reduction_check(id, trials, seed);
        out << to_json(r).dump() << '\n';
        ok = ok && r.pass;
    }
    return ok ? kExitPass : kExitCounterexample;
}

struct EvalArgs
{
    std::string poly;
    std::string op = "smirnov";
    std::string a = "0";
    std::string alpha = "0";
    std::string beta = "0";
    double R = 1.0;
    int n = 0;
    std::optional<std::string> z;
};

inline int cmd_eval(const EvalArgs& args, std::ostream& out)
{
    const Polynomial p = load_polynomial(args.poly);
    const int n = args.n > 0 ? args.n : std::max(p.degree(), 1);
    Polynomial r;
    if (args.op == "smirnov") {
        r = modified_smirnov(p, OperatorContext(parse_complex_arg(args.a), n));
    } else if (args.op == "smirnov-alpha") {
        r = smirnov_alpha(p, parse_complex_arg(args.alpha), n);
    } else if (args.op == "composite") {
        r = composite_transform(p, OperatorContext(parse_complex_arg(args.a), n),
                                CompositeParams(parse_complex_arg(args.alpha), parse_complex_arg(args.beta), args.R));
    } else if (args.op == "derivative") {
        r = derivative(p);
    } else if (args.op == "reciprocal") {
        r = conjugate_reciprocal(p, n);
    } else {
        throw DomainError("unknown operator: " + args.op);
    }
    json j{{"coefficients", to_json(r)}};
    if (args.z)
        j["value"] = to_json(r(parse_complex_arg(*args.z)));
    out << j.dump() << '\n';
    return kExitPass;
}

} // namespace detail

/// Parses argv and dispatches. Never throws; every outcome is an exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    CLI::App app{"Randomized verification of modified Smirnov operator inequalities"};
    app.require_subcommand(1);

    bool list_json = false;
    auto* list = app.add_subcommand("list", "Print every registered inequality");
    list->add_flag("--json", list_json, "Emit JSON");

    CampaignConfig cfg;
    std::vector<std::string> ineq;
    std::string config_file;
    std::string mutation;
    bool sharp = false;
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "Run a randomized campaign");
    verify->add_option("--ineq", ineq, "Entry id or 'all'");
    verify->add_option("--config", config_file, "JSON campaign config");
    verify->add_option("--trials", cfg.trials, "Trials per entry");
    verify->add_option("--seed", cfg.seed, "64-bit seed");
    verify->add_option("--degree-min", cfg.n_min, "Smallest degree");
    verify->add_option("--degree-max", cfg.n_max, "Largest degree");
    verify->add_option("--tol", cfg.circle_tol, "Relative tolerance of circle extrema");
    verify->add_option("--search", cfg.search_steps, "Falsification steps per trial");
    verify->add_option("--mutation", mutation, "Corrupt the implementation")
        ->check(CLI::IsMember({"kappa-signed-alpha", "drop-na-term"}));
    verify->add_option("--reductions", cfg.reductions, "Reduction links to check as well");
    verify->add_option("--threads", cfg.threads, "Worker threads");
    verify->add_flag("--sharpness", sharp, "Also report sharpness gaps");
    verify->add_flag("--timing", timing, "Record wall time in the report");
    verify->add_option("--out", cfg.output, "JSON report path");
    verify->add_option("--csv", cfg.csv, "CSV trial log path");

    std::vector<std::string> sharp_ids;
    auto* sharpness = app.add_subcommand("sharpness", "Sharpness gap on the extremal family");
    sharpness->add_option("--ineq", sharp_ids, "Entry id or 'all'")->required();

    std::vector<std::string> link_ids;
    std::size_t link_trials = 1000;
    std::uint64_t link_seed = 1;
    auto* reduce = app.add_subcommand("reduce", "Check a reduction link");
    reduce->add_option("--link", link_ids, "Link id or 'all'")->required();
    reduce->add_option("--trials", link_trials, "Instances per link");
    reduce->add_option("--seed", link_seed, "64-bit seed");

    detail::EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "Apply an operator to a polynomial");
    eval->add_option("--poly", ev.poly, "Literal [[re,im],...] in ascending powers, or a file")->required();
    eval->add_option("--op", ev.op, "smirnov | smirnov-alpha | composite | derivative | reciprocal");
    eval->add_option("--a", ev.a, "RE,IM");
    eval->add_option("--alpha", ev.alpha, "RE,IM");
    eval->add_option("--beta", ev.beta, "RE,IM");
    eval->add_option("--R", ev.R, "Dilation radius");
    eval->add_option("--n", ev.n, "Degree class (default: degree of the polynomial)");
    eval->add_option("--z", ev.z, "Also evaluate at RE,IM");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*list)
            return detail::cmd_list(list_json, out);
        if (*verify) {
            if (!config_file.empty()) {
                std::ifstream in(config_file);
                if (!in)
                    throw DomainError("cannot open config: " + config_file);
                json j;
                try {
                    j = json::parse(in);
                } catch (const json::exception& ex) {
                    throw DomainError(std::string("malformed config: ") + ex.what());
                }
                CampaignConfig base = config_from_json(j);
                // command-line flags override the file
                for (const auto* opt : verify->get_options()) {
                    if (opt->count() == 0)
                        continue;
                    const std::string name = opt->get_name();
                    if (name == "--trials") base.trials = cfg.trials;
                    else if (name == "--seed") base.seed = cfg.seed;
                    else if (name == "--degree-min") base.n_min = cfg.n_min;
                    else if (name == "--degree-max") base.n_max = cfg.n_max;
                    else if (name == "--tol") base.circle_tol = cfg.circle_tol;
                    else if (name == "--search") base.search_steps = cfg.search_steps;
                    else if (name == "--reductions") base.reductions = cfg.reductions;
                    else if (name == "--threads") base.threads = cfg.threads;
                    else if (name == "--out") base.output = cfg.output;
                    else if (name == "--csv") base.csv = cfg.csv;
                }
                cfg = base;
            }
            if (!ineq.empty())
                cfg.entries = ineq;
            if (cfg.entries.empty())
                throw DomainError("verify needs --ineq or a config with entries");
            if (mutation == "kappa-signed-alpha")
                cfg.mutation.kappa_signed_alpha = true;
            if (mutation == "drop-na-term")
                cfg.mutation.drop_na_term = true;
            cfg.sharpness = cfg.sharpness || sharp;
            cfg.record_timing = cfg.record_timing || timing;
            return detail::cmd_verify(cfg, out);
        }
        if (*sharpness)
            return detail::cmd_sharpness(sharp_ids, out);
        if (*reduce)
            return detail::cmd_reduce(link_ids, link_trials, link_seed, out);
        if (*eval)
            return detail::cmd_eval(ev, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Unconverged& e) {
        err << "error: " << e.what() << '\n';
        return kExitNonConvergence;
    } catch (const TolValueUnreachable& e) {
        err << "error: " << e.what() << '\n';
        return kExitNonConvergence;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNonConvergence;
    }
    return kExitUsage;
}

} // namespace smirnov

#endif
