#ifndef SMIRNOV_CAMPAIGN_HPP
#define SMIRNOV_CAMPAIGN_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "generate.hpp"
#include "io.hpp"
#include "reductions.hpp"
#include "rng.hpp"
#include "roots.hpp"
#include "sharpness.hpp"

namespace smirnov
{

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

struct CampaignConfig
{
    int schema = kReportSchema;
    std::vector<std::string> entries;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    int n_min = 1;
    int n_max = 12;
    double circle_tol = 1e-10;
    double slack_tol = kSlackTolerance;
    /// Hill-climbing steps on the relative slack after each passing trial; 0 disables the search.
    int search_steps = 0;
    Mutation mutation{};
    bool sharpness = false;
    std::vector<std::string> reductions;
    std::size_t reduction_trials = 1000;
    bool record_timing = false;
    std::string output;
    std::string csv;
    /// 0 picks SMIRNOV_THREADS, then the hardware concurrency.
    unsigned threads = 0;
};

enum class TrialStatus { pass, fail, error };

struct TrialResult
{
    TrialStatus status = TrialStatus::error;
    std::size_t regenerations = 0;
    Verdict verdict{};
    InequalityInstance instance;
    std::optional<GeneratedInstance> generated;
    bool nonconvergence = false;
    std::string message;
};

struct Counterexample
{
    InequalityInstance instance;
    Verdict verdict;
    std::size_t trial = 0;
    int shrink_steps = 0;
    std::vector<cplx> roots;
};

struct EntryReport
{
    std::string entry;
    std::size_t trials = 0;
    std::size_t passes = 0;
    std::size_t failures = 0;
    std::size_t errors = 0;
    std::size_t regenerations = 0;
    std::size_t nonconvergence = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    std::optional<double> sharpness_gap;
    std::optional<Counterexample> counterexample;
    std::vector<TrialResult> rows;
};

struct CampaignReport
{
    CampaignConfig config;
    std::vector<EntryReport> entries;
    std::vector<ReductionReport> reductions;
    std::optional<double> wall_time;

    bool counterexample_found() const
    {
        for (const auto& e : entries)
            if (e.failures > 0)
                return true;
        for (const auto& r : reductions)
            if (!r.pass)
                return true;
        return false;
    }
    bool nonconvergence() const
    {
        for (const auto& e : entries)
            if (e.errors > 0)
                return true;
        return false;
    }
    /// 0 all pass, 1 counterexample, 3 numerical non-convergence.
    int exit_code() const { return counterexample_found() ? 1 : nonconvergence() ? 3 : 0; }
};

namespace detail
{

inline std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline constexpr std::uint64_t kSearchSubstream = 0x5EA5C4ULL;

inline unsigned pool_size(unsigned requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("SMIRNOV_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs f(i) for i in [0, count) on up to `threads` workers. Results are indexed, so order is irrelevant.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& f)
{
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++)
                f(i);
        });
    for (auto& th : pool)
        th.join();
}

inline CheckOptions check_options(const CampaignConfig& c)
{
    CheckOptions o;
    o.circle_tol = c.circle_tol;
    o.slack_tol = c.slack_tol;
    o.mutation = c.mutation;
    return o;
}

inline cplx into_disk(cplx v)
{
    const double m = std::abs(v);
    return m > 1.0 ? v / m : v;
}

/// One random move of every free variable of the instance, kept inside its domain and hypothesis class.
inline GeneratedInstance perturb(const GeneratedInstance& g, const InequalityEntry& e, double sigma, Rng& rng)
{
    GeneratedInstance c = g;
    InequalityInstance& in = c.instance;
    const ParamSchema& s = e.params;
    auto jitter = [&](cplx v, double scale) { return v + scale * cplx{rng.normal(), rng.normal()}; };

    if (s.a)
        in.a = into_disk(jitter(in.a, sigma));
    if (s.beta)
        in.beta = into_disk(jitter(in.beta, sigma));
    if (s.R)
        in.R = std::clamp(in.R + sigma * rng.normal(), 1.0, 3.0);
    in.z = jitter(in.z, sigma);
    if (s.z == PointDomain::unit_circle || std::abs(in.z) < 1.0)
        in.z /= std::abs(in.z);
    if (s.alpha == AlphaDomain::disk) {
        in.alpha = into_disk(jitter(in.alpha, sigma));
    } else if (s.alpha == AlphaDomain::omega && std::abs(1.0 - in.alpha) > 0.0) {
        cplx t = jitter(in.alpha / (1.0 - in.alpha), sigma);
        if (std::abs(t) > std::abs(in.z))
            t *= std::abs(in.z) / std::abs(t);
        if (std::abs(t + 1.0) >= 1e-3)
            in.alpha = omega_map(t);
    }
    if (c.root_based()) {
        for (cplx& r : c.roots)
            r = clamp_root(jitter(r, 0.5 * sigma), c.hypothesis, c.margin, in.k);
        rebuild(c);
    }
    return c;
}

inline std::optional<Verdict> try_check(const InequalityInstance& in, const CheckOptions& opt)
{
    try {
        return check(in, opt);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

/// Hill climb on the relative slack; returns a failing instance if one is reached.
inline void falsify(GeneratedInstance& g, Verdict& v, const InequalityEntry& e, const CheckOptions& opt,
                    int steps, Rng& rng)
{
    for (int k = 0; k < steps && v.pass; ++k) {
        const double sigma = 0.01 + 0.2 * (1.0 - static_cast<double>(k) / steps);
        GeneratedInstance c = perturb(g, e, sigma, rng);
        const auto cv = try_check(c.instance, opt);
        if (cv && cv->relative_slack() < v.relative_slack()) {
            g = std::move(c);
            v = *cv;
        }
    }
}

inline TrialResult run_trial(const InequalityEntry& e, const CampaignConfig& cfg, std::size_t i)
{
    TrialResult res;
    const CheckOptions opt = check_options(cfg);
    GeneratorSpec spec;
    spec.hypothesis = e.hypothesis;
    spec.n_min = cfg.n_min;
    spec.n_max = cfg.n_max;
    const std::uint64_t stream_seed = cfg.seed ^ fnv1a(e.id);

    for (std::uint64_t attempt = 0; attempt < static_cast<std::uint64_t>(kMaxRegenerations); ++attempt) {
        Rng rng = Rng::split(stream_seed, i, attempt);
        try {
            GeneratedInstance g = generate(spec, e, rng);
            Verdict v = check(g.instance, opt);
            if (v.pass && cfg.search_steps > 0) {
                Rng srng = Rng::split(stream_seed, i, kSearchSubstream);
                falsify(g, v, e, opt, cfg.search_steps, srng);
            }
            res.status = v.pass ? TrialStatus::pass : TrialStatus::fail;
            res.verdict = v;
            res.instance = g.instance;
            res.generated = std::move(g);
            return res;
        } catch (const HypothesisViolated&) {
        } catch (const Unconverged&) {
        } catch (const RetryExhausted&) {
        } catch (const TolValueUnreachable& ex) {
            res.status = TrialStatus::error;
            res.nonconvergence = true;
            res.message = ex.what();
            return res;
        } catch (const std::exception& ex) {
            res.status = TrialStatus::error;
            res.message = ex.what();
            return res;
        }
        ++res.regenerations;
    }
    res.status = TrialStatus::error;
    res.nonconvergence = true;
    res.message = "generator exhausted its regenerations";
    return res;
}

inline bool still_fails(GeneratedInstance& c, const CheckOptions& opt, Verdict& v)
{
    try {
        rebuild(c);
        const Verdict cv = check(c.instance, opt);
        if (cv.pass)
            return false;
        v = cv;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

/// Candidate reductions of a failing instance, simplest first.
inline std::vector<GeneratedInstance> shrink_candidates(const GeneratedInstance& g)
{
    std::vector<GeneratedInstance> out;
    const InequalityInstance& in = g.instance;
    if (g.root_based() && g.roots.size() >= 2) {
        GeneratedInstance c = g;
        c.roots.resize(g.roots.size() / 2);
        out.push_back(std::move(c));
    }
    if (g.root_based()) {
        // toward 0 (snapping to 0 first), or toward infinity up to |r| = 1e3 when zeros must stay outside
        const bool outward = g.hypothesis == Hypothesis::no_zeros_in_open_disk;
        for (std::size_t j = 0; j < g.roots.size(); ++j) {
            const double m = std::abs(g.roots[j]);
            if (outward ? m >= 1e3 : m == 0.0)
                continue;
            if (!outward) {
                GeneratedInstance c = g;
                c.roots[j] = 0.0;
                out.push_back(std::move(c));
                if (m < 1e-3)
                    continue;
            }
            GeneratedInstance c = g;
            c.roots[j] *= outward ? 2.0 : 0.5;
            out.push_back(std::move(c));
        }
    }
    auto with = [&](auto mutate) {
        GeneratedInstance c = g;
        mutate(c.instance);
        out.push_back(std::move(c));
    };
    if (in.beta != 0.0) {
        with([](InequalityInstance& x) { x.beta = 0.0; });
        if (std::abs(in.beta) >= 1e-3)
            with([](InequalityInstance& x) { x.beta *= 0.5; });
    }
    if (in.alpha != 0.0) {
        with([](InequalityInstance& x) { x.alpha = 0.0; });
        if (std::abs(in.alpha) >= 1e-3)
            with([](InequalityInstance& x) { x.alpha *= 0.5; });
    }
    if (in.R > 1.0) {
        with([](InequalityInstance& x) { x.R = 1.0; });
        if (in.R - 1.0 >= 1e-3)
            with([](InequalityInstance& x) { x.R = 1.0 + 0.5 * (x.R - 1.0); });
    }
    return out;
}

} // namespace detail

/// Greedy shrinking: a step is kept only if the instance still fails.
inline Counterexample shrink(GeneratedInstance g, Verdict v, const CheckOptions& opt, int max_steps = 500)
{
    Counterexample cx;
    bool changed = true;
    while (changed && cx.shrink_steps < max_steps) {
        changed = false;
        for (GeneratedInstance& c : detail::shrink_candidates(g)) {
            Verdict cv;
            if (detail::still_fails(c, opt, cv)) {
                g = std::move(c);
                v = cv;
                ++cx.shrink_steps;
                changed = true;
                break;
            }
        }
    }
    cx.instance = g.instance;
    cx.verdict = v;
    cx.roots = g.roots;
    return cx;
}

inline std::vector<std::string> resolve_entries(const std::vector<std::string>& ids)
{
    std::vector<std::string> out;
    for (const auto& id : ids) {
        if (id == "all") {
            for (const auto& e : registry())
                out.push_back(e.id);
        } else {
            out.push_back(find_entry(id).id);
        }
    }
    return out;
}

inline EntryReport run_entry(const InequalityEntry& e, const CampaignConfig& cfg, unsigned threads)
{
    EntryReport rep;
    rep.entry = e.id;
    rep.trials = cfg.trials;
    rep.rows.resize(cfg.trials);
    detail::parallel_for(cfg.trials, threads,
                         [&](std::size_t i) { rep.rows[i] = detail::run_trial(e, cfg, i); });

    std::optional<std::size_t> first_failure;
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const TrialResult& t = rep.rows[i];
        rep.regenerations += t.regenerations;
        switch (t.status) {
        case TrialStatus::pass: ++rep.passes; break;
        case TrialStatus::fail:
            ++rep.failures;
            if (!first_failure)
                first_failure = i;
            break;
        case TrialStatus::error:
            ++rep.errors;
            if (t.nonconvergence)
                ++rep.nonconvergence;
            break;
        }
        if (t.status != TrialStatus::error)
            rep.min_slack = std::min(rep.min_slack, t.verdict.relative_slack());
    }
    if (first_failure) {
        const TrialResult& t = rep.rows[*first_failure];
        rep.counterexample = shrink(*t.generated, t.verdict, detail::check_options(cfg));
        rep.counterexample->trial = *first_failure;
    }
    if (cfg.sharpness && e.family != Family::none)
        rep.sharpness_gap = sharpness_gap(e.id).min_gap;
    return rep;
}

inline CampaignReport run_campaign(const CampaignConfig& cfg)
{
    if (cfg.schema != kReportSchema)
        throw DomainError("unsupported config schema");
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
        throw DomainError("invalid degree range");
    const auto start = std::chrono::steady_clock::now();
    CampaignReport report;
    report.config = cfg;
    report.config.entries = resolve_entries(cfg.entries);
    const unsigned threads = detail::pool_size(cfg.threads);
    for (const auto& id : report.config.entries)
        report.entries.push_back(run_entry(find_entry(id), cfg, threads));
    for (const auto& link : cfg.reductions) {
        if (link == "all") {
            for (const auto& l : links())
                report.reductions.push_back(reduction_check(l.id, cfg.reduction_trials, cfg.seed));
        } else {
            report.reductions.push_back(reduction_check(link, cfg.reduction_trials, cfg.seed));
        }
    }
    if (cfg.record_timing)
        report.wall_time =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// Serialization.

inline json to_json(const Mutation& m)
{
    return json{{"kappa_signed_alpha", m.kappa_signed_alpha}, {"drop_na_term", m.drop_na_term}};
}

inline json to_json(const CampaignConfig& c)
{
    return json{{"schema", c.schema},
                {"entries", c.entries},
                {"trials", c.trials},
                {"seed", c.seed},
                {"degree_min", c.n_min},
                {"degree_max", c.n_max},
                {"circle_tol", c.circle_tol},
                {"slack_tol", c.slack_tol},
                {"search_steps", c.search_steps},
                {"mutation", to_json(c.mutation)},
                {"sharpness", c.sharpness},
                {"reductions", c.reductions},
                {"reduction_trials", c.reduction_trials}};
}

/// Reads a config file; missing fields keep their defaults.
inline CampaignConfig config_from_json(const json& j)
{
    CampaignConfig c;
    try {
        c.schema = j.value("schema", kReportSchema);
        if (j.contains("entries")) {
            if (j["entries"].is_string())
                c.entries = {j["entries"].get<std::string>()};
            else
                c.entries = j["entries"].get<std::vector<std::string>>();
        }
        c.trials = j.value("trials", c.trials);
        c.seed = j.value("seed", c.seed);
        c.n_min = j.value("degree_min", c.n_min);
        c.n_max = j.value("degree_max", c.n_max);
        c.circle_tol = j.value("circle_tol", c.circle_tol);
        c.slack_tol = j.value("slack_tol", c.slack_tol);
        c.search_steps = j.value("search_steps", c.search_steps);
        if (j.contains("mutation")) {
            c.mutation.kappa_signed_alpha = j["mutation"].value("kappa_signed_alpha", false);
            c.mutation.drop_na_term = j["mutation"].value("drop_na_term", false);
        }
        c.sharpness = j.value("sharpness", c.sharpness);
        if (j.contains("reductions"))
            c.reductions = j["reductions"].get<std::vector<std::string>>();
        c.reduction_trials = j.value("reduction_trials", c.reduction_trials);
        c.record_timing = j.value("record_timing", c.record_timing);
        c.output = j.value("output", c.output);
        c.csv = j.value("csv", c.csv);
    } catch (const json::exception& ex) {
        throw DomainError(std::string("invalid config: ") + ex.what());
    }
    return c;
}

inline json to_json(const Counterexample& cx)
{
    json roots = json::array();
    for (const cplx r : cx.roots)
        roots.push_back(to_json(r));
    return json{{"trial", cx.trial},
                {"shrink_steps", cx.shrink_steps},
                {"instance", to_json(cx.instance)},
                {"verdict", to_json(cx.verdict)},
                {"roots", roots}};
}

inline json to_json(const EntryReport& e)
{
    json j{{"entry", e.entry},         {"trials", e.trials},
           {"passes", e.passes},       {"failures", e.failures},
           {"errors", e.errors},       {"regenerations", e.regenerations},
           {"nonconvergence", e.nonconvergence}};
    j["min_slack"] = std::isfinite(e.min_slack) ? json(e.min_slack) : json(nullptr);
    j["sharpness_gap"] = e.sharpness_gap ? json(*e.sharpness_gap) : json(nullptr);
    j["counterexample"] = e.counterexample ? to_json(*e.counterexample) : json(nullptr);
    return j;
}

inline json to_json(const ReductionReport& r)
{
    json j{{"link", r.link},
           {"source", r.source},
           {"target", r.target},
           {"kind", r.kind == LinkKind::limit ? "limit" : "specialization"},
           {"instances", r.instances},
           {"max_lhs_error", r.max_lhs_error},
           {"max_rhs_error", r.max_rhs_error},
           {"pass", r.pass}};
    if (r.kind == LinkKind::limit) {
        j["observed_order"] = r.observed_order;
        j["min_order"] = r.min_order;
        j["richardson_error"] = r.richardson_error;
    }
    j["mismatch"] = r.mismatch ? to_json(*r.mismatch) : json(nullptr);
    return j;
}

inline json to_json(const CampaignReport& r)
{
    json j{{"schema", kReportSchema},
           {"tool_version", kToolVersion},
           {"rng", kRngName},
           {"seed", r.config.seed},
           {"config", to_json(r.config)}};
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back(to_json(e));
    j["entries"] = entries;
    json reds = json::array();
    for (const auto& x : r.reductions)
        reds.push_back(to_json(x));
    j["reductions"] = reds;
    j["exit_code"] = r.exit_code();
    if (r.wall_time)
        j["wall_time"] = *r.wall_time;
    return j;
}

namespace detail
{

inline std::string num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace detail

/// One row per trial: entry, seed offset, n, a, alpha, beta, R, z, lhs, rhs, slack, pass.
inline void write_csv(const CampaignReport& r, std::ostream& os)
{
    using detail::num;
    os << "entry,seed_offset,n,a_re,a_im,alpha_re,alpha_im,beta_re,beta_im,R,z_re,z_im,lhs,rhs,slack,pass\n";
    for (const auto& e : r.entries) {
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
            const TrialResult& t = e.rows[i];
            if (t.status == TrialStatus::error) {
                os << e.entry << ',' << i << ",,,,,,,,,,,,,,error\n";
                continue;
            }
            const InequalityInstance& in = t.instance;
            os << e.entry << ',' << i << ',' << in.n << ',' << num(in.a.real()) << ',' << num(in.a.imag()) << ','
               << num(in.alpha.real()) << ',' << num(in.alpha.imag()) << ',' << num(in.beta.real()) << ','
               << num(in.beta.imag()) << ',' << num(in.R) << ',' << num(in.z.real()) << ',' << num(in.z.imag())
               << ',' << num(t.verdict.lhs) << ',' << num(t.verdict.rhs) << ',' << num(t.verdict.slack) << ','
               << (t.status == TrialStatus::pass ? "true" : "false") << '\n';
        }
    }
}

inline void write_outputs(const CampaignReport& r)
{
    if (!r.config.output.empty()) {
        std::ofstream out(r.config.output);
        if (!out)
            throw DomainError("cannot write report: " + r.config.output);
        out << to_json(r).dump(2) << '\n';
    }
    if (!r.config.csv.empty()) {
        std::ofstream out(r.config.csv);
        if (!out)
            throw DomainError("cannot write csv: " + r.config.csv);
        write_csv(r, out);
    }
}

} // namespace smirnov

#endif
