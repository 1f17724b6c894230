#include <catch_amalgamated.hpp>

#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include <smirnov/smirnov.hpp>

using namespace smirnov;

TEST_CASE("rng streams are reproducible and distinct", "[harness]")
{
    Rng a = Rng::split(9, 3, 0), b = Rng::split(9, 3, 0), c = Rng::split(9, 4, 0), d = Rng::split(9, 3, 1);
    std::set<std::uint64_t> firsts;
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t x = a.next();
        CHECK(x == b.next());
        firsts.insert(x);
    }
    CHECK(firsts.size() == 100);
    CHECK(Rng::split(9, 3, 0).next() != c.next());
    CHECK(Rng::split(9, 3, 0).next() != d.next());
    Rng r(5);
    for (int i = 0; i < 1000; ++i) {
        const double u = r.uniform();
        CHECK((u >= 0.0 && u < 1.0));
        CHECK(std::abs(r.disk()) <= 1.0);
        const int k = r.integer(2, 4);
        CHECK((k >= 2 && k <= 4));
    }
}

TEST_CASE("generators honour their hypothesis class", "[harness]")
{
    Rng rng(42);
    for (const Hypothesis h : {Hypothesis::all_zeros_in_closed_disk, Hypothesis::no_zeros_in_open_disk,
                               Hypothesis::all_zeros_in_radius_k}) {
        const InequalityEntry* entry = nullptr;
        for (const auto& e : registry())
            if (e.hypothesis == h)
                entry = &e;
        REQUIRE(entry);
        GeneratorSpec spec;
        spec.hypothesis = h;
        for (int i = 0; i < 500; ++i) {
            const GeneratedInstance g = generate(spec, *entry, rng);
            const ZeroLocation loc = classify_zeros(g.instance.p);
            CHECK(g.instance.n == g.instance.p.degree());
            CHECK((g.instance.n >= 1 && g.instance.n <= 12));
            CHECK_FALSE(loc.boundary_flag);
            if (h == Hypothesis::all_zeros_in_closed_disk)
                CHECK(loc.all_in_closed_disk);
            else if (h == Hypothesis::no_zeros_in_open_disk)
                CHECK(loc.none_in_open_disk);
            else
                CHECK(loc.all_within(g.instance.k));
            CHECK_NOTHROW(validate_params(*entry, g.instance));
        }
    }
}

TEST_CASE("fixed-degree generator example", "[harness]")
{
    GeneratorSpec spec;
    spec.n_min = spec.n_max = 3;
    spec.seed = 42;
    Rng rng(spec.seed);
    for (int i = 0; i < 10000; ++i) {
        const GeneratedInstance g = generate(spec, find_entry("thm1-2.1"), rng);
        CHECK(g.instance.n == 3);
        CHECK(classify_roots(g.roots).all_in_closed_disk);
    }
}

TEST_CASE("dominated pairs are certified dominated", "[harness]")
{
    Rng rng(43);
    GeneratorSpec spec;
    spec.hypothesis = Hypothesis::dominated_pair;
    spec.n_max = 8;
    const InequalityEntry& e = find_entry("lemma3-3.2");
    for (int i = 0; i < 50; ++i) {
        const GeneratedInstance g = generate(spec, e, rng);
        REQUIRE(g.instance.f);
        CHECK(g.instance.p.degree() <= g.instance.f->degree());
        CHECK(certified_max_ratio(g.instance.p, *g.instance.f) <= 1.0);
        CHECK_NOTHROW(verify_hypothesis(e, g.instance, 1e-10));
    }
}

TEST_CASE("campaign accounting and determinism", "[harness]")
{
    CampaignConfig cfg;
    cfg.entries = {"thm1-2.1", "thm2-2.3", "lemma4-3.3"};
    cfg.trials = 200;
    cfg.seed = 3;
    cfg.threads = 2;
    const CampaignReport a = run_campaign(cfg);
    for (const auto& e : a.entries) {
        INFO(e.entry);
        CHECK(e.passes + e.failures + e.errors == e.trials);
        CHECK(e.passes == e.trials);
        CHECK(e.min_slack >= -kSlackTolerance);
    }
    CHECK(a.exit_code() == 0);
    cfg.threads = 1;
    const CampaignReport b = run_campaign(cfg);
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK_FALSE(to_json(a).contains("wall_time"));
}

TEST_CASE("dropping the -naP term is caught and shrunk", "[harness]")
{
    CampaignConfig cfg;
    cfg.entries = {"thm1-2.1"};
    cfg.trials = 400;
    cfg.seed = 1;
    cfg.mutation.drop_na_term = true;
    const CampaignReport r = run_campaign(cfg);
    REQUIRE(r.entries[0].failures > 0);
    CHECK(r.exit_code() == 1);
    const Counterexample& cx = *r.entries[0].counterexample;
    CHECK_FALSE(cx.verdict.pass);
    CHECK(cx.shrink_steps < 500);
    // the shrunk instance still fails under the mutation and passes without it
    CheckOptions mutated;
    mutated.mutation.drop_na_term = true;
    CHECK_FALSE(check(cx.instance, mutated).pass);
    CHECK(check(cx.instance).pass);
    CHECK(cx.instance.n <= r.entries[0].rows[cx.trial].instance.n);
}

TEST_CASE("shrinking never returns a passing instance", "[harness]")
{
    CheckOptions mutated;
    mutated.mutation.kappa_signed_alpha = true;
    const InequalityEntry& e = find_entry("thm1-2.1");
    GeneratorSpec spec;
    Rng rng(44);
    int shrunk = 0;
    for (int i = 0; i < 4000 && shrunk < 3; ++i) {
        GeneratedInstance g = generate(spec, e, rng);
        g.instance.alpha = std::polar(1.0, rng.uniform(0.5, 2.5));
        g.instance.beta = std::polar(1.0, rng.angle());
        const Verdict v = check(g.instance, mutated);
        if (v.pass)
            continue;
        const Counterexample cx = shrink(g, v, mutated);
        CHECK_FALSE(check(cx.instance, mutated).pass);
        CHECK(cx.instance.n <= g.instance.n);
        ++shrunk;
    }
    CHECK(shrunk > 0);
}

TEST_CASE("specialisation links agree with their targets", "[harness]")
{
    for (const auto& l : links()) {
        if (l.kind != LinkKind::specialization)
            continue;
        const ReductionReport r = reduction_check(l.id, 50, 2);
        INFO(l.id);
        CHECK(r.pass);
        CHECK(r.max_lhs_error <= kLinkTolerance);
        CHECK(r.max_rhs_error <= kLinkTolerance);
    }
}

TEST_CASE("limit links converge at first order", "[harness]")
{
    for (const char* id : {"thm1-limit", "thm2-limit"}) {
        const ReductionReport r = reduction_check(id, 50, 2);
        INFO(id);
        CHECK(r.pass);
        CHECK(r.min_order >= kMinLimitOrder);
        CHECK(r.observed_order <= 1.2);
    }
    CHECK_THROWS_AS(reduction_check("no-such-link", 1), DomainError);
}

TEST_CASE("json round trips", "[harness]")
{
    const Polynomial p{cplx{1.0, -2.0}, 0.0, cplx{0.25, 3.0}};
    CHECK(relative_distance(polynomial_from_json(to_json(p)), p) == 0.0);
    CHECK(relative_distance(parse_polynomial("[[1,0],[0,0],[1,0]]"), Polynomial{1.0, 0.0, 1.0}) == 0.0);
    CHECK(relative_distance(parse_polynomial("[1, 2]"), Polynomial{1.0, 2.0}) == 0.0);
    CHECK_THROWS_AS(parse_polynomial("[[1,0"), DomainError);
    CHECK_THROWS_AS(parse_polynomial("{\"a\":1}"), DomainError);
    CHECK(parse_complex_arg("0.5,-1") == cplx{0.5, -1.0});

    InequalityInstance in;
    in.entry = "thm1-2.1";
    in.p = p;
    in.n = 2;
    in.a = cplx{0.1, 0.2};
    in.alpha = cplx{-0.3, 0.4};
    in.beta = 0.5;
    in.R = 2.25;
    in.z = cplx{1.5, -0.5};
    const InequalityInstance back = instance_from_json(to_json(in));
    CHECK(to_json(back).dump() == to_json(in).dump());

    CampaignConfig cfg;
    cfg.entries = {"all"};
    cfg.trials = 17;
    cfg.seed = 99;
    cfg.search_steps = 8;
    cfg.mutation.kappa_signed_alpha = true;
    cfg.reductions = {"thm1-a0"};
    CHECK(to_json(config_from_json(to_json(cfg))).dump() == to_json(cfg).dump());
}

TEST_CASE("csv rows follow the trials", "[harness]")
{
    CampaignConfig cfg;
    cfg.entries = {"bernstein-1.1"};
    cfg.trials = 5;
    std::ostringstream os;
    write_csv(run_campaign(cfg), os);
    const std::string text = os.str();
    CHECK(text.rfind("entry,seed_offset,n,", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);
}

TEST_CASE("invalid campaign configs are rejected", "[harness]")
{
    CampaignConfig cfg;
    cfg.entries = {"thm1-2.1"};
    cfg.n_min = 5;
    cfg.n_max = 2;
    CHECK_THROWS_AS(run_campaign(cfg), DomainError);
    cfg.n_min = 1;
    cfg.entries = {"nope"};
    CHECK_THROWS_AS(run_campaign(cfg), DomainError);
}
