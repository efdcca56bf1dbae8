#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "qcpoly/construct.hpp"
#include "qcpoly/poly_text.hpp"
#include "qcpoly/report.hpp"

// Exit codes: 0 success, 1 search exhausted, 2 usage, 3 domain, 4 budget,
// 5 internal consistency (an invariant the library guarantees failed, i.e. a bug).

namespace {

using namespace qcpoly;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoull(v);
    } catch (const std::exception&) {
        throw usage_error(std::string(name) + " must be an unsigned integer");
    }
}

struct CommonOpts {
    std::uint64_t q = 0;
    std::optional<std::uint64_t> c;
    std::optional<std::uint64_t> order;
    std::string format = "text";
};

void add_field_opts(CLI::App* cmd, CommonOpts& o, bool with_qc = true) {
    cmd->add_option("--q", o.q, "prime field size")->required();
    if (with_qc) {
        cmd->add_option("--c", o.c, "map parameter c (x^2 - x - c must be irreducible)");
        cmd->add_option("--order", o.order, "derive c as the least one of this class order");
    }
}

void add_format_opt(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
}

QcContext make_qc(const FieldCtx& ctx, const CommonOpts& o) {
    if (o.c.has_value() == o.order.has_value())
        throw usage_error("exactly one of --c and --order is required");
    if (o.c) return build_qc(ctx, ctx->from_int(std::int64_t(*o.c)));
    return build_qc_for_order(ctx, BigInt(*o.order));
}

class Timer {
public:
    long long ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(Report r, const Timer& t) {
    r.add("elapsed_ms", (long long)t.ms());
    std::cout << r.to_text();
}

int run_find_c(const CommonOpts& o, std::uint64_t order) {
    Timer t;
    FieldCtx ctx = Field::make_prime(o.q);
    FieldElement c = find_c(ctx, BigInt(order));
    if (o.format == "text") {
        std::cout << "c = " << c.residue() << "\n";
        return 0;
    }
    Report r;
    r.add("command", "find-c");
    r.add("q", (long long)o.q);
    r.add("order", (long long)order);
    r.add("c", (long long)c.residue());
    emit(std::move(r), t);
    return 0;
}

int run_qc(const CommonOpts& o) {
    Timer t;
    FieldCtx ctx = Field::make_prime(o.q);
    QcContext qc = make_qc(ctx, o);
    if (o.format == "text") {
        std::cout << "D = " << qc.D << "\n"
                  << "g_c = " << format_poly(qc.map.num) << "\n"
                  << "h_c = " << format_poly(qc.map.den) << "\n";
        return 0;
    }
    Report r;
    r.add("command", "qc");
    r.merge(describe(qc));
    emit(std::move(r), t);
    return 0;
}

int run_transform(const CommonOpts& o, const std::string& poly_text) {
    Timer t;
    FieldCtx ctx = Field::make_prime(o.q);
    QcContext qc = make_qc(ctx, o);
    Poly f = parse_poly(ctx, poly_text);
    Poly raw = q_transform(f, qc.map);
    Poly mon = raw.is_monic() ? raw : raw.monic();
    bool irr = is_irreducible(mon);
    if (o.format == "text") {
        std::cout << "transform = " << format_poly(raw) << "\n"
                  << "irreducible = " << (irr ? "true" : "false") << "\n";
        return 0;
    }
    Report r;
    r.add("command", "transform");
    r.merge(describe(qc));
    r.add("input", format_poly(f));
    r.add("transform", format_poly(raw));
    r.add("transform_monic", format_poly(mon));
    r.add("irreducible", irr);
    emit(std::move(r), t);
    return 0;
}

int run_construct(const CommonOpts& o, const std::string& method, const std::string& seed_poly,
                  int degree, std::uint64_t rng_seed, int max_trials,
                  const FactorBudget& order_budget) {
    Timer t;
    FieldCtx ctx = Field::make_prime(o.q);
    QcContext qc = make_qc(ctx, o);
    TowerReport rep;
    if (method == "recursive") {
        if (seed_poly.empty()) throw usage_error("--seed-poly is required for --method recursive");
        rep = recursive_construct(parse_poly(ctx, seed_poly), qc, order_budget);
    } else if (method == "random") {
        if (degree <= 0) throw usage_error("--degree is required for --method random");
        std::mt19937_64 rng(rng_seed);
        rep = random_construct(ctx, degree, qc, rng, max_trials);
        rep.rng_seed = rng_seed;
    } else {
        throw usage_error("--method must be recursive or random");
    }
    if (o.format == "text") {
        std::cout << "success = " << (rep.success ? "true" : "false") << "\n";
        if (rep.method == "recursive")
            std::cout << "iterations_used = " << rep.iterations_used << "\n";
        else
            std::cout << "trials_used = " << rep.trials_used << "\n";
        if (rep.result)
            std::cout << "result = " << format_poly(*rep.result) << "\n"
                      << "degree = " << rep.result->degree() << "\n";
    } else {
        Report r;
        r.add("command", "construct");
        if (!seed_poly.empty()) r.add("input_seed", seed_poly);
        if (degree > 0) r.add("input_degree", (long long)degree);
        r.merge(describe(rep));
        emit(std::move(r), t);
    }
    if (!rep.success) {
        std::cerr << "error: exhausted: no irreducible transform within " << rep.trials_used
                  << " trials\n";
        return 1;
    }
    return 0;
}

int run_tower(const CommonOpts& o, const std::string& seed_poly, int depth, bool skip_verify) {
    Timer t;
    FieldCtx ctx = Field::make_prime(o.q);
    QcContext qc = make_qc(ctx, o);
    TowerReport rep = build_tower(parse_poly(ctx, seed_poly), qc, depth, !skip_verify);
    if (o.format == "text") {
        for (std::size_t i = 1; i < rep.steps.size(); ++i)
            std::cout << "f_" << i << " = " << format_poly(rep.steps[i].poly) << "\n";
        std::cout << "success = " << (rep.success ? "true" : "false") << "\n";
        return 0;
    }
    Report r;
    r.add("command", "tower");
    r.add("input_seed", seed_poly);
    r.add("depth", (long long)depth);
    r.merge(describe(rep));
    emit(std::move(r), t);
    return 0;
}

int run_count(const CommonOpts& o, int m, bool brute, std::uint64_t budget) {
    Timer t;
    FieldCtx ctx = Field::make_prime(o.q);
    QcContext qc = make_qc(ctx, o);
    BigInt formula = count_invariants(ctx, BigInt(qc.D), m);
    std::optional<BigInt> brute_count;
    if (brute)
        brute_count = BigInt(enumerate_invariants(ctx, qc.a_c, qc.D * m, budget).size());
    bool match = !brute_count || *brute_count == formula;
    if (o.format == "text") {
        if (brute_count)
            std::cout << "formula " << formula << ", brute " << *brute_count << ", match="
                      << (match ? "true" : "false") << "\n";
        else
            std::cout << "formula " << formula << "\n";
    } else {
        Report r;
        r.add("command", "count");
        r.merge(describe(qc));
        r.add("m", (long long)m);
        r.add("invariant_degree", (long long)(qc.D * m));
        r.add("formula", formula);
        if (brute_count) {
            r.add("brute", *brute_count);
            r.add("match", match);
        }
        emit(std::move(r), t);
    }
    if (!match) {
        std::cerr << "error: internal: formula and enumeration disagree\n";
        return 5;
    }
    return 0;
}

int run_prob(const CommonOpts& o, int degree) {
    Timer t;
    FieldCtx ctx = Field::make_prime(o.q);
    QcContext qc = make_qc(ctx, o);
    ProbabilityReport rep = transform_probability(ctx, degree, qc);
    if (o.format == "text") {
        Report r = describe(rep);
        for (const auto& [k, v] : r.items)
            if (k != "q" && k != "n" && k != "D") std::cout << k << " = " << v << "\n";
        return 0;
    }
    Report r;
    r.add("command", "prob");
    r.add("c", (long long)qc.c.residue());
    r.merge(describe(rep));
    emit(std::move(r), t);
    return 0;
}

int run_graph(const CommonOpts& o, int degree, const std::string& gformat, std::uint64_t budget,
              const FactorBudget& order_budget) {
    Timer t;
    FieldCtx ctx = Field::make_prime(o.q);
    QcContext qc = make_qc(ctx, o);
    QcGraph gr = build_graph(ctx, degree, qc, budget, order_budget);
    if (gformat == "graphtext") {
        std::cout << graph_dot(gr);
        return 0;
    }
    Report r;
    r.add("command", "graph");
    r.add("c", (long long)qc.c.residue());
    r.add("D", (long long)qc.D);
    r.merge(describe(gr));
    emit(std::move(r), t);
    return 0;
}

int run_scan(const CommonOpts& o, int degree, std::uint64_t budget) {
    Timer t;
    FieldCtx ctx = Field::make_prime(o.q);
    QcContext qc = make_qc(ctx, o);
    ConjectureScanReport rep = conjecture_scan(ctx, degree, qc, budget);
    if (o.format == "text") {
        std::cout << "eligible = " << rep.eligible << ", two_way = " << rep.two_way
                  << ", stayed_irreducible = " << rep.stayed_irreducible
                  << ", partial = " << (rep.partial ? "true" : "false") << "\n";
        return 0;
    }
    Report r;
    r.add("command", "scan-conjecture");
    r.add("budget", (long long)budget);
    r.merge(describe(rep));
    emit(std::move(r), t);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"irreducible polynomials of high degree via degree-D rational transforms"};
    app.require_subcommand(1);

    std::uint64_t default_budget = env_u64("QCPOLY_ENUM_BUDGET", std::uint64_t(1) << 26);
    FactorBudget order_budget;
    order_budget.rho_iterations = env_u64("QCPOLY_ORDER_EFFORT", order_budget.rho_iterations);

    CommonOpts findc_o, qc_o, tr_o, con_o, tow_o, cnt_o, prob_o, gr_o, scan_o;
    std::uint64_t findc_order = 0;
    std::string tr_poly, con_method = "recursive", con_seed, tow_seed;
    int con_degree = 0, con_max_trials = 64, tow_depth = 1, cnt_m = 0, prob_degree = 0,
        gr_degree = 0, scan_degree = 0;
    std::uint64_t con_rng_seed = 0, cnt_budget = default_budget, gr_budget = default_budget,
                  scan_budget = default_budget;
    bool cnt_brute = false, tow_no_verify = false;
    std::string gr_format = "graphtext";

    CLI::App* findc = app.add_subcommand("find-c", "least c whose class has the given order");
    add_field_opts(findc, findc_o, false);
    findc->add_option("--order", findc_order, "target class order")->required();
    add_format_opt(findc, findc_o);

    CLI::App* qccmd = app.add_subcommand("qc", "print the transform data D, g_c, h_c");
    add_field_opts(qccmd, qc_o);
    add_format_opt(qccmd, qc_o);

    CLI::App* trcmd = app.add_subcommand("transform", "apply the transform to a polynomial");
    add_field_opts(trcmd, tr_o);
    trcmd->add_option("--poly", tr_poly, "input polynomial")->required();
    add_format_opt(trcmd, tr_o);

    CLI::App* concmd = app.add_subcommand("construct", "build one degree-nD irreducible");
    add_field_opts(concmd, con_o);
    concmd->add_option("--method", con_method, "recursive | random");
    concmd->add_option("--seed-poly", con_seed, "seed polynomial (recursive)");
    concmd->add_option("--degree", con_degree, "draw degree (random)");
    concmd->add_option("--rng-seed", con_rng_seed, "random seed (recorded in the report)");
    concmd->add_option("--max-trials", con_max_trials, "draw limit (random)");
    add_format_opt(concmd, con_o);

    CLI::App* towcmd = app.add_subcommand("tower", "iterate the transform depth times");
    add_field_opts(towcmd, tow_o);
    towcmd->add_option("--seed-poly", tow_seed, "seed polynomial")->required();
    towcmd->add_option("--depth", tow_depth, "number of transform steps")->required();
    towcmd->add_flag("--no-verify", tow_no_verify, "skip per-step irreducibility verification");
    add_format_opt(towcmd, tow_o);

    CLI::App* cntcmd = app.add_subcommand("count", "invariant count of degree D*m");
    add_field_opts(cntcmd, cnt_o);
    cntcmd->add_option("--m", cnt_m, "layer index m")->required();
    cntcmd->add_flag("--brute", cnt_brute, "cross-check by enumeration");
    cntcmd->add_option("--budget", cnt_budget, "enumeration budget");
    add_format_opt(cntcmd, cnt_o);

    CLI::App* probcmd = app.add_subcommand("prob", "success probability of the random method");
    add_field_opts(probcmd, prob_o);
    probcmd->add_option("--degree", prob_degree, "draw degree n")->required();
    add_format_opt(probcmd, prob_o);

    CLI::App* grcmd = app.add_subcommand("graph", "divisibility graph on degree-n irreducibles");
    add_field_opts(grcmd, gr_o);
    grcmd->add_option("--degree", gr_degree, "node degree n")->required();
    grcmd->add_option("--budget", gr_budget, "enumeration budget");
    grcmd->add_option("--format", gr_format, "graphtext | structured")
        ->check(CLI::IsMember({"graphtext", "structured"}));

    CLI::App* scancmd = app.add_subcommand("scan-conjecture",
                                           "classify second transforms of eligible seeds");
    add_field_opts(scancmd, scan_o);
    scancmd->add_option("--degree", scan_degree, "seed degree n (odd)")->required();
    scancmd->add_option("--budget", scan_budget, "scan budget");
    add_format_opt(scancmd, scan_o);

    try {
        app.parse(argc, argv);
        if (findc->parsed()) return run_find_c(findc_o, findc_order);
        if (qccmd->parsed()) return run_qc(qc_o);
        if (trcmd->parsed()) return run_transform(tr_o, tr_poly);
        if (concmd->parsed())
            return run_construct(con_o, con_method, con_seed, con_degree, con_rng_seed,
                                 con_max_trials, order_budget);
        if (towcmd->parsed()) return run_tower(tow_o, tow_seed, tow_depth, tow_no_verify);
        if (cntcmd->parsed()) return run_count(cnt_o, cnt_m, cnt_brute, cnt_budget);
        if (probcmd->parsed()) return run_prob(prob_o, prob_degree);
        if (grcmd->parsed()) return run_graph(gr_o, gr_degree, gr_format, gr_budget, order_budget);
        if (scancmd->parsed()) return run_scan(scan_o, scan_degree, scan_budget);
        throw usage_error("no subcommand selected");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // contextual help text, exit 0
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "error: budget: " << e.what() << "\n";
        return 4;
    } catch (const domain_error& e) {
        std::cerr << "error: domain: " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 5;
    }
}
