#include "qcpoly/report.hpp"

#include <sstream>

#include "qcpoly/poly_text.hpp"

namespace qcpoly {

namespace {

std::string poly_str(const Poly& f) {
    return f.ctx()->is_prime_field() ? format_poly(f) : describe_poly(f);
}

std::string elem_str(const FieldElement& a) {
    return a.field()->is_prime_field() ? std::to_string(a.residue()) : describe_element(a);
}

std::string big_str(const BigInt& v) { return v.str(); }

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r.numerator() << '/' << r.denominator();
    return os.str();
}

} // namespace

void Report::add(std::string key, std::string value) {
    items.emplace_back(std::move(key), std::move(value));
}
void Report::add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
void Report::add(std::string key, const BigInt& value) { add(std::move(key), big_str(value)); }
void Report::add(std::string key, long long value) { add(std::move(key), std::to_string(value)); }
void Report::add(std::string key, bool value) {
    add(std::move(key), std::string(value ? "true" : "false"));
}
void Report::add(std::string key, const Rational& value) { add(std::move(key), rat_str(value)); }

void Report::merge(const Report& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
}

std::string Report::to_text() const {
    std::string out;
    for (const auto& [k, v] : items) {
        out += k;
        out += ": ";
        out += v;
        out += '\n';
    }
    return out;
}

Report describe(const QcContext& qc) {
    Report r;
    r.add("q", qc.ctx->cardinality());
    r.add("c", elem_str(qc.c));
    r.add("D", (long long)qc.D);
    r.add("g_c", poly_str(qc.map.num));
    r.add("h_c", poly_str(qc.map.den));
    return r;
}

Report describe(const TowerReport& rep) {
    Report r;
    r.add("method", rep.method);
    r.add("q", rep.ctx->cardinality());
    r.add("c", elem_str(rep.c));
    r.add("D", (long long)rep.D);
    r.add("success", rep.success);
    if (rep.method == "recursive") {
        r.add("split_occurred", rep.split_occurred);
        r.add("iterations_used", (long long)rep.iterations_used);
        r.add("bound", rep.bound ? std::to_string(*rep.bound) : "n/a");
    }
    if (rep.method == "random") {
        r.add("trials_used", (long long)rep.trials_used);
        r.add("max_trials", rep.max_trials ? std::to_string(*rep.max_trials) : "n/a");
    }
    r.add("rng_seed", rep.rng_seed ? std::to_string(*rep.rng_seed) : "n/a");
    r.add("steps", (long long)rep.steps.size());
    for (std::size_t i = 0; i < rep.steps.size(); ++i) {
        const TowerStep& s = rep.steps[i];
        std::string base = "step_" + std::to_string(i);
        r.add(base, poly_str(s.poly));
        r.add(base + "_degree", (long long)s.poly.degree());
        r.add(base + "_note", s.note);
    }
    if (rep.result) {
        r.add("result", poly_str(*rep.result));
        r.add("result_degree", (long long)rep.result->degree());
    }
    return r;
}

Report describe(const QcGraph& gr) {
    Report r;
    r.add("q", gr.ctx->cardinality());
    r.add("n", (long long)gr.n);
    r.add("nodes", (long long)gr.nodes.size());
    auto edges = gr.edges();
    r.add("edges", (long long)edges.size());
    long long periodic_count = 0;
    for (char p : gr.periodic) periodic_count += p != 0;
    r.add("periodic_count", periodic_count);
    for (std::size_t i = 0; i < gr.nodes.size(); ++i)
        r.add("node_" + std::to_string(i), poly_str(gr.nodes[i]));
    for (std::size_t i = 0; i < edges.size(); ++i)
        r.add("edge_" + std::to_string(i),
              poly_str(gr.nodes[edges[i].first]) + " -> " + poly_str(gr.nodes[edges[i].second]));
    std::size_t k = 0;
    for (std::size_t i = 0; i < gr.nodes.size(); ++i)
        if (gr.periodic[i]) r.add("periodic_" + std::to_string(k++), poly_str(gr.nodes[i]));
    return r;
}

Report describe(const ConjectureScanReport& rep) {
    Report r;
    r.add("q", rep.ctx->cardinality());
    r.add("n", (long long)rep.n);
    r.add("c", elem_str(rep.c));
    r.add("D", (long long)rep.D);
    r.add("scanned", rep.scanned);
    r.add("eligible", rep.eligible);
    r.add("two_way", rep.two_way);
    r.add("stayed_irreducible", rep.stayed_irreducible);
    r.add("partial", rep.partial);
    for (std::size_t i = 0; i < rep.counterexamples.size(); ++i)
        r.add("counterexample_" + std::to_string(i), poly_str(rep.counterexamples[i]));
    return r;
}

Report describe(const ProbabilityReport& rep) {
    Report r;
    r.add("q", rep.ctx->cardinality());
    r.add("n", (long long)rep.n);
    r.add("D", (long long)rep.D);
    r.add("p", rep.p);
    r.add("tau", rep.tau);
    r.add("lower_bound", rep.lower_bound);
    if (rep.expected_trials)
        r.add("expected_trials", *rep.expected_trials);
    else
        r.add("expected_trials", "n/a");
    return r;
}

std::string graph_dot(const QcGraph& gr) {
    std::string out = "digraph transform_graph {\n";
    for (std::size_t i = 0; i < gr.nodes.size(); ++i) {
        out += "  \"" + poly_str(gr.nodes[i]) + "\"";
        if (gr.periodic[i]) out += " [peripheries=2]";
        out += ";\n";
    }
    for (const auto& [i, j] : gr.edges())
        out += "  \"" + poly_str(gr.nodes[i]) + "\" -> \"" + poly_str(gr.nodes[j]) + "\";\n";
    out += "}\n";
    return out;
}

} // namespace qcpoly
