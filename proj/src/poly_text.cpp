#include "qcpoly/poly_text.hpp"

#include <cctype>

namespace qcpoly {

std::string format_poly(const Poly& f) {
    if (!f.ctx()->is_prime_field())
        throw domain_error("format_poly: wire format is defined over prime fields");
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        FieldElement c = f.coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::uint64_t v = c.residue();
        if (i == 0) {
            out += std::to_string(v);
            continue;
        }
        if (v != 1) out += std::to_string(v);
        out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() { return s[i]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw domain_error("parse_poly: " + what + " at offset " + std::to_string(i));
    }
};

BigInt read_number(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) c.fail("expected a number");
    return BigInt(std::string(c.s.substr(start, c.i - start)));
}

} // namespace

Poly parse_poly(const FieldCtx& ctx, std::string_view text, bool strict) {
    if (!ctx->is_prime_field())
        throw domain_error("parse_poly: wire format is defined over prime fields");
    const BigInt p(ctx->characteristic());
    Cursor cur{text};
    std::vector<FieldElement> acc;
    auto add_term = [&](int deg, const BigInt& coef, bool negated) {
        if (deg >= 1'000'000) cur.fail("exponent too large");
        if (strict && coef >= p) cur.fail("coefficient not reduced (strict mode)");
        BigInt r = coef % p;
        if (negated && r != 0) r = p - r;
        if (std::size_t(deg) >= acc.size()) acc.resize(std::size_t(deg) + 1, ctx->zero());
        acc[std::size_t(deg)] =
            acc[std::size_t(deg)] + ctx->from_int(r.convert_to<std::int64_t>());
    };

    bool first = true;
    while (!cur.done()) {
        bool neg = false;
        if (!first || cur.peek() == '+' || cur.peek() == '-') {
            char op = cur.peek();
            if (op != '+' && op != '-') cur.fail("expected '+' or '-'");
            ++cur.i;
            neg = op == '-';
            if (first && op == '+') cur.fail("leading '+'");
        }
        first = false;
        if (cur.done()) cur.fail("dangling operator");

        BigInt coef = 1;
        bool saw_coef = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coef = read_number(cur);
            saw_coef = true;
            cur.skip_ws();
            if (cur.i < cur.s.size() && cur.peek() == '*') {
                ++cur.i;
                cur.skip_ws();
                if (cur.i >= cur.s.size() || cur.peek() != 'x') cur.fail("expected x after '*'");
            }
        }
        int deg = 0;
        if (cur.i < cur.s.size() && cur.peek() == 'x') {
            ++cur.i;
            deg = 1;
            cur.skip_ws();
            if (cur.i < cur.s.size() && cur.peek() == '^') {
                ++cur.i;
                BigInt e = read_number(cur);
                if (e > 1'000'000) cur.fail("exponent too large");
                deg = e.convert_to<int>();
            }
        } else if (!saw_coef) {
            cur.fail("expected a term");
        }
        add_term(deg, coef, neg);
    }
    if (first) throw domain_error("parse_poly: empty input");
    return Poly::from_coeffs(ctx, std::move(acc));
}

std::string describe_element(const FieldElement& a) {
    if (!a.field()->base()) return std::to_string(a.residue());
    std::string out = "(";
    const auto& cs = a.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) out += ",";
        out += describe_element(cs[i]);
    }
    out += ")";
    return out;
}

std::string describe_poly(const Poly& f) {
    if (f.ctx()->is_prime_field()) return format_poly(f);
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        FieldElement c = f.coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += describe_element(c);
        if (i == 1) out += "x";
        if (i >= 2) out += "x^" + std::to_string(i);
    }
    return out;
}

} // namespace qcpoly
