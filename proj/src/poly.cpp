#include "prym/poly.hpp"

namespace prym {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
};

std::int64_t read_integer(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.i;
    if (c.i == start) throw ParseError("expected integer at position " + std::to_string(start));
    if (c.i - start > 18) throw ParseError("integer literal too long");
    return std::stoll(c.s.substr(start, c.i - start));
}

std::string read_var(Cursor& c) {
    std::size_t start = c.i;
    if (c.done() || !std::islower(static_cast<unsigned char>(c.peek())))
        throw ParseError("expected variable at position " + std::to_string(start));
    ++c.i;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.i;
    return c.s.substr(start, c.i - start);
}

}  // namespace

MultiPoly<Fp> parse_poly(const std::string& text, VarSetPtr vars, std::uint32_t p, const MonomialOrder& ord) {
    MultiPoly<Fp> f(vars, ord, Fp::zero(p));
    Cursor c{text};
    c.skip_ws();
    if (c.done()) throw ParseError("empty polynomial");
    bool first = true;
    while (true) {
        c.skip_ws();
        if (c.done()) {
            if (first) throw ParseError("empty polynomial");
            break;
        }
        std::int64_t sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            sign = c.peek() == '-' ? -1 : 1;
            ++c.i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(c.i));
        }
        first = false;
        c.skip_ws();
        Fp coeff = Fp::one(p);
        Monomial mono = Monomial::unit(vars->size());
        bool saw_factor = false;
        if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = Fp(read_integer(c), p);
            saw_factor = true;
        }
        while (true) {
            c.skip_ws();
            bool expect_more = false;
            if (!c.done() && c.peek() == '*') {
                ++c.i;
                c.skip_ws();
                expect_more = true;
            } else if (saw_factor || c.done() || c.peek() == '+' || c.peek() == '-') {
                break;
            }
            if (c.done()) throw ParseError("dangling '*'");
            if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
                if (!expect_more && saw_factor) throw ParseError("unexpected integer");
                coeff = coeff * Fp(read_integer(c), p);
                saw_factor = true;
                continue;
            }
            std::string v = read_var(c);
            auto idx = vars->index(v);
            if (!idx) throw ParseError("unknown variable '" + v + "'");
            std::int64_t exp = 1;
            c.skip_ws();
            if (!c.done() && c.peek() == '^') {
                ++c.i;
                exp = read_integer(c);
                if (exp < 0 || exp > 60000) throw ParseError("exponent out of range");
            }
            mono.e[*idx] = static_cast<std::uint16_t>(mono.e[*idx] + exp);
            saw_factor = true;
        }
        if (!saw_factor) throw ParseError("empty term");
        f.add_term(mono, sign < 0 ? -coeff : coeff);
    }
    return f;
}

namespace {

template <class T, class CoeffPrinter>
std::string render(const MultiPoly<T>& f, CoeffPrinter print_coeff) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (!first) os << "+";
        first = false;
        bool printed = false;
        std::string cs = print_coeff(c);
        if (cs != "1" || m.is_unit()) {
            os << cs;
            printed = true;
        }
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (printed) os << "*";
            os << f.vars()->name(i);
            if (m.e[i] > 1) os << "^" << m.e[i];
            printed = true;
        }
    }
    return os.str();
}

}  // namespace

std::string to_string(const MultiPoly<Fp>& f) {
    return render(f, [](const Fp& c) { return std::to_string(c.value()); });
}

std::string to_string(const MultiPoly<Dual>& f) {
    return render(f, [](const Dual& c) {
        return "(" + std::to_string(c.constant_part().value()) + "+" + std::to_string(c.eps_part().value()) +
               "e)";
    });
}

}  // namespace prym
