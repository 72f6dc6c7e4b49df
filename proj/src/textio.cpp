#include "realclif/textio.hpp"

#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace realclif {

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// One basis term c*z^j rendered with sign context: returns (is_negative,
// magnitude text).
std::pair<bool, std::string> cyc8_term_str(const Rational& c, int j) {
    Rational mag = c < 0 ? Rational(-c) : c;
    std::string s;
    if (j == 0) {
        s = rational_str(mag);
    } else {
        std::string zp = j == 1 ? "z" : "z^" + std::to_string(j);
        s = (mag == 1) ? zp : rational_str(mag) + "*" + zp;
    }
    return {c < 0, s};
}

} // namespace

std::string to_string(const Cyc8& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (int j = 0; j < 4; ++j) {
        if (a.coeff(j) == 0) continue;
        auto [neg, body] = cyc8_term_str(a.coeff(j), j);
        if (out.empty())
            out = neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

namespace {

struct Lexer {
    std::string s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw std::invalid_argument("parse error: expected '" + std::string(1, c) +
                                        "' at position " + std::to_string(pos));
    }
    long number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("parse error: expected digits");
        return std::stol(s.substr(start, pos - start));
    }
};

Rational parse_rational(Lexer& lx) {
    long num = lx.number();
    if (lx.accept('/')) {
        long den = lx.number();
        if (den == 0) throw std::invalid_argument("parse error: zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    return Rational(num);
}

// rational ['*' z-power] | z-power; leading sign handled by the caller.
Cyc8 parse_cyc8_term(Lexer& lx) {
    Rational coef(1);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        coef = parse_rational(lx);
        have_coef = true;
    }
    if (lx.accept('*') || (!have_coef && lx.peek() == 'z') ||
        (have_coef && lx.peek() == 'z')) {
        if (lx.peek() == 'z') {
            ++lx.pos;
            long e = 1;
            if (lx.accept('^')) e = lx.number();
            return Cyc8(coef) * Cyc8::zeta(static_cast<int>(e));
        }
        throw std::invalid_argument("parse error: expected z after '*'");
    }
    if (!have_coef) throw std::invalid_argument("parse error: expected scalar term");
    return Cyc8(coef);
}

Cyc8 parse_cyc8_expr(Lexer& lx) {
    Cyc8 acc;
    bool neg = lx.accept('-');
    if (!neg) lx.accept('+');
    while (true) {
        Cyc8 t = parse_cyc8_term(lx);
        acc += neg ? -t : t;
        if (lx.accept('-'))
            neg = true;
        else if (lx.accept('+'))
            neg = false;
        else
            break;
    }
    return acc;
}

} // namespace

Cyc8 parse_cyc8(const std::string& text) {
    Lexer lx{text};
    if (lx.eof()) throw std::invalid_argument("parse error: empty scalar");
    Cyc8 v = parse_cyc8_expr(lx);
    if (!lx.eof()) throw std::invalid_argument("parse error: trailing input in scalar");
    return v;
}

namespace {

std::string monomial_str(Monomial m) {
    if (m == 0) return "1";
    std::string s;
    Monomial rest = m;
    while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        s += "e" + std::to_string(i + 1);
    }
    return s;
}

// Coefficient rendering for an element term; compound scalars are
// parenthesized so the element grammar stays flat.
std::string coeff_str(const Cyc8& c, bool* negated) {
    *negated = false;
    int nonzero = 0;
    for (int j = 0; j < 4; ++j) nonzero += c.coeff(j) != 0;
    if (nonzero > 1) return "(" + to_string(c) + ")";
    if (c.is_rational()) {
        if (c.coeff(0) < 0) {
            *negated = true;
            Cyc8 m = -c;
            return m == Cyc8(1) ? "" : rational_str(m.coeff(0));
        }
        return c == Cyc8(1) ? "" : rational_str(c.coeff(0));
    }
    // single z-power term
    for (int j = 1; j < 4; ++j) {
        if (c.coeff(j) == 0) continue;
        auto [neg, body] = cyc8_term_str(c.coeff(j), j);
        *negated = neg;
        return body;
    }
    return "0";
}

} // namespace

std::string to_string(const CliffordElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : a.terms()) {
        bool neg = false;
        std::string cs = coeff_str(c, &neg);
        std::string body;
        if (m == 0)
            body = cs.empty() ? "1" : cs;
        else
            body = cs.empty() ? monomial_str(m) : cs + "*" + monomial_str(m);
        if (out.empty())
            out = neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

namespace {

Monomial parse_monomial(Lexer& lx, Signature sig) {
    Monomial m = 0;
    while (lx.peek() == 'e') {
        ++lx.pos;
        long i = lx.number();
        if (i < 1 || i > sig.dim())
            throw std::invalid_argument("parse error: generator index out of range");
        Monomial bit = Monomial(1) << (i - 1);
        if (m & bit)
            throw std::invalid_argument("parse error: repeated generator in monomial");
        m |= bit;
    }
    return m;
}

} // namespace

CliffordElement parse_clifford(const std::string& text, Signature sig) {
    CliffordElement elem(sig);
    Lexer lx{text};
    if (lx.eof()) throw std::invalid_argument("parse error: empty element");
    bool neg = lx.accept('-');
    if (!neg) lx.accept('+');
    while (true) {
        Cyc8 coef(1);
        Monomial mono = 0;
        bool have_mono = false;

        if (lx.accept('(')) {
            coef = parse_cyc8_expr(lx);
            lx.expect(')');
            if (lx.accept('*')) mono = parse_monomial(lx, sig);
        } else if (lx.peek() == 'e') {
            mono = parse_monomial(lx, sig);
            have_mono = true;
        } else {
            coef = parse_cyc8_term(lx);
            if (lx.accept('*')) {
                if (lx.peek() == 'e')
                    mono = parse_monomial(lx, sig);
                else {
                    // scalar continued like "1/2*z^2*e1"
                    Cyc8 more = parse_cyc8_term(lx);
                    coef *= more;
                    if (lx.accept('*')) mono = parse_monomial(lx, sig);
                }
            } else if (lx.peek() == 'e') {
                mono = parse_monomial(lx, sig);
            }
        }
        (void)have_mono;
        elem.add_term(mono, neg ? -coef : coef);

        if (lx.accept('-'))
            neg = true;
        else if (lx.accept('+'))
            neg = false;
        else
            break;
    }
    if (!lx.eof()) throw std::invalid_argument("parse error: trailing input in element");
    return elem;
}

std::string operator_dump(const Operator& a) {
    std::ostringstream os;
    os << "basis:";
    for (std::size_t i = 0; i < a.dim(); ++i)
        os << " " << a.basis.labels[i] << ":" << a.basis.parity[i];
    os << "\n";
    for (std::size_t i = 0; i < a.dim(); ++i) {
        os << "row:";
        for (std::size_t j = 0; j < a.dim(); ++j)
            os << (j ? " ; " : " ") << to_string(a.mat.at(i, j));
        os << "\n";
    }
    return os.str();
}

Operator parse_operator_dump(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line.rfind("basis:", 0) != 0)
        throw std::invalid_argument("operator dump: missing basis header");
    GradedBasis basis;
    {
        std::istringstream hs(line.substr(6));
        std::string tok;
        while (hs >> tok) {
            auto colon = tok.rfind(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("operator dump: bad basis token " + tok);
            basis.labels.push_back(tok.substr(0, colon));
            basis.parity.push_back(std::stoi(tok.substr(colon + 1)));
        }
    }
    std::size_t n = basis.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::getline(is, line) || line.rfind("row:", 0) != 0)
            throw std::invalid_argument("operator dump: missing row " + std::to_string(i));
        std::string body = line.substr(4);
        std::size_t start = 0;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t sep = body.find(';', start);
            std::string cell =
                sep == std::string::npos ? body.substr(start) : body.substr(start, sep - start);
            m.at(i, j) = parse_cyc8(cell);
            if (sep == std::string::npos && j + 1 < n)
                throw std::invalid_argument("operator dump: short row " + std::to_string(i));
            start = sep + 1;
        }
    }
    return Operator{std::move(basis), std::move(m)};
}

SignedPermutation parse_signed_permutation(const std::string& text, int n) {
    SignedPermutation sp = SignedPermutation::identity(static_cast<std::size_t>(n));
    Lexer lx{text};
    if (lx.peek() == 'i') {  // "id"
        ++lx.pos;
        lx.expect('d');
    }
    while (!lx.eof()) {
        if (lx.accept('(')) {
            std::vector<long> cycle;
            while (!lx.accept(')')) {
                lx.accept(',');
                cycle.push_back(lx.number());
            }
            for (long v : cycle)
                if (v < 1 || v > n)
                    throw std::invalid_argument("signed permutation: index out of range");
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                std::size_t from = static_cast<std::size_t>(cycle[i] - 1);
                std::size_t to = static_cast<std::size_t>(cycle[(i + 1) % cycle.size()] - 1);
                sp.perm[from] = static_cast<int>(to);
            }
        } else if (lx.accept('-')) {
            long i = lx.number();
            if (i < 1 || i > n)
                throw std::invalid_argument("signed permutation: flip index out of range");
            sp.sign[static_cast<std::size_t>(i - 1)] *= -1;
        } else {
            throw std::invalid_argument("signed permutation: unexpected input");
        }
    }
    // Reject non-bijective cycle data.
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int v : sp.perm) {
        if (hit[static_cast<std::size_t>(v)])
            throw std::invalid_argument("signed permutation: not a bijection");
        hit[static_cast<std::size_t>(v)] = true;
    }
    return sp;
}

} // namespace realclif
