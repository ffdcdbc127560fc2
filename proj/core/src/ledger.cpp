#include "fm18/ledger.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fm18 {

void ClassExpr::prune()
{
    for (auto it = terms_.begin(); it != terms_.end();)
        it = fm18::is_zero(it->second) ? terms_.erase(it) : std::next(it);
}

ClassExpr ClassExpr::generator(int which)
{
    ClassExpr e;
    e.terms_[{which == 0 ? 1 : 0, which == 0 ? 0 : 1}] = 1;
    return e;
}

ClassExpr ClassExpr::constant(const Rat& c)
{
    ClassExpr e;
    e.terms_[{0, 0}] = c;
    e.prune();
    return e;
}

ClassExpr ClassExpr::operator+(const ClassExpr& o) const
{
    ClassExpr r = *this;
    for (const auto& [k, v] : o.terms_) r.terms_[k] += v;
    r.prune();
    return r;
}

ClassExpr ClassExpr::operator-(const ClassExpr& o) const
{
    ClassExpr r = *this;
    for (const auto& [k, v] : o.terms_) r.terms_[k] -= v;
    r.prune();
    return r;
}

ClassExpr ClassExpr::operator*(const ClassExpr& o) const
{
    ClassExpr r;
    for (const auto& [ka, va] : terms_)
        for (const auto& [kb, vb] : o.terms_)
            r.terms_[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
    r.prune();
    return r;
}

ClassExpr ClassExpr::operator-() const
{
    ClassExpr r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
}

ClassExpr ClassExpr::pow(int e) const
{
    if (e < 0) throw std::invalid_argument("negative exponent");
    ClassExpr r = constant(Rat(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

ClassExpr ClassExpr::scaled(const Rat& a) const
{
    ClassExpr r = *this;
    for (auto& [k, v] : r.terms_) v *= a;
    r.prune();
    return r;
}

int ClassExpr::total_degree() const
{
    int d = -1;
    for (const auto& [k, v] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

bool ClassExpr::is_homogeneous() const
{
    int d = total_degree();
    for (const auto& [k, v] : terms_)
        if (k.first + k.second != d) return false;
    return true;
}

std::string ClassExpr::to_string(const std::string& v0, const std::string& v1) const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        Rat a = abs(c);
        bool has_var = k.first + k.second > 0;
        if (!has_var || a != 1) os << rat_to_string(a);
        if (has_var && a != 1) os << "*";
        if (k.first > 0) {
            os << v0;
            if (k.first > 1) os << "^" << k.first;
        }
        if (k.second > 0) {
            os << v1;
            if (k.second > 1) os << "^" << k.second;
        }
        first = false;
    }
    return os.str();
}

Rat evaluate(const MomentTable& t, const std::vector<ClassExpr>& factors)
{
    ClassExpr prod = ClassExpr::constant(Rat(1));
    for (const auto& f : factors) prod = prod * f;
    if (prod.is_zero() || !prod.is_homogeneous() || prod.total_degree() != 4)
        throw std::invalid_argument("product must be homogeneous of total degree 4");
    Rat acc(0);
    for (const auto& [k, c] : prod.terms())
        acc += c * Rat(t.moments[static_cast<std::size_t>(k.second)]);
    return acc;
}

MomentTable builtin_w_table() { return {"H", "A", {5, 0, -5, -8, -6}}; }

MomentTable builtin_v_table() { return {"L", "B", {18, 0, -3, -1, 1}}; }

std::vector<IdentityCheck> verify_ledger_identities()
{
    const MomentTable W = builtin_w_table();
    const MomentTable V = builtin_v_table();
    const ClassExpr H = ClassExpr::generator(0), A = ClassExpr::generator(1);
    const ClassExpr L = ClassExpr::generator(0), B = ClassExpr::generator(1);
    const ClassExpr two = ClassExpr::constant(Rat(2));
    const ClassExpr HB = L - B;      // H* corresponds to L* - B~
    const ClassExpr AB = L - B - B;  // A~ corresponds to L* - 2B~

    std::vector<IdentityCheck> out;
    auto check = [&](const std::string& name, long expected, const Rat& computed) {
        out.push_back({name, Rat(expected), computed, computed == Rat(expected)});
    };

    // the two stored moment tables
    check("H^4 = 5 (W moments)", 5, evaluate(W, {H, H, H, H}));
    check("H^3*A = 0 (W moments)", 0, evaluate(W, {H, H, H, A}));
    check("H^2*A^2 = -5 (W moments)", -5, evaluate(W, {H, H, A, A}));
    check("H*A^3 = -8 (W moments)", -8, evaluate(W, {H, A, A, A}));
    check("A^4 = -6 (W moments)", -6, evaluate(W, {A, A, A, A}));
    check("L^4 = 18 (V moments)", 18, evaluate(V, {L, L, L, L}));
    check("L^3*B = 0 (V moments)", 0, evaluate(V, {L, L, L, B}));
    check("L^2*B^2 = -3 (V moments)", -3, evaluate(V, {L, L, B, B}));
    check("L*B^3 = -1 (V moments)", -1, evaluate(V, {L, B, B, B}));
    check("B^4 = 1 (V moments, stored derived value)", 1, evaluate(V, {B, B, B, B}));

    // the link identities
    ClassExpr link = two * H - A; // 2H - A, the class cut out by the second link
    check("(2H-A)^4 = 18, degree of the genus-10 image", 18,
          evaluate(W, {link, link, link, link}));
    check("(2H-A)^3*(H-A) = 0, the contracted divisor", 0,
          evaluate(W, {link, link, link, H - A}));
    check("-(2H-A)^2*(H-A)^2 = 3, degree of the blowdown surface S", 3,
          -evaluate(W, {link, link, H - A, H - A}));
    check("-H^2*A^2 = 5, degree of the scroll F (W side)", 5, -evaluate(W, {H, H, A, A}));
    check("-(L-B)^2*(L-2B)^2 = 5, degree of the scroll F (V side)", 5,
          -evaluate(V, {HB, HB, AB, AB}));
    check("(L-B)^3*(L-2B) = 0, the zero-intersection relation", 0,
          evaluate(V, {HB, HB, HB, AB}));
    check("(H-A)^4 = 1, B~^4 recomputed on the W side", 1,
          evaluate(W, {H - A, H - A, H - A, H - A}));

    // full cross-table consistency: substituting H -> L-B, A -> L-2B into
    // the V moments must reproduce the W moments
    check("cross-table H^4", 5, evaluate(V, {HB, HB, HB, HB}));
    check("cross-table H^3*A", 0, evaluate(V, {HB, HB, HB, AB}));
    check("cross-table H^2*A^2", -5, evaluate(V, {HB, HB, AB, AB}));
    check("cross-table H*A^3", -8, evaluate(V, {HB, AB, AB, AB}));
    check("cross-table A^4", -6, evaluate(V, {AB, AB, AB, AB}));

    // degree 18 pins the genus: 2g - 2 = 18
    Rat degV = evaluate(V, {L, L, L, L});
    out.push_back({"degree 18 gives genus 10 (2g-2 = deg)", Rat(10), (degV + 2) / 2,
                   (degV + 2) / 2 == Rat(10)});

    // anticanonical regression value on the W side
    ClassExpr mk = ClassExpr::constant(Rat(3)) * H - A;
    check("(3H-A)^4 = 225, anticanonical degree on the W side", 225,
          evaluate(W, {mk, mk, mk, mk}));

    return out;
}

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    const std::string& v0;
    const std::string& v1;
    std::size_t pos = 0;

    void skip()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c)
    {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c)
    {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }
    [[noreturn]] void fail(const std::string& what)
    {
        throw std::invalid_argument("expression parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }

    ClassExpr expr()
    {
        ClassExpr acc = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    ClassExpr term()
    {
        ClassExpr acc = factor();
        for (;;) {
            if (eat('*')) { acc = acc * factor(); continue; }
            // implicit product: 2H, 2(H-A), H(H-A)
            skip();
            if (pos < s.size() &&
                (s[pos] == '(' || std::isalpha(static_cast<unsigned char>(s[pos])))) {
                acc = acc * factor();
                continue;
            }
            return acc;
        }
    }

    ClassExpr factor()
    {
        ClassExpr base = primary();
        if (eat('^')) {
            skip();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail("exponent expected");
            base = base.pow(std::stoi(s.substr(start, pos - start)));
        }
        return base;
    }

    ClassExpr primary()
    {
        skip();
        if (eat('(')) {
            ClassExpr e = expr();
            if (!eat(')')) fail("')' expected");
            return e;
        }
        if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
                ++pos;
            return ClassExpr::constant(parse_rat(s.substr(start, pos - start)));
        }
        if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
            for (int which = 0; which < 2; ++which) {
                const std::string& name = which == 0 ? v0 : v1;
                if (s.compare(pos, name.size(), name) == 0) {
                    pos += name.size();
                    return ClassExpr::generator(which);
                }
            }
            fail(std::string("unknown generator '") + s[pos] + "' (expected " + v0 + " or " +
                 v1 + ")");
        }
        fail("operand expected");
    }
};

} // namespace

ClassExpr parse_class_expr(const std::string& src, const std::string& v0, const std::string& v1)
{
    Parser p{src, v0, v1};
    ClassExpr e = p.expr();
    p.skip();
    if (p.pos != src.size()) p.fail("trailing input");
    return e;
}

} // namespace fm18
