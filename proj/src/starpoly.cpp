#include "qzero/starpoly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

namespace qz {

namespace {

PolyPtr node(std::variant<PGen, PScalar, PAdj, PProd, PSum> v) {
    auto n = std::make_shared<PolyNode>();
    n->v = std::move(v);
    return n;
}

bool poly_eq(const PolyPtr& a, const PolyPtr& b);

bool vec_eq(const std::vector<PolyPtr>& a, const std::vector<PolyPtr>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!poly_eq(a[i], b[i])) return false;
    return true;
}

bool poly_eq(const PolyPtr& a, const PolyPtr& b) {
    if (a->v.index() != b->v.index()) return false;
    if (auto* g = std::get_if<PGen>(&a->v)) {
        const auto& h = std::get<PGen>(b->v);
        return g->i == h.i && g->j == h.j;
    }
    if (auto* s = std::get_if<PScalar>(&a->v)) {
        const auto& t = std::get<PScalar>(b->v);
        return s->v.real() == t.v.real() && s->v.imag() == t.v.imag();
    }
    if (auto* d = std::get_if<PAdj>(&a->v)) return poly_eq(d->a, std::get<PAdj>(b->v).a);
    if (auto* p = std::get_if<PProd>(&a->v)) return vec_eq(p->factors, std::get<PProd>(b->v).factors);
    const auto& sa = std::get<PSum>(a->v);
    const auto& sb = std::get<PSum>(b->v);
    if (sa.terms.size() != sb.terms.size()) return false;
    for (size_t i = 0; i < sa.terms.size(); ++i)
        if (sa.terms[i].first != sb.terms[i].first || !poly_eq(sa.terms[i].second, sb.terms[i].second))
            return false;
    return true;
}

int degree_of(const PolyPtr& n) {
    if (std::holds_alternative<PGen>(n->v)) return 1;
    if (std::holds_alternative<PScalar>(n->v)) return 0;
    if (auto* a = std::get_if<PAdj>(&n->v)) return degree_of(a->a);
    if (auto* p = std::get_if<PProd>(&n->v)) {
        int d = 0;
        for (const auto& f : p->factors) d += degree_of(f);
        return d;
    }
    int d = 0;
    for (const auto& [s, t] : std::get<PSum>(n->v).terms) d = std::max(d, degree_of(t));
    return d;
}

int max_index_of(const PolyPtr& n) {
    if (auto* g = std::get_if<PGen>(&n->v)) return std::max(g->i, g->j);
    if (std::holds_alternative<PScalar>(n->v)) return 0;
    if (auto* a = std::get_if<PAdj>(&n->v)) return max_index_of(a->a);
    if (auto* p = std::get_if<PProd>(&n->v)) {
        int d = 0;
        for (const auto& f : p->factors) d = std::max(d, max_index_of(f));
        return d;
    }
    int d = 0;
    for (const auto& [s, t] : std::get<PSum>(n->v).terms) d = std::max(d, max_index_of(t));
    return d;
}

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    PolyPtr parse() {
        PolyPtr e = expr().n;
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

private:
    // `lit` marks bare numeric literals; only adjacent literals fold, which
    // is what makes "2+3i" a single scalar while "(2) + (3i)" stays a sum
    struct Parsed {
        PolyPtr n;
        bool lit = false;
    };

    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw Error("parse-error", what + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Parsed expr() {
        struct Term {
            int sign;
            Parsed p;
        };
        std::vector<Term> terms;
        terms.push_back({+1, term()});
        while (true) {
            skip_ws();
            if (eat('+'))
                terms.push_back({+1, term()});
            else if (eat('-'))
                terms.push_back({-1, term()});
            else
                break;
        }
        std::vector<Term> folded;
        for (auto& t : terms) {
            if (!folded.empty() && folded.back().p.lit && t.p.lit) {
                const Cplx prev = std::get<PScalar>(folded.back().p.n->v).v;
                const Cplx cur = std::get<PScalar>(t.p.n->v).v;
                const Cplx v =
                    (folded.back().sign > 0 ? prev : -prev) + (t.sign > 0 ? cur : -cur);
                folded.back() = {+1, {node(PScalar{v}), true}};
                continue;
            }
            folded.push_back(std::move(t));
        }
        if (folded.size() == 1 && folded[0].sign > 0) return folded[0].p;
        PSum sum;
        for (auto& t : folded) sum.terms.emplace_back(t.sign, t.p.n);
        return {node(std::move(sum)), false};
    }

    Parsed term() {
        std::vector<Parsed> fs;
        fs.push_back(factor());
        while (true) {
            skip_ws();
            if (eat('*'))
                fs.push_back(factor());
            else
                break;
        }
        std::vector<Parsed> folded;
        for (auto& f : fs) {
            if (!folded.empty() && folded.back().lit && f.lit) {
                const Cplx v = std::get<PScalar>(folded.back().n->v).v *
                               std::get<PScalar>(f.n->v).v;
                folded.back() = {node(PScalar{v}), true};
                continue;
            }
            folded.push_back(std::move(f));
        }
        if (folded.size() == 1) return folded[0];
        PProd prod;
        for (auto& f : folded) prod.factors.push_back(f.n);
        return {node(std::move(prod)), false};
    }

    Parsed factor() {
        Parsed a = atom();
        skip_ws();
        if (eat('\'')) return {node(PAdj{a.n}), false};
        return a;
    }

    int integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        int v = 0;
        std::from_chars(s_.data() + start, s_.data() + pos_, v);
        return v;
    }

    Parsed atom() {
        skip_ws();
        const char c = peek();
        if (c == 'z') {
            ++pos_;
            if (!eat('[')) fail("expected '['");
            const int i = integer();
            if (!eat(',')) fail("expected ','");
            const int j = integer();
            if (!eat(']')) fail("expected ']'");
            if (i < 1 || j < 1) fail("generator indices must be positive");
            return {node(PGen{i, j}), false};
        }
        if (c == '(') {
            ++pos_;
            Parsed e = expr();
            if (!eat(')')) fail("expected ')'");
            return {e.n, false};
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        fail("expected atom");
    }

    Parsed number() {
        skip_ws();
        size_t start = pos_;
        auto digits = [&] {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        };
        digits();
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            digits();
        }
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            size_t mark = pos_;
            ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
            size_t ds = pos_;
            digits();
            if (pos_ == ds) pos_ = mark;  // 'e' was not an exponent
        }
        if (pos_ == start) fail("expected number");
        double v = 0.0;
        const auto res = std::from_chars(s_.data() + start, s_.data() + pos_, v);
        if (res.ec != std::errc()) fail("bad number");
        if (pos_ < s_.size() && s_[pos_] == 'i') {
            ++pos_;
            return {node(PScalar{Cplx(0.0, v)}), true};
        }
        return {node(PScalar{Cplx(v, 0.0)}), true};
    }
};

std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// prints a nonnegative-real/positive-imag scalar atom; caller handles signs
std::string fmt_scalar(const Cplx& v) {
    const double re = v.real(), im = v.imag();
    if (im == 0.0) {
        if (re < 0.0) return "0-" + fmt_double(-re);
        return fmt_double(re);
    }
    if (re == 0.0) {
        if (im < 0.0) return "0-" + fmt_double(-im) + "i";
        return fmt_double(im) + "i";
    }
    std::string s = re < 0.0 ? "0-" + fmt_double(-re) : fmt_double(re);
    s += im < 0.0 ? "-" + fmt_double(-im) + "i" : "+" + fmt_double(im) + "i";
    return s;
}

bool scalar_is_atom(const Cplx& v) {
    if (v.imag() == 0.0) return v.real() >= 0.0;
    if (v.real() == 0.0) return v.imag() > 0.0;
    return false;
}

enum class Ctx { top, sum_term, prod_factor, adj_child };

bool is_scalar_node(const PolyPtr& n) { return std::holds_alternative<PScalar>(n->v); }

std::string print_node(const PolyPtr& n, Ctx ctx, bool after_scalar = false) {
    if (auto* g = std::get_if<PGen>(&n->v))
        return "z[" + std::to_string(g->i) + "," + std::to_string(g->j) + "]";
    if (auto* s = std::get_if<PScalar>(&n->v)) {
        const std::string body = fmt_scalar(s->v);
        // parentheses protect a printed scalar from precedence problems (its
        // "0-..." and "a+bi" spellings parse as sums) and from re-folding
        // with a preceding bare literal
        bool needs_parens = false;
        if (ctx == Ctx::prod_factor || ctx == Ctx::adj_child)
            needs_parens = !scalar_is_atom(s->v) || after_scalar;
        else if (ctx == Ctx::sum_term)
            needs_parens = !scalar_is_atom(s->v) || after_scalar;
        return needs_parens ? "(" + body + ")" : body;
    }
    if (auto* a = std::get_if<PAdj>(&n->v)) {
        const std::string body = print_node(a->a, Ctx::adj_child) + "'";
        return ctx == Ctx::adj_child ? "(" + body + ")" : body;
    }
    if (auto* p = std::get_if<PProd>(&n->v)) {
        std::string out;
        bool prev_scalar = false;
        for (size_t k = 0; k < p->factors.size(); ++k) {
            if (k) out += " * ";
            out += print_node(p->factors[k], Ctx::prod_factor, k > 0 && prev_scalar);
            prev_scalar = is_scalar_node(p->factors[k]);
        }
        if (ctx == Ctx::adj_child || ctx == Ctx::prod_factor) return "(" + out + ")";
        return out;
    }
    const auto& sum = std::get<PSum>(n->v);
    std::string out;
    bool prev_scalar = false;
    for (size_t k = 0; k < sum.terms.size(); ++k) {
        const auto& [sign, t] = sum.terms[k];
        if (k == 0) {
            if (sign < 0) out += "0 - ";
        } else {
            out += sign > 0 ? " + " : " - ";
        }
        const bool lead_zero = (k == 0 && sign < 0);
        out += print_node(t, Ctx::sum_term, (k > 0 && prev_scalar) || lead_zero);
        prev_scalar = is_scalar_node(t);
    }
    if (ctx != Ctx::top) return "(" + out + ")";
    return out;
}

}  // namespace

bool StarPolynomial::operator==(const StarPolynomial& o) const { return poly_eq(root, o.root); }

int StarPolynomial::degree() const { return degree_of(root); }

int StarPolynomial::max_index() const { return max_index_of(root); }

StarPolynomial poly_gen(int i, int j) { return {node(PGen{i, j})}; }

StarPolynomial poly_scalar(Cplx v) { return {node(PScalar{v})}; }

StarPolynomial poly_adj(const StarPolynomial& a) { return {node(PAdj{a.root})}; }

StarPolynomial poly_prod(const std::vector<StarPolynomial>& fs) {
    if (fs.empty()) return poly_scalar(1.0);
    if (fs.size() == 1) return fs[0];
    PProd p;
    for (const auto& f : fs) p.factors.push_back(f.root);
    return {node(std::move(p))};
}

StarPolynomial poly_sum(const std::vector<std::pair<int, StarPolynomial>>& ts) {
    if (ts.empty()) return poly_scalar(0.0);
    if (ts.size() == 1 && ts[0].first > 0) return ts[0].second;
    PSum s;
    for (const auto& [sign, t] : ts) s.terms.emplace_back(sign, t.root);
    return {node(std::move(s))};
}

StarPolynomial parse_star_poly(const std::string& text) {
    Parser p(text);
    return {p.parse()};
}

std::string print_star_poly(const StarPolynomial& p) {
    return print_node(p.root, Ctx::top, false);
}

}  // namespace qz
