// Expression DSL over the generators of A_n(0) / A_n(q).
//
// Grammar (whitespace insensitive):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['\'']                 -- postfix apostrophe = adjoint
//   atom   := 'z' '[' int ',' int ']' | complex-literal | '(' expr ')'
// Complex literals take the forms a, a+bi, bi; sums and products of bare
// scalar literals fold at parse time, so "2+3i" parses to one scalar node.

#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qzero/core.hpp"

namespace qz {

struct PolyNode;
using PolyPtr = std::shared_ptr<const PolyNode>;

struct PGen {
    int i, j;
};
struct PScalar {
    Cplx v;
};
struct PAdj {
    PolyPtr a;
};
struct PProd {
    std::vector<PolyPtr> factors;
};
struct PSum {
    std::vector<std::pair<int, PolyPtr>> terms;  // sign in {+1,-1}
};

struct PolyNode {
    std::variant<PGen, PScalar, PAdj, PProd, PSum> v;
};

struct StarPolynomial {
    PolyPtr root;

    bool operator==(const StarPolynomial& o) const;
    // max generator count over monomials
    int degree() const;
    // largest generator index referenced (for range validation against n)
    int max_index() const;
};

StarPolynomial poly_gen(int i, int j);
StarPolynomial poly_scalar(Cplx v);
StarPolynomial poly_adj(const StarPolynomial& a);
StarPolynomial poly_prod(const std::vector<StarPolynomial>& fs);
StarPolynomial poly_sum(const std::vector<std::pair<int, StarPolynomial>>& ts);

// Throws Error("parse-error", msg-with-position).
StarPolynomial parse_star_poly(const std::string& text);
std::string print_star_poly(const StarPolynomial& p);

// Generic evaluation; Alg must provide
//   Value gen(int i, int j), Value scalar(Cplx),
//   Value add(Value,Value), Value sub(Value,Value),
//   Value mul(Value,Value), Value adjoint(Value).
template <class Alg>
typename Alg::Value eval_star_poly(const PolyPtr& node, Alg& alg) {
    using V = typename Alg::Value;
    if (auto* g = std::get_if<PGen>(&node->v)) return alg.gen(g->i, g->j);
    if (auto* s = std::get_if<PScalar>(&node->v)) return alg.scalar(s->v);
    if (auto* a = std::get_if<PAdj>(&node->v)) return alg.adjoint(eval_star_poly(a->a, alg));
    if (auto* p = std::get_if<PProd>(&node->v)) {
        V acc = eval_star_poly(p->factors.front(), alg);
        for (size_t k = 1; k < p->factors.size(); ++k)
            acc = alg.mul(acc, eval_star_poly(p->factors[k], alg));
        return acc;
    }
    const auto& sum = std::get<PSum>(node->v);
    V acc = eval_star_poly(sum.terms.front().second, alg);
    if (sum.terms.front().first < 0) acc = alg.sub(alg.scalar(0.0), acc);
    for (size_t k = 1; k < sum.terms.size(); ++k) {
        V t = eval_star_poly(sum.terms[k].second, alg);
        acc = sum.terms[k].first > 0 ? alg.add(acc, t) : alg.sub(acc, t);
    }
    return acc;
}

template <class Alg>
typename Alg::Value eval_star_poly(const StarPolynomial& p, Alg& alg) {
    return eval_star_poly(p.root, alg);
}

}  // namespace qz
