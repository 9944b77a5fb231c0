#pragma once

#include <map>
#include <string>

#include "liesym/perm.hpp"
#include "liesym/rational.hpp"

namespace liesym {

// Sparse element of Q[S_n]. Terms are keyed by permutation in lexicographic
// one-line order, so iteration (and hence serialization) is deterministic.
// Zero coefficients are never stored.
class Element {
public:
    explicit Element(int degree);

    int degree() const { return degree_; }
    const std::map<Permutation, Rat>& terms() const { return terms_; }

    Rat coefficient(const Permutation& p) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Accumulates c onto the coefficient of p, pruning a resulting zero.
    void add(const Permutation& p, const Rat& c);

    bool operator==(const Element& o) const {
        return degree_ == o.degree_ && terms_ == o.terms_;
    }
    bool operator!=(const Element& o) const { return !(*this == o); }

private:
    int degree_;
    std::map<Permutation, Rat> terms_;
};

Element singleton(const Permutation& p, const Rat& c = Rat(1));
Element identity_element(int degree);

// c1*x + c2*y.
Element linear_combine(const Rat& c1, const Element& x, const Rat& c2, const Element& y);

// Convolution product.
Element multiply(const Element& x, const Element& y);

// [x, y] = xy - yx.
Element bracket(const Element& x, const Element& y);

// g x g^{-1}, term by term.
Element conjugate_element(const Permutation& g, const Element& x);

// nu_ij = 1 - (ij), requires 1 <= i < j <= n.
Element transposition_unit(int i, int j, int n);

// Applies the standard embedding to every term; degree grows by one.
Element embed_element(const Element& x);

// Sum of all coefficients; this is exactly the scalar by which x acts on the
// 0-th exterior power.
Rat coefficient_sum(const Element& x);

// Human-readable rendering, e.g. "() - (1 2)" or "2*(1 2 3) + 1/2*(1 3)".
std::string format_element(const Element& x);

} // namespace liesym
