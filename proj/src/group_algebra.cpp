#include "liesym/group_algebra.hpp"

#include <sstream>

#include "liesym/errors.hpp"

namespace liesym {

namespace {
void require_same_degree(int a, int b, const char* what) {
    if (a != b)
        throw DegreeMismatchError(std::string(what) + ": degree " + std::to_string(a) +
                                  " vs " + std::to_string(b));
}
} // namespace

Element::Element(int degree) : degree_(degree) {
    if (degree < 1) throw DomainError("element degree must be positive");
}

Rat Element::coefficient(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Element::add(const Permutation& p, const Rat& c) {
    if (p.degree() != degree_)
        throw DegreeMismatchError("term degree does not match element degree");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Element singleton(const Permutation& p, const Rat& c) {
    Element x(p.degree());
    x.add(p, c);
    return x;
}

Element identity_element(int degree) {
    return singleton(Permutation::identity(degree));
}

Element linear_combine(const Rat& c1, const Element& x, const Rat& c2, const Element& y) {
    require_same_degree(x.degree(), y.degree(), "linear_combine");
    Element out(x.degree());
    for (const auto& [p, a] : x.terms()) out.add(p, c1 * a);
    for (const auto& [p, b] : y.terms()) out.add(p, c2 * b);
    return out;
}

Element multiply(const Element& x, const Element& y) {
    require_same_degree(x.degree(), y.degree(), "multiply");
    Element out(x.degree());
    for (const auto& [p, a] : x.terms())
        for (const auto& [q, b] : y.terms())
            out.add(compose(p, q), a * b);
    return out;
}

Element bracket(const Element& x, const Element& y) {
    return linear_combine(Rat(1), multiply(x, y), Rat(-1), multiply(y, x));
}

Element conjugate_element(const Permutation& g, const Element& x) {
    require_same_degree(g.degree(), x.degree(), "conjugate_element");
    const Permutation ginv = inverse(g);
    Element out(x.degree());
    for (const auto& [p, c] : x.terms())
        out.add(compose(compose(g, p), ginv), c);
    return out;
}

Element transposition_unit(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n))
        throw DomainError("transposition_unit requires 1 <= i < j <= n");
    std::vector<int> im(n);
    for (int k = 0; k < n; ++k) im[k] = k + 1;
    im[i - 1] = j;
    im[j - 1] = i;
    Element out(n);
    out.add(Permutation::identity(n), Rat(1));
    out.add(Permutation(std::move(im)), Rat(-1));
    return out;
}

Element embed_element(const Element& x) {
    Element out(x.degree() + 1);
    for (const auto& [p, c] : x.terms()) out.add(embed(p), c);
    return out;
}

Rat coefficient_sum(const Element& x) {
    Rat s(0);
    for (const auto& [p, c] : x.terms()) s += c;
    return s;
}

std::string format_element(const Element& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : x.terms()) {
        const Rat a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (a != 1) os << rat_string(a) << '*';
        os << format_cycles(p);
    }
    return os.str();
}

} // namespace liesym
