#include "liesym/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "liesym/errors.hpp"
#include "liesym/guard.hpp"

namespace liesym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) throw DomainError("permutation degree must be positive");
    std::vector<int> sorted(images_);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != static_cast<int>(i) + 1)
            throw DomainError("images are not a bijection of {1..n}");
    }
}

Permutation Permutation::identity(int degree) {
    if (degree < 1) throw DomainError("permutation degree must be positive");
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw DegreeMismatchError("compose: degrees differ");
    std::vector<int> im(p.degree());
    for (int x = 1; x <= p.degree(); ++x) im[x - 1] = p(q(x));
    return Permutation(std::move(im));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> im(p.degree());
    for (int x = 1; x <= p.degree(); ++x) im[p(x) - 1] = x;
    return Permutation(std::move(im));
}

int sign(const Permutation& p) {
    // (-1)^(n - number of cycles), fixed points included.
    const int n = p.degree();
    std::vector<bool> seen(n, false);
    int cycles = 0;
    for (int s = 1; s <= n; ++s) {
        if (seen[s - 1]) continue;
        ++cycles;
        for (int t = s; !seen[t - 1]; t = p(t)) seen[t - 1] = true;
    }
    return ((n - cycles) % 2 == 0) ? 1 : -1;
}

Partition cycle_type(const Permutation& p) {
    const int n = p.degree();
    std::vector<bool> seen(n, false);
    std::vector<int> lengths;
    for (int s = 1; s <= n; ++s) {
        if (seen[s - 1]) continue;
        int len = 0;
        for (int t = s; !seen[t - 1]; t = p(t)) {
            seen[t - 1] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
}

Permutation parse_cycles(const std::string& text, int degree) {
    if (degree < 1) throw DomainError("permutation degree must be positive");
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 1);
    std::vector<bool> used(degree, false);

    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw ParseError("empty cycle expression");
    bool any = false;
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '(' in cycle expression");
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected point or ')' in cycle");
            int value = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                value = value * 10 + (text[i] - '0');
                if (value > degree) throw ParseError("cycle point exceeds degree");
                ++i;
            }
            if (value < 1) throw ParseError("cycle points are 1-based");
            if (used[value - 1]) throw ParseError("repeated point in cycle expression");
            used[value - 1] = true;
            cycle.push_back(value);
            skip_ws();
            if (i < text.size() && (text[i] == ',' )) ++i;
        }
        for (std::size_t k = 0; k < cycle.size(); ++k)
            im[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
        any = true;
        skip_ws();
    }
    if (!any) throw ParseError("empty cycle expression");
    return Permutation(std::move(im));
}

std::string format_cycles(const Permutation& p) {
    const int n = p.degree();
    std::vector<bool> seen(n, false);
    std::ostringstream os;
    bool printed = false;
    for (int s = 1; s <= n; ++s) {
        if (seen[s - 1] || p(s) == s) {
            seen[s - 1] = true;
            continue;
        }
        os << '(';
        bool first = true;
        for (int t = s; !seen[t - 1]; t = p(t)) {
            seen[t - 1] = true;
            if (!first) os << ' ';
            os << t;
            first = false;
        }
        os << ')';
        printed = true;
    }
    if (!printed) return "()";
    return os.str();
}

std::vector<Permutation> enumerate_group(int n) {
    check_degree(n);
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    do {
        out.push_back(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::size_t factorial(int n) {
    std::size_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
    return f;
}

std::size_t lex_rank(const Permutation& p) {
    const auto& im = p.images();
    const int n = p.degree();
    std::size_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller_right = 0;
        for (int j = i + 1; j < n; ++j)
            if (im[j] < im[i]) ++smaller_right;
        rank += static_cast<std::size_t>(smaller_right) * factorial(n - 1 - i);
    }
    return rank;
}

Permutation lex_unrank(int degree, std::size_t rank) {
    std::vector<int> pool(degree);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> im;
    im.reserve(degree);
    for (int i = degree - 1; i >= 0; --i) {
        const std::size_t f = factorial(i);
        const std::size_t digit = rank / f;
        rank %= f;
        if (digit >= pool.size()) throw DomainError("permutation rank out of range");
        im.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return Permutation(std::move(im));
}

Permutation embed(const Permutation& p) {
    std::vector<int> im(p.images());
    im.push_back(p.degree() + 1);
    return Permutation(std::move(im));
}

} // namespace liesym
