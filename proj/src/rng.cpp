#include "liesym/rng.hpp"

#include <numeric>

#include "liesym/errors.hpp"

namespace liesym {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw DomainError("Rng::below requires a positive bound");
    // Rejection sampling on the top slice keeps the draw exactly uniform.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = eng_();
    } while (v >= limit);
    return v % bound;
}

long long Rng::in_range(long long lo, long long hi) {
    if (lo > hi) throw DomainError("Rng::in_range requires lo <= hi");
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Permutation Rng::random_permutation(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(below(static_cast<std::uint64_t>(i) + 1));
        std::swap(im[i], im[j]);
    }
    return Permutation(std::move(im));
}

Rat Rng::random_coefficient() {
    long long num = 0;
    while (num == 0) num = in_range(-9, 9);
    return rat(num, in_range(1, 3));
}

Element Rng::random_element(int degree, int max_terms) {
    if (max_terms < 1) throw DomainError("random_element requires max_terms >= 1");
    Element out(degree);
    const long long terms = in_range(1, max_terms);
    for (long long t = 0; t < terms; ++t)
        out.add(random_permutation(degree), random_coefficient());
    return out;
}

} // namespace liesym
