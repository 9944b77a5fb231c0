#include "liesym/wedge.hpp"

#include <algorithm>

#include "liesym/errors.hpp"

namespace liesym {

WedgeIndex::WedgeIndex(int n, std::vector<int> indices)
    : n_(n), indices_(std::move(indices)) {
    if (n < 0) throw DomainError("wedge ambient dimension must be nonnegative");
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] < 1 || indices_[i] > n)
            throw DomainError("wedge index out of range");
        if (i > 0 && indices_[i] <= indices_[i - 1])
            throw DomainError("wedge indices must be strictly increasing");
    }
}

std::size_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

std::vector<WedgeIndex> wedge_basis(int n, int m) {
    if (m < 0 || m > n) throw DomainError("wedge power out of range");
    std::vector<WedgeIndex> out;
    out.reserve(binomial(n, m));
    std::vector<int> cur(m);
    // Iterative lexicographic subset generation.
    for (int i = 0; i < m; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(WedgeIndex(n, cur));
        int i = m - 1;
        while (i >= 0 && cur[i] == n - (m - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < m; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::size_t wedgerank_impl(int n, const std::vector<int>& s) {
    // Lexicographic rank in the combinatorial number system: count the
    // subsets that branch off below each chosen index.
    const int m = static_cast<int>(s.size());
    std::size_t rank = 0;
    int prev = 0;
    for (int t = 0; t < m; ++t) {
        for (int j = prev + 1; j < s[t]; ++j)
            rank += binomial(n - j, m - 1 - t);
        prev = s[t];
    }
    return rank;
}

std::size_t wedge_rank(const WedgeIndex& S) { return wedgerank_impl(S.n(), S.indices()); }

std::optional<std::pair<int, WedgeIndex>> sort_with_sign(int n, std::vector<int> raw) {
    int sign = 1;
    // Insertion sort with swap counting; m never exceeds n <= 7.
    for (std::size_t i = 1; i < raw.size(); ++i) {
        for (std::size_t j = i; j > 0 && raw[j] < raw[j - 1]; --j) {
            std::swap(raw[j], raw[j - 1]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < raw.size(); ++i)
        if (raw[i] == raw[i - 1]) return std::nullopt;
    return std::make_pair(sign, WedgeIndex(n, std::move(raw)));
}

WedgeVector apply_a(const Permutation& sigma, const WedgeIndex& S) {
    if (sigma.degree() != S.n())
        throw DegreeMismatchError("apply_a: permutation degree vs wedge dimension");
    std::vector<int> image;
    image.reserve(S.indices().size());
    for (int i : S.indices()) image.push_back(sigma(i));
    auto sorted = sort_with_sign(S.n(), std::move(image)); // never collapses: sigma is injective
    WedgeVector out;
    out.emplace(std::move(sorted->second), Rat(sorted->first));
    return out;
}

WedgeVector apply_b(const Permutation& sigma, const WedgeIndex& S) {
    if (sigma.degree() != S.n())
        throw DegreeMismatchError("apply_b: permutation degree vs wedge dimension");
    WedgeVector out;
    const auto& idx = S.indices();
    for (std::size_t p = 0; p < idx.size(); ++p) {
        std::vector<int> raw(idx);
        raw[p] = sigma(idx[p]);
        auto sorted = sort_with_sign(S.n(), std::move(raw));
        if (!sorted) continue; // replacement collided with another factor
        auto [it, inserted] = out.emplace(std::move(sorted->second), Rat(sorted->first));
        if (!inserted) {
            it->second += sorted->first;
            if (sgn(it->second) == 0) out.erase(it);
        }
    }
    return out;
}

Matrix operator_matrix(const Element& x, int m, OperatorKind kind) {
    const int n = x.degree();
    if (m < 0 || m > n) throw DomainError("operator power out of range");
    const auto basis = wedge_basis(n, m);
    Matrix out(basis.size(), basis.size());
    for (const auto& [sigma, c] : x.terms()) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const WedgeVector image = (kind == OperatorKind::A)
                                          ? apply_a(sigma, basis[j])
                                          : apply_b(sigma, basis[j]);
            for (const auto& [T, coeff] : image)
                out.at(wedge_rank(T), j) += c * coeff;
        }
    }
    return out;
}

} // namespace liesym
