#include "liesym/verify.hpp"

#include <sstream>

#include "liesym/errors.hpp"
#include "liesym/group_algebra.hpp"
#include "liesym/lie_solver.hpp"
#include "liesym/rng.hpp"
#include "liesym/subspace.hpp"
#include "liesym/wedge.hpp"

namespace liesym {

namespace {

Matrix commutator(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows(), a.cols());
    const Matrix ab = matmul(a, b), ba = matmul(b, a);
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j)
            out.at(i, j) = ab.at(i, j) - ba.at(i, j);
    return out;
}

SuiteResult transpositions_suite(int n) {
    SuiteResult res{"transpositions", true, 0, ""};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            ++res.checks;
            if (!is_lie_element(transposition_unit(i, j, n))) {
                res.passed = false;
                res.witness = "1 - (" + std::to_string(i) + " " + std::to_string(j) +
                              ") failed the operator comparison";
                return res;
            }
        }
    return res;
}

SuiteResult homomorphism_suite(int n, std::uint64_t seed, int samples) {
    SuiteResult res{"homomorphism", true, 0, ""};
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        const Element x = rng.random_element(n, 3);
        const Element y = rng.random_element(n, 3);
        for (int m = 0; m <= n; ++m) {
            ++res.checks;
            const Matrix ax = operator_matrix(x, m, OperatorKind::A);
            const Matrix ay = operator_matrix(y, m, OperatorKind::A);
            if (operator_matrix(multiply(x, y), m, OperatorKind::A) != matmul(ax, ay)) {
                res.passed = false;
                std::ostringstream os;
                os << "A_" << m << "(xy) != A_" << m << "(x)A_" << m << "(y) for x = "
                   << format_element(x) << ", y = " << format_element(y);
                res.witness = os.str();
                return res;
            }
            ++res.checks;
            const Matrix bx = operator_matrix(x, m, OperatorKind::B);
            const Matrix by = operator_matrix(y, m, OperatorKind::B);
            if (operator_matrix(bracket(x, y), m, OperatorKind::B) != commutator(bx, by)) {
                res.passed = false;
                std::ostringstream os;
                os << "B_" << m << "([x,y]) != [B_" << m << "(x),B_" << m << "(y)] for x = "
                   << format_element(x) << ", y = " << format_element(y);
                res.witness = os.str();
                return res;
            }
        }
    }
    return res;
}

SuiteResult conjugation_suite(int n, std::uint64_t seed, int samples) {
    SuiteResult res{"conjugation", true, 0, ""};
    Rng rng(seed);
    const auto group = enumerate_group(n);
    for (int s = 0; s < samples; ++s) {
        const Element x = rng.random_element(n, 3);
        for (const Permutation& g : group) {
            const Element gxg = conjugate_element(g, x);
            for (int m = 0; m <= n; ++m) {
                const Matrix pg = operator_matrix(singleton(g), m, OperatorKind::A);
                for (const OperatorKind kind : {OperatorKind::A, OperatorKind::B}) {
                    ++res.checks;
                    // P_g K_m(x) = K_m(g x g^{-1}) P_g, stated multiplicatively
                    // to avoid forming the inverse.
                    const Matrix lhs = matmul(pg, operator_matrix(x, m, kind));
                    const Matrix rhs = matmul(operator_matrix(gxg, m, kind), pg);
                    if (lhs != rhs) {
                        res.passed = false;
                        std::ostringstream os;
                        os << (kind == OperatorKind::A ? "A_" : "B_") << m
                           << " not equivariant for g = " << format_cycles(g)
                           << ", x = " << format_element(x);
                        res.witness = os.str();
                        return res;
                    }
                }
            }
        }
    }
    return res;
}

SuiteResult embedding_suite(int n) {
    SuiteResult res{"embedding", true, 0, ""};
    const EmbeddingReport rep = verify_embedding(n);
    res.checks = rep.checked;
    if (!rep.all_pass) {
        res.passed = false;
        res.witness = "an embedded basis vector of degree " + std::to_string(n) +
                      " is not a Lie element in degree " + std::to_string(n + 1);
    }
    return res;
}

SuiteResult closure_suite(int n) {
    SuiteResult res{"closure", true, 0, ""};
    const Subspace& L = lie_basis(n);
    std::vector<Element> basis;
    basis.reserve(L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i)
        basis.push_back(coords_to_element(n, L.basis().row(i)));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            ++res.checks;
            if (!contains(L, bracket(basis[i], basis[j]))) {
                res.passed = false;
                std::ostringstream os;
                os << "bracket of basis vectors " << i << ", " << j << " left the space";
                res.witness = os.str();
                return res;
            }
        }
    for (const Permutation& g : enumerate_group(n))
        for (std::size_t i = 0; i < basis.size(); ++i) {
            ++res.checks;
            if (!contains(L, conjugate_element(g, basis[i]))) {
                res.passed = false;
                std::ostringstream os;
                os << "conjugate of basis vector " << i << " by " << format_cycles(g)
                   << " left the space";
                res.witness = os.str();
                return res;
            }
        }
    return res;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"transpositions", "homomorphism", "conjugation", "embedding", "closure"};
}

SuiteResult run_suite(const std::string& suite, int n, std::uint64_t seed, int samples) {
    if (suite == "transpositions") return transpositions_suite(n);
    if (suite == "homomorphism") return homomorphism_suite(n, seed, samples);
    if (suite == "conjugation") return conjugation_suite(n, seed, samples);
    if (suite == "embedding") return embedding_suite(n);
    if (suite == "closure") return closure_suite(n);
    throw DomainError("unknown suite \"" + suite + "\"");
}

} // namespace liesym
