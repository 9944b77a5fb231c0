#include "doctest.h"

#include "liesym/errors.hpp"
#include "liesym/rng.hpp"
#include "liesym/wedge.hpp"

using namespace liesym;

TEST_CASE("binomial small table") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(12, 6) == 924);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
}

TEST_CASE("wedge basis is lexicographic and rank inverts it") {
    const auto b42 = wedge_basis(4, 2);
    REQUIRE(b42.size() == 6);
    CHECK(b42[0].indices() == std::vector<int>{1, 2});
    CHECK(b42[1].indices() == std::vector<int>{1, 3});
    CHECK(b42[2].indices() == std::vector<int>{1, 4});
    CHECK(b42[3].indices() == std::vector<int>{2, 3});
    CHECK(b42[4].indices() == std::vector<int>{2, 4});
    CHECK(b42[5].indices() == std::vector<int>{3, 4});

    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= n; ++m) {
            const auto basis = wedge_basis(n, m);
            CHECK(basis.size() == binomial(n, m));
            for (std::size_t r = 0; r < basis.size(); ++r)
                CHECK(wedge_rank(basis[r]) == r);
        }
}

TEST_CASE("wedge index validation") {
    CHECK_NOTHROW(WedgeIndex(4, {1, 3, 4}));
    CHECK_NOTHROW(WedgeIndex(4, {})); // the m = 0 basis wedge
    CHECK_THROWS_AS(WedgeIndex(4, {3, 1}), DomainError);
    CHECK_THROWS_AS(WedgeIndex(4, {1, 1}), DomainError);
    CHECK_THROWS_AS(WedgeIndex(4, {0, 1}), DomainError);
    CHECK_THROWS_AS(WedgeIndex(4, {1, 5}), DomainError);
}

TEST_CASE("sorting raw indices tracks the sign and detects collapses") {
    auto sorted = sort_with_sign(4, {2, 1});
    REQUIRE(sorted);
    CHECK(sorted->first == -1);
    CHECK(sorted->second.indices() == std::vector<int>{1, 2});

    sorted = sort_with_sign(4, {3, 1, 2});
    REQUIRE(sorted);
    CHECK(sorted->first == 1); // a 3-cycle is even

    CHECK(!sort_with_sign(4, {2, 2}));
}

TEST_CASE("factorwise application produces a single signed wedge") {
    const Permutation swap12 = parse_cycles("(1 2)", 3);
    const WedgeVector image = apply_a(swap12, WedgeIndex(3, {1, 2}));
    REQUIRE(image.size() == 1);
    CHECK(image.begin()->first == WedgeIndex(3, {1, 2}));
    CHECK(image.begin()->second == rat(-1));

    // the empty wedge is fixed: scalar action 1
    const WedgeVector empty = apply_a(swap12, WedgeIndex(3, {}));
    REQUIRE(empty.size() == 1);
    CHECK(empty.begin()->second == rat(1));
}

TEST_CASE("slotwise application drops colliding replacements") {
    const Permutation rot = parse_cycles("(1 2 3)", 3);
    // positions of x1 ^ x2: replacing x1 gives x2 ^ x2 = 0, replacing x2
    // gives x1 ^ x3; only the latter survives
    const WedgeVector image = apply_b(rot, WedgeIndex(3, {1, 2}));
    REQUIRE(image.size() == 1);
    CHECK(image.begin()->first == WedgeIndex(3, {1, 3}));
    CHECK(image.begin()->second == rat(1));

    // B_0 is the zero map
    CHECK(apply_b(rot, WedgeIndex(3, {})).empty());

    // the identity contributes the wedge once per slot
    const WedgeVector diag = apply_b(Permutation::identity(3), WedgeIndex(3, {1, 2}));
    REQUIRE(diag.size() == 1);
    CHECK(diag.begin()->second == rat(2));
}

TEST_CASE("operator matrices of the identity element") {
    const Element one = identity_element(4);
    for (int m = 0; m <= 4; ++m) {
        CHECK(operator_matrix(one, m, OperatorKind::A) ==
              Matrix::identity(binomial(4, m)));
        Matrix scaled = Matrix::identity(binomial(4, m));
        for (std::size_t i = 0; i < scaled.rows(); ++i) scaled.at(i, i) = rat(m);
        CHECK(operator_matrix(one, m, OperatorKind::B) == scaled);
    }
}

TEST_CASE("factorwise operators are multiplicative on group elements") {
    Rng rng(3);
    for (int trial = 0; trial < 15; ++trial) {
        const Permutation p = rng.random_permutation(4);
        const Permutation q = rng.random_permutation(4);
        for (int m = 0; m <= 4; ++m) {
            const Matrix lhs = operator_matrix(singleton(compose(p, q)), m, OperatorKind::A);
            const Matrix rhs = matmul(operator_matrix(singleton(p), m, OperatorKind::A),
                                      operator_matrix(singleton(q), m, OperatorKind::A));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("both operator families agree in degree one") {
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const Element x = rng.random_element(4, 4);
        CHECK(operator_matrix(x, 1, OperatorKind::A) ==
              operator_matrix(x, 1, OperatorKind::B));
    }
}

TEST_CASE("the top factorwise operator is the sign-weighted coefficient sum") {
    Rng rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        const Element x = rng.random_element(4, 4);
        const Matrix top = operator_matrix(x, 4, OperatorKind::A);
        REQUIRE(top.rows() == 1);
        Rat expected(0);
        for (const auto& [p, c] : x.terms()) expected += c * sign(p);
        CHECK(top.at(0, 0) == expected);
    }
}

TEST_CASE("operator power bounds are enforced") {
    const Element x = identity_element(3);
    CHECK_THROWS_AS(operator_matrix(x, -1, OperatorKind::A), DomainError);
    CHECK_THROWS_AS(operator_matrix(x, 4, OperatorKind::A), DomainError);
    CHECK_THROWS_AS(wedge_basis(3, 4), DomainError);
}
