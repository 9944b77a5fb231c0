#include "doctest.h"

#include "liesym/conjecture.hpp"
#include "liesym/errors.hpp"
#include "liesym/json_io.hpp"
#include "liesym/lie_solver.hpp"
#include "liesym/rng.hpp"
#include "liesym/wedge.hpp"

using namespace liesym;

TEST_CASE("interpretation names round-trip") {
    for (const Interpretation it :
         {Interpretation::perm, Interpretation::standard, Interpretation::exterior})
        CHECK(interpretation_from_name(interpretation_name(it)) == it);
    CHECK_THROWS_AS(interpretation_from_name("spin"), DomainError);
}

TEST_CASE("the nested commutator family") {
    CHECK_THROWS_AS(commutator_family(1), DomainError);

    const auto f2 = commutator_family(2);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0] == transposition_unit(1, 2, 2));

    const auto f3 = commutator_family(3);
    REQUIRE(f3.size() == 2);
    // index tuples in lexicographic order: (2,3) then (3,3)
    Element gamma(3);
    gamma.add(parse_cycles("(1 2 3)", 3), rat(1));
    gamma.add(parse_cycles("(1 3 2)", 3), rat(-1));
    CHECK(f3[0] == gamma);
    CHECK(f3[1] == linear_combine(rat(-1), gamma, rat(0), gamma));

    CHECK(commutator_family(4).size() == 6);
    CHECK(commutator_family(5).size() == 24);
}

TEST_CASE("full-module action of a transposition unit") {
    const Matrix m = action_matrix(transposition_unit(1, 2, 2), Interpretation::perm);
    REQUIRE(m.rows() == 2);
    CHECK(m.at(0, 0) == rat(1));
    CHECK(m.at(0, 1) == rat(-1));
    CHECK(m.at(1, 0) == rat(-1));
    CHECK(m.at(1, 1) == rat(1));
}

TEST_CASE("difference-basis action against a hand computation") {
    // (1 3) sends x1 - x3 to its negative and x2 - x3 to x2 - x1
    const Matrix m =
        action_matrix(singleton(parse_cycles("(1 3)", 3)), Interpretation::standard);
    REQUIRE(m.rows() == 2);
    CHECK(m.at(0, 0) == rat(-1));
    CHECK(m.at(1, 0) == rat(0));
    CHECK(m.at(0, 1) == rat(-1));
    CHECK(m.at(1, 1) == rat(1));
}

TEST_CASE("difference-basis action is the restriction of the full one") {
    // applying x to e_j - e_n must match expanding the output in the
    // difference basis; checked coefficient-wise through the full matrix
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 4;
        const Element x = rng.random_element(n, 3);
        const Matrix full = action_matrix(x, Interpretation::perm);
        const Matrix red = action_matrix(x, Interpretation::standard);
        for (int j = 0; j < n - 1; ++j) {
            std::vector<Rat> image(n, Rat(0));
            for (int r = 0; r < n; ++r)
                image[r] = full.at(r, j) - full.at(r, n - 1);
            // image must equal sum_r red(r, j) * (e_r - e_n)
            Rat tail(0);
            for (int r = 0; r < n - 1; ++r) {
                CHECK(image[r] == red.at(r, j));
                tail += red.at(r, j);
            }
            CHECK(image[n - 1] == -tail);
        }
    }
}

TEST_CASE("the summed-powers action is block diagonal of all wedge degrees") {
    const Element x = transposition_unit(1, 3, 3);
    const Matrix big = action_matrix(x, Interpretation::exterior);
    REQUIRE(big.rows() == 8); // 1 + 3 + 3 + 1
    std::size_t off = 0;
    for (int m = 0; m <= 3; ++m) {
        const Matrix block = operator_matrix(x, m, OperatorKind::A);
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j)
                CHECK(big.at(off + i, off + j) == block.at(i, j));
        off += block.rows();
    }
    // everything off the diagonal blocks is zero
    CHECK(big.at(0, 1) == rat(0));
    CHECK(big.at(4, 0) == rat(0));
}

TEST_CASE("action kernels collapse to the same subspace in every reading") {
    for (int n = 2; n <= 4; ++n) {
        const Subspace k_perm = action_kernel(n, Interpretation::perm);
        const Subspace k_std = action_kernel(n, Interpretation::standard);
        const Subspace k_ext = action_kernel(n, Interpretation::exterior);
        CHECK(k_perm.dim() == (n <= 3 ? 0 : 4));
        CHECK(k_perm == k_std);
        CHECK(k_perm == k_ext);
    }
}

TEST_CASE("kernel vectors act as zero and are solutions themselves") {
    const Subspace kernel = action_kernel(4, Interpretation::perm);
    REQUIRE(kernel.dim() == 4);
    for (std::size_t i = 0; i < kernel.dim(); ++i) {
        const Element u = coords_to_element(4, kernel.basis().row(i));
        CHECK(action_matrix(u, Interpretation::perm).is_zero());
        CHECK(is_lie_element(u));
        CHECK(contains(lie_basis(4), u));
    }
}

TEST_CASE("generation reports for small degrees") {
    const GenerationReport g2 = check_generation(2);
    CHECK(g2.holds);
    CHECK(g2.closure_dim == 1);

    const GenerationReport g3 = check_generation(3);
    CHECK(g3.holds);
    CHECK(g3.closure_dim == 4);
    CHECK(g3.sweeps >= 1);

    const GenerationReport g4 = check_generation(4);
    CHECK(!g4.holds);
    CHECK(g4.closure_dim == 12);
    CHECK(g4.lie_dim == 13);
}

TEST_CASE("quotient reports, degree by degree") {
    const QuotientReport q1 = quotient_report(1, Interpretation::perm);
    CHECK(q1.lie_dim == 0);
    CHECK(q1.kernel_dim == 0);
    CHECK(q1.quotient_dim == 0);
    CHECK(q1.predicted == 1);
    CHECK(!q1.matches);
    CHECK(q1.commutator_count == 0);

    const QuotientReport q2 = quotient_report(2, Interpretation::perm);
    CHECK(q2.lie_dim == 1);
    CHECK(q2.kernel_dim == 0);
    CHECK(q2.quotient_dim == 1);
    CHECK(q2.predicted == 1);
    CHECK(q2.matches);
    CHECK(q2.commutator_count == 1);
    CHECK(q2.commutator_rank_mod_kernel == 1);
    CHECK(q2.commutators_form_basis);

    const QuotientReport q3 = quotient_report(3, Interpretation::standard);
    CHECK(q3.lie_dim == 4);
    CHECK(q3.kernel_dim == 0);
    CHECK(q3.quotient_dim == 4);
    CHECK(q3.predicted == 2);
    CHECK(!q3.matches);
    CHECK(q3.commutator_count == 2);
    // the two nested commutators are proportional, so they span a line
    CHECK(q3.commutator_rank_mod_kernel == 1);
    CHECK(!q3.commutators_form_basis);

    const QuotientReport q4 = quotient_report(4, Interpretation::exterior);
    CHECK(q4.lie_dim == 13);
    CHECK(q4.kernel_dim == 4);
    CHECK(q4.quotient_dim == 9);
    CHECK(q4.predicted == 6);
    CHECK(!q4.matches);
    CHECK(q4.commutator_count == 6);
    CHECK(q4.commutator_rank_mod_kernel == 1);
}

TEST_CASE("report serialization is stable across recomputation") {
    const Json a = quotient_to_json(quotient_report(3, Interpretation::perm));
    const Json b = quotient_to_json(quotient_report(3, Interpretation::perm));
    CHECK(a.dump() == b.dump());
    const Json g = generation_to_json(check_generation(3));
    CHECK(g.at("holds") == true);
    CHECK(g.at("closure_dim") == 4);
    CHECK(g.at("lie_dim") == 4);
}
