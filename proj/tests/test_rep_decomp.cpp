#include "doctest.h"

#include "liesym/errors.hpp"
#include "liesym/lie_solver.hpp"
#include "liesym/rep_decomp.hpp"

using namespace liesym;

namespace {

int fixed_points(const Partition& mu) {
    int f = 0;
    for (int part : mu.parts())
        if (part == 1) ++f;
    return f;
}

ClassFunction class_function(int n, const std::vector<long>& values) {
    const auto parts = partitions_of(n);
    REQUIRE(values.size() == parts.size());
    ClassFunction chi;
    chi.n = n;
    for (std::size_t i = 0; i < parts.size(); ++i)
        chi.values.emplace(parts[i], rat(values[i]));
    return chi;
}

} // namespace

TEST_CASE("partitions come out in descending lexicographic order") {
    const auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4[4] == Partition({1, 1, 1, 1}));
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(0).size() == 1); // the empty partition
}

TEST_CASE("centralizer orders and class sizes") {
    CHECK(centralizer_order(Partition({1, 1, 1, 1})) == 24);
    CHECK(centralizer_order(Partition({4})) == 4);
    CHECK(centralizer_order(Partition({2, 2})) == 8);
    CHECK(centralizer_order(Partition({2, 1, 1})) == 4);
    CHECK(centralizer_order(Partition({3, 1})) == 3);

    const auto classes = conjugacy_classes(4);
    REQUIRE(classes.size() == 5);
    long long total = 0;
    for (const auto& cls : classes) {
        CHECK(cycle_type(cls.representative) == cls.cycle_type);
        CHECK(cls.size == 24 / centralizer_order(cls.cycle_type));
        total += cls.size;
    }
    CHECK(total == 24);
}

TEST_CASE("full character table of degree three") {
    const CharacterTable& table = irreducible_characters(3);
    REQUIRE(table.size() == 3);
    const auto chi_at = [&](std::vector<int> lambda, std::vector<int> mu) {
        return table.at(Partition(lambda)).values.at(Partition(mu));
    };
    // classes in column order (3), (2,1), (1,1,1)
    CHECK(chi_at({3}, {3}) == rat(1));
    CHECK(chi_at({3}, {2, 1}) == rat(1));
    CHECK(chi_at({3}, {1, 1, 1}) == rat(1));
    CHECK(chi_at({2, 1}, {3}) == rat(-1));
    CHECK(chi_at({2, 1}, {2, 1}) == rat(0));
    CHECK(chi_at({2, 1}, {1, 1, 1}) == rat(2));
    CHECK(chi_at({1, 1, 1}, {3}) == rat(1));
    CHECK(chi_at({1, 1, 1}, {2, 1}) == rat(-1));
    CHECK(chi_at({1, 1, 1}, {1, 1, 1}) == rat(1));
}

TEST_CASE("strip-removal values match the fixed-point oracle for hooks") {
    // chi_(n-1,1)(mu) = fix(mu) - 1, for every class of every degree up to 6
    for (int n = 2; n <= 6; ++n) {
        const Partition hook({n - 1, 1});
        for (const Partition& mu : partitions_of(n))
            CHECK(character_value(hook, mu) == fixed_points(mu) - 1);
    }
    CHECK_THROWS_AS(character_value(Partition({2, 1}), Partition({4})), DomainError);
}

TEST_CASE("row and column orthogonality up to degree five") {
    for (int n = 1; n <= 5; ++n) {
        const auto classes = conjugacy_classes(n);
        const CharacterTable& table = irreducible_characters(n);
        const long long order = static_cast<long long>(factorial(n));
        for (const auto& [la, chi_a] : table)
            for (const auto& [lb, chi_b] : table) {
                Rat sum(0);
                for (const auto& cls : classes)
                    sum += Rat(static_cast<long>(cls.size)) *
                           chi_a.values.at(cls.cycle_type) *
                           chi_b.values.at(cls.cycle_type);
                CHECK(sum == rat(la == lb ? order : 0));
            }
        for (const auto& ca : classes)
            for (const auto& cb : classes) {
                Rat sum(0);
                for (const auto& [lambda, chi] : table)
                    sum += chi.values.at(ca.cycle_type) * chi.values.at(cb.cycle_type);
                CHECK(sum == rat(ca.cycle_type == cb.cycle_type
                                     ? centralizer_order(ca.cycle_type)
                                     : 0));
            }
    }
}

TEST_CASE("dimensions from hooks and the sum-of-squares identity") {
    CHECK(irreducible_dim(Partition({4})) == 1);
    CHECK(irreducible_dim(Partition({3, 1})) == 3);
    CHECK(irreducible_dim(Partition({2, 2})) == 2);
    CHECK(irreducible_dim(Partition({2, 1, 1})) == 3);
    CHECK(irreducible_dim(Partition({1, 1, 1, 1})) == 1);
    for (int n = 1; n <= 5; ++n) {
        long long sum = 0;
        for (const Partition& lambda : partitions_of(n)) {
            const long long d = irreducible_dim(lambda);
            sum += d * d;
        }
        CHECK(sum == static_cast<long long>(factorial(n)));
    }
}

TEST_CASE("conjugation character of the solved spaces") {
    const ClassFunction chi3 = conjugation_character(lie_basis(3));
    CHECK(chi3.values.at(Partition({3})) == rat(1));
    CHECK(chi3.values.at(Partition({2, 1})) == rat(0));
    CHECK(chi3.values.at(Partition({1, 1, 1})) == rat(4));

    const ClassFunction chi4 = conjugation_character(lie_basis(4));
    CHECK(chi4.values.at(Partition({4})) == rat(1));
    CHECK(chi4.values.at(Partition({3, 1})) == rat(1));
    CHECK(chi4.values.at(Partition({2, 2})) == rat(5));
    CHECK(chi4.values.at(Partition({2, 1, 1})) == rat(1));
    CHECK(chi4.values.at(Partition({1, 1, 1, 1})) == rat(13));
}

TEST_CASE("a subspace that conjugation moves is rejected") {
    const Subspace S =
        Subspace::from_vectors(3, {element_to_coords(singleton(parse_cycles("(1 2)", 3)))});
    CHECK_THROWS_AS(conjugation_character(S), DomainError);
}

TEST_CASE("multiplicity extraction for the solved spaces") {
    const DecompositionReport r3 = multiplicities(conjugation_character(lie_basis(3)));
    CHECK(r3.multiplicities ==
          (std::map<Partition, long long, PartitionDescLex>{
              {Partition({3}), 1}, {Partition({2, 1}), 1}, {Partition({1, 1, 1}), 1}}));
    CHECK(r3.total_dim == 4);

    const DecompositionReport r4 = multiplicities(conjugation_character(lie_basis(4)));
    CHECK(r4.multiplicities ==
          (std::map<Partition, long long, PartitionDescLex>{{Partition({4}), 2},
                                                            {Partition({3, 1}), 1},
                                                            {Partition({2, 2}), 2},
                                                            {Partition({2, 1, 1}), 1},
                                                            {Partition({1, 1, 1, 1}), 1}}));
    CHECK(r4.total_dim == 13);
}

TEST_CASE("degree five multiplicities drop the sign representation") {
    const DecompositionReport r5 = multiplicities(conjugation_character(lie_basis(5)));
    CHECK(r5.multiplicities ==
          (std::map<Partition, long long, PartitionDescLex>{{Partition({5}), 3},
                                                            {Partition({4, 1}), 3},
                                                            {Partition({3, 2}), 3},
                                                            {Partition({3, 1, 1}), 3},
                                                            {Partition({2, 2, 1}), 2},
                                                            {Partition({2, 1, 1, 1}), 2}}));
    CHECK(r5.total_dim == 66);
    CHECK(r5.multiplicities.count(Partition({1, 1, 1, 1, 1})) == 0);
}

TEST_CASE("the regular character decomposes with dimension multiplicities") {
    const auto classes = conjugacy_classes(4);
    std::vector<long> values(classes.size(), 0);
    values.back() = 24; // identity class comes last in descending lex order
    const DecompositionReport reg = multiplicities(class_function(4, values));
    CHECK(reg.total_dim == 24);
    for (const Partition& lambda : partitions_of(4))
        CHECK(reg.multiplicities.at(lambda) == irreducible_dim(lambda));
}

TEST_CASE("non-characters are refused with the offending inner product") {
    const ClassFunction bogus = class_function(3, {1, 0, 0});
    CHECK_THROWS_WITH_AS(multiplicities(bogus),
                         doctest::Contains("not a genuine character"), DomainError);
}

TEST_CASE("frobenius reports render the multiplicity sum") {
    CHECK(frobenius_report(2).rendered == "R_2 = 1·s_(2)");
    CHECK(frobenius_report(3).rendered == "R_3 = 1·s_(3) + 1·s_(2,1) + 1·s_(1,1,1)");
    const FrobeniusReport r4 = frobenius_report(4);
    CHECK(r4.decomp.total_dim == 13);
    CHECK(r4.rendered ==
          "R_4 = 2·s_(4) + 1·s_(3,1) + 2·s_(2,2) + 1·s_(2,1,1) + 1·s_(1,1,1,1)");
}
