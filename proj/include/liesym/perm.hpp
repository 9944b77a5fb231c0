#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace liesym {

// Weakly decreasing sequence of positive parts. Used both as a cycle type and
// as an irreducible-representation label.
class Partition {
public:
    Partition() = default; // empty partition, weight 0
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const; // "(3,1)"

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// Orders partitions descending-lexicographically: (4) > (3,1) > ... > (1^4).
// This is the report order used everywhere.
struct PartitionDescLex {
    bool operator()(const Partition& a, const Partition& b) const {
        return b.parts() < a.parts();
    }
};

// Permutation of {1..n}, stored in one-line form: images()[i-1] is the image
// of i. One-line form is canonical; cycle notation is I/O only.
class Permutation {
public:
    explicit Permutation(std::vector<int> images); // validates bijection
    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[point - 1]; }
    const std::vector<int>& images() const { return images_; }

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    // Lexicographic on one-line images; ties all maps and orderings to the
    // coordinate order of enumerate_group.
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
    std::vector<int> images_;
};

// (p * q)(x) = p(q(x)): the right factor acts first. This orientation is what
// makes [1-(12), 1-(23)] come out as (123)-(132); the opposite one flips it.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

int sign(const Permutation& p);
Partition cycle_type(const Permutation& p);

// Cycle notation: "(1 2 3)(4 5)", entries separated by spaces or commas,
// fixed points omissible, identity is "()". Points must not repeat anywhere.
Permutation parse_cycles(const std::string& text, int degree);
std::string format_cycles(const Permutation& p);

// All n! permutations in lexicographic one-line order; entry 0 is the
// identity. This order defines the coordinates of Q[S_n] everywhere.
std::vector<Permutation> enumerate_group(int n);

// Position of p in enumerate_group order (factorial number system), and its
// inverse; neither materializes the group.
std::size_t lex_rank(const Permutation& p);
Permutation lex_unrank(int degree, std::size_t rank);

std::size_t factorial(int n);

// The standard embedding into S_{n+1}: new top point is fixed.
Permutation embed(const Permutation& p);

} // namespace liesym
