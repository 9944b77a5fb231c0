#pragma once

#include <string>

#include "json.hpp"

#include "liesym/conjecture.hpp"
#include "liesym/group_algebra.hpp"
#include "liesym/lie_solver.hpp"
#include "liesym/rep_decomp.hpp"
#include "liesym/subspace.hpp"

namespace liesym {

// ordered_json everywhere: key order is insertion order, so serialized
// reports are byte-stable across runs.
using Json = nlohmann::ordered_json;

// { "degree": n, "terms": [ { "perm": [...], "coeff": {"num": "...", "den": "..."} } ] }
// Terms sorted lexicographically by one-line images; coefficients in lowest
// terms with positive denominator (mpq_class guarantees both).
Json element_to_json(const Element& x);
Element element_from_json(const Json& j);

// { "n": .., "dim": .., "ordering": "one-line lex", "basis": [element...] }
Json basis_to_json(const Subspace& S);

// "[3,1]" -- the key format for partition-indexed JSON objects.
std::string partition_key(const Partition& p);

// { "n": .., "character": {...}, "multiplicities": {...}, "dim": .. }
// Character values are integer strings; partitions in descending lex order.
Json decomposition_to_json(const ClassFunction& chi, const DecompositionReport& rep);

Json generation_to_json(const GenerationReport& r);
Json quotient_to_json(const QuotientReport& r);
Json embedding_to_json(const EmbeddingReport& r);

} // namespace liesym
