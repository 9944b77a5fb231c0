#include "liesym/json_io.hpp"

#include "liesym/errors.hpp"

namespace liesym {

Json element_to_json(const Element& x) {
    Json terms = Json::array();
    for (const auto& [p, c] : x.terms()) {
        Json term;
        term["perm"] = p.images();
        term["coeff"] = {{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
        terms.push_back(std::move(term));
    }
    return Json{{"degree", x.degree()}, {"terms", std::move(terms)}};
}

Element element_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("terms"))
        throw ParseError("element JSON requires \"degree\" and \"terms\"");
    Element out(j.at("degree").get<int>());
    for (const auto& term : j.at("terms")) {
        const auto images = term.at("perm").get<std::vector<int>>();
        const auto& coeff = term.at("coeff");
        out.add(Permutation(images),
                rat_from_strings(coeff.at("num").get<std::string>(),
                                 coeff.at("den").get<std::string>()));
    }
    return out;
}

Json basis_to_json(const Subspace& S) {
    Json basis = Json::array();
    for (std::size_t i = 0; i < S.dim(); ++i)
        basis.push_back(element_to_json(coords_to_element(S.degree(), S.basis().row(i))));
    return Json{{"n", S.degree()},
                {"dim", S.dim()},
                {"ordering", "one-line lex"},
                {"basis", std::move(basis)}};
}

std::string partition_key(const Partition& p) {
    std::string key = "[";
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) key += ',';
        key += std::to_string(parts[i]);
    }
    key += ']';
    return key;
}

Json decomposition_to_json(const ClassFunction& chi, const DecompositionReport& rep) {
    Json character = Json::object();
    for (const auto& [mu, value] : chi.values)
        character[partition_key(mu)] = rat_string(value);
    Json mults = Json::object();
    for (const auto& [lambda, a] : rep.multiplicities)
        mults[partition_key(lambda)] = a;
    return Json{{"n", rep.n},
                {"character", std::move(character)},
                {"multiplicities", std::move(mults)},
                {"dim", rep.total_dim}};
}

Json generation_to_json(const GenerationReport& r) {
    return Json{{"n", r.n},
                {"closure_dim", r.closure_dim},
                {"lie_dim", r.lie_dim},
                {"holds", r.holds},
                {"sweeps", r.sweeps}};
}

Json quotient_to_json(const QuotientReport& r) {
    return Json{{"n", r.n},
                {"interpretation", interpretation_name(r.interpretation)},
                {"lie_dim", r.lie_dim},
                {"kernel_dim", r.kernel_dim},
                {"quotient_dim", r.quotient_dim},
                {"predicted", r.predicted},
                {"matches", r.matches},
                {"commutator_count", r.commutator_count},
                {"commutator_rank_mod_kernel", r.commutator_rank_mod_kernel},
                {"commutators_form_basis", r.commutators_form_basis}};
}

Json embedding_to_json(const EmbeddingReport& r) {
    return Json{{"n", r.n}, {"checked", r.checked}, {"all_pass", r.all_pass}};
}

} // namespace liesym
