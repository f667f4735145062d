#include "moduli/operad_json.hpp"

#include "moduli/tree_json.hpp"

namespace moduli {

namespace {

using nlohmann::json;

}  // namespace

nlohmann::json element_to_json(const StrataSum& s) {
    json j;
    switch (s.flavor()) {
        case Flavor::complex_kind:
            j["flavor"] = "complex";
            j["arity"] = s.arity();
            break;
        case Flavor::real_kind:
            j["flavor"] = "real";
            j["k"] = s.real_k();
            j["l"] = s.real_l();
            break;
        case Flavor::conjugate_kind:
            j["flavor"] = "conjugate";
            j["arity"] = s.arity();
            break;
    }
    if (s.is_scalar_line()) {
        j["scalar"] = to_string(s.scalar());
        return j;
    }
    json terms = json::array();
    for (const auto& [t, c] : s.complex_terms())
        terms.push_back(json{{"coeff", to_string(c)}, {"tree", tree_to_json(t)}});
    for (const auto& [t, c] : s.real_terms())
        terms.push_back(json{{"coeff", to_string(c)}, {"tree", tree_to_json(t)}});
    j["terms"] = terms;
    return j;
}

StrataSum element_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("flavor") || !j["flavor"].is_string())
        throw DomainError("element json: missing 'flavor'");
    const std::string flavor = j["flavor"].get<std::string>();

    StrataSum out = [&] {
        if (flavor == "complex") {
            if (!j.contains("arity")) throw DomainError("element json: missing 'arity'");
            return StrataSum::complex_zero(j["arity"].get<int>());
        }
        if (flavor == "real") {
            if (!j.contains("k") || !j.contains("l"))
                throw DomainError("element json: real flavor needs 'k' and 'l'");
            return StrataSum::real_zero(j["k"].get<int>(), j["l"].get<int>());
        }
        if (flavor == "conjugate") {
            if (!j.contains("arity")) throw DomainError("element json: missing 'arity'");
            return StrataSum::conjugate_zero(j["arity"].get<int>());
        }
        throw DomainError("element json: unknown flavor '" + flavor + "'");
    }();

    if (j.contains("scalar")) {
        if (!out.is_scalar_line())
            throw DomainError("element json: 'scalar' only fits the scalar lines");
        return out.flavor() == Flavor::complex_kind
                   ? StrataSum::complex_scalar(rational_from_string(j["scalar"].get<std::string>()))
                   : StrataSum::real_scalar(rational_from_string(j["scalar"].get<std::string>()));
    }
    if (out.is_scalar_line())
        throw DomainError("element json: scalar-line element needs a 'scalar' value");
    if (!j.contains("terms") || !j["terms"].is_array())
        throw DomainError("element json: missing 'terms' array");
    for (const auto& term : j["terms"]) {
        if (!term.is_object() || !term.contains("tree"))
            throw DomainError("element json: each term needs a 'tree'");
        Rational c = term.contains("coeff")
                         ? rational_from_string(term["coeff"].get<std::string>())
                         : Rational(1);
        if (out.flavor() == Flavor::complex_kind)
            out.add_tree(complex_tree_from_json(term["tree"]), c);
        else
            out.add_tree(real_tree_from_json(term["tree"]), c);
    }
    return out;
}

}  // namespace moduli
