#pragma once

#include <string>

#include <json.hpp>

#include "ordo/normal_form.hpp"
#include "ordo/rook.hpp"

namespace ordo {

// {"terms":[{"r":..,"s":..,"coeff":"<decimal>"}, ...]} in canonical term
// order; coefficients travel as decimal strings to keep full precision.
inline nlohmann::ordered_json normal_form_json(const NormalForm& nf) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [idx, c] : nf.terms()) {
        terms.push_back({{"r", idx.r}, {"s", idx.s}, {"coeff", c.str()}});
    }
    return nlohmann::ordered_json{{"terms", std::move(terms)}};
}

inline NormalForm normal_form_from_json(const nlohmann::json& j) {
    NormalForm nf;
    for (const auto& term : j.at("terms")) {
        nf.add_term({term.at("r").get<int>(), term.at("s").get<int>()},
                    BigInt(term.at("coeff").get<std::string>()));
    }
    return nf;
}

// JSON array of decimal strings, e.g. ["1","10","23","9"].
inline nlohmann::ordered_json rook_vector_json(const RookVector& rv) {
    nlohmann::ordered_json counts = nlohmann::ordered_json::array();
    for (const BigInt& c : rv.counts) counts.push_back(c.str());
    return counts;
}

}  // namespace ordo
