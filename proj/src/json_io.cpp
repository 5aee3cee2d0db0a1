#include "dynstab/json_io.hpp"

#include <stdexcept>

namespace dynstab {

nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json j;
    j["vars"] = p.table()->names();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : p.terms()) {
        nlohmann::json t;
        t["coeff"] = c.get_str();
        t["exps"] = p.unpack(key);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Poly poly_from_json(const VarTablePtr& vt, const nlohmann::json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    if (vars != vt->names())
        throw std::invalid_argument("poly_from_json: variable table mismatch");
    Poly p(vt);
    for (const auto& t : j.at("terms")) {
        mpq_class c(t.at("coeff").get<std::string>());
        c.canonicalize();
        Mono m = t.at("exps").get<std::vector<int>>();
        if (static_cast<int>(m.size()) != vt->size())
            throw std::invalid_argument("poly_from_json: exponent vector size mismatch");
        p.add_term(m, c);
    }
    return p;
}

nlohmann::json ratf_to_json(const RatF& f) {
    nlohmann::json j;
    j["num"] = poly_to_json(f.num());
    j["den"] = poly_to_json(f.den());
    return j;
}

RatF ratf_from_json(const VarTablePtr& vt, const nlohmann::json& j) {
    return RatF(poly_from_json(vt, j.at("num")), poly_from_json(vt, j.at("den")));
}

}  // namespace dynstab
