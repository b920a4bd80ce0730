#include "troph/json_io.hpp"

#include <json.hpp>

namespace troph {

using nlohmann::json;

namespace {

json terms_to_json(const TropPoly& phi) {
    json arr = json::array();
    for (const auto& [e, c] : phi.terms()) {
        json t;
        t["exp"] = e;
        t["coef"] = rat_str(c);
        arr.push_back(std::move(t));
    }
    return arr;
}

int infer_nvars(const json& arr, const char* what) {
    if (!arr.is_array()) throw parse_error(std::string(what) + ": expected an array");
    int nvars = -1;
    for (const auto& t : arr) {
        if (!t.contains("exp") || !t.contains("coef"))
            throw parse_error(std::string(what) + ": term needs 'exp' and 'coef'");
        int k = static_cast<int>(t["exp"].size());
        if (nvars == -1) nvars = k;
        if (nvars != k) throw parse_error(std::string(what) + ": ragged exponents");
    }
    return nvars;
}

}  // namespace

std::string trop_poly_to_json(const TropPoly& phi) {
    return terms_to_json(phi).dump();
}

TropPoly trop_poly_from_json(const std::string& text) {
    json arr = json::parse(text);
    int nvars = infer_nvars(arr, "TropPoly");
    if (nvars < 0) throw parse_error("TropPoly: cannot infer variable count from []");
    TropPoly phi(nvars);
    for (const auto& t : arr) {
        ExpVec e = t["exp"].get<ExpVec>();
        std::string c = t["coef"].get<std::string>();
        if (c == "-inf") continue;
        phi.set_term(e, TropVal(parse_rat(c)));
    }
    return phi;
}

std::string kpoly_to_json(const KPoly& f) {
    json arr = json::array();
    for (const auto& [e, c] : f.terms()) {
        json t;
        t["exp"] = e;
        t["coef"] = c.str();
        arr.push_back(std::move(t));
    }
    return arr.dump();
}

namespace {

KPoly kpoly_from(const json& arr) {
    int nvars = infer_nvars(arr, "KPoly");
    if (nvars < 0) throw parse_error("KPoly: cannot infer variable count from []");
    KPoly f(nvars);
    for (const auto& t : arr) {
        ExpVec e = t["exp"].get<ExpVec>();
        PuiseuxRat c = PuiseuxRat::parse(t["coef"].get<std::string>());
        f.set_term(e, f.coeff(e) + c);
    }
    return f;
}

}  // namespace

KPoly kpoly_from_json(const std::string& text) {
    return kpoly_from(json::parse(text));
}

std::string ideal_to_json(const GradedIdeal& I) {
    json j;
    j["n"] = I.n;
    json gens = json::array();
    for (const auto& g : I.generators) gens.push_back(json::parse(kpoly_to_json(g)));
    j["generators"] = std::move(gens);
    return j.dump();
}

GradedIdeal ideal_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("n") || !j.contains("generators"))
        throw parse_error("GradedIdeal: expected fields 'n' and 'generators'");
    int n = j["n"].get<int>();
    std::vector<KPoly> gens;
    for (const auto& g : j["generators"]) gens.push_back(kpoly_from(g));
    return GradedIdeal(n, std::move(gens));
}

}  // namespace troph
