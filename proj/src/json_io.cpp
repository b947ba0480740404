#include "sasaki/json_io.hpp"

#include <fstream>
#include <sstream>

#include "sasaki/errors.hpp"

namespace sasaki {

using nlohmann::json;

namespace {

Rational rational_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw ValidationError(std::string("config: missing rational string field '") + key + "'");
    return Rational::from_string(j[key].get<std::string>());
}

long int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ValidationError(std::string("config: missing integer field '") + key + "'");
    return j[key].get<long>();
}

} // namespace

Config parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("config: JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("config: top level must be an object");

    Config cfg;
    try {
        if (j.contains("factors")) {
            if (!j["factors"].is_array()) throw ValidationError("config: 'factors' must be an array");
            for (const auto& fj : j["factors"]) {
                BaseFactor f;
                const long dim = int_field(fj, "dim");
                if (dim < 1) throw ValidationError("config: factor dim must be >= 1");
                f.dim = static_cast<unsigned>(dim);
                f.scal = rational_field(fj, "scal");
                f.p = int_field(fj, "p");
                f.c = rational_field(fj, "c");
                cfg.data.factors.push_back(std::move(f));
            }
        }
        if (!j.contains("weight") || !j["weight"].is_object())
            throw ValidationError("config: missing 'weight' object");
        cfg.weight.a = rational_field(j["weight"], "a");
        cfg.weight.b = rational_field(j["weight"], "b");
        if (j.contains("extended")) {
            if (!j["extended"].is_boolean()) throw ValidationError("config: 'extended' must be a bool");
            cfg.extended = j["extended"].get<bool>();
        }
        if (j.contains("z0")) cfg.z0 = rational_field(j, "z0");
        if (j.contains("v")) cfg.v = Polynomial(rational_list_from_json(j["v"]));
        if (j.contains("w")) cfg.w = Polynomial(rational_list_from_json(j["w"]));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("config: ") + e.what());
    } catch (const ValidationError&) {
        throw;
    } catch (const Error& e) {
        // malformed rational literals and similar input-level failures
        throw ValidationError(std::string("config: ") + e.what());
    }
    return cfg;
}

Config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

json rational_list_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& r : v) arr.push_back(r.to_string());
    return arr;
}

std::vector<Rational> rational_list_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("config: expected an array of rational strings");
    std::vector<Rational> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw ValidationError("config: expected rational string");
        out.push_back(Rational::from_string(e.get<std::string>()));
    }
    return out;
}

json existence_json(const ExistenceReport& rep) {
    json roots = json::array();
    for (const auto& r : rep.interior_roots)
        roots.push_back(json::array({r.lo.to_string(), r.hi.to_string()}));
    json out = {
        {"exists", rep.exists},
        {"deflated", rational_list_json(rep.deflated.coeffs())},
        {"interior_roots", roots},
        {"double_root_flag", rep.double_root_flag},
    };
    if (rep.witness) out["witness"] = rep.witness->to_string();
    return out;
}

json solution_json(const ExtremalSolution& sol, const ExistenceReport& rep) {
    json roots = json::array();
    for (const auto& r : rep.interior_roots)
        roots.push_back(json::array({r.lo.to_string(), r.hi.to_string()}));
    return {
        {"F", rational_list_json(sol.F.coeffs())},
        {"A", sol.A.to_string()},
        {"B", sol.B.to_string()},
        {"mode", sol.mode == SolveMode::EigenBasis ? "eigen" : "doubleint"},
        {"exists", rep.exists},
        {"interior_roots", roots},
    };
}

json futaki_value_json(const FutakiValue& fv) {
    return {
        {"num", fv.num.to_string()},
        {"den", fv.den.to_string()},
        {"sign", to_string(fv.sign)},
        {"float", fv.value},
        {"err", fv.error},
    };
}

json csc_json(const CscResult& res) {
    json rays = json::array();
    for (const auto& ray : res.rays) {
        json r;
        if (ray.exact) r["a"] = ray.exact->to_string();
        r["bracket"] = json::array({ray.bracket.lo.to_string(), ray.bracket.hi.to_string()});
        if (ray.theta_positive) r["theta_positive"] = *ray.theta_positive;
        rays.push_back(std::move(r));
    }
    return {{"identically_zero", res.identically_zero}, {"csc_rays", rays}};
}

} // namespace sasaki
