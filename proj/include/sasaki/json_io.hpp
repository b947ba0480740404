#ifndef SASAKI_JSON_IO_HPP
#define SASAKI_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "sasaki/admissible.hpp"
#include "sasaki/futaki.hpp"
#include "sasaki/solver.hpp"

namespace sasaki {

/* Run configuration. Rationals travel as strings "p/q" in all external
 * formats; floats appear only in explicitly numeric fields.
 *
 *   {"factors":[{"dim":int,"scal":"p/q","p":int,"c":"p/q"}],
 *    "weight":{"a":"p/q","b":"p/q"},
 *    "extended":bool,
 *    "z0":"p/q",            // optional
 *    "v":["p/q",...],       // optional weight polynomials (constant 1
 *    "w":["p/q",...]}       //  when absent), coefficients by degree
 */
struct Config {
    AdmissibleData data;
    WeightParams weight;
    bool extended = false;
    std::optional<Rational> z0;
    Polynomial v = Polynomial(1);
    Polynomial w = Polynomial(1);
};

// Throws ValidationError on malformed JSON or schema violations.
Config parse_config(const std::string& text);
Config load_config_file(const std::string& path);

nlohmann::json rational_list_json(const std::vector<Rational>& v);
std::vector<Rational> rational_list_from_json(const nlohmann::json& j);

/* {"F":["p/q",...],"A":"p/q","B":"p/q","mode":"eigen|doubleint",
 *  "exists":bool,"interior_roots":[["lo","hi"],...]}
 */
nlohmann::json solution_json(const ExtremalSolution& sol, const ExistenceReport& rep);

nlohmann::json existence_json(const ExistenceReport& rep);

// {"num":"...","den":"...","sign":"+|-|0|?","float":x,"err":e}
nlohmann::json futaki_value_json(const FutakiValue& fv);

nlohmann::json csc_json(const CscResult& res);

} // namespace sasaki

#endif
