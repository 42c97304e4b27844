#pragma once

#include <nlohmann/json.hpp>

#include <optional>

#include "ncalc/duality.hpp"

namespace ncalc {

using Json = nlohmann::ordered_json;

// Loads and parses a JSON document; throws input_error with the parser's
// line/column diagnostics on failure.
Json load_json_file(const std::string& path);

// Algebra documents: either explicit structure constants
//   {"field":"Q","dim":n,"basis":[...],"unit":[...],"mul":[[i,j,k,"c"],...]}
// or a builtin reference
//   {"builtin":"quantum_plane","q":"-1","N":2,...}.
// field_override (from the CLI) wins over the document's "field".
AlgebraPtr algebra_from_json(const Json& doc, std::optional<Field> field_override);

// {"ambient":"ker_mu","gens":[[one coefficient per tensor slot],...]}
std::vector<Vec> generators_from_json(const Json& doc, const Algebra& a);

// {"dim":m,"left":[n matrices],"right":[n matrices]} with dense rows.
Bimodule bimodule_from_json(const Json& doc, AlgebraPtr a);

// {"kind":"fodc","algebra":{...},"bimodule":{...},"d":[m rows of n]}
Fodc fodc_from_json(const Json& doc, std::optional<Field> field_override);

// {"kind":"braiding","algebra":{...},"direction":"r_v_to_v_r"|"v_r_to_r_v",
//  "gen_dim":k,"matrix":[...]}
struct BraidingDocument {
  AlgebraPtr algebra;
  FreeModuleBraiding braiding;
};
BraidingDocument braiding_from_json(const Json& doc, std::optional<Field> field_override);

// {"kind":"cartan","algebra":{...},"side":"right","bimodule":{...},
//  "action":[n^2 rows of m]}
CartanPair cartan_from_json(const Json& doc, std::optional<Field> field_override);

Json algebra_to_json(const Algebra& a);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const Field& f,
                        const std::string& context);

}  // namespace ncalc
