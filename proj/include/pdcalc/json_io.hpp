#pragma once

#include <json.hpp>

#include <string>

#include "pdcalc/algebra.hpp"
#include "pdcalc/diagram.hpp"

namespace pdcalc {

using Json = nlohmann::json;

// Quadruple files: {"name":..., "dim":..., "basis":[...], "idempotent_basis":bool,
// "unit":[...], "mult":[[[...]...]...], "omega":[[...]...], "trace":[...],
// "coeff_ring":{"poly":[...]}, "constraints":[["b1*a12","b2*a21"]]}.
// Scalar literals: integers, "p/q", or polynomial strings over the coeff ring.
// "mult" may be omitted for an idempotent basis.
CircularQuadruple quadruple_from_json(const Json& j);
CircularQuadruple load_quadruple(const std::string& path);
Json quadruple_to_json(const CircularQuadruple& q);

// Diagram files: {"k":2,"split":[0,4],"arcs":[[1,2],[3,4]],
//                 "regions":{"1":[{"form":"(())"},{"elem":[...]},{"basis":1}]}}
// Outer diagrams add "infinity_face". All indices are 1-based.
DecoratedDiagram diagram_from_json(const Json& j, const VarTable& vars);
DecoratedOuter outer_from_json(const Json& j, const VarTable& vars);
Json diagram_to_json(const DecoratedDiagram& d);
Json outer_to_json(const DecoratedOuter& d);

Scalar scalar_from_json(const Json& j, const VarTable& vars);

// Parsed CLI diagram input: balanced-paren circular form, or a JSON object
// for matchings / decorated diagrams / outer diagrams.
struct ParsedDiagram {
    enum class Kind { form, diagram, outer } kind;
    CircularForm form;
    DecoratedDiagram diagram;
    DecoratedOuter outer;
};
ParsedDiagram parse_diagram(const std::string& text, const VarTable& vars);

} // namespace pdcalc
