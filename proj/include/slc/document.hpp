#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "slc/arith_graph.hpp"
#include "slc/criteria.hpp"
#include "slc/surface.hpp"

// JSON front end. Rationals are "p/q" strings; counts and genera are JSON
// integers, although integer-valued strings are accepted on input. Unknown
// keys anywhere are a ParseError.
namespace slc::document {

using Json = nlohmann::ordered_json;

/// Flags carried by a surface document. Numerical parts of Hypotheses are
/// derived from the surface itself.
struct HypothesisFlags {
  std::optional<bool> nodal;
  std::optional<bool> normal;
  std::optional<bool> conductor_smooth;
  std::optional<bool> canonical_off_conductor;
  std::optional<bool> semi_canonical;

  friend bool operator==(const HypothesisFlags&, const HypothesisFlags&) = default;
};

struct SurfaceDocument {
  StableLogSurface surface;
  HypothesisFlags hypotheses;

  friend bool operator==(const SurfaceDocument&, const SurfaceDocument&) = default;
};

struct GraphDocument {
  ExceptionalGraph graph;
  std::map<std::string, long> incidence;  // strict transform incidence, for hat mode
};

SurfaceDocument parse_surface(const Json& j);
Json to_json(const SurfaceDocument& doc);

GraphDocument parse_graph(const Json& j);
Json to_json(const GraphDocument& doc);
Json to_json(const ExceptionalGraph& g);

/// Reads and parses a file; I/O and syntax errors become ParseError.
Json read_file(const std::string& path);

/// Full hypotheses for the criteria engine. normal is forced by the triple
/// (no conductor means normal); a contradicting flag is a ValidationError.
Hypotheses derive_hypotheses(const SurfaceDocument& doc);

}  // namespace slc::document
