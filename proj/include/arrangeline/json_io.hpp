#ifndef ARRANGELINE_JSON_IO_HPP
#define ARRANGELINE_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "arrangeline/core.hpp"
#include "arrangeline/generators.hpp"
#include "arrangeline/greedy_solver.hpp"
#include "arrangeline/grid_draw.hpp"
#include "arrangeline/recognizer.hpp"
#include "arrangeline/universal_points.hpp"
#include "arrangeline/verify.hpp"
#include "arrangeline/wiring.hpp"

namespace arrangeline {

using Json = nlohmann::json;

/// Malformed payload (wrong types, missing keys, ids out of range).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json graph_to_json(const Graph& g);
/// {"n": int, "edges": [[u, v], ...]}; other keys are ignored.
Graph graph_from_json(const Json& j);

Json structure_to_json(const ArrangementStructure& s);
ArrangementStructure structure_from_json(const Json& j, const Graph& g);

Json rejection_to_json(const RejectionReason& r);
Json violation_to_json(const GraphViolation& v);

Json diagram_to_json(const WiringDiagram& d);
WiringDiagram diagram_from_json(const Json& j);

Json level_stats_to_json(const LevelStats& st);

Json drawing_to_json(const GridDrawing& d);
GridDrawing drawing_from_json(const Json& j);

Json point_set_to_json(const UniversalPointSet& ups, bool with_points = false);

Json solve_plan_to_json(const GreedySolution& solution);

Json instance_to_json(const GeneratedInstance& inst);

Json crossing_report_to_json(const CrossingReport& report);

/// Parses text as JSON, turning syntax errors into ParseError.
Json parse_json_text(const std::string& text);

}  // namespace arrangeline

#endif  // ARRANGELINE_JSON_IO_HPP
