#ifndef ASSUR_JSON_IO_HPP
#define ASSUR_JSON_IO_HPP

#include <json.hpp>

#include "assur/assur_analysis.hpp"
#include "assur/counts.hpp"
#include "assur/decomposition.hpp"
#include "assur/pinned_graph.hpp"
#include "assur/rigidity.hpp"

namespace assur {

inline constexpr const char* kFormatTag = "assur-kit/1";

struct GraphFile {
  PinnedGraph graph;
  std::map<VertexId, std::vector<double>> coordinates;  // empty when absent
  std::vector<Edge> dropped_pin_pin;
};

GraphFile graph_from_json(const nlohmann::json& j, bool drop_pin_pin = false);
GraphFile load_graph_file(const std::string& path, bool drop_pin_pin = false);

nlohmann::json graph_to_json(const PinnedGraph& g,
                             const std::map<VertexId, std::vector<double>>* coords = nullptr);

// keys sorted, two-space indent, trailing newline
std::string canonical_dump(const nlohmann::json& j);

nlohmann::json orientation_to_json(const Orientation& o);
Orientation orientation_from_json(const nlohmann::json& j);

nlohmann::json decomposition_to_json(const PinnedGraph& g, const Decomposition& d);
nlohmann::json violations_to_json(const std::vector<Violation>& vs);
nlohmann::json count_violations_to_json(const std::vector<CountViolation>& vs);
nlohmann::json verdict_to_json(const AssurVerdict& v);
nlohmann::json motion_to_json(const MotionQ& m);
nlohmann::json motion_to_json(const MotionF& m);
nlohmann::json drivers_to_json(const DriverReport& r);

}  // namespace assur

#endif
