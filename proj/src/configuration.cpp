#include "assur/configuration.hpp"

#include <cmath>

#include "assur/error.hpp"

namespace assur {

const char* scalar_mode_name(ScalarMode m) {
  switch (m) {
    case ScalarMode::exact_rational: return "exact-rational";
    case ScalarMode::prime_field: return "prime-field";
    case ScalarMode::float64: return "float64";
  }
  return "?";
}

ScalarMode scalar_mode_from_name(const std::string& name) {
  if (name == "exact-rational" || name == "rational") return ScalarMode::exact_rational;
  if (name == "prime-field" || name == "exact") return ScalarMode::prime_field;
  if (name == "float64" || name == "float") return ScalarMode::float64;
  raise(Errc::parse_error, "unknown scalar mode '" + name + "'");
}

const std::vector<Rat>& Configuration::at(const VertexId& v) const {
  auto it = coords.find(v);
  if (it == coords.end()) raise(Errc::missing_coordinates, "no coordinates for " + v);
  return it->second;
}

bool Configuration::covers(const PinnedGraph& g) const {
  for (const auto& v : g.inner())
    if (!coords.count(v)) return false;
  for (const auto& v : g.pinned())
    if (!coords.count(v)) return false;
  return true;
}

Configuration sample_generic_configuration(const PinnedGraph& g, uint64_t seed,
                                           ScalarMode mode) {
  Configuration cfg;
  cfg.mode = mode;
  cfg.dimension = g.dimension();
  SplitMix64 rng(mix_seed(seed, static_cast<uint64_t>(mode) + 0xc0ffULL));
  auto sample_vertex = [&](const VertexId& v) {
    std::vector<Rat> p(g.dimension());
    for (int c = 0; c < g.dimension(); ++c) {
      int64_t raw = rng.coordinate();
      if (mode == ScalarMode::float64)
        p[c] = Rat(raw) / Rat(int64_t(1) << 31);  // dyadic point in [-1, 1]
      else
        p[c] = Rat(raw);
    }
    cfg.coords[v] = std::move(p);
  };
  for (const auto& v : g.inner()) sample_vertex(v);
  for (const auto& v : g.pinned()) sample_vertex(v);
  return cfg;
}

Configuration configuration_from_doubles(const PinnedGraph& g,
                                         const std::map<VertexId, std::vector<double>>& pts,
                                         ScalarMode mode) {
  if (pts.empty()) raise(Errc::missing_coordinates, "no coordinates given");
  Configuration cfg;
  cfg.mode = mode;
  cfg.dimension = g.dimension();
  size_t expected = g.inner().size() + g.pinned().size();
  if (pts.size() != expected)
    raise(Errc::mixed_coordinates,
          "coordinates must cover all vertices or none (" + std::to_string(pts.size()) +
              " of " + std::to_string(expected) + " given)");
  for (const auto& [v, p] : pts) {
    if (!g.has_vertex(v)) raise(Errc::unknown_vertex, "coordinates for unknown vertex " + v);
    if (static_cast<int>(p.size()) != g.dimension())
      raise(Errc::wrong_dimension, "coordinate arity mismatch at " + v);
    std::vector<Rat> q(p.size());
    for (size_t c = 0; c < p.size(); ++c) {
      if (!std::isfinite(p[c])) raise(Errc::parse_error, "non-finite coordinate at " + v);
      q[c] = Rat(p[c]);  // doubles are dyadic rationals; conversion is exact
    }
    cfg.coords[v] = std::move(q);
  }
  return cfg;
}

}  // namespace assur
