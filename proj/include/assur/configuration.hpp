#ifndef ASSUR_CONFIGURATION_HPP
#define ASSUR_CONFIGURATION_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "assur/numeric.hpp"
#include "assur/pinned_graph.hpp"

namespace assur {

enum class ScalarMode { exact_rational, prime_field, float64 };

const char* scalar_mode_name(ScalarMode m);
ScalarMode scalar_mode_from_name(const std::string& name);

// Point assignment for every vertex. Coordinates are kept as exact
// rationals regardless of mode; float64 samples are dyadic, so nothing is
// lost when they are cast back to double.
struct Configuration {
  ScalarMode mode = ScalarMode::prime_field;
  int dimension = 0;
  std::map<VertexId, std::vector<Rat>> coords;

  const std::vector<Rat>& at(const VertexId& v) const;
  bool covers(const PinnedGraph& g) const;
};

Configuration sample_generic_configuration(const PinnedGraph& g, uint64_t seed,
                                           ScalarMode mode);

// Explicit coordinates (e.g. from an input file). Every vertex must be
// covered; partially given coordinates are rejected to keep genericity
// claims honest.
Configuration configuration_from_doubles(const PinnedGraph& g,
                                         const std::map<VertexId, std::vector<double>>& pts,
                                         ScalarMode mode);

}  // namespace assur

#endif
