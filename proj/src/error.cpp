#include "assur/error.hpp"

namespace assur {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::unknown_edge: return "UnknownEdge";
    case Errc::wrong_anchor_count: return "WrongAnchorCount";
    case Errc::wrong_dimension: return "WrongDimension";
    case Errc::size_cap_exceeded: return "SizeCapExceeded";
    case Errc::graph_mismatch: return "GraphMismatch";
    case Errc::not_equivalent: return "NotEquivalent";
    case Errc::not_d_directed: return "NotDDirected";
    case Errc::orientation_mismatch: return "OrientationMismatch";
    case Errc::missing_coordinates: return "MissingCoordinates";
    case Errc::mixed_coordinates: return "MixedCoordinates";
    case Errc::decomposition_mismatch: return "DecompositionMismatch";
    case Errc::not_isostatic: return "NotIsostatic";
    case Errc::singular_configuration: return "SingularConfiguration";
    case Errc::not_bottom_component: return "NotBottomComponent";
    case Errc::unknown_instance: return "UnknownInstance";
    case Errc::parse_error: return "ParseError";
    case Errc::validation_failed: return "ValidationFailed";
    case Errc::internal_check_failed: return "InternalCheckFailed";
  }
  return "Error";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace assur
