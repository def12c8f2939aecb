#ifndef ASSUR_ERROR_HPP
#define ASSUR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace assur {

enum class Errc {
  unknown_vertex,
  unknown_edge,
  wrong_anchor_count,
  wrong_dimension,
  size_cap_exceeded,
  graph_mismatch,
  not_equivalent,
  not_d_directed,
  orientation_mismatch,
  missing_coordinates,
  mixed_coordinates,
  decomposition_mismatch,
  not_isostatic,
  singular_configuration,
  not_bottom_component,
  unknown_instance,
  parse_error,
  validation_failed,
  internal_check_failed,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

}  // namespace assur

#endif
