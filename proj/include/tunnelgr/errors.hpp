#ifndef TUNNELGR_ERRORS_HPP
#define TUNNELGR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tunnelgr {

// Stable error identities. The CLI maps these onto the process exit codes
// documented in the README: 0 success, 1 domain/validation error, 2 I/O or
// parse error, 3 property failure.
enum class Errc {
  non_increasing_bridge_indices,
  length_mismatch,
  negative_genus,
  exterior_below_ambient,
  inadmissible_knot,
  not_m_small,
  empty_factor_list,
  non_positive_hole_count,
  enumeration_too_large,
  unknown_knot,
  n_too_small,
  file_not_found,
  parse_error,
  property_failure,
};

const char* errc_name(Errc code);
int exit_code_for(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace tunnelgr

#endif
