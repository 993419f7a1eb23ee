#include "tunnelgr/errors.hpp"

namespace tunnelgr {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::non_increasing_bridge_indices: return "NonIncreasingBridgeIndices";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::negative_genus: return "NegativeGenus";
    case Errc::exterior_below_ambient: return "ExteriorBelowAmbient";
    case Errc::inadmissible_knot: return "InadmissibleKnot";
    case Errc::not_m_small: return "NotMSmall";
    case Errc::empty_factor_list: return "EmptyFactorList";
    case Errc::non_positive_hole_count: return "NonPositiveHoleCount";
    case Errc::enumeration_too_large: return "EnumerationTooLarge";
    case Errc::unknown_knot: return "UnknownKnot";
    case Errc::n_too_small: return "NTooSmall";
    case Errc::file_not_found: return "FileNotFound";
    case Errc::parse_error: return "ParseError";
    case Errc::property_failure: return "PropertyFailure";
  }
  return "UnknownError";
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::file_not_found:
    case Errc::parse_error:
      return 2;
    case Errc::property_failure:
      return 3;
    default:
      return 1;
  }
}

}  // namespace tunnelgr
