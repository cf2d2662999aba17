#include "drg/error.hpp"

namespace drg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_modulus: return "invalid-modulus";
    case ErrorCode::group_mismatch: return "group-mismatch";
    case ErrorCode::invalid_element: return "invalid-element";
    case ErrorCode::no_such_order: return "no-such-order";
    case ErrorCode::invalid_subgroup: return "invalid-subgroup";
    case ErrorCode::conductor_mismatch: return "conductor-mismatch";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::not_a_group_algebra_element: return "not-a-group-algebra-element";
    case ErrorCode::identity_in_set: return "identity-in-set";
    case ErrorCode::not_inverse_closed: return "not-inverse-closed";
    case ErrorCode::not_connected: return "not-connected";
    case ErrorCode::not_distance_regular: return "not-distance-regular";
    case ErrorCode::numeric_separation_failure: return "numeric-separation-failure";
    case ErrorCode::not_antipodal: return "not-antipodal";
    case ErrorCode::not_bipartite: return "not-bipartite";
    case ErrorCode::precondition: return "precondition-unmet";
    case ErrorCode::size_limit_exceeded: return "size-limit-exceeded";
    case ErrorCode::limit_exceeded: return "limit-exceeded";
    case ErrorCode::aut_computation_limit: return "aut-computation-limit";
    case ErrorCode::not_q_polynomial: return "not-q-polynomial";
    case ErrorCode::usage: return "usage";
    case ErrorCode::internal_inconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

}  // namespace drg
