#include "horolab/errors.hpp"

namespace horolab {

const char* errc_name(errc c) {
  switch (c) {
    case errc::unknown_vertex: return "unknown_vertex";
    case errc::unknown_coset: return "unknown_coset";
    case errc::out_of_ball: return "out_of_ball";
    case errc::uncertified_region: return "uncertified_region";
    case errc::resource_limit: return "resource_limit";
    case errc::not_loxodromic: return "not_loxodromic";
    case errc::non_convergence: return "non_convergence";
    case errc::mismatched_ball: return "mismatched_ball";
    case errc::fixed_class: return "fixed_class";
    case errc::same_member: return "same_member";
    case errc::precondition: return "precondition";
    case errc::verification_failure: return "verification_failure";
    case errc::search_exhausted: return "search_exhausted";
    case errc::relation_found: return "relation_found";
    case errc::fixed_points_collide: return "fixed_points_collide";
    case errc::bounded_conjugator: return "bounded_conjugator";
    case errc::config_invalid: return "config_invalid";
    case errc::io_failure: return "io_failure";
  }
  return "unknown";
}

error::error(errc c, const std::string& msg)
    : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

}  // namespace horolab
