#pragma once

#include <stdexcept>
#include <string>

namespace horolab {

// Failure categories used across the library. Tests and the CLI dispatch on
// the code, never on the message text.
enum class errc {
  unknown_vertex,
  unknown_coset,
  out_of_ball,
  uncertified_region,
  resource_limit,
  not_loxodromic,
  non_convergence,
  mismatched_ball,
  fixed_class,
  same_member,
  precondition,
  verification_failure,
  search_exhausted,
  relation_found,
  fixed_points_collide,
  bounded_conjugator,
  config_invalid,
  io_failure,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc c, const std::string& msg);
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

}  // namespace horolab
