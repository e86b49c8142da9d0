#pragma once

#include <stdexcept>
#include <string>

namespace qdm {

// Error categories shared by the C++ core and the C API (codes stay in sync
// with QDM_E* in include/qdm/qdm.h).
enum class errc {
    invalid_parameter = 1,
    malformed_graph6 = 2,
    not_divisible = 3,
    not_regular = 4,
    diameter_exceeded = 5,
    structure_mismatch = 6,
    non_integer_root = 7,
    odd_power_present = 8,
    condition_violated = 9,
    bad_q_literal = 10,
    parse_error = 11,
};

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace qdm
