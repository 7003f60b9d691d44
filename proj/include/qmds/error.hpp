#ifndef QMDS_ERROR_HPP
#define QMDS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qmds {

// Error conditions surfaced by the library. The C API maps these 1:1 onto
// qmds_status values, so keep the two lists in sync.
enum class errc {
    ok = 0,
    invalid_argument,
    not_prime,
    even_characteristic,
    division_by_zero,
    field_mismatch,
    length_mismatch,
    message_too_long,
    not_a_codeword,
    odd_r,
    even_r,
    r_one,
    r_too_large,
    delta_out_of_range,
    d_out_of_range,
    elements_outside_omega,
    not_dual_containing,
    dimension_contradiction,
    internal_divisibility_failure,
    equivalence_violation,
    invalid_q,
};

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

const char* errc_name(errc code) noexcept;

}  // namespace qmds

#endif
