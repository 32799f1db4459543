#pragma once

#include <stdexcept>
#include <string>

namespace gramspec {

/// Error categories surfaced by the library.  CLI maps verification
/// failures (internal_contradiction, cross_check_failed) to exit code 1
/// and everything else (bad input) to exit code 2.
enum class errc {
    division_by_zero,
    degree_mismatch,
    both_zero,
    zero_polynomial,
    not_self_adjoint,
    zero_subspace,
    mixed_flavors,
    mu_mismatch,
    not_psd,
    dependent_input,
    real_root,
    repeated_root,
    non_positive_lead,
    all_zero,
    out_of_range,
    degenerate_input,
    scalar_exhaustion,
    non_real_input,
    precondition_failed,
    internal_contradiction,
    cross_check_failed,
    parse_error,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace gramspec
