#pragma once

#include <stdexcept>
#include <string>

namespace gl3recip {

enum class ErrorCode {
    invalid_argument,  // precondition on an input value
    domain,            // pole, composite modulus, non-invertible residue
    region,            // evaluation point outside a convergence margin
    completeness,      // comparison above a truncation bound
    convergence,       // tail-stability check failed
    usage,             // malformed or out-of-range run configuration
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace gl3recip
