#pragma once

#include <stdexcept>
#include <string>

namespace sfdesign {

enum class errc {
    invalid_dimension,
    dimension_mismatch,
    zero_variance,
    degenerate_input,
    infinite_energy,
    budget_exceeded,
    unsupported_order,
    shape_mismatch,
    divisibility,
    parse_error,
    strength_violation,
    unknown_metric,
    io_error,
};

/// Library-wide exception carrying a machine-readable code.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace sfdesign
