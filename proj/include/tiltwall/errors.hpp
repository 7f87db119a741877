#pragma once

#include <stdexcept>
#include <string>

namespace tiltwall {

enum class Errc {
    lattice_violation,
    zero_rank,
    negative_discriminant,
    degenerate_discriminant,
    unsupported_locus,
    out_of_range,
    above_d_bound,
    not_a_sheaf_class,
    unbounded_region,
    both_zero,
    unknown_check,
    parse_error,
};

// Domain-level failure; the CLI maps codes onto exit statuses.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace tiltwall
