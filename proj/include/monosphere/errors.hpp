#pragma once

#include <stdexcept>
#include <string>

namespace monosphere {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// configuration / argument validation
struct validation_error : error { using error::error; };

// recursion coefficients
struct degenerate_denominator : error { using error::error; };
struct invalid_aprime : error { using error::error; };

// continued fraction
struct coefficient_error : error { using error::error; };

// spectrum solver
struct pole_at_landau_floor : error { using error::error; };
struct bracket_invalid : error { using error::error; };
struct pole_detected : error { using error::error; };
struct insufficient_roots : error { using error::error; };

// wavefunction
struct gamma_pole : error { using error::error; };
struct not_minimal : error { using error::error; };
struct zero_norm : error { using error::error; };
struct out_of_domain : error { using error::error; };

// classical mechanics
struct below_minimum : error { using error::error; };
struct multiple_wells : error { using error::error; };
struct not_bracketed : error { using error::error; };
struct no_bounded_orbit : error { using error::error; };

} // namespace monosphere
