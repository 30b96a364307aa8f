#pragma once

#include <stdexcept>
#include <string>

namespace fliess {

struct dimension_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct alphabet_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_invertible : std::domain_error {
    using std::domain_error::domain_error;
};

struct degree_undefined : std::domain_error {
    using std::domain_error::domain_error;
};

struct singular_transition : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct horizon_exceeded : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct dimension_cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct picard_divergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace fliess
