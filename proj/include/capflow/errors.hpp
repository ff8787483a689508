#pragma once
#include <stdexcept>
#include <string>

namespace capflow {

// Error taxonomy mirrors the process exit codes:
//   invalid_input -> 1, numeric_error -> 2, property_violation -> 3.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& m) : std::runtime_error(m) {}
};

// Blow-up, cone violation, failed Newton solves on geometry constraints.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& m) : std::runtime_error(m) {}
};

// A mathematical property the theory guarantees failed beyond tolerance.
struct property_violation : std::runtime_error {
    explicit property_violation(const std::string& m) : std::runtime_error(m) {}
};

} // namespace capflow
