#pragma once

#include <stdexcept>
#include <string>

namespace shapeinv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation outside the family domain, 2F1 too close to z=1, Gamma pole.
struct DomainError : Error {
    using Error::Error;
};

// Hypergeometric series failed to reach the requested tail tolerance.
struct NonConvergence : Error {
    double last_tail;
    NonConvergence(const std::string& msg, double tail) : Error(msg), last_tail(tail) {}
};

// A deformation function changes sign on the physical domain.
struct NodefulDeformation : Error {
    using Error::Error;
};

// Jacobi degree collapse (vanishing leading coefficient).
struct DegenerateParameters : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

}  // namespace shapeinv
