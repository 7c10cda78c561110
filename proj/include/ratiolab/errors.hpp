#pragma once

#include <stdexcept>

namespace ratiolab {

// Thrown when an iterative numeric routine cannot reach its target accuracy
// (quadrature subdivision exhausted, singular least-squares system).
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ratiolab
