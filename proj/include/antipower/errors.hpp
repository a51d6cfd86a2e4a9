#pragma once

#include <stdexcept>

namespace antipower {

// Thrown when a computation reaches a state the underlying mathematics rules
// out: a safety cap that cannot legally be hit, a certified block equality
// that fails to hold, a bounded search for an object that must exist.
// Never thrown for bad user input; those paths use std::domain_error or
// std::invalid_argument.
class falsification_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace antipower
