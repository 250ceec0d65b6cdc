#pragma once

#include <stdexcept>

namespace fuglede
{
    /// A hypothesis of an operation does not hold for the given input. Kept
    /// apart from a negative answer, which is returned as data.
    struct precondition_failure : std::domain_error
    {
        using std::domain_error::domain_error;
    };
}
