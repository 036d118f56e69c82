#pragma once

#include <stdexcept>
#include <string>

namespace cfcon {

// Malformed or out-of-contract input (bad vertex ids, p outside [0, 1], ...).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A randomized generator ran out of its resampling budget.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exhaustive search was asked to go past its configured size limit.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cfcon
