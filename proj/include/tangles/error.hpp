#pragma once

#include <stdexcept>
#include <string>

namespace tangles {

/// Input outside the domain an operation is defined on (|x| > 1, even orders, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two routes to the same quantity disagree beyond tolerance.
class inconsistency_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid user-supplied parameters (non-coprime p,q; pr+qs != 1; ...).
class invalid_argument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace tangles
