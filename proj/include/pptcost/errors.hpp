#pragma once

#include <stdexcept>
#include <string>

namespace pptcost {

/// Input violates a documented precondition (shape, range, state validity).
class InvalidArgument : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// A numerical routine could not deliver its post-conditions.
class NumericalFailure : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// The requested dense computation exceeds the configured size bound.
class ResourceLimit : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

} // namespace pptcost
