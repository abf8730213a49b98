#pragma once

#include <stdexcept>
#include <string>

namespace macopp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Γ(s, a) is undefined: some precondition of `a` is false in `s`.
class InapplicableAction : public Error {
public:
    using Error::Error;
};

// A belief update produced no consistent successor. Only happens when the
// sensor model and the executed trace disagree, i.e. a modeling bug.
class InconsistentObservation : public Error {
public:
    using Error::Error;
};

// A problem or configuration violates a structural invariant.
class InvalidModel : public Error {
public:
    using Error::Error;
};

// A configured cap (belief size, enumeration size) was exceeded.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

}  // namespace macopp
