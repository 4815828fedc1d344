#pragma once

#include <stdexcept>
#include <string>

namespace polyrec {

// Input that does not match a documented schema (JSON shape, field types).
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its precondition.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

inline void require(bool cond, const char* what) {
    if (!cond) throw PreconditionError(what);
}

inline void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionError(what);
}

}  // namespace polyrec
