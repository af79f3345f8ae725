#pragma once

#include <stdexcept>
#include <string>

namespace orbits {

// A request exceeded a configured size/budget limit.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A cache or output file could not be read/written.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// An exact-arithmetic invariant failed. This signals a formula or
// implementation bug, never bad input; it is not caught inside the library.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

[[noreturn]] void internal_fail(const std::string& msg);

inline void internal_check(bool ok, const char* msg) {
    if (!ok) internal_fail(msg);
}

}  // namespace orbits
