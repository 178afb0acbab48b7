#pragma once

#include <stdexcept>
#include <string>

namespace realforms {

// Thrown when a computation would exceed its configured budget (cover size,
// enumeration breadth).  Callers map this to a distinct exit code.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace realforms
