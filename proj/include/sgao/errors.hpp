#pragma once

#include <stdexcept>
#include <string>

namespace sgao {

// Thrown when a request would exceed a hard resource cap (memory or
// enumeration size), as opposed to being malformed.  Callers that want to
// degrade gracefully (e.g. mark a table entry as skipped) catch this type.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sgao
