#pragma once

#include <stdexcept>
#include <string>

namespace coverlab {

// Bad user-supplied data: malformed files, impossible degree sequences,
// out-of-domain parameters. CLI exit code 2.
struct invalid_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation refused to run because the instance exceeds its documented
// size limit (dense matrices, subset enumeration). CLI exit code 3.
struct size_guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A simulation hit its step budget before finishing. CLI exit code 4.
struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace coverlab
