#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clawbound {

// Bad caller-supplied data: malformed graphs, out-of-range vertices, sets
// that violate a documented precondition.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bad run configuration: caps out of range, unknown formats, missing paths.
struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed serialized graph data; offset is the byte position of the defect.
struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// Filesystem trouble while emitting or loading reports.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural fact the pipeline depends on failed on a concrete instance.
// Never expected on valid inputs; any throw is itself a reportable finding.
struct critical_finding : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A supposedly unreachable internal state.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace clawbound
