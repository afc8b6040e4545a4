#pragma once

#include <stdexcept>
#include <string>

namespace catchain {

// Input document malformed: JSON shape, bad literals, dangling references.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands with incompatible shapes.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace catchain
