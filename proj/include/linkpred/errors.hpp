#pragma once

#include <stdexcept>

namespace linkpred {

// Problems the caller can fix by changing arguments or file paths
// (missing file, bad ratio string, unknown model name). The CLI maps
// this to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed content inside an otherwise readable input (bad line in an
// edge list, non-finite attribute value). The CLI maps this to exit
// code 1.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace linkpred
