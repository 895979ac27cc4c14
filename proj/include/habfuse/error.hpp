#pragma once

#include <stdexcept>
#include <string>

namespace habfuse {

/// Malformed file contents (bad magic, truncated payloads, schema violations).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A required stage input (file or directory) does not exist.
class MissingInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Configuration failed validation. The message lists every problem found.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace habfuse
