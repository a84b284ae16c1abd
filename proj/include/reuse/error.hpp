#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reuse {

enum class ErrorCode {
    kIo,
    kDuplicateFile,
    kInvalidPattern,
    kEmptyManifest,
    kInvalidRule,
    kInvalidThreshold,
    kUndefinedRatio,
};

const char* to_string(ErrorCode code) noexcept;

/// Base error for every recoverable failure the library reports.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class IoError : public Error {
public:
    explicit IoError(const std::string& message) : Error(ErrorCode::kIo, message) {}
};

class DuplicateFileError : public Error {
public:
    explicit DuplicateFileError(const std::string& path)
        : Error(ErrorCode::kDuplicateFile, "duplicate file in model merge: " + path), path_(path) {}

    [[nodiscard]] const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Malformed glob. `line` is 0 when the pattern did not come from a file.
class InvalidPatternError : public Error {
public:
    InvalidPatternError(const std::string& pattern, const std::string& reason, std::size_t line = 0)
        : Error(ErrorCode::kInvalidPattern,
                (line ? "line " + std::to_string(line) + ": " : std::string()) +
                    "invalid pattern '" + pattern + "': " + reason),
          pattern_(pattern),
          reason_(reason),
          line_(line) {}

    [[nodiscard]] const std::string& pattern() const noexcept { return pattern_; }
    [[nodiscard]] const std::string& reason() const noexcept { return reason_; }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::string pattern_;
    std::string reason_;
    std::size_t line_;
};

}  // namespace reuse
