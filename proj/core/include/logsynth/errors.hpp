#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace logsynth {

/// Base class for everything the library can throw. The CLI maps any Error
/// to exit code 1; argument/usage problems never reach this hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input at the syntax level (JSON, pattern text, CSV).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally well-formed input that violates a semantic rule. The message
/// carries the offending location (key, array index, token).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A pattern literal that is not part of the declared alphabet.
class UnknownSymbolError : public Error {
public:
    UnknownSymbolError(std::string symbol, const std::string& context)
        : Error("unknown symbol '" + symbol + "'" + (context.empty() ? "" : " " + context)),
          symbol_(std::move(symbol)) {}

    const std::string& symbol() const noexcept { return symbol_; }

private:
    std::string symbol_;
};

/// The model cannot produce any accepted sequence under the given bound
/// (initial state cannot reach acceptance, or not within mlsl).
class DegenerateModelError : public Error {
public:
    using Error::Error;
};

/// Finite-language enumeration outgrew the configured word cap.
class CapExceededError : public Error {
public:
    using Error::Error;
};

/// Subset construction outgrew the configured state budget.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// A failure pattern yielded no word within the length bound.
class EmptyPoolError : public Error {
public:
    explicit EmptyPoolError(std::string pattern_id)
        : Error("failure pattern '" + pattern_id + "' produced no word within the length bound"),
          pattern_id_(std::move(pattern_id)) {}

    const std::string& pattern_id() const noexcept { return pattern_id_; }

private:
    std::string pattern_id_;
};

/// Normal-sequence generation ran out of retries; the active failure
/// patterns cover too much of the model's bounded language.
class AttemptsExhaustedError : public Error {
public:
    using Error::Error;
};

/// An operation that needs both labels saw only one.
class DegenerateClassError : public Error {
public:
    using Error::Error;
};

/// Serialized dataset or CSV content that does not conform to its format.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& message, std::optional<std::size_t> line = std::nullopt)
        : Error(line ? message + " (line " + std::to_string(*line) + ")" : message), line_(line) {}

    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    std::optional<std::size_t> line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// The BiLSTM+B expected-F1 lookup requires the maximum sequence length.
class MissingMlslError : public Error {
public:
    using Error::Error;
};

}  // namespace logsynth
