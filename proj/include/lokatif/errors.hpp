#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace lokatif {

enum class ErrorCode {
  EmptyInput,
  SyntaxError,
  UnknownWord,
  UnknownLemma,
  UnknownEntity,
  ParseError,
  DuplicateLemma,
  InvalidEntry,
  MissingExtent,
  MissingOrientation,
  NotAnNLI,
  NoDependence,
  NoRelation,
  HomogeneityViolation,
  CycleDetected,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownWord: return "UnknownWord";
    case ErrorCode::UnknownLemma: return "UnknownLemma";
    case ErrorCode::UnknownEntity: return "UnknownEntity";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateLemma: return "DuplicateLemma";
    case ErrorCode::InvalidEntry: return "InvalidEntry";
    case ErrorCode::MissingExtent: return "MissingExtent";
    case ErrorCode::MissingOrientation: return "MissingOrientation";
    case ErrorCode::NotAnNLI: return "NotAnNLI";
    case ErrorCode::NoDependence: return "NoDependence";
    case ErrorCode::NoRelation: return "NoRelation";
    case ErrorCode::HomogeneityViolation: return "HomogeneityViolation";
    case ErrorCode::CycleDetected: return "CycleDetected";
  }
  return "Unknown";
}

/// Typed error for every failure path in the library. `position`, when
/// present, is a byte offset into the offending input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        message_(std::move(message)) {}

  Error(ErrorCode code, std::string message, std::size_t position)
      : std::runtime_error(std::string(to_string(code)) + " at " +
                           std::to_string(position) + ": " + message),
        code_(code),
        message_(std::move(message)),
        position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<std::size_t> position_;
};

}  // namespace lokatif
