#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace intension {

enum class ErrorKind {
  InvalidDegree,
  LengthMismatch,
  InvalidPropertyId,
  DuplicateProperty,
  EmptyConcept,
  UniverseTooLarge,
  InvalidOverlap,
  EmptyTable,
  UnknownProperty,
  SubsetTooLarge,
  SubsetTooSmall,
  ConditioningOnNull,
  ZeroOverlap,
  EmptyAntecedent,
  CompressorFailure,
  UnknownCompressor,
  ParseError,
  FileNotFound,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidPropertyId: return "InvalidPropertyId";
    case ErrorKind::DuplicateProperty: return "DuplicateProperty";
    case ErrorKind::EmptyConcept: return "EmptyConcept";
    case ErrorKind::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorKind::InvalidOverlap: return "InvalidOverlap";
    case ErrorKind::EmptyTable: return "EmptyTable";
    case ErrorKind::UnknownProperty: return "UnknownProperty";
    case ErrorKind::SubsetTooLarge: return "SubsetTooLarge";
    case ErrorKind::SubsetTooSmall: return "SubsetTooSmall";
    case ErrorKind::ConditioningOnNull: return "ConditioningOnNull";
    case ErrorKind::ZeroOverlap: return "ZeroOverlap";
    case ErrorKind::EmptyAntecedent: return "EmptyAntecedent";
    case ErrorKind::CompressorFailure: return "CompressorFailure";
    case ErrorKind::UnknownCompressor: return "UnknownCompressor";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::FileNotFound: return "FileNotFound";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace intension
