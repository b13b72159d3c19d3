#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace paratask {

// Error classes surfaced by the toolkit. The CLI maps InvalidArgument to the
// usage exit code 1 and every other class to exit code 2.
enum class ErrorCode {
  EmptyText,
  DimensionMismatch,
  ZeroVector,
  RemoteUnavailable,
  MissingEmbedding,
  ParseError,
  MappingError,
  EmptyCorpus,
  SchemaMismatch,
  EmptyTrainingSet,
  IoError,
  VersionMismatch,
  CorruptModel,
  TooFewSamples,
  LengthMismatch,
  EmptyInput,
  InsufficientData,
  UnknownSheetId,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  // The message without the error-class prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace paratask
