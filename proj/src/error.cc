#include "lexiswitch/error.h"

#include <fmt/format.h>

namespace lexiswitch {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kMissingFile: return "MissingFile";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kDuplicateEntry: return "DuplicateEntry";
    case ErrorKind::kEmptyField: return "EmptyField";
    case ErrorKind::kEmptyLexicon: return "EmptyLexicon";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kZeroVector: return "ZeroVector";
    case ErrorKind::kDuplicateId: return "DuplicateId";
    case ErrorKind::kEmptyIndex: return "EmptyIndex";
    case ErrorKind::kChecksumMismatch: return "ChecksumMismatch";
    case ErrorKind::kTaggerMisalignment: return "TaggerMisalignment";
    case ErrorKind::kProviderUnavailable: return "ProviderUnavailable";
    case ErrorKind::kProvider: return "ProviderError";
    case ErrorKind::kEmptyCompletion: return "EmptyCompletion";
    case ErrorKind::kEmptyText: return "EmptyText";
    case ErrorKind::kEmptyGroup: return "EmptyGroup";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kZeroVariance: return "ZeroVariance";
    case ErrorKind::kIo: return "IoError";
  }
  return "Unknown";
}

bool is_provider_failure(ErrorKind kind) {
  return kind == ErrorKind::kProviderUnavailable || kind == ErrorKind::kProvider ||
         kind == ErrorKind::kEmptyCompletion;
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(fmt::format("{}: {}", to_string(kind), message)), kind_(kind) {}

ParseError::ParseError(std::string source, std::size_t line, const std::string& detail)
    : Error(ErrorKind::kParse, fmt::format("{}:{}: {}", source, line, detail)),
      source_(std::move(source)),
      line_(line) {}

DuplicateEntryError::DuplicateEntryError(std::string word)
    : Error(ErrorKind::kDuplicateEntry, fmt::format("duplicate lexicon word '{}'", word)),
      word_(std::move(word)) {}

EmptyFieldError::EmptyFieldError(std::string word, std::string field)
    : Error(ErrorKind::kEmptyField,
            fmt::format("entry '{}' has an empty '{}' field", word, field)),
      word_(std::move(word)),
      field_(std::move(field)) {}

DimensionMismatchError::DimensionMismatchError(std::size_t expected, std::size_t got)
    : Error(ErrorKind::kDimensionMismatch,
            fmt::format("expected dimension {}, got {}", expected, got)),
      expected_(expected),
      got_(got) {}

ProviderError::ProviderError(int status, std::string body)
    : Error(ErrorKind::kProvider, fmt::format("provider returned HTTP {}: {}", status, body)),
      status_(status),
      body_(std::move(body)) {}

}  // namespace lexiswitch
