#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexiswitch {

enum class ErrorKind {
  kInvalidArgument,
  kMissingFile,
  kParse,
  kDuplicateEntry,
  kEmptyField,
  kEmptyLexicon,
  kEmptyInput,
  kDimensionMismatch,
  kZeroVector,
  kDuplicateId,
  kEmptyIndex,
  kChecksumMismatch,
  kTaggerMisalignment,
  kProviderUnavailable,
  kProvider,
  kEmptyCompletion,
  kEmptyText,
  kEmptyGroup,
  kLengthMismatch,
  kZeroVariance,
  kIo,
};

const char* to_string(ErrorKind kind);

// True for failures that originate in a remote or scripted model backend.
bool is_provider_failure(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& detail);

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

class DuplicateEntryError : public Error {
 public:
  explicit DuplicateEntryError(std::string word);

  const std::string& word() const noexcept { return word_; }

 private:
  std::string word_;
};

class EmptyFieldError : public Error {
 public:
  EmptyFieldError(std::string word, std::string field);

  const std::string& word() const noexcept { return word_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::string word_;
  std::string field_;
};

class DimensionMismatchError : public Error {
 public:
  DimensionMismatchError(std::size_t expected, std::size_t got);

  std::size_t expected() const noexcept { return expected_; }
  std::size_t got() const noexcept { return got_; }

 private:
  std::size_t expected_;
  std::size_t got_;
};

class ProviderError : public Error {
 public:
  ProviderError(int status, std::string body);

  int status() const noexcept { return status_; }
  const std::string& body() const noexcept { return body_; }

 private:
  int status_;
  std::string body_;
};

}  // namespace lexiswitch
