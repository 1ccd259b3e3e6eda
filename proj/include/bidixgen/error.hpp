#ifndef BIDIXGEN_ERROR_HPP
#define BIDIXGEN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace bidixgen {

enum class ErrorKind {
  MissingFile,
  MalformedLine,
  InvalidSpec,
  IntraLanguagePair,
  UnknownVertex,
  UnknownLanguage,
  NotACycle,
  InvalidConstraints,
  MissingPivotDictionaries,
  LanguageMismatch,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingFile: return "MissingFile";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::IntraLanguagePair: return "IntraLanguagePair";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownLanguage: return "UnknownLanguage";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::InvalidConstraints: return "InvalidConstraints";
    case ErrorKind::MissingPivotDictionaries: return "MissingPivotDictionaries";
    case ErrorKind::LanguageMismatch: return "LanguageMismatch";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with the 1-based line number of the offending line.
class MalformedLineError : public Error {
 public:
  MalformedLineError(std::string path, std::size_t line, const std::string& reason)
      : Error(ErrorKind::MalformedLine, path + ":" + std::to_string(line) + ": " + reason),
        path_(std::move(path)),
        line_(line),
        reason_(reason) {}

  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string path_;
  std::size_t line_;
  std::string reason_;
};

}  // namespace bidixgen

#endif  // BIDIXGEN_ERROR_HPP
