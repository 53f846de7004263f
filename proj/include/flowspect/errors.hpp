#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flowspect {

/// Base of every error the library throws. `kind()` names the failure class
/// so the CLI can map errors to exit statuses and messages.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define FLOWSPECT_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(#Name, what) {}     \
  };

FLOWSPECT_DEFINE_ERROR(ShapeError)
FLOWSPECT_DEFINE_ERROR(ArgError)
FLOWSPECT_DEFINE_ERROR(NotFound)
FLOWSPECT_DEFINE_ERROR(ItemError)
FLOWSPECT_DEFINE_ERROR(EmptyDataset)
FLOWSPECT_DEFINE_ERROR(SplitError)
FLOWSPECT_DEFINE_ERROR(SpecError)
FLOWSPECT_DEFINE_ERROR(BoxError)
FLOWSPECT_DEFINE_ERROR(NumError)
FLOWSPECT_DEFINE_ERROR(TrainError)
FLOWSPECT_DEFINE_ERROR(DegenerateError)
FLOWSPECT_DEFINE_ERROR(StageError)
FLOWSPECT_DEFINE_ERROR(IoError)

#undef FLOWSPECT_DEFINE_ERROR

/// Malformed input at a 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("ParseError", "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Invalid configuration; carries the offending dotted key.
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what)
      : Error("ConfigError", key + ": " + what), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace flowspect
