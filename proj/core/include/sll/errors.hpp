#ifndef SLL_ERRORS_HPP
#define SLL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sll {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Dimension or layout mismatch between operands.
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(what) {}
};

/// A label id outside the registry / declared label count.
class InvalidLabelId : public Error {
 public:
  explicit InvalidLabelId(const std::string& what) : Error(what) {}
};

/// A configuration value outside its allowed range.
class InvalidConfig : public Error {
 public:
  explicit InvalidConfig(const std::string& what) : Error(what) {}
};

/// Malformed input text; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Attempt to register a label id already present in a model.
class DuplicateLabel : public Error {
 public:
  explicit DuplicateLabel(const std::string& what) : Error(what) {}
};

/// Feature matrix does not satisfy the full-row-rank precondition.
class RankDeficientFeatures : public Error {
 public:
  explicit RankDeficientFeatures(const std::string& what) : Error(what) {}
};

/// Every label in the evaluation set lacks positives or negatives.
class AllLabelsDegenerate : public Error {
 public:
  explicit AllLabelsDegenerate(const std::string& what) : Error(what) {}
};

/// Filesystem / binary container failure.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace sll

#endif  // SLL_ERRORS_HPP
