#ifndef JND_ERRORS_HPP
#define JND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jnd {

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotNormal : std::runtime_error {
  explicit NotNormal(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidAction : std::runtime_error {
  explicit InvalidAction(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidHomomorphism : std::runtime_error {
  explicit InvalidHomomorphism(const std::string& what) : std::runtime_error(what) {}
};

struct NotDedekind : std::runtime_error {
  explicit NotDedekind(const std::string& what) : std::runtime_error(what) {}
};

struct NoComplement : std::runtime_error {
  explicit NoComplement(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

struct ConditionsFailed : std::runtime_error {
  explicit ConditionsFailed(const std::string& what) : std::runtime_error(what) {}
};

struct MalformedEntry : std::runtime_error {
  explicit MalformedEntry(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_no(line) {}
  int line_no;
};

}  // namespace jnd

#endif
