#ifndef GSBASIS_ERROR_HPP
#define GSBASIS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gsb {

/// Thrown when a coefficient inversion is requested but the numerator cannot
/// be certified nonzero from the declared assumptions.  Refusal is always
/// signaled through this type, never by returning a wrong value.
class NotProvablyNonzero : public std::runtime_error {
 public:
  explicit NotProvablyNonzero(const std::string& culprit, const std::string& context = "")
      : std::runtime_error(context.empty()
                               ? "cannot certify nonzero: " + culprit
                               : "cannot certify nonzero: " + culprit + " [" + context + "]"),
        culprit_(culprit) {}

  const std::string& culprit() const { return culprit_; }

 private:
  std::string culprit_;
};

/// Thrown on malformed presentation text, constraint sets, or CLI input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace gsb

#endif  // GSBASIS_ERROR_HPP
