#ifndef LPA_ERRORS_HPP
#define LPA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lpa {

/// Malformed input text (graph files, CLI pair syntax). Carries a line
/// number when one is known.
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

/// Input is well formed but outside what the algorithms support:
/// enumeration limits, canonical-labeling size caps, oracle scope
/// (cycles, infinite edge bundles), row-finite criterion on graphs
/// with infinite emitters.
class scope_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace lpa

#endif  // LPA_ERRORS_HPP
