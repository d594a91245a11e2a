#ifndef XOP_ERRORS_HPP_
#define XOP_ERRORS_HPP_

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace xop {

/// Polynomial family parameters outside their admissible domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside an operation's domain (x <= 0 for log_gamma, k = 1 for
/// the Hermite limit, a hypergeometric pole, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A function evaluation returned a non-finite value.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gram-Schmidt quadrature did not stabilize at the maximum rule order.
class OraclePrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Bracket {
  double lo;
  double hi;
};

/// Root isolation could not find the expected number of sign changes.
/// Carries whatever brackets were found at the finest grid.
class IsolationFailure : public std::runtime_error {
 public:
  IsolationFailure(const std::string& what, std::vector<Bracket> partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}

  const std::vector<Bracket>& partial() const noexcept { return partial_; }

 private:
  std::vector<Bracket> partial_;
};

using WarningHandler = std::function<void(std::string_view)>;

/// Installs the sink for non-fatal diagnostics. The default writes to stderr.
/// Returns the previous handler.
WarningHandler set_warning_handler(WarningHandler handler);
void warn(std::string_view message);

}  // namespace xop

#endif  // XOP_ERRORS_HPP_
