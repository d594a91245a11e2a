#ifndef XOP_CLI_HPP_
#define XOP_CLI_HPP_

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "xop/theorem_lab.hpp"
#include "xop/zeros.hpp"

namespace xop::cli {

/// Exit codes: 0 all checks passed, 1 check or isolation failure, 2 usage or
/// parameter error.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

nlohmann::ordered_json to_json(const ZeroSet& zs);
ZeroSet zero_set_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const lab::Report& report);

/// Exceptional Xm-Laguerre zeros z_{m,n,k} (k = 1..m in decreasing order) for
/// each n, next to their limits -x_{m,k}^{(alpha-1)}.
struct ExceptionalTable {
  int m = 4;
  double alpha = 1.0;
  std::vector<int> ns;
  std::vector<std::vector<double>> values;  // [k-1][j]
  std::vector<double> limits;               // [k-1]
};

ExceptionalTable compute_table(int m, double alpha, const std::vector<int>& ns);
/// Rows k, one column per n, final limit column; 6 significant digits.
std::string table_csv(const ExceptionalTable& table);

}  // namespace xop::cli

#endif  // XOP_CLI_HPP_
