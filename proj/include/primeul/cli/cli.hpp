#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace primeul::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // verify found a failing check
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::size_t max_rank = 3;
  std::size_t order = 6;
  int dn_max = 30;
  int n_max = 6;
  bool long_tier = false;
  unsigned long long seed = 0x5eed;
};

/// suite is one of paths, recursions, statistics, egf, roots, all.
std::vector<Check> verify_suite(const std::string& suite, const VerifyOptions& opt);

/// The primeul command line; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace primeul::cli
