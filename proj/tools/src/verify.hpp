#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padic_ell/dirichlet.hpp"
#include "padic_ell/euler_ell.hpp"

namespace padic_ell::cli {

/// Inclusive integer range "a..b"; empty when b < a.
struct Range {
  int lo = 0;
  int hi = -1;
  bool empty() const { return hi < lo; }
};

Range parse_range(const std::string& text);

struct VerifyConfig {
  u64 p = 3;
  int prec = 12;
  int guard = 2;
  DirichletChar chi = DirichletChar::trivial();
  int level = 6;
  std::optional<Range> n;
  std::optional<Range> k;
  int samples = 10;
  unsigned long long seed = 20240601;
};

struct VerifyReport {
  std::string suite;
  std::vector<CongruenceRecord> records;
  bool vacuous = false;

  int passed() const;
  int failed() const { return static_cast<int>(records.size()) - passed(); }
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
VerifyReport run_suite(const std::string& suite, const VerifyConfig& cfg);

}  // namespace padic_ell::cli
