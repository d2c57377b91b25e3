#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jordan/report.hpp"

namespace jordan::suites {

struct Options {
  int max_2j = 8;               // spin bound: 2j for single irreps, 2j1+2j2 for pairs
  std::uint64_t seed = 1;       // seed for the randomized identity checks
  int triple_dim_cap = 64;      // dimension cap for triple tensor products
};

std::vector<CheckReport> relations(const Options& opt);
std::vector<CheckReport> coproduct(const Options& opt);
std::vector<CheckReport> props(const Options& opt);
std::vector<CheckReport> cgc_suite(const Options& opt);
std::vector<CheckReport> lemmas(const Options& opt);

// Dispatch by suite name: relations | coproduct | props | cgc | lemmas | all.
std::vector<CheckReport> run(const std::string& suite, const Options& opt);

}  // namespace jordan::suites
