#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace incseq::acceptance {

struct Options {
  int max_n = 4;
  int max_q = 4;
  std::uint64_t seed = 1;
};

struct Result {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

Result groebner_correctness(const Options& opt);
Result oracle_equivalence(const Options& opt);
Result hilbert_function(const Options& opt);
Result interpolation(const Options& opt);
Result nullstellensatz(const Options& opt);
Result kakeya(const Options& opt);
Result nikodym(const Options& opt);
Result covers(const Options& opt);
Result property_suites(const Options& opt);

/// Criteria 1..9 in order.
std::vector<Result> run_all(const Options& opt);

/// `PASS 3 hilbert function: detail`.
std::string format(const Result& r);

}  // namespace incseq::acceptance
