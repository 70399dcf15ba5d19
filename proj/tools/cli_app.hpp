#pragma once

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace mwe::cli {

/// Everything a pipeline stage can be told, from flags or a key=value
/// config file (flags win).
struct PipelineConfig {
  std::string corpus;
  std::string lexicon;
  std::string gold;
  std::string gold2;
  std::string taxonomy;
  std::string translations;
  std::string input;   // positional: candidates/scores/decisions file
  std::string out;     // output path; empty writes to stdout
  std::string mode;    // classify: cosine|euclidean|taxonomy|baseline
  std::string weights = "0.45,0.35,0.20";
  std::string pos = "NN,NNP";
  std::string m1_inflections;  // comma list; empty keeps the default set
  double alpha = 0.5;
  double beta = 0.5;
  double mu = 0.5;
  int bins = 5;
  std::uint64_t min_freq_zero_dim = 2;
  std::uint64_t min_prefix = 3;
};

/// Runs one invocation: args exclude the program name, e.g.
/// {"extract", "--corpus", "c.tsv", "--out", "cand.tsv"}.
/// Returns the process exit code: 0 ok, 1 data error, 2 usage error.
int run_cli(const std::vector<std::string>& args,
            std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace mwe::cli
