#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mwe/assoc.hpp"
#include "mwe/corpus.hpp"

namespace mwe {

// Line-oriented TSV formats shared by the CLI stages.  Every file written
// here starts with "#mwetk=<version>" followed by the column names on the
// same line; readers skip any '#' line except where noted.

/// Writes candidates plus a "#windows=N" metadata line so downstream
/// stages can rebuild contingency tables without the corpus.
void write_candidates(const std::vector<CandidateBigram>& candidates,
                      std::uint64_t windows, std::ostream& out);

struct CandidatesFile {
  std::vector<CandidateBigram> candidates;  // positions empty
  std::optional<std::uint64_t> windows;
};

CandidatesFile read_candidates(std::istream& in);
CandidatesFile read_candidates_file(const std::string& path);

void write_scores(const std::vector<ScoredCandidate>& scored,
                  const std::vector<int>& bin_of, std::ostream& out);

struct ScoreRow {
  std::string m1;
  std::string m2;
  std::map<std::string, double> raw;   // five measures
  double combined = 0.0;
  int bin = 0;
};

std::vector<ScoreRow> read_scores(std::istream& in);
std::vector<ScoreRow> read_scores_file(const std::string& path);

struct DecisionRow {
  std::string m1;
  std::string m2;
  std::string mode;      // cosine | euclidean | taxonomy | baseline
  std::size_t n = 0;     // axes (cluster modes), sense pairs, occurrences
  std::optional<double> score;
  bool fallback = false;
  std::string decision;  // MWE | NotMWE | untranslated
};

void write_decisions(const std::vector<DecisionRow>& rows, std::ostream& out);
std::vector<DecisionRow> read_decisions(std::istream& in);
std::vector<DecisionRow> read_decisions_file(const std::string& path);

/// Column names of the first '#' header line, without the version cell.
/// Empty when the stream has no header.
std::vector<std::string> peek_header_columns(const std::string& path);

/// Flat key=value configuration ('#' comments, blank lines allowed).
std::map<std::string, std::string> read_kv_config(std::istream& in);
std::map<std::string, std::string> read_kv_config_file(const std::string& path);

std::vector<std::string> split_tsv(const std::string& line);
std::string format_double(double v, int digits = 6);

}  // namespace mwe
