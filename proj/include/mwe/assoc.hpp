#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mwe/corpus.hpp"

namespace mwe {

/// 2x2 bigram contingency table.
///   n11 pair together, n12 m1 without m2, n21 m2 without m1, n22 neither.
struct ContingencyTable {
  std::uint64_t n11 = 0;
  std::uint64_t n12 = 0;
  std::uint64_t n21 = 0;
  std::uint64_t n22 = 0;

  std::uint64_t total() const { return n11 + n12 + n21 + n22; }
  std::uint64_t f1() const { return n11 + n12; }  // m1 occurrences
  std::uint64_t f2() const { return n11 + n21; }  // m2 occurrences
};

/// Builds the table for a candidate given the total number of bigram
/// windows.  Throws std::domain_error when the candidate frequencies do
/// not fit inside `windows`.
ContingencyTable contingency_from_candidate(const CandidateBigram& cand,
                                            std::uint64_t windows);

// Association measures.  All are pure; PMI and Phi throw std::domain_error
// when a required marginal is zero.
double pmi(const ContingencyTable& t);            // log2, 0 at independence
double llr(const ContingencyTable& t);            // Dunning's G², >= 0
double phi(const ContingencyTable& t);            // in [-1, 1]
double cooccurrence(const ContingencyTable& t);   // |A∩B|/|A∪B| over occurrence sets
double significance(const ContingencyTable& t);   // (2 n11/(f1+f2))(1-e^-n11)

/// Measure registry so the co-occurrence and significance defaults can be
/// swapped without touching the scoring pipeline.
using MeasureFn = std::function<double(const ContingencyTable&)>;
const std::map<std::string, MeasureFn>& standard_measures();

// Canonical measure-name keys used in ScoredCandidate maps and TSV columns.
inline constexpr const char* kLlr = "llr";
inline constexpr const char* kPmi = "pmi";
inline constexpr const char* kCooccurrence = "cooccurrence";
inline constexpr const char* kPhi = "phi";
inline constexpr const char* kSignificance = "significance";

struct ScoredCandidate {
  CandidateBigram candidate;
  std::map<std::string, double> raw;
  std::map<std::string, double> normalized;  // min-max over the scored list
  double combined = 0.0;
};

/// Weights of the combined measure over co-occurrence, Phi and
/// significance.  Must be nonnegative and sum to 1.
struct WeightConfig {
  double w_cooc = 0.45;
  double w_phi = 0.35;
  double w_sig = 0.20;

  bool valid() const;
};

/// Computes every registered raw measure for every candidate, in input
/// order.  The default registry holds the five standard measures; pass a
/// custom map to swap implementations (e.g. another co-occurrence or
/// significance formula) behind the same names.
std::vector<ScoredCandidate> score_candidates(
    const std::vector<CandidateBigram>& candidates, std::uint64_t windows,
    const std::map<std::string, MeasureFn>& measures = standard_measures());

/// Min-max normalizes co-occurrence, Phi and significance over the list
/// (an all-equal measure normalizes to 0 for every candidate) and fills
/// `combined` with the weighted sum.  Throws std::invalid_argument on an
/// empty list or invalid weights.
std::vector<ScoredCandidate> combine(std::vector<ScoredCandidate> scored,
                                     const WeightConfig& w);

/// Candidates partitioned into k equal-width score intervals; bins[0] is
/// rank 1 (highest scores).  Values on an interior boundary go to the
/// higher bin; a degenerate range puts everything in rank 1.
struct RankedList {
  std::vector<std::vector<ScoredCandidate>> bins;
};

using ScoreKey = std::function<double(const ScoredCandidate&)>;

RankedList rank_into_bins(
    const std::vector<ScoredCandidate>& scored, int k = 5,
    const ScoreKey& key = [](const ScoredCandidate& s) { return s.combined; });

}  // namespace mwe
