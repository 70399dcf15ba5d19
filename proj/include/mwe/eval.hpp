#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mwe/assoc.hpp"
#include "mwe/corpus.hpp"

namespace mwe {

/// Annotation classes: M = true MWE, S = compositional collocation,
/// B = bigram inside a longer chunk, E = parse error.  B and E are
/// filtered out before any metric.
enum class GoldClass { M, S, B, E };

GoldClass gold_class_from_string(const std::string& s);
const char* to_string(GoldClass c);

using CandidateKey = std::pair<std::string, std::string>;  // (m1, m2) roots
using GoldMap = std::map<CandidateKey, GoldClass>;

/// Reads "m1<TAB>m2<TAB>class" rows; '#' lines are comments.  Throws
/// ParseError on malformed rows or duplicate keys.
GoldMap load_gold(std::istream& in);
GoldMap load_gold_file(const std::string& path);

/// Precision/recall/F-score in percent.
struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;
};

/// 2PR/(P+R), or 0 when P+R is 0.  Scale-free, so it works on percents.
double f_from_pr(double precision, double recall);

/// Per-rank metrics for one bin.
struct RankReport {
  std::size_t rank = 0;      // 1-based
  std::size_t items = 0;     // candidates in the bin
  std::size_t positives = 0; // gold-M candidates in the bin
  PRF prf;
  bool empty_bin = false;    // precision pinned to 0 because items == 0
};

/// P_i = M in bin i / bin size, R_i = M in bin i / total M.  Every ranked
/// candidate must carry a gold class of M or S (B/E are excluded
/// upstream); violations throw std::invalid_argument.
std::vector<RankReport> prf_per_rank(const RankedList& ranked,
                                     const GoldMap& gold);

struct BinaryReport {
  std::size_t items = 0;
  std::size_t predicted_positive = 0;
  std::size_t gold_positive = 0;
  std::size_t true_positive = 0;
  PRF prf;
  bool no_predictions = false;  // precision pinned to 0
};

/// Binary metrics of MWE decisions against gold class M (S is negative).
BinaryReport prf_binary(
    const std::vector<std::pair<bool, GoldClass>>& decisions);

/// Candidate kept as an MWE iff, at every occurrence, the tokens directly
/// before and after the enclosing NP chunk are neither determiners nor
/// part of a nominal chunk.  Sentence boundaries pass vacuously.
bool baseline_classify(const CandidateBigram& cand, const Corpus& corpus,
                       const std::string& determiner_pos = "DT");

/// Cohen's kappa over paired labels; the label alphabet is whatever the
/// items use.  Requires at least 2 items.  Both annotators constant and
/// identical (p_e = 1) is defined as 1.
double cohen_kappa(
    const std::vector<std::pair<std::string, std::string>>& items);

/// Jaccard times the monotonicity weight (1 equal, 2/3 proper subset,
/// 1/3 crossing overlap, 0 disjoint).  Two empty sets count as identical.
double masi(const std::set<std::string>& a, const std::set<std::string>& b);

}  // namespace mwe
