#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mwe/corpus.hpp"
#include "mwe/lexicon.hpp"

namespace mwe {

/// All corpus nouns semantically related to a center noun, with their
/// commonality scores (always >= 1; the center is not its own neighbor).
struct SemanticCluster {
  std::string center;
  std::map<std::string, std::uint64_t> neighbors;
};

/// Two cluster centers projected onto their shared neighbors.  axes[i]
/// names the i-th shared noun; v1[i] / v2[i] are the commonality of each
/// center with it.
struct SimilarityVectors {
  std::vector<std::string> axes;  // lexicographic order
  std::vector<double> v1;
  std::vector<double> v2;
};

enum class SimilarityMode { Cosine, Euclidean };

enum class Decision { MWE, NotMWE };

/// Cut-offs for the compositionality decision.  High similarity between
/// the two components rejects the candidate: cosine mode keeps it as an
/// MWE iff cosine <= alpha, Euclidean mode iff distance >= beta.  A pair
/// whose clusters share no axis is kept iff it occurs at least
/// min_freq_zero_dim times.
struct DecisionConfig {
  double alpha = 0.5;  // cosine cut-off, in [0, 1]
  double beta = 0.5;   // normalized Euclidean cut-off, >= 0
  std::uint64_t min_freq_zero_dim = 2;

  bool valid() const { return alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0; }
};

struct CheckResult {
  Decision decision = Decision::NotMWE;
  std::size_t axis_count = 0;
  std::optional<double> score;  // cosine or distance; empty on fallback
  bool freq_fallback = false;   // zero shared axes, decided by frequency
  std::string note;             // set when the pair was undecidable
};

/// Number of headwords shared by the two nouns' synsets.  Symmetric;
/// comm(n, n) equals the synset size.
std::uint64_t comm(const Lexicon& lex, const std::string& n1,
                   const std::string& n2);

/// Cluster of `center` over the corpus nouns: every other corpus noun with
/// nonzero commonality.  Throws std::invalid_argument when center is not a
/// corpus noun.
SemanticCluster build_cluster(const Lexicon& lex,
                              const std::set<std::string>& corpus_nouns,
                              const std::string& center);

/// Shared-neighbor axes of two clusters with each center's scores as
/// coordinates.  Disjoint neighbor sets give zero-dimensional vectors.
SimilarityVectors intersect_axes(const SemanticCluster& c1,
                                 const SemanticCluster& c2);

/// dot(v1,v2)/(|v1||v2|), in [0,1] for the nonnegative coordinates used
/// here.  Throws std::domain_error on empty axes or a zero vector.
double cosine_similarity(const SimilarityVectors& sv);

/// Euclidean distance between the unit-normalized vectors, in [0, sqrt(2)].
/// Satisfies distance² = 2(1 - cosine).  Throws like cosine_similarity.
double euclidean_distance(const SimilarityVectors& sv);

/// Decides whether a candidate is an MWE from the similarity of its two
/// components' clusters.  A zero vector cannot arise from clusters
/// (coordinates are always >= 1); if one is passed anyway the pair is
/// decided NotMWE with an explanatory note.
CheckResult check_mwe(const Lexicon& lex,
                      const std::set<std::string>& corpus_nouns,
                      const CandidateBigram& cand, const DecisionConfig& cfg,
                      SimilarityMode mode);

const char* to_string(Decision d);
const char* to_string(SimilarityMode m);

}  // namespace mwe
