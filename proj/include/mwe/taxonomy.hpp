#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "mwe/corpus.hpp"

namespace mwe {

/// A rooted concept tree.  Every node maps to its parent; the root maps to
/// itself.  Immutable after load; lookups are pure.
class Taxonomy {
 public:
  /// Builds from child->parent edges.  Throws std::invalid_argument unless
  /// there is exactly one self-edge (the root), every parent is itself a
  /// node, and every chain reaches the root.
  Taxonomy(std::map<std::string, std::string> parent_of);

  const std::string& root() const { return root_; }
  bool contains(const std::string& node) const {
    return parent_.count(node) > 0;
  }
  const std::map<std::string, std::string>& parent_of() const {
    return parent_;
  }

  /// Edge count from node to the root.
  std::size_t depth(const std::string& node) const;

  /// Parent of a node (the root is its own parent).
  const std::string& parent(const std::string& node) const;

 private:
  std::map<std::string, std::string> parent_;
  std::string root_;
};

/// Reads "child<TAB>parent" edges; the root is declared by a self-edge.
Taxonomy load_taxonomy(std::istream& in);
Taxonomy load_taxonomy_file(const std::string& path);

/// Source-language root -> target concept ids.  Every target must be a
/// taxonomy node.
struct TranslationMap {
  std::map<std::string, std::set<std::string>> entries;
};

TranslationMap load_translation_map(std::istream& in, const Taxonomy& tax);
TranslationMap load_translation_map_file(const std::string& path,
                                         const Taxonomy& tax);

/// Deepest node lying on both root paths.  Throws std::invalid_argument on
/// unknown nodes.
std::string lcs(const Taxonomy& tax, const std::string& a,
                const std::string& b);

/// Normalized path distance min_dist / (lcs_depth + min_dist) where
/// min_dist is the smaller of the two node-to-LCS distances.  In [0, 1];
/// 0 when one node subsumes the other (the degenerate root/root case
/// included), 1 for distinct children of the root.
double norm_dist(const Taxonomy& tax, const std::string& a,
                 const std::string& b);

enum class TaxonomyOutcome { MWE, NotMWE, Untranslated };

struct TaxonomyResult {
  TaxonomyOutcome outcome = TaxonomyOutcome::Untranslated;
  std::optional<double> distance;    // best (smallest) over all sense pairs
  std::size_t sense_pairs = 0;
};

/// Classifies by the most charitable sense pair: distance = min norm_dist
/// over the cross product of the two translation sets, MWE iff distance
/// exceeds mu.  A component without translations yields Untranslated.
TaxonomyResult classify_by_taxonomy(const Taxonomy& tax,
                                    const TranslationMap& tmap,
                                    const std::string& m1,
                                    const std::string& m2, double mu);

inline TaxonomyResult classify_by_taxonomy(const Taxonomy& tax,
                                           const TranslationMap& tmap,
                                           const CandidateBigram& cand,
                                           double mu) {
  return classify_by_taxonomy(tax, tmap, cand.m1, cand.m2, mu);
}

const char* to_string(TaxonomyOutcome o);

}  // namespace mwe
