#include "mwe/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mwe {

std::uint64_t comm(const Lexicon& lex, const std::string& n1,
                   const std::string& n2) {
  std::set<std::string> s1 = synset_of(lex, n1);
  if (s1.empty()) return 0;
  std::set<std::string> s2 = synset_of(lex, n2);
  std::uint64_t shared = 0;
  for (const auto& h : s1) {
    if (s2.count(h) > 0) ++shared;
  }
  return shared;
}

SemanticCluster build_cluster(const Lexicon& lex,
                              const std::set<std::string>& corpus_nouns,
                              const std::string& center) {
  if (corpus_nouns.count(center) == 0) {
    throw std::invalid_argument("cluster center '" + center +
                                "' is not a corpus noun");
  }
  SemanticCluster cluster;
  cluster.center = center;
  std::set<std::string> center_synset = synset_of(lex, center);
  if (center_synset.empty()) return cluster;
  for (const std::string& noun : corpus_nouns) {
    if (noun == center) continue;
    std::set<std::string> s = synset_of(lex, noun);
    std::uint64_t shared = 0;
    for (const auto& h : center_synset) {
      if (s.count(h) > 0) ++shared;
    }
    if (shared >= 1) cluster.neighbors.emplace(noun, shared);
  }
  return cluster;
}

SimilarityVectors intersect_axes(const SemanticCluster& c1,
                                 const SemanticCluster& c2) {
  SimilarityVectors sv;
  for (const auto& [noun, score1] : c1.neighbors) {
    auto it = c2.neighbors.find(noun);
    if (it == c2.neighbors.end()) continue;
    sv.axes.push_back(noun);  // map iteration keeps axes sorted
    sv.v1.push_back(static_cast<double>(score1));
    sv.v2.push_back(static_cast<double>(it->second));
  }
  return sv;
}

namespace {

double norm(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

void require_nonzero(const SimilarityVectors& sv, double n1, double n2) {
  if (sv.axes.empty()) {
    throw std::domain_error("similarity needs at least one shared axis");
  }
  if (n1 == 0.0 || n2 == 0.0) {
    throw std::domain_error("zero vector has no direction");
  }
}

}  // namespace

double cosine_similarity(const SimilarityVectors& sv) {
  double n1 = norm(sv.v1);
  double n2 = norm(sv.v2);
  require_nonzero(sv, n1, n2);
  double dot = 0.0;
  for (std::size_t i = 0; i < sv.axes.size(); ++i) {
    dot += sv.v1[i] * sv.v2[i];
  }
  return std::min(1.0, dot / (n1 * n2));
}

double euclidean_distance(const SimilarityVectors& sv) {
  double n1 = norm(sv.v1);
  double n2 = norm(sv.v2);
  require_nonzero(sv, n1, n2);
  double sum = 0.0;
  for (std::size_t i = 0; i < sv.axes.size(); ++i) {
    double d = sv.v1[i] / n1 - sv.v2[i] / n2;
    sum += d * d;
  }
  return std::sqrt(sum);
}

CheckResult check_mwe(const Lexicon& lex,
                      const std::set<std::string>& corpus_nouns,
                      const CandidateBigram& cand, const DecisionConfig& cfg,
                      SimilarityMode mode) {
  if (!cfg.valid()) {
    throw std::invalid_argument("decision config out of range");
  }
  SemanticCluster c1 = build_cluster(lex, corpus_nouns, cand.m1);
  SemanticCluster c2 = build_cluster(lex, corpus_nouns, cand.m2);
  SimilarityVectors sv = intersect_axes(c1, c2);

  CheckResult result;
  result.axis_count = sv.axes.size();
  if (sv.axes.empty()) {
    // Nothing in common to compare against: keep the pair only when it
    // recurs often enough to look deliberate.
    result.freq_fallback = true;
    result.decision = cand.freq_pair >= cfg.min_freq_zero_dim
                          ? Decision::MWE
                          : Decision::NotMWE;
    return result;
  }
  try {
    if (mode == SimilarityMode::Cosine) {
      double cos = cosine_similarity(sv);
      result.score = cos;
      result.decision = cos > cfg.alpha ? Decision::NotMWE : Decision::MWE;
    } else {
      double dist = euclidean_distance(sv);
      result.score = dist;
      result.decision = dist < cfg.beta ? Decision::NotMWE : Decision::MWE;
    }
  } catch (const std::domain_error& e) {
    result.decision = Decision::NotMWE;
    result.note = std::string("undecidable: ") + e.what();
  }
  return result;
}

const char* to_string(Decision d) {
  return d == Decision::MWE ? "MWE" : "NotMWE";
}

const char* to_string(SimilarityMode m) {
  return m == SimilarityMode::Cosine ? "cosine" : "euclidean";
}

}  // namespace mwe
