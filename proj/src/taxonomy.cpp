#include "mwe/taxonomy.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "mwe/error.hpp"
#include "mwe/formats.hpp"

namespace mwe {

Taxonomy::Taxonomy(std::map<std::string, std::string> parent_of)
    : parent_(std::move(parent_of)) {
  for (const auto& [child, parent] : parent_) {
    if (child == parent) {
      if (!root_.empty()) {
        throw std::invalid_argument("taxonomy has two roots: " + root_ +
                                    " and " + child);
      }
      root_ = child;
    } else if (parent_.count(parent) == 0) {
      throw std::invalid_argument("taxonomy parent '" + parent +
                                  "' of '" + child + "' is not a node");
    }
  }
  if (root_.empty()) {
    throw std::invalid_argument("taxonomy has no root (self-edge)");
  }
  // every chain must reach the root without looping
  for (const auto& [child, parent] : parent_) {
    std::string cur = child;
    std::size_t steps = 0;
    while (cur != root_) {
      cur = parent_.at(cur);
      if (++steps > parent_.size()) {
        throw std::invalid_argument("taxonomy contains a cycle through '" +
                                    child + "'");
      }
    }
    (void)parent;
  }
}

std::size_t Taxonomy::depth(const std::string& node) const {
  auto it = parent_.find(node);
  if (it == parent_.end()) {
    throw std::invalid_argument("unknown taxonomy node: " + node);
  }
  std::size_t d = 0;
  std::string cur = node;
  while (cur != root_) {
    cur = parent_.at(cur);
    ++d;
  }
  return d;
}

const std::string& Taxonomy::parent(const std::string& node) const {
  auto it = parent_.find(node);
  if (it == parent_.end()) {
    throw std::invalid_argument("unknown taxonomy node: " + node);
  }
  return it->second;
}

Taxonomy load_taxonomy(std::istream& in) {
  std::map<std::string, std::string> parent_of;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tsv(line);
    if (cols.size() != 2 || cols[0].empty() || cols[1].empty()) {
      throw ParseError(lineno, "expected child<TAB>parent");
    }
    auto [it, inserted] = parent_of.emplace(cols[0], cols[1]);
    if (!inserted && it->second != cols[1]) {
      throw ParseError(lineno, "node '" + cols[0] +
                                   "' declared with two parents");
    }
  }
  try {
    return Taxonomy(std::move(parent_of));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("taxonomy: ") + e.what());
  }
}

Taxonomy load_taxonomy_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open taxonomy file: " + path);
  return load_taxonomy(in);
}

TranslationMap load_translation_map(std::istream& in, const Taxonomy& tax) {
  TranslationMap tmap;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tsv(line);
    if (cols.size() != 2 || cols[0].empty() || cols[1].empty()) {
      throw ParseError(lineno, "expected source_root<TAB>concept_id");
    }
    if (!tax.contains(cols[1])) {
      throw ParseError(lineno, "concept '" + cols[1] +
                                   "' is not a taxonomy node");
    }
    tmap.entries[cols[0]].insert(cols[1]);
  }
  return tmap;
}

TranslationMap load_translation_map_file(const std::string& path,
                                         const Taxonomy& tax) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open translation map: " + path);
  }
  return load_translation_map(in, tax);
}

std::string lcs(const Taxonomy& tax, const std::string& a,
                const std::string& b) {
  std::size_t da = tax.depth(a);
  std::size_t db = tax.depth(b);
  std::string x = a;
  std::string y = b;
  while (da > db) {
    x = tax.parent(x);
    --da;
  }
  while (db > da) {
    y = tax.parent(y);
    --db;
  }
  while (x != y) {
    x = tax.parent(x);
    y = tax.parent(y);
  }
  return x;
}

double norm_dist(const Taxonomy& tax, const std::string& a,
                 const std::string& b) {
  std::string cp = lcs(tax, a, b);
  std::size_t cp_depth = tax.depth(cp);
  std::size_t da = tax.depth(a) - cp_depth;
  std::size_t db = tax.depth(b) - cp_depth;
  std::size_t min_dist = std::min(da, db);
  if (min_dist == 0) return 0.0;  // one node subsumes the other
  return static_cast<double>(min_dist) /
         static_cast<double>(cp_depth + min_dist);
}

TaxonomyResult classify_by_taxonomy(const Taxonomy& tax,
                                    const TranslationMap& tmap,
                                    const std::string& m1,
                                    const std::string& m2, double mu) {
  TaxonomyResult result;
  auto t1 = tmap.entries.find(m1);
  auto t2 = tmap.entries.find(m2);
  if (t1 == tmap.entries.end() || t1->second.empty() ||
      t2 == tmap.entries.end() || t2->second.empty()) {
    result.outcome = TaxonomyOutcome::Untranslated;
    return result;
  }
  double best = 1.0;
  for (const auto& ca : t1->second) {
    for (const auto& cb : t2->second) {
      best = std::min(best, norm_dist(tax, ca, cb));
      ++result.sense_pairs;
    }
  }
  result.distance = best;
  result.outcome =
      best > mu ? TaxonomyOutcome::MWE : TaxonomyOutcome::NotMWE;
  return result;
}

const char* to_string(TaxonomyOutcome o) {
  switch (o) {
    case TaxonomyOutcome::MWE:
      return "MWE";
    case TaxonomyOutcome::NotMWE:
      return "NotMWE";
    default:
      return "untranslated";
  }
}

}  // namespace mwe
