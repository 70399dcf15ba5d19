#include "mwe/eval.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <stdexcept>

#include "mwe/error.hpp"
#include "mwe/formats.hpp"

namespace mwe {

GoldClass gold_class_from_string(const std::string& s) {
  if (s == "M") return GoldClass::M;
  if (s == "S") return GoldClass::S;
  if (s == "B") return GoldClass::B;
  if (s == "E") return GoldClass::E;
  throw std::invalid_argument("unknown gold class: " + s);
}

const char* to_string(GoldClass c) {
  switch (c) {
    case GoldClass::M:
      return "M";
    case GoldClass::S:
      return "S";
    case GoldClass::B:
      return "B";
    default:
      return "E";
  }
}

GoldMap load_gold(std::istream& in) {
  GoldMap gold;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tsv(line);
    if (cols.size() != 3 || cols[0].empty() || cols[1].empty()) {
      throw ParseError(lineno, "expected m1<TAB>m2<TAB>class");
    }
    GoldClass cls;
    try {
      cls = gold_class_from_string(cols[2]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    auto key = std::make_pair(cols[0], cols[1]);
    if (!gold.emplace(key, cls).second) {
      throw ParseError(lineno, "duplicate gold key: " + cols[0] + " " +
                                   cols[1]);
    }
  }
  return gold;
}

GoldMap load_gold_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open gold file: " + path);
  return load_gold(in);
}

double f_from_pr(double precision, double recall) {
  double denom = precision + recall;
  if (denom <= 0.0) return 0.0;
  return 2.0 * precision * recall / denom;
}

std::vector<RankReport> prf_per_rank(const RankedList& ranked,
                                     const GoldMap& gold) {
  std::size_t total_m = 0;
  for (const auto& bin : ranked.bins) {
    for (const ScoredCandidate& s : bin) {
      auto it = gold.find({s.candidate.m1, s.candidate.m2});
      if (it == gold.end()) {
        throw std::invalid_argument("no gold class for candidate " +
                                    s.candidate.m1 + " " + s.candidate.m2);
      }
      if (it->second == GoldClass::B || it->second == GoldClass::E) {
        throw std::invalid_argument(
            "gold classes B and E must be filtered before ranking: " +
            s.candidate.m1 + " " + s.candidate.m2);
      }
      if (it->second == GoldClass::M) ++total_m;
    }
  }

  std::vector<RankReport> reports;
  reports.reserve(ranked.bins.size());
  for (std::size_t i = 0; i < ranked.bins.size(); ++i) {
    RankReport r;
    r.rank = i + 1;
    r.items = ranked.bins[i].size();
    for (const ScoredCandidate& s : ranked.bins[i]) {
      if (gold.at({s.candidate.m1, s.candidate.m2}) == GoldClass::M) {
        ++r.positives;
      }
    }
    if (r.items == 0) {
      r.empty_bin = true;
      r.prf = {0.0, 0.0, 0.0};
    } else {
      r.prf.precision = 100.0 * static_cast<double>(r.positives) /
                        static_cast<double>(r.items);
      r.prf.recall = total_m == 0
                         ? 0.0
                         : 100.0 * static_cast<double>(r.positives) /
                               static_cast<double>(total_m);
      r.prf.f_score = f_from_pr(r.prf.precision, r.prf.recall);
    }
    reports.push_back(r);
  }
  return reports;
}

BinaryReport prf_binary(
    const std::vector<std::pair<bool, GoldClass>>& decisions) {
  BinaryReport report;
  report.items = decisions.size();
  for (const auto& [predicted, cls] : decisions) {
    if (cls == GoldClass::B || cls == GoldClass::E) {
      throw std::invalid_argument(
          "gold classes B and E must be filtered before evaluation");
    }
    bool positive = cls == GoldClass::M;
    if (predicted) ++report.predicted_positive;
    if (positive) ++report.gold_positive;
    if (predicted && positive) ++report.true_positive;
  }
  if (report.predicted_positive == 0) {
    report.no_predictions = true;
    report.prf.precision = 0.0;
  } else {
    report.prf.precision = 100.0 *
                           static_cast<double>(report.true_positive) /
                           static_cast<double>(report.predicted_positive);
  }
  report.prf.recall = report.gold_positive == 0
                          ? 0.0
                          : 100.0 * static_cast<double>(report.true_positive) /
                                static_cast<double>(report.gold_positive);
  report.prf.f_score = f_from_pr(report.prf.precision, report.prf.recall);
  return report;
}

bool baseline_classify(const CandidateBigram& cand, const Corpus& corpus,
                       const std::string& determiner_pos) {
  auto nominal_or_det = [&](const Token& t) {
    if (t.pos == determiner_pos) return true;
    return t.chunk_pos != ChunkPos::Outside && t.chunk_label == "NP";
  };
  for (const auto& [si, ti] : cand.positions) {
    if (si >= corpus.sentences.size()) {
      throw std::invalid_argument("candidate position outside the corpus");
    }
    const Sentence& sent = corpus.sentences[si];
    if (ti + 1 >= sent.tokens.size()) {
      throw std::invalid_argument("candidate position outside the sentence");
    }
    // the NP chunk instance holding both tokens of this occurrence
    auto spans = chunk_spans(sent);
    const ChunkSpan* enclosing = nullptr;
    for (const ChunkSpan& span : spans) {
      if (span.label == "NP" && ti >= span.begin && ti + 1 < span.end) {
        enclosing = &span;
        break;
      }
    }
    if (enclosing == nullptr) {
      throw std::invalid_argument(
          "candidate occurrence is not inside an NP chunk");
    }
    if (enclosing->begin > 0 &&
        nominal_or_det(sent.tokens[enclosing->begin - 1])) {
      return false;
    }
    if (enclosing->end < sent.tokens.size() &&
        nominal_or_det(sent.tokens[enclosing->end])) {
      return false;
    }
  }
  return true;
}

double cohen_kappa(
    const std::vector<std::pair<std::string, std::string>>& items) {
  if (items.size() < 2) {
    throw std::invalid_argument("kappa needs at least 2 items");
  }
  std::map<std::string, std::size_t> count_a;
  std::map<std::string, std::size_t> count_b;
  std::size_t agree = 0;
  for (const auto& [a, b] : items) {
    ++count_a[a];
    ++count_b[b];
    if (a == b) ++agree;
  }
  double n = static_cast<double>(items.size());
  double p_o = static_cast<double>(agree) / n;
  double p_e = 0.0;
  for (const auto& [label, ca] : count_a) {
    auto it = count_b.find(label);
    if (it == count_b.end()) continue;
    p_e += (static_cast<double>(ca) / n) *
           (static_cast<double>(it->second) / n);
  }
  if (p_e >= 1.0) return 1.0;  // both annotators constant and identical
  return (p_o - p_e) / (1.0 - p_e);
}

double masi(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t inter = 0;
  for (const auto& x : a) {
    if (b.count(x) > 0) ++inter;
  }
  std::size_t uni = a.size() + b.size() - inter;
  double j = static_cast<double>(inter) / static_cast<double>(uni);
  double m;
  if (a == b) {
    m = 1.0;
  } else if (inter == a.size() || inter == b.size()) {
    m = 2.0 / 3.0;  // proper subset either way
  } else if (inter > 0) {
    m = 1.0 / 3.0;
  } else {
    m = 0.0;
  }
  return j * m;
}

}  // namespace mwe
