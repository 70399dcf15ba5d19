#include "mwe/assoc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mwe {

ContingencyTable contingency_from_candidate(const CandidateBigram& cand,
                                            std::uint64_t windows) {
  if (cand.freq_pair == 0 || cand.freq_m1 < cand.freq_pair ||
      cand.freq_m2 < cand.freq_pair) {
    throw std::domain_error("candidate frequencies are inconsistent: " +
                            cand.m1 + " " + cand.m2);
  }
  std::uint64_t occupied = cand.freq_m1 + cand.freq_m2 - cand.freq_pair;
  if (occupied > windows) {
    throw std::domain_error(
        "candidate frequencies exceed the window universe for " + cand.m1 +
        " " + cand.m2);
  }
  ContingencyTable t;
  t.n11 = cand.freq_pair;
  t.n12 = cand.freq_m1 - cand.freq_pair;
  t.n21 = cand.freq_m2 - cand.freq_pair;
  t.n22 = windows - occupied;
  return t;
}

double pmi(const ContingencyTable& t) {
  if (t.n11 == 0 || t.f1() == 0 || t.f2() == 0) {
    throw std::domain_error("pmi needs n11 >= 1 and nonzero marginals");
  }
  double n11 = static_cast<double>(t.n11);
  double total = static_cast<double>(t.total());
  return std::log2(n11 * total /
                   (static_cast<double>(t.f1()) * static_cast<double>(t.f2())));
}

double llr(const ContingencyTable& t) {
  std::uint64_t total = t.total();
  if (total == 0) throw std::domain_error("llr needs a non-empty table");
  // G² in the algebraic form 2(Σ n log n - Σ row log row - Σ col log col
  // + N log N); the 0·log 0 terms vanish.
  auto nlogn = [](std::uint64_t n) {
    return n == 0 ? 0.0
                  : static_cast<double>(n) * std::log(static_cast<double>(n));
  };
  double cells = nlogn(t.n11) + nlogn(t.n12) + nlogn(t.n21) + nlogn(t.n22);
  double rows = nlogn(t.n11 + t.n12) + nlogn(t.n21 + t.n22);
  double cols = nlogn(t.n11 + t.n21) + nlogn(t.n12 + t.n22);
  double g = 2.0 * (cells - rows - cols + nlogn(total));
  return std::max(0.0, g);
}

double phi(const ContingencyTable& t) {
  double r1 = static_cast<double>(t.n11 + t.n12);
  double r2 = static_cast<double>(t.n21 + t.n22);
  double c1 = static_cast<double>(t.n11 + t.n21);
  double c2 = static_cast<double>(t.n12 + t.n22);
  if (r1 == 0 || r2 == 0 || c1 == 0 || c2 == 0) {
    throw std::domain_error("phi needs all four marginals nonzero");
  }
  double num = static_cast<double>(t.n11) * static_cast<double>(t.n22) -
               static_cast<double>(t.n12) * static_cast<double>(t.n21);
  return num / std::sqrt(r1 * r2 * c1 * c2);
}

double cooccurrence(const ContingencyTable& t) {
  std::uint64_t f1 = t.f1();
  std::uint64_t f2 = t.f2();
  if (f1 == 0 || f2 == 0) {
    throw std::domain_error("cooccurrence needs both components to occur");
  }
  if (t.n11 == 0) return 0.0;
  return static_cast<double>(t.n11) / static_cast<double>(f1 + f2 - t.n11);
}

double significance(const ContingencyTable& t) {
  std::uint64_t f1 = t.f1();
  std::uint64_t f2 = t.f2();
  if (f1 == 0 || f2 == 0) {
    throw std::domain_error("significance needs both components to occur");
  }
  double n11 = static_cast<double>(t.n11);
  return (2.0 * n11 / static_cast<double>(f1 + f2)) *
         (1.0 - std::exp(-n11));
}

const std::map<std::string, MeasureFn>& standard_measures() {
  static const std::map<std::string, MeasureFn> measures = {
      {kLlr, llr},
      {kPmi, pmi},
      {kCooccurrence, cooccurrence},
      {kPhi, phi},
      {kSignificance, significance},
  };
  return measures;
}

bool WeightConfig::valid() const {
  return w_cooc >= 0.0 && w_phi >= 0.0 && w_sig >= 0.0 &&
         std::abs(w_cooc + w_phi + w_sig - 1.0) <= 1e-9;
}

std::vector<ScoredCandidate> score_candidates(
    const std::vector<CandidateBigram>& candidates, std::uint64_t windows,
    const std::map<std::string, MeasureFn>& measures) {
  std::vector<ScoredCandidate> scored;
  scored.reserve(candidates.size());
  for (const CandidateBigram& cand : candidates) {
    ContingencyTable t = contingency_from_candidate(cand, windows);
    ScoredCandidate s;
    s.candidate = cand;
    for (const auto& [name, fn] : measures) {
      s.raw[name] = fn(t);
    }
    scored.push_back(std::move(s));
  }
  return scored;
}

std::vector<ScoredCandidate> combine(std::vector<ScoredCandidate> scored,
                                     const WeightConfig& w) {
  if (scored.empty()) {
    throw std::invalid_argument("combine needs at least one candidate");
  }
  if (!w.valid()) {
    throw std::invalid_argument(
        "weights must be nonnegative and sum to 1");
  }
  const char* combined_measures[] = {kCooccurrence, kPhi, kSignificance};
  for (const char* name : combined_measures) {
    double lo = scored.front().raw.at(name);
    double hi = lo;
    for (const ScoredCandidate& s : scored) {
      lo = std::min(lo, s.raw.at(name));
      hi = std::max(hi, s.raw.at(name));
    }
    for (ScoredCandidate& s : scored) {
      // all-equal raw scores normalize to 0 by convention
      s.normalized[name] =
          hi > lo ? (s.raw.at(name) - lo) / (hi - lo) : 0.0;
    }
  }
  for (ScoredCandidate& s : scored) {
    s.combined = w.w_cooc * s.normalized.at(kCooccurrence) +
                 w.w_phi * s.normalized.at(kPhi) +
                 w.w_sig * s.normalized.at(kSignificance);
  }
  return scored;
}

RankedList rank_into_bins(const std::vector<ScoredCandidate>& scored, int k,
                          const ScoreKey& key) {
  if (scored.empty()) {
    throw std::invalid_argument("rank_into_bins needs a non-empty list");
  }
  if (k < 1) throw std::invalid_argument("rank_into_bins needs k >= 1");

  double lo = key(scored.front());
  double hi = lo;
  for (const ScoredCandidate& s : scored) {
    lo = std::min(lo, key(s));
    hi = std::max(hi, key(s));
  }

  RankedList ranked;
  ranked.bins.assign(static_cast<std::size_t>(k), {});
  double range = hi - lo;
  for (const ScoredCandidate& s : scored) {
    int bin = 1;
    if (range > 0.0) {
      // v sits m interval-widths above the minimum when
      // (v - lo) * k >= m * range; comparing products instead of dividing
      // keeps values lying exactly on an interval edge in the higher bin
      double scaled = (key(s) - lo) * static_cast<double>(k);
      int steps = 0;
      for (int m = k - 1; m >= 1; --m) {
        if (scaled >= static_cast<double>(m) * range) {
          steps = m;
          break;
        }
      }
      bin = k - steps;
    }
    ranked.bins[static_cast<std::size_t>(bin - 1)].push_back(s);
  }
  for (auto& bin : ranked.bins) {
    std::stable_sort(bin.begin(), bin.end(),
                     [&](const ScoredCandidate& a, const ScoredCandidate& b) {
                       return key(a) > key(b);
                     });
  }
  return ranked;
}

}  // namespace mwe
