#include "mwe/corpus.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "mwe/error.hpp"
#include "mwe/formats.hpp"

namespace mwe {

std::set<std::string> HeuristicsConfig::default_m1_inflections() {
  return {kNullInflection, "র", "এর", "এ", "য়", "য়ে"};
}

namespace {

ChunkPos parse_chunk_field(const std::string& field, std::string& label,
                           std::size_t lineno) {
  if (field == "O") {
    label.clear();
    return ChunkPos::Outside;
  }
  auto colon = field.rfind(':');
  if (colon == std::string::npos || colon == 0 ||
      colon + 2 != field.size()) {
    throw ParseError(lineno,
                     "bad chunk field '" + field +
                         "' (expected LABEL:B, LABEL:I or O)");
  }
  label = field.substr(0, colon);
  char marker = field[colon + 1];
  if (marker == 'B') return ChunkPos::Begin;
  if (marker == 'I') return ChunkPos::Inside;
  throw ParseError(lineno, "bad chunk marker '" + std::string(1, marker) +
                               "' (expected B or I)");
}

}  // namespace

Corpus parse_corpus(std::istream& in) {
  Corpus corpus;
  Sentence current;
  std::string line;
  std::size_t lineno = 0;

  auto flush_sentence = [&] {
    if (!current.tokens.empty()) {
      corpus.sentences.push_back(std::move(current));
      current = Sentence{};
    }
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush_sentence();
      continue;
    }
    auto cols = split_tsv(line);
    if (cols.size() != 5) {
      throw ParseError(lineno, "expected 5 tab-separated columns, got " +
                                   std::to_string(cols.size()));
    }
    for (const auto& c : cols) {
      if (c.empty()) throw ParseError(lineno, "empty column");
    }
    Token tok;
    tok.surface = cols[0];
    tok.root = cols[1];
    tok.pos = cols[2];
    tok.chunk_pos = parse_chunk_field(cols[3], tok.chunk_label, lineno);
    tok.inflection = cols[4];
    if (current.tokens.empty() && tok.chunk_pos == ChunkPos::Inside) {
      throw ParseError(lineno, "inside-chunk token starts a sentence");
    }
    current.tokens.push_back(std::move(tok));
  }
  flush_sentence();
  return corpus;
}

Corpus parse_corpus_text(const std::string& text) {
  std::istringstream in(text);
  return parse_corpus(in);
}

Corpus parse_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  return parse_corpus(in);
}

std::vector<ChunkSpan> chunk_spans(const Sentence& sentence) {
  std::vector<ChunkSpan> spans;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const Token& tok = sentence.tokens[i];
    if (tok.chunk_pos == ChunkPos::Outside) continue;
    bool continues = tok.chunk_pos == ChunkPos::Inside && !spans.empty() &&
                     spans.back().end == i &&
                     spans.back().label == tok.chunk_label;
    if (continues) {
      spans.back().end = i + 1;
    } else {
      spans.push_back({tok.chunk_label, i, i + 1});
    }
  }
  return spans;
}

std::vector<CandidateBigram> extract_candidates(const Corpus& corpus,
                                                const HeuristicsConfig& cfg,
                                                ExtractStats* stats) {
  if (!cfg.valid()) {
    throw std::invalid_argument(
        "heuristics config: allowed_pos must be non-empty and the "
        "inflection whitelist must contain the null marker");
  }
  ExtractStats local;
  std::vector<CandidateBigram> out;
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  auto allowed = [&](const Token& t) {
    return cfg.allowed_pos.count(t.pos) > 0;
  };

  for (std::size_t si = 0; si < corpus.sentences.size(); ++si) {
    const Sentence& sent = corpus.sentences[si];
    ++local.sentences;
    local.tokens += sent.tokens.size();
    for (const Token& t : sent.tokens) {
      if (allowed(t)) ++local.noun_tokens;
    }
    auto spans = chunk_spans(sent);
    // span index covering each token, or npos when outside
    std::vector<std::size_t> span_of(sent.tokens.size(), std::string::npos);
    for (std::size_t k = 0; k < spans.size(); ++k) {
      for (std::size_t i = spans[k].begin; i < spans[k].end; ++i) {
        span_of[i] = k;
      }
    }
    for (std::size_t i = 0; i + 1 < sent.tokens.size(); ++i) {
      const Token& a = sent.tokens[i];
      const Token& b = sent.tokens[i + 1];
      if (!allowed(a) || !allowed(b)) continue;
      ++local.adjacent_noun_pairs;
      bool same_np = span_of[i] != std::string::npos &&
                     span_of[i] == span_of[i + 1] &&
                     spans[span_of[i]].label == "NP";
      if (!same_np) {
        ++local.rejected_chunk;
        continue;
      }
      if (cfg.allowed_m1_inflections.count(a.inflection) == 0) {
        ++local.rejected_inflection;
        continue;
      }
      ++local.accepted_occurrences;
      const ChunkSpan& span = spans[span_of[i]];
      std::size_t nouns_in_chunk = 0;
      for (std::size_t j = span.begin; j < span.end; ++j) {
        if (allowed(sent.tokens[j])) ++nouns_in_chunk;
      }
      auto key = std::make_pair(a.root, b.root);
      auto it = index.find(key);
      if (it == index.end()) {
        CandidateBigram cand;
        cand.m1 = a.root;
        cand.m2 = b.root;
        cand.surface_pair = {a.surface, b.surface};
        index.emplace(key, out.size());
        out.push_back(std::move(cand));
        it = index.find(key);
      }
      CandidateBigram& cand = out[it->second];
      cand.freq_pair += 1;
      cand.in_longer_chunk = cand.in_longer_chunk || nouns_in_chunk > 2;
      cand.positions.emplace_back(si, i);
    }
  }

  auto unigrams = unigram_counts(corpus, cfg.allowed_pos);
  for (CandidateBigram& cand : out) {
    cand.freq_m1 = unigrams[cand.m1];
    cand.freq_m2 = unigrams[cand.m2];
  }
  if (stats) *stats = local;
  return out;
}

std::map<std::string, std::uint64_t> unigram_counts(
    const Corpus& corpus, const std::set<std::string>& allowed_pos) {
  std::map<std::string, std::uint64_t> counts;
  for (const Sentence& sent : corpus.sentences) {
    for (const Token& tok : sent.tokens) {
      if (allowed_pos.count(tok.pos) > 0) counts[tok.root] += 1;
    }
  }
  return counts;
}

std::uint64_t count_noun_pair_windows(
    const Corpus& corpus, const std::set<std::string>& allowed_pos) {
  std::uint64_t windows = 0;
  for (const Sentence& sent : corpus.sentences) {
    for (std::size_t i = 0; i + 1 < sent.tokens.size(); ++i) {
      if (allowed_pos.count(sent.tokens[i].pos) > 0 &&
          allowed_pos.count(sent.tokens[i + 1].pos) > 0) {
        ++windows;
      }
    }
  }
  return windows;
}

std::set<std::string> corpus_noun_roots(
    const Corpus& corpus, const std::set<std::string>& allowed_pos) {
  std::set<std::string> roots;
  for (const Sentence& sent : corpus.sentences) {
    for (const Token& tok : sent.tokens) {
      if (allowed_pos.count(tok.pos) > 0) roots.insert(tok.root);
    }
  }
  return roots;
}

}  // namespace mwe
