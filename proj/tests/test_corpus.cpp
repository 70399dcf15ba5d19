#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "mwe/corpus.hpp"
#include "mwe/error.hpp"
#include "test_util.hpp"

using namespace mwe;

namespace {

HeuristicsConfig fixture_config() {
  HeuristicsConfig cfg;
  cfg.allowed_m1_inflections = {kNullInflection, "er", "r", "e", "y", "ye"};
  return cfg;
}

// independent merge used by the concatenation property
std::vector<CandidateBigram> merge_extractions(
    std::vector<CandidateBigram> a, const std::vector<CandidateBigram>& b,
    std::size_t sentence_offset) {
  for (const CandidateBigram& cand : b) {
    auto it = std::find_if(a.begin(), a.end(), [&](const CandidateBigram& x) {
      return x.m1 == cand.m1 && x.m2 == cand.m2;
    });
    if (it == a.end()) {
      a.push_back(cand);
      it = std::prev(a.end());
      it->positions.clear();
    } else {
      it->freq_pair += cand.freq_pair;
      it->in_longer_chunk = it->in_longer_chunk || cand.in_longer_chunk;
    }
    for (auto [si, ti] : cand.positions) {
      it->positions.emplace_back(si + sentence_offset, ti);
    }
  }
  return a;
}

}  // namespace

TEST_CASE("parse_corpus keeps sentences, tokens and fields") {
  Corpus corpus = parse_corpus_file(data_path("corpus_small.tsv"));
  REQUIRE(corpus.sentences.size() == 2);
  CHECK(corpus.sentences[0].tokens.size() == 4);
  CHECK(corpus.sentences[1].tokens.size() == 3);

  const Token& t = corpus.sentences[0].tokens[1];
  CHECK(t.surface == "hater");
  CHECK(t.root == "hat");
  CHECK(t.pos == "NN");
  CHECK(t.chunk_label == "NP");
  CHECK(t.chunk_pos == ChunkPos::Begin);
  CHECK(t.inflection == "er");
  CHECK(corpus.sentences[0].tokens[0].chunk_pos == ChunkPos::Outside);
}

TEST_CASE("parse_corpus rejects malformed lines with the line number") {
  try {
    parse_corpus_text("a\tb\tNN\tNP:B\t0\nx\ty\tNN\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("columns") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_corpus_text("a\tb\tNN\tNP:X\t0\n"), ParseError);
  CHECK_THROWS_AS(parse_corpus_text("a\tb\tNN\tNP\t0\n"), ParseError);
  CHECK_THROWS_AS(parse_corpus_text("a\tb\tNN\tNP:I\t0\n"), ParseError);
  CHECK_THROWS_AS(parse_corpus_text("a\t\tNN\tNP:B\t0\n"), ParseError);
}

TEST_CASE("trailing blank lines do not change the parse") {
  std::string base = "a\ta\tNN\tNP:B\t0\nb\tb\tNN\tNP:I\t0\n";
  Corpus plain = parse_corpus_text(base);
  Corpus padded = parse_corpus_text(base + "\n\n\n");
  CHECK(plain == padded);
  CHECK(parse_corpus_text("").sentences.empty());
}

TEST_CASE("extract_candidates applies the three heuristics") {
  HeuristicsConfig cfg;  // default whitelist includes only the null marker
                         // among ASCII values

  SUBCASE("adjacent nouns in one NP chunk with null inflection") {
    auto corpus = parse_corpus_text(
        "a\ta\tNN\tNP:B\t0\n"
        "b\tb\tNN\tNP:I\t0\n");
    auto cands = extract_candidates(corpus, cfg);
    REQUIRE(cands.size() == 1);
    CHECK(cands[0].m1 == "a");
    CHECK(cands[0].m2 == "b");
    CHECK(cands[0].freq_pair == 1);
    CHECK_FALSE(cands[0].in_longer_chunk);
  }

  SUBCASE("nouns spanning two NP chunks are rejected") {
    auto corpus = parse_corpus_text(
        "a\ta\tNN\tNP:B\t0\n"
        "b\tb\tNN\tNP:B\t0\n");
    CHECK(extract_candidates(corpus, cfg).empty());
  }

  SUBCASE("non-NP chunks are rejected") {
    auto corpus = parse_corpus_text(
        "a\ta\tNN\tVG:B\t0\n"
        "b\tb\tNN\tVG:I\t0\n");
    CHECK(extract_candidates(corpus, cfg).empty());
  }

  SUBCASE("m1 inflection must be whitelisted") {
    auto corpus = parse_corpus_text(
        "ak\ta\tNN\tNP:B\tke\n"
        "b\tb\tNN\tNP:I\t0\n");
    CHECK(extract_candidates(corpus, cfg).empty());
  }
}

TEST_CASE("corpus_main yields exactly the four hand-checked candidates") {
  // Hand enumeration of every adjacent pair: candidates are
  // hat+panch (x2), bibaha+barshiki, mati+manus, griho+bhaban (x2);
  // ghar+ram spans two chunks, ghar(ke)+manus fails the inflection
  // whitelist, ei+boi fails POS.
  Corpus corpus = parse_corpus_file(data_path("corpus_main.tsv"));
  ExtractStats stats;
  auto cands = extract_candidates(corpus, fixture_config(), &stats);

  REQUIRE(cands.size() == 4);
  CHECK(cands[0].m1 == "hat");
  CHECK(cands[0].m2 == "panch");
  CHECK(cands[0].freq_pair == 2);
  CHECK(cands[0].freq_m1 == 2);
  CHECK(cands[0].freq_m2 == 2);
  CHECK(cands[0].surface_pair.first == "hater");
  CHECK(cands[0].positions ==
        std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {2, 0}});

  CHECK(cands[1].m1 == "bibaha");
  CHECK(cands[1].freq_pair == 1);
  CHECK(cands[2].m1 == "mati");
  CHECK(cands[2].freq_m2 == 2);  // manus also appears in the rejected pair
  CHECK(cands[3].m1 == "griho");
  CHECK(cands[3].freq_pair == 2);

  CHECK(stats.rejected_chunk == 1);
  CHECK(stats.rejected_inflection == 1);
  CHECK(stats.accepted_occurrences == 6);
  CHECK(count_noun_pair_windows(corpus) == 8);
}

TEST_CASE("chunks with more than two nouns set in_longer_chunk") {
  Corpus corpus = parse_corpus_file(data_path("corpus_longchunk.tsv"));
  auto cands = extract_candidates(corpus, fixture_config());
  REQUIRE(cands.size() == 2);
  CHECK(cands[0].m1 == "porbot");
  CHECK(cands[0].in_longer_chunk);
  CHECK(cands[1].m1 == "sohor");
  CHECK(cands[1].in_longer_chunk);
}

TEST_CASE("unigram_counts tallies noun roots") {
  auto corpus = parse_corpus_text(
      "ghar\tghar\tNN\tNP:B\t0\n"
      "gharer\tghar\tNN\tNP:B\ter\n"
      "\n"
      "ghar\tghar\tNN\tNP:B\t0\n"
      "jay\tjaoya\tVB\tVG:B\ty\n");
  auto counts = unigram_counts(corpus);
  CHECK(counts.at("ghar") == 3);
  CHECK(counts.count("jaoya") == 0);
  CHECK(unigram_counts(Corpus{}).empty());
}

TEST_CASE("unigram_counts matches an independent tally") {
  Corpus corpus = parse_corpus_file(data_path("corpus_main.tsv"));
  auto counts = unigram_counts(corpus);

  std::map<std::string, std::uint64_t> oracle;
  std::uint64_t nouns = 0;
  for (const Sentence& s : corpus.sentences) {
    for (const Token& t : s.tokens) {
      if (t.pos == "NN" || t.pos == "NNP") {
        ++oracle[t.root];
        ++nouns;
      }
    }
  }
  CHECK(counts == oracle);
  std::uint64_t total = 0;
  for (const auto& [root, n] : counts) total += n;
  CHECK(total == nouns);
}

TEST_CASE("emitted positions re-satisfy the heuristics") {
  Corpus corpus = parse_corpus_file(data_path("corpus_main.tsv"));
  HeuristicsConfig cfg = fixture_config();
  auto cands = extract_candidates(corpus, cfg);
  for (const CandidateBigram& cand : cands) {
    REQUIRE(cand.positions.size() == cand.freq_pair);
    for (auto [si, ti] : cand.positions) {
      const Sentence& sent = corpus.sentences.at(si);
      const Token& a = sent.tokens.at(ti);
      const Token& b = sent.tokens.at(ti + 1);
      CHECK(a.root == cand.m1);
      CHECK(b.root == cand.m2);
      CHECK(cfg.allowed_pos.count(a.pos) == 1);
      CHECK(cfg.allowed_pos.count(b.pos) == 1);
      CHECK(cfg.allowed_m1_inflections.count(a.inflection) == 1);
      // same NP chunk instance, re-derived independently
      bool same_chunk = false;
      for (const ChunkSpan& span : chunk_spans(sent)) {
        if (span.label == "NP" && ti >= span.begin && ti + 1 < span.end) {
          same_chunk = true;
        }
      }
      CHECK(same_chunk);
    }
  }
}

TEST_CASE("extraction distributes over corpus concatenation") {
  Corpus a = parse_corpus_file(data_path("corpus_main.tsv"));
  Corpus b = parse_corpus_file(data_path("corpus_longchunk.tsv"));
  HeuristicsConfig cfg = fixture_config();

  SUBCASE("disjoint vocabularies") {
    Corpus both = a;
    both.sentences.insert(both.sentences.end(), b.sentences.begin(),
                          b.sentences.end());
    auto merged = merge_extractions(extract_candidates(a, cfg),
                                    extract_candidates(b, cfg),
                                    a.sentences.size());
    auto direct = extract_candidates(both, cfg);
    REQUIRE(merged.size() == direct.size());
    for (std::size_t i = 0; i < direct.size(); ++i) {
      CHECK(direct[i].m1 == merged[i].m1);
      CHECK(direct[i].m2 == merged[i].m2);
      CHECK(direct[i].freq_pair == merged[i].freq_pair);
      CHECK(direct[i].in_longer_chunk == merged[i].in_longer_chunk);
      CHECK(direct[i].positions == merged[i].positions);
    }
  }

  SUBCASE("self concatenation doubles pair frequencies") {
    Corpus both = a;
    both.sentences.insert(both.sentences.end(), a.sentences.begin(),
                          a.sentences.end());
    auto merged = merge_extractions(extract_candidates(a, cfg),
                                    extract_candidates(a, cfg),
                                    a.sentences.size());
    auto direct = extract_candidates(both, cfg);
    REQUIRE(merged.size() == direct.size());
    for (std::size_t i = 0; i < direct.size(); ++i) {
      CHECK(direct[i].freq_pair == merged[i].freq_pair);
      CHECK(direct[i].freq_m1 == 2 * extract_candidates(a, cfg)[i].freq_m1);
      CHECK(direct[i].positions == merged[i].positions);
    }
  }
}

TEST_CASE("malformed corpus input always raises ParseError") {
  std::mt19937 rng(71);
  const std::string alphabet = "ab\tNP:BIO0\n\r:x";
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    std::size_t len = rng() % 60;
    for (std::size_t i = 0; i < len; ++i) {
      text += alphabet[rng() % alphabet.size()];
    }
    try {
      Corpus corpus = parse_corpus_text(text);
      for (const Sentence& s : corpus.sentences) {
        CHECK_FALSE(s.tokens.empty());
      }
    } catch (const ParseError&) {
      // rejected input must name a line
    }
  }
}

TEST_CASE("shrinking the inflection whitelist never adds candidates") {
  Corpus corpus = parse_corpus_file(data_path("corpus_main.tsv"));
  HeuristicsConfig full = fixture_config();
  auto baseline = extract_candidates(corpus, full);

  std::mt19937 rng(7);
  std::vector<std::string> removable(full.allowed_m1_inflections.begin(),
                                     full.allowed_m1_inflections.end());
  for (int trial = 0; trial < 20; ++trial) {
    HeuristicsConfig shrunk = full;
    for (const std::string& infl : removable) {
      if (infl != kNullInflection && rng() % 2 == 0) {
        shrunk.allowed_m1_inflections.erase(infl);
      }
    }
    auto smaller = extract_candidates(corpus, shrunk);
    CHECK(smaller.size() <= baseline.size());
    for (const CandidateBigram& cand : smaller) {
      auto it = std::find_if(baseline.begin(), baseline.end(),
                             [&](const CandidateBigram& x) {
                               return x.m1 == cand.m1 && x.m2 == cand.m2;
                             });
      REQUIRE(it != baseline.end());
      CHECK(cand.freq_pair <= it->freq_pair);
    }
  }
}
