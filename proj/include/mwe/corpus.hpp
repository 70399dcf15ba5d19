#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mwe {

/// Position of a token relative to its chunk, BIO style.
enum class ChunkPos { Begin, Inside, Outside };

/// The literal inflection string that marks "no inflection" in corpus files.
inline constexpr const char* kNullInflection = "0";

struct Token {
  std::string surface;
  std::string root;
  std::string pos;          // POS tag, e.g. "NN", "NNP", "DT"
  std::string chunk_label;  // empty when chunk_pos == Outside
  ChunkPos chunk_pos = ChunkPos::Outside;
  std::string inflection;   // kNullInflection when uninflected

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::vector<Token> tokens;

  bool operator==(const Sentence&) const = default;
};

struct Corpus {
  std::vector<Sentence> sentences;

  bool operator==(const Corpus&) const = default;
};

/// A contiguous chunk instance within one sentence: tokens [begin, end).
struct ChunkSpan {
  std::string label;
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// One extracted noun-noun candidate, merged over all occurrences of the
/// same (m1 root, m2 root) pair.  `positions` holds (sentence index, index
/// of the first token) per occurrence and is filled by extract_candidates;
/// candidates loaded back from a candidates file have no positions.
struct CandidateBigram {
  std::string m1;  // root of the first component
  std::string m2;  // root of the second component
  std::pair<std::string, std::string> surface_pair;  // first occurrence
  std::uint64_t freq_pair = 0;
  std::uint64_t freq_m1 = 0;
  std::uint64_t freq_m2 = 0;
  bool in_longer_chunk = false;  // some occurrence sat in a chunk with >2 nouns
  std::vector<std::pair<std::size_t, std::size_t>> positions;
};

/// Morpho-syntactic candidate filter settings.  Both components must carry
/// an allowed POS tag and sit inside one NP chunk instance; the first
/// component's inflection must be whitelisted, the second may carry any.
struct HeuristicsConfig {
  std::set<std::string> allowed_pos = {"NN", "NNP"};
  std::set<std::string> allowed_m1_inflections = default_m1_inflections();

  /// The six first-component inflections accepted by default: the null
  /// marker plus the Bengali suffixes -r, -er, -e, -y, -ye.
  static std::set<std::string> default_m1_inflections();

  bool valid() const {
    return !allowed_pos.empty() &&
           allowed_m1_inflections.count(kNullInflection) > 0;
  }
};

/// Counters describing what extract_candidates saw and filtered.
struct ExtractStats {
  std::uint64_t sentences = 0;
  std::uint64_t tokens = 0;
  std::uint64_t noun_tokens = 0;         // tokens with an allowed POS
  std::uint64_t adjacent_noun_pairs = 0; // both tokens allowed POS
  std::uint64_t rejected_chunk = 0;      // noun pair not inside one NP chunk
  std::uint64_t rejected_inflection = 0; // m1 inflection not whitelisted
  std::uint64_t accepted_occurrences = 0;
};

/// Parses the annotated corpus format: one token per line, five
/// tab-separated columns (surface, root, pos, chunk, inflection), blank
/// line ends a sentence.  The chunk column is "LABEL:B", "LABEL:I" or "O".
/// Throws ParseError (with line number) on malformed lines; an empty
/// stream yields an empty corpus.
Corpus parse_corpus(std::istream& in);
Corpus parse_corpus_text(const std::string& text);
Corpus parse_corpus_file(const std::string& path);

/// Chunk instances of a sentence in left-to-right order.  An Inside token
/// whose label differs from the open chunk starts a new instance.
std::vector<ChunkSpan> chunk_spans(const Sentence& sentence);

/// Applies the candidate heuristics to every adjacent token pair and
/// merges occurrences by root pair, in first-occurrence order.
std::vector<CandidateBigram> extract_candidates(const Corpus& corpus,
                                                const HeuristicsConfig& cfg,
                                                ExtractStats* stats = nullptr);

/// Occurrence count per noun root (tokens with an allowed POS tag).
std::map<std::string, std::uint64_t> unigram_counts(
    const Corpus& corpus,
    const std::set<std::string>& allowed_pos = {"NN", "NNP"});

/// Number of adjacent same-sentence token pairs where both tokens carry an
/// allowed POS tag; the event universe for the association measures.
std::uint64_t count_noun_pair_windows(
    const Corpus& corpus,
    const std::set<std::string>& allowed_pos = {"NN", "NNP"});

/// Distinct noun roots present in the corpus.
std::set<std::string> corpus_noun_roots(
    const Corpus& corpus,
    const std::set<std::string>& allowed_pos = {"NN", "NNP"});

}  // namespace mwe
