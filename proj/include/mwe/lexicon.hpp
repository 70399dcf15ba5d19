#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace mwe {

/// One sense of a dictionary entry: the synonyms that share that sense.
struct SenseGroup {
  std::vector<std::string> members;  // ordered, no duplicates
  std::string pos_marker;
  int sense_index = 1;  // 1-based position within the entry

  bool operator==(const SenseGroup&) const = default;
};

struct LexiconEntry {
  std::string headword;
  std::vector<SenseGroup> senses;

  bool operator==(const LexiconEntry&) const = default;
};

/// The restructured monolingual dictionary: headword entries plus the
/// reverse index noun -> headwords whose sense groups contain it.
/// Built once by parse_lexicon, then immutable; lookups are thread-safe.
class Lexicon {
 public:
  const std::map<std::string, LexiconEntry>& entries() const {
    return entries_;
  }
  const std::map<std::string, std::set<std::string>>& reverse() const {
    return reverse_;
  }

  bool contains(const std::string& headword) const {
    return entries_.count(headword) > 0;
  }

  /// Minimum common-prefix length (in code points) for the unknown-noun
  /// fallback used by synset_of.
  std::size_t fallback_min_prefix = 3;

  /// Adds a fully formed entry and indexes its members.  Throws
  /// std::invalid_argument on a duplicate headword or an empty entry.
  void add_entry(LexiconEntry entry);

  bool operator==(const Lexicon& other) const {
    return entries_ == other.entries_;
  }

 private:
  std::map<std::string, LexiconEntry> entries_;
  std::map<std::string, std::set<std::string>> reverse_;
};

/// Parses the lexicon format: one entry per line,
/// "headword<TAB>pos_marker<TAB>sense-field".  Within the sense field `;`
/// separates sense groups and `,` separates the synonyms of one group.  A
/// group whose first member is "~suffix" starts a sub-entry headword+suffix;
/// the rest of that group and every following group (until the next tilde)
/// become the sub-entry's senses.  Throws ParseError on duplicate
/// headwords, an empty sense field, or a bare "~".
Lexicon parse_lexicon(std::istream& in);
Lexicon parse_lexicon_text(const std::string& text);
Lexicon parse_lexicon_file(const std::string& path);

/// Writes one line per entry (tilde sub-entries come out as plain entries);
/// parse(serialize(lex)) reproduces lex exactly.
void serialize_lexicon(const Lexicon& lex, std::ostream& out);
std::string serialize_lexicon_text(const Lexicon& lex);

/// Headwords whose sense groups contain the noun.  Unknown nouns fall back
/// to the reverse-index key sharing the longest common prefix (at least
/// lex.fallback_min_prefix code points; the key preceding the noun in sort
/// order wins ties).  Returns the empty set when nothing matches.
std::set<std::string> synset_of(const Lexicon& lex, const std::string& noun);

/// Thesaurus dump: "noun<TAB>headword1|headword2|..." per reverse-index key.
void write_thesaurus(const Lexicon& lex, std::ostream& out);

/// Code points shared by the longest common prefix of two UTF-8 strings.
std::size_t common_prefix_codepoints(const std::string& a,
                                     const std::string& b);

}  // namespace mwe
