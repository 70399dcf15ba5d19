#include "mwe/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mwe/error.hpp"

namespace mwe {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_trim(const std::string& field, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(field);
  while (std::getline(in, cur, sep)) parts.push_back(trim(cur));
  return parts;
}

bool is_continuation_byte(unsigned char c) { return (c & 0xC0) == 0x80; }

}  // namespace

void Lexicon::add_entry(LexiconEntry entry) {
  if (entry.headword.empty() || entry.senses.empty()) {
    throw std::invalid_argument("lexicon entry must have a headword and at "
                                "least one sense group");
  }
  if (entries_.count(entry.headword) > 0) {
    throw std::invalid_argument("duplicate headword: " + entry.headword);
  }
  for (const SenseGroup& g : entry.senses) {
    for (const std::string& member : g.members) {
      reverse_[member].insert(entry.headword);
    }
  }
  entries_.emplace(entry.headword, std::move(entry));
}

Lexicon parse_lexicon(std::istream& in) {
  Lexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    auto tab1 = line.find('\t');
    auto tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw ParseError(lineno,
                       "expected headword<TAB>pos<TAB>sense-field");
    }
    std::string headword = trim(line.substr(0, tab1));
    std::string pos_marker = trim(line.substr(tab1 + 1, tab2 - tab1 - 1));
    std::string sense_field = line.substr(tab2 + 1);
    if (headword.empty()) throw ParseError(lineno, "empty headword");
    if (trim(sense_field).empty()) {
      throw ParseError(lineno, "empty synonym field for '" + headword + "'");
    }

    // The sense field describes the entry itself plus zero or more tilde
    // sub-entries; a "~suffix" member (always group-initial) switches the
    // target and spawns the sub-entry headword.
    struct Pending {
      std::string headword;
      std::vector<SenseGroup> senses;
    };
    std::vector<Pending> targets;
    targets.push_back({headword, {}});

    for (const std::string& raw_group : split_trim(sense_field, ';')) {
      if (raw_group.empty()) continue;  // tolerate stray semicolons
      std::vector<std::string> members;
      bool first = true;
      for (const std::string& member : split_trim(raw_group, ',')) {
        if (member.empty()) continue;  // tolerate stray commas
        if (first && member[0] == '~') {
          std::string suffix = trim(member.substr(1));
          if (suffix.empty()) {
            throw ParseError(lineno, "dangling '~' with no suffix under '" +
                                         headword + "'");
          }
          targets.push_back({headword + suffix, {}});
        } else if (member[0] == '~') {
          throw ParseError(lineno,
                           "'~' member must start a sense group (entry '" +
                               headword + "')");
        } else {
          members.push_back(member);
        }
        first = false;
      }
      if (members.empty()) continue;
      // drop duplicate synonyms, keeping first occurrence
      std::vector<std::string> unique;
      for (auto& m : members) {
        if (std::find(unique.begin(), unique.end(), m) == unique.end()) {
          unique.push_back(m);
        }
      }
      SenseGroup group;
      group.members = std::move(unique);
      group.pos_marker = pos_marker;
      group.sense_index = static_cast<int>(targets.back().senses.size()) + 1;
      targets.back().senses.push_back(std::move(group));
    }

    for (Pending& t : targets) {
      if (t.senses.empty()) {
        throw ParseError(lineno, "entry '" + t.headword +
                                     "' has no sense groups");
      }
      try {
        lex.add_entry({std::move(t.headword), std::move(t.senses)});
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
    }
  }
  return lex;
}

Lexicon parse_lexicon_text(const std::string& text) {
  std::istringstream in(text);
  return parse_lexicon(in);
}

Lexicon parse_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
  return parse_lexicon(in);
}

void serialize_lexicon(const Lexicon& lex, std::ostream& out) {
  for (const auto& [headword, entry] : lex.entries()) {
    out << headword << '\t'
        << (entry.senses.empty() ? "" : entry.senses.front().pos_marker)
        << '\t';
    for (std::size_t g = 0; g < entry.senses.size(); ++g) {
      if (g > 0) out << " ; ";
      const auto& members = entry.senses[g].members;
      for (std::size_t m = 0; m < members.size(); ++m) {
        if (m > 0) out << ", ";
        out << members[m];
      }
    }
    out << '\n';
  }
}

std::string serialize_lexicon_text(const Lexicon& lex) {
  std::ostringstream out;
  serialize_lexicon(lex, out);
  return out.str();
}

std::size_t common_prefix_codepoints(const std::string& a,
                                     const std::string& b) {
  std::size_t limit = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < limit && a[i] == b[i]) ++i;
  // back up to a code-point boundary: if the next byte of either string
  // continues a multi-byte sequence, the sequence is not fully shared
  while (i > 0 &&
         ((i < a.size() && is_continuation_byte(a[i])) ||
          (i < b.size() && is_continuation_byte(b[i])))) {
    --i;
  }
  std::size_t points = 0;
  for (std::size_t k = 0; k < i; ++k) {
    if (!is_continuation_byte(a[k])) ++points;
  }
  return points;
}

std::set<std::string> synset_of(const Lexicon& lex, const std::string& noun) {
  const auto& reverse = lex.reverse();
  auto exact = reverse.find(noun);
  if (exact != reverse.end()) return exact->second;
  if (reverse.empty() || noun.empty()) return {};

  // Longest-common-prefix fallback for inflected or unknown forms.  In a
  // sorted key set the best prefix match sits next to the query's
  // insertion point, so only the two neighbors need checking.
  auto after = reverse.lower_bound(noun);
  std::size_t best_len = 0;
  const std::set<std::string>* best = nullptr;
  if (after != reverse.begin()) {
    auto prev = std::prev(after);
    std::size_t len = common_prefix_codepoints(noun, prev->first);
    if (len > best_len) {
      best_len = len;
      best = &prev->second;
    }
  }
  if (after != reverse.end()) {
    std::size_t len = common_prefix_codepoints(noun, after->first);
    if (len > best_len) {  // tie keeps the lexicographically smaller key
      best_len = len;
      best = &after->second;
    }
  }
  if (best != nullptr && best_len >= lex.fallback_min_prefix) return *best;
  return {};
}

void write_thesaurus(const Lexicon& lex, std::ostream& out) {
  for (const auto& [noun, headwords] : lex.reverse()) {
    out << noun << '\t';
    bool first = true;
    for (const auto& h : headwords) {
      if (!first) out << '|';
      out << h;
      first = false;
    }
    out << '\n';
  }
}

}  // namespace mwe
