#include "mwe/formats.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "mwe/error.hpp"
#include "mwe/version.hpp"

namespace mwe {

namespace {

void write_header(std::ostream& out,
                  const std::vector<std::string>& columns) {
  out << "#mwetk=" << kVersion;
  for (const auto& c : columns) out << '\t' << c;
  out << '\n';
}

std::uint64_t parse_u64(const std::string& s, std::size_t lineno) {
  try {
    std::size_t pos = 0;
    std::uint64_t v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(lineno, "bad count: '" + s + "'");
  }
}

double parse_num(const std::string& s, std::size_t lineno) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(lineno, "bad number: '" + s + "'");
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return in;
}

}  // namespace

std::vector<std::string> split_tsv(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      cols.push_back(line.substr(start));
      break;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cols;
}

std::string format_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

void write_candidates(const std::vector<CandidateBigram>& candidates,
                      std::uint64_t windows, std::ostream& out) {
  write_header(out, {"m1", "m2", "freq_pair", "freq_m1", "freq_m2",
                     "in_longer_chunk"});
  out << "#windows=" << windows << '\n';
  for (const CandidateBigram& c : candidates) {
    out << c.m1 << '\t' << c.m2 << '\t' << c.freq_pair << '\t' << c.freq_m1
        << '\t' << c.freq_m2 << '\t' << (c.in_longer_chunk ? 1 : 0) << '\n';
  }
}

CandidatesFile read_candidates(std::istream& in) {
  CandidatesFile file;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string tag = "#windows=";
      if (line.rfind(tag, 0) == 0) {
        file.windows = parse_u64(line.substr(tag.size()), lineno);
      }
      continue;
    }
    auto cols = split_tsv(line);
    if (cols.size() != 6) {
      throw ParseError(lineno, "candidates row needs 6 columns");
    }
    CandidateBigram c;
    c.m1 = cols[0];
    c.m2 = cols[1];
    c.surface_pair = {cols[0], cols[1]};
    c.freq_pair = parse_u64(cols[2], lineno);
    c.freq_m1 = parse_u64(cols[3], lineno);
    c.freq_m2 = parse_u64(cols[4], lineno);
    c.in_longer_chunk = cols[5] == "1";
    file.candidates.push_back(std::move(c));
  }
  return file;
}

CandidatesFile read_candidates_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_candidates(in);
}

void write_scores(const std::vector<ScoredCandidate>& scored,
                  const std::vector<int>& bin_of, std::ostream& out) {
  write_header(out,
               {"m1", "m2", kLlr, kPmi, kCooccurrence, kPhi, kSignificance,
                "cooccurrence_norm", "phi_norm", "significance_norm",
                "combined", "bin"});
  for (std::size_t i = 0; i < scored.size(); ++i) {
    const ScoredCandidate& s = scored[i];
    out << s.candidate.m1 << '\t' << s.candidate.m2;
    for (const char* name :
         {kLlr, kPmi, kCooccurrence, kPhi, kSignificance}) {
      out << '\t' << format_double(s.raw.at(name));
    }
    for (const char* name : {kCooccurrence, kPhi, kSignificance}) {
      out << '\t' << format_double(s.normalized.at(name));
    }
    out << '\t' << format_double(s.combined) << '\t' << bin_of.at(i) << '\n';
  }
}

std::vector<ScoreRow> read_scores(std::istream& in) {
  std::vector<ScoreRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tsv(line);
    if (cols.size() != 12) {
      throw ParseError(lineno, "scores row needs 12 columns");
    }
    ScoreRow r;
    r.m1 = cols[0];
    r.m2 = cols[1];
    r.raw[kLlr] = parse_num(cols[2], lineno);
    r.raw[kPmi] = parse_num(cols[3], lineno);
    r.raw[kCooccurrence] = parse_num(cols[4], lineno);
    r.raw[kPhi] = parse_num(cols[5], lineno);
    r.raw[kSignificance] = parse_num(cols[6], lineno);
    r.combined = parse_num(cols[10], lineno);
    r.bin = static_cast<int>(parse_num(cols[11], lineno));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ScoreRow> read_scores_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_scores(in);
}

void write_decisions(const std::vector<DecisionRow>& rows,
                     std::ostream& out) {
  write_header(out, {"m1", "m2", "mode", "n", "score", "fallback",
                     "decision"});
  for (const DecisionRow& r : rows) {
    out << r.m1 << '\t' << r.m2 << '\t' << r.mode << '\t' << r.n << '\t'
        << (r.score ? format_double(*r.score) : "NA") << '\t'
        << (r.fallback ? 1 : 0) << '\t' << r.decision << '\n';
  }
}

std::vector<DecisionRow> read_decisions(std::istream& in) {
  std::vector<DecisionRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tsv(line);
    if (cols.size() != 7) {
      throw ParseError(lineno, "decisions row needs 7 columns");
    }
    DecisionRow r;
    r.m1 = cols[0];
    r.m2 = cols[1];
    r.mode = cols[2];
    r.n = static_cast<std::size_t>(parse_u64(cols[3], lineno));
    if (cols[4] != "NA") r.score = parse_num(cols[4], lineno);
    r.fallback = cols[5] == "1";
    r.decision = cols[6];
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<DecisionRow> read_decisions_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_decisions(in);
}

std::vector<std::string> peek_header_columns(const std::string& path) {
  auto in = open_or_throw(path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] != '#') return {};
    auto cols = split_tsv(line);
    if (!cols.empty() && cols[0].rfind("#mwetk=", 0) == 0) {
      return {cols.begin() + 1, cols.end()};
    }
    continue;
  }
  return {};
}

std::map<std::string, std::string> read_kv_config(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t b = line.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    if (line[b] == '#') continue;
    auto eq = line.find('=', b);
    if (eq == std::string::npos) {
      throw ParseError(lineno, "expected key=value");
    }
    auto strip = [](std::string s) {
      std::size_t x = s.find_first_not_of(" \t");
      if (x == std::string::npos) return std::string();
      std::size_t y = s.find_last_not_of(" \t");
      return s.substr(x, y - x + 1);
    };
    std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    if (key.empty()) throw ParseError(lineno, "empty config key");
    kv[key] = value;
  }
  return kv;
}

std::map<std::string, std::string> read_kv_config_file(
    const std::string& path) {
  auto in = open_or_throw(path);
  return read_kv_config(in);
}

}  // namespace mwe
