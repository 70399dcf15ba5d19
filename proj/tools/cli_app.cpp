#include "cli_app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "mwe/assoc.hpp"
#include "mwe/cluster.hpp"
#include "mwe/corpus.hpp"
#include "mwe/error.hpp"
#include "mwe/eval.hpp"
#include "mwe/formats.hpp"
#include "mwe/lexicon.hpp"
#include "mwe/taxonomy.hpp"
#include "mwe/version.hpp"

namespace mwe::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s, char sep = ',') {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    std::size_t b = cur.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    std::size_t e = cur.find_last_not_of(" \t");
    parts.push_back(cur.substr(b, e - b + 1));
  }
  return parts;
}

std::set<std::string> parse_pos_set(const std::string& csv) {
  auto parts = split_list(csv);
  return {parts.begin(), parts.end()};
}

WeightConfig parse_weights(const std::string& csv) {
  auto parts = split_list(csv);
  if (parts.size() != 3) {
    throw UsageError("--weights needs three comma-separated values (c,p,s)");
  }
  WeightConfig w;
  try {
    w.w_cooc = std::stod(parts[0]);
    w.w_phi = std::stod(parts[1]);
    w.w_sig = std::stod(parts[2]);
  } catch (const std::exception&) {
    throw UsageError("--weights values must be numbers");
  }
  if (!w.valid()) {
    throw UsageError("weights must be nonnegative and sum to 1");
  }
  return w;
}

HeuristicsConfig heuristics_from(const PipelineConfig& cfg) {
  HeuristicsConfig h;
  h.allowed_pos = parse_pos_set(cfg.pos);
  if (!cfg.m1_inflections.empty()) {
    auto parts = split_list(cfg.m1_inflections);
    h.allowed_m1_inflections = {parts.begin(), parts.end()};
    h.allowed_m1_inflections.insert(kNullInflection);
  }
  if (!h.valid()) throw UsageError("invalid heuristics configuration");
  return h;
}

void require_file(const std::string& path, const std::string& what) {
  if (path.empty()) throw UsageError(what + " path is required");
  if (!std::filesystem::exists(path)) {
    throw UsageError(what + " file does not exist: " + path);
  }
}

/// Writes through `sink` to --out or, with no --out, to the console stream.
void with_output(const PipelineConfig& cfg, std::ostream& console,
                 const std::function<void(std::ostream&)>& sink) {
  if (cfg.out.empty()) {
    sink(console);
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot write output file: " + cfg.out);
  sink(file);
}

int cmd_extract(const PipelineConfig& cfg, std::ostream& out,
                std::ostream& err) {
  require_file(cfg.corpus, "corpus");
  Corpus corpus = parse_corpus_file(cfg.corpus);
  HeuristicsConfig heur = heuristics_from(cfg);
  ExtractStats stats;
  auto candidates = extract_candidates(corpus, heur, &stats);
  std::uint64_t windows = count_noun_pair_windows(corpus, heur.allowed_pos);
  with_output(cfg, out, [&](std::ostream& sink) {
    write_candidates(candidates, windows, sink);
  });
  err << "candidates: " << candidates.size() << " (occurrences "
      << stats.accepted_occurrences << ")\n"
      << "sentences: " << stats.sentences << ", tokens: " << stats.tokens
      << ", noun tokens: " << stats.noun_tokens << "\n"
      << "adjacent noun pairs: " << stats.adjacent_noun_pairs
      << " (windows " << windows << "), rejected by chunk: "
      << stats.rejected_chunk
      << ", by inflection: " << stats.rejected_inflection << "\n";
  return kExitOk;
}

int cmd_rank(const PipelineConfig& cfg, std::ostream& out,
             std::ostream& err) {
  require_file(cfg.input, "candidates");
  CandidatesFile file = read_candidates_file(cfg.input);
  WeightConfig weights = parse_weights(cfg.weights);
  if (cfg.bins < 1) throw UsageError("--bins must be >= 1");
  if (file.candidates.empty()) {
    err << "warning: no candidates to rank\n";
    with_output(cfg, out, [&](std::ostream& sink) {
      write_scores({}, {}, sink);
    });
    return kExitOk;
  }
  if (!file.windows) {
    throw std::runtime_error(
        "candidates file lacks the #windows= header written by extract");
  }
  auto scored = combine(score_candidates(file.candidates, *file.windows),
                        weights);
  RankedList ranked = rank_into_bins(scored, cfg.bins);
  std::map<std::pair<std::string, std::string>, int> bin_by_key;
  for (std::size_t b = 0; b < ranked.bins.size(); ++b) {
    for (const auto& s : ranked.bins[b]) {
      bin_by_key[{s.candidate.m1, s.candidate.m2}] = static_cast<int>(b) + 1;
    }
  }
  std::vector<int> bin_of;
  bin_of.reserve(scored.size());
  for (const auto& s : scored) {
    bin_of.push_back(bin_by_key.at({s.candidate.m1, s.candidate.m2}));
  }
  with_output(cfg, out, [&](std::ostream& sink) {
    write_scores(scored, bin_of, sink);
  });
  return kExitOk;
}

int cmd_classify(const PipelineConfig& cfg, std::ostream& out,
                 std::ostream& err) {
  require_file(cfg.input, "candidates");
  const std::string& mode = cfg.mode;
  if (mode != "cosine" && mode != "euclidean" && mode != "taxonomy" &&
      mode != "baseline") {
    throw UsageError("unknown mode '" + mode +
                     "' (cosine|euclidean|taxonomy|baseline)");
  }
  CandidatesFile file = read_candidates_file(cfg.input);
  std::vector<DecisionRow> rows;
  rows.reserve(file.candidates.size());

  if (mode == "taxonomy") {
    require_file(cfg.taxonomy, "taxonomy");
    require_file(cfg.translations, "translation map");
    Taxonomy tax = load_taxonomy_file(cfg.taxonomy);
    TranslationMap tmap =
        load_translation_map_file(cfg.translations, tax);
    for (const CandidateBigram& cand : file.candidates) {
      TaxonomyResult res = classify_by_taxonomy(tax, tmap, cand, cfg.mu);
      DecisionRow row;
      row.m1 = cand.m1;
      row.m2 = cand.m2;
      row.mode = mode;
      row.n = res.sense_pairs;
      row.score = res.distance;
      row.decision = to_string(res.outcome);
      rows.push_back(std::move(row));
    }
  } else {
    // cluster and baseline modes re-derive occurrence data from the corpus
    require_file(cfg.corpus, "corpus");
    Corpus corpus = parse_corpus_file(cfg.corpus);
    HeuristicsConfig heur = heuristics_from(cfg);
    auto extracted = extract_candidates(corpus, heur);
    std::map<std::pair<std::string, std::string>, const CandidateBigram*>
        by_key;
    for (const auto& cand : extracted) {
      by_key[{cand.m1, cand.m2}] = &cand;
    }
    auto lookup = [&](const CandidateBigram& cand) -> const CandidateBigram& {
      auto it = by_key.find({cand.m1, cand.m2});
      if (it == by_key.end()) {
        throw std::runtime_error("candidate " + cand.m1 + " " + cand.m2 +
                                 " does not occur in the corpus");
      }
      return *it->second;
    };

    if (mode == "baseline") {
      for (const CandidateBigram& cand : file.candidates) {
        const CandidateBigram& full = lookup(cand);
        bool is_mwe = baseline_classify(full, corpus);
        DecisionRow row;
        row.m1 = cand.m1;
        row.m2 = cand.m2;
        row.mode = mode;
        row.n = full.positions.size();
        row.decision = is_mwe ? "MWE" : "NotMWE";
        rows.push_back(std::move(row));
      }
    } else {
      require_file(cfg.lexicon, "lexicon");
      Lexicon lex = parse_lexicon_file(cfg.lexicon);
      lex.fallback_min_prefix = cfg.min_prefix;
      auto nouns = corpus_noun_roots(corpus, heur.allowed_pos);
      DecisionConfig dec;
      dec.alpha = cfg.alpha;
      dec.beta = cfg.beta;
      dec.min_freq_zero_dim = cfg.min_freq_zero_dim;
      if (!dec.valid()) throw UsageError("alpha/beta out of range");
      SimilarityMode sim = mode == "cosine" ? SimilarityMode::Cosine
                                            : SimilarityMode::Euclidean;
      for (const CandidateBigram& cand : file.candidates) {
        const CandidateBigram& full = lookup(cand);
        CheckResult res = check_mwe(lex, nouns, full, dec, sim);
        DecisionRow row;
        row.m1 = cand.m1;
        row.m2 = cand.m2;
        row.mode = mode;
        row.n = res.axis_count;
        row.score = res.score;
        row.fallback = res.freq_fallback;
        row.decision = to_string(res.decision);
        rows.push_back(std::move(row));
        if (!res.note.empty()) {
          err << cand.m1 << " " << cand.m2 << ": " << res.note << "\n";
        }
      }
    }
  }
  with_output(cfg, out, [&](std::ostream& sink) {
    write_decisions(rows, sink);
  });
  return kExitOk;
}

struct EvalTallies {
  std::size_t evaluated = 0;
  std::size_t excluded_b = 0;
  std::size_t excluded_e = 0;
  std::size_t unlabeled = 0;
  std::size_t untranslated = 0;
};

/// Keeps rows whose gold class is M or S; everything else is tallied.
template <typename Row>
std::vector<const Row*> filter_rows(const std::vector<Row>& rows,
                                    const GoldMap& gold, EvalTallies& tally) {
  std::vector<const Row*> kept;
  for (const Row& row : rows) {
    auto it = gold.find({row.m1, row.m2});
    if (it == gold.end()) {
      ++tally.unlabeled;
      continue;
    }
    if (it->second == GoldClass::B) {
      ++tally.excluded_b;
      continue;
    }
    if (it->second == GoldClass::E) {
      ++tally.excluded_e;
      continue;
    }
    kept.push_back(&row);
  }
  tally.evaluated = kept.size();
  return kept;
}

void print_tallies(std::ostream& out, const EvalTallies& t) {
  out << "evaluated: " << t.evaluated << " (excluded B: " << t.excluded_b
      << ", E: " << t.excluded_e << ", unlabeled: " << t.unlabeled;
  if (t.untranslated > 0) out << ", untranslated: " << t.untranslated;
  out << ")\n";
}

void agreement_report(const PipelineConfig& cfg, const GoldMap& gold,
                      std::ostream& out, std::vector<std::string>& tsv) {
  GoldMap gold2 = load_gold_file(cfg.gold2);
  std::vector<std::pair<std::string, std::string>> items;
  std::set<std::string> mset1;
  std::set<std::string> mset2;
  for (const auto& [key, cls] : gold) {
    auto it = gold2.find(key);
    if (it == gold2.end()) continue;
    items.emplace_back(to_string(cls), to_string(it->second));
    std::string name = key.first + " " + key.second;
    if (cls == GoldClass::M) mset1.insert(name);
    if (it->second == GoldClass::M) mset2.insert(name);
  }
  if (items.size() < 2) {
    out << "agreement: fewer than 2 shared items, skipped\n";
    return;
  }
  double kappa = cohen_kappa(items);
  double m_agreement = masi(mset1, mset2);
  out << "agreement over " << items.size() << " shared items:\n"
      << "  kappa = " << format_double(kappa, 4) << "\n"
      << "  masi(M-sets) = " << format_double(m_agreement, 4) << "\n";
  tsv.push_back("#agreement\tkappa\t" + format_double(kappa));
  tsv.push_back("#agreement\tmasi\t" + format_double(m_agreement));
}

int cmd_eval(const PipelineConfig& cfg, std::ostream& out,
             std::ostream& err) {
  require_file(cfg.input, "scores/decisions");
  require_file(cfg.gold, "gold");
  if (cfg.bins < 1) throw UsageError("--bins must be >= 1");
  GoldMap gold = load_gold_file(cfg.gold);

  auto header = peek_header_columns(cfg.input);
  bool is_scores =
      std::find(header.begin(), header.end(), "combined") != header.end();
  bool is_decisions =
      std::find(header.begin(), header.end(), "decision") != header.end();
  if (!is_scores && !is_decisions) {
    throw std::runtime_error(
        "input is neither a scores nor a decisions file (missing header)");
  }

  std::vector<std::string> tsv_lines;
  EvalTallies tally;

  if (is_scores) {
    auto rows = read_scores_file(cfg.input);
    auto kept = filter_rows(rows, gold, tally);
    print_tallies(out, tally);
    const std::vector<std::string> measures = {
        kLlr, kPmi, kCooccurrence, kPhi, kSignificance, "combined"};
    std::vector<ScoredCandidate> scored;
    for (const ScoreRow* row : kept) {
      ScoredCandidate s;
      s.candidate.m1 = row->m1;
      s.candidate.m2 = row->m2;
      s.raw = row->raw;
      s.combined = row->combined;
      scored.push_back(std::move(s));
    }
    out << "measure         rank  items  mwe     P      R      F\n";
    for (const std::string& measure : measures) {
      if (scored.empty()) break;
      ScoreKey key;
      if (measure == "combined") {
        key = [](const ScoredCandidate& s) { return s.combined; };
      } else {
        key = [measure](const ScoredCandidate& s) {
          return s.raw.at(measure);
        };
      }
      RankedList ranked = rank_into_bins(scored, cfg.bins, key);
      auto reports = prf_per_rank(ranked, gold);
      for (const RankReport& r : reports) {
        char line[160];
        std::snprintf(line, sizeof(line),
                      "%-15s %-5zu %-6zu %-6zu %6.1f %6.1f %6.1f%s\n",
                      measure.c_str(), r.rank, r.items, r.positives,
                      r.prf.precision, r.prf.recall, r.prf.f_score,
                      r.empty_bin ? "  (empty)" : "");
        out << line;
        tsv_lines.push_back(
            measure + "\t" + std::to_string(r.rank) + "\t" +
            std::to_string(r.items) + "\t" + std::to_string(r.positives) +
            "\t" + format_double(r.prf.precision, 4) + "\t" +
            format_double(r.prf.recall, 4) + "\t" +
            format_double(r.prf.f_score, 4) + "\t" +
            (r.empty_bin ? "1" : "0"));
      }
    }
  } else {
    auto rows = read_decisions_file(cfg.input);
    std::vector<DecisionRow> decided;
    for (const DecisionRow& row : rows) {
      if (row.decision == "untranslated") {
        ++tally.untranslated;
        continue;
      }
      decided.push_back(row);
    }
    auto kept = filter_rows(decided, gold, tally);
    print_tallies(out, tally);
    std::vector<std::pair<bool, GoldClass>> decisions;
    for (const DecisionRow* row : kept) {
      decisions.emplace_back(row->decision == "MWE",
                             gold.at({row->m1, row->m2}));
    }
    std::string mode = kept.empty() ? "decisions" : kept.front()->mode;
    if (decisions.empty()) {
      out << "no labeled decisions to evaluate\n";
    } else {
      BinaryReport report = prf_binary(decisions);
      char line[200];
      std::snprintf(line, sizeof(line),
                    "%s: items %zu, predicted MWE %zu, gold MWE %zu\n"
                    "P = %.1f  R = %.1f  F = %.1f%s\n",
                    mode.c_str(), report.items, report.predicted_positive,
                    report.gold_positive, report.prf.precision,
                    report.prf.recall, report.prf.f_score,
                    report.no_predictions ? "  (no positive predictions)"
                                          : "");
      out << line;
      tsv_lines.push_back(
          mode + "\t-\t" + std::to_string(report.items) + "\t" +
          std::to_string(report.true_positive) + "\t" +
          format_double(report.prf.precision, 4) + "\t" +
          format_double(report.prf.recall, 4) + "\t" +
          format_double(report.prf.f_score, 4) + "\t" +
          (report.no_predictions ? "1" : "0"));
    }
  }

  if (!cfg.gold2.empty()) {
    require_file(cfg.gold2, "gold2");
    agreement_report(cfg, gold, out, tsv_lines);
  }

  if (!cfg.out.empty()) {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw UsageError("cannot write output file: " + cfg.out);
    file << "#mwetk=" << kVersion
         << "\tmeasure\trank\titems\tmwe\tprecision\trecall\tf_score\tflag\n";
    for (const auto& line : tsv_lines) file << line << '\n';
  }
  (void)err;
  return kExitOk;
}

int cmd_thesaurus(const PipelineConfig& cfg, std::ostream& out,
                  std::ostream& err) {
  require_file(cfg.lexicon, "lexicon");
  Lexicon lex = parse_lexicon_file(cfg.lexicon);
  with_output(cfg, out, [&](std::ostream& sink) {
    write_thesaurus(lex, sink);
  });
  err << "nouns: " << lex.reverse().size()
      << ", entries: " << lex.entries().size() << "\n";
  return kExitOk;
}

/// Options set in the config file fill in flags the user did not pass.
void merge_config(const std::map<std::string, std::string>& kv,
                  CLI::App* sub, PipelineConfig& cfg) {
  auto take = [&](const char* key, auto&& assign) {
    auto it = kv.find(key);
    if (it == kv.end()) return;
    CLI::Option* opt = sub->get_option_no_throw(std::string("--") + key);
    if (opt != nullptr && opt->count() > 0) return;  // flag wins
    assign(it->second);
  };
  auto to_str = [](std::string& field) {
    return [&field](const std::string& v) { field = v; };
  };
  auto to_double = [](double& field) {
    return [&field](const std::string& v) { field = std::stod(v); };
  };
  auto to_u64 = [](std::uint64_t& field) {
    return [&field](const std::string& v) { field = std::stoull(v); };
  };
  try {
    take("corpus", to_str(cfg.corpus));
    take("lexicon", to_str(cfg.lexicon));
    take("gold", to_str(cfg.gold));
    take("gold2", to_str(cfg.gold2));
    take("taxonomy", to_str(cfg.taxonomy));
    take("translations", to_str(cfg.translations));
    take("out", to_str(cfg.out));
    take("mode", to_str(cfg.mode));
    take("weights", to_str(cfg.weights));
    take("pos", to_str(cfg.pos));
    take("m1-inflections", to_str(cfg.m1_inflections));
    take("alpha", to_double(cfg.alpha));
    take("beta", to_double(cfg.beta));
    take("mu", to_double(cfg.mu));
    take("bins", [&cfg](const std::string& v) { cfg.bins = std::stoi(v); });
    take("min-freq", to_u64(cfg.min_freq_zero_dim));
    take("min-prefix", to_u64(cfg.min_prefix));
  } catch (const std::exception&) {
    throw UsageError("bad numeric value in config file");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"noun-noun multiword expression extraction toolkit"};
  app.set_version_flag("--version", std::string("mwetk ") + kVersion);
  app.require_subcommand(1);

  PipelineConfig cfg;
  std::string config_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path,
                    "key=value config file; flags override it");
    sub->add_option("--out", cfg.out, "output file (default: stdout)");
    return sub;
  };

  CLI::App* extract =
      add_common(app.add_subcommand("extract", "extract noun-noun candidates"));
  extract->add_option("--corpus", cfg.corpus, "annotated corpus TSV");
  extract->add_option("--pos", cfg.pos, "allowed POS tags (comma list)");
  extract->add_option("--m1-inflections", cfg.m1_inflections,
                      "allowed first-component inflections (comma list)");

  CLI::App* rank =
      add_common(app.add_subcommand("rank", "score and bin candidates"));
  rank->add_option("candidates", cfg.input, "candidates TSV from extract");
  rank->add_option("--weights", cfg.weights,
                   "combined-measure weights c,p,s");
  rank->add_option("--bins", cfg.bins, "number of rank bins");

  CLI::App* classify =
      add_common(app.add_subcommand("classify", "decide MWE per candidate"));
  classify->add_option("candidates", cfg.input,
                       "candidates TSV from extract");
  classify->add_option("--mode", cfg.mode,
                       "cosine|euclidean|taxonomy|baseline");
  classify->add_option("--corpus", cfg.corpus, "annotated corpus TSV");
  classify->add_option("--lexicon", cfg.lexicon, "restructured lexicon TSV");
  classify->add_option("--taxonomy", cfg.taxonomy, "child<TAB>parent edges");
  classify->add_option("--translations", cfg.translations,
                       "source_root<TAB>concept rows");
  classify->add_option("--alpha", cfg.alpha, "cosine cut-off");
  classify->add_option("--beta", cfg.beta, "euclidean cut-off");
  classify->add_option("--mu", cfg.mu, "taxonomy distance cut-off");
  classify->add_option("--min-freq", cfg.min_freq_zero_dim,
                       "pair frequency needed when clusters share no axis");
  classify->add_option("--min-prefix", cfg.min_prefix,
                       "prefix length for unknown-noun lexicon lookup");
  classify->add_option("--pos", cfg.pos, "allowed POS tags (comma list)");
  classify->add_option("--m1-inflections", cfg.m1_inflections,
                       "allowed first-component inflections (comma list)");

  CLI::App* eval =
      add_common(app.add_subcommand("eval", "score output against gold"));
  eval->add_option("input", cfg.input, "scores or decisions TSV");
  eval->add_option("--gold", cfg.gold, "gold labels m1<TAB>m2<TAB>class");
  eval->add_option("--gold2", cfg.gold2,
                   "second annotator gold file (adds kappa and MASI)");
  eval->add_option("--bins", cfg.bins, "number of rank bins");

  CLI::App* thesaurus = add_common(
      app.add_subcommand("thesaurus", "dump the noun->headwords index"));
  thesaurus->add_option("--lexicon", cfg.lexicon, "restructured lexicon TSV");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (!config_path.empty()) {
      require_file(config_path, "config");
      merge_config(read_kv_config_file(config_path), sub, cfg);
    }
    if (sub == extract) return cmd_extract(cfg, out, err);
    if (sub == rank) return cmd_rank(cfg, out, err);
    if (sub == classify) return cmd_classify(cfg, out, err);
    if (sub == eval) return cmd_eval(cfg, out, err);
    if (sub == thesaurus) return cmd_thesaurus(cfg, out, err);
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace mwe::cli
