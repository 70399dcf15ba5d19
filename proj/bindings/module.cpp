#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mwe/assoc.hpp"
#include "mwe/cluster.hpp"
#include "mwe/corpus.hpp"
#include "mwe/eval.hpp"
#include "mwe/formats.hpp"
#include "mwe/lexicon.hpp"
#include "mwe/taxonomy.hpp"
#include "mwe/version.hpp"

namespace py = pybind11;
using namespace mwe;

PYBIND11_MODULE(_core, m) {
  m.doc() = "noun-noun multiword expression extraction toolkit";
  m.attr("__version__") = kVersion;

  py::enum_<ChunkPos>(m, "ChunkPos")
      .value("Begin", ChunkPos::Begin)
      .value("Inside", ChunkPos::Inside)
      .value("Outside", ChunkPos::Outside);

  py::class_<Token>(m, "Token")
      .def_readonly("surface", &Token::surface)
      .def_readonly("root", &Token::root)
      .def_readonly("pos", &Token::pos)
      .def_readonly("chunk_label", &Token::chunk_label)
      .def_readonly("chunk_pos", &Token::chunk_pos)
      .def_readonly("inflection", &Token::inflection);

  py::class_<Sentence>(m, "Sentence")
      .def_readonly("tokens", &Sentence::tokens);

  py::class_<Corpus>(m, "Corpus")
      .def_readonly("sentences", &Corpus::sentences);

  py::class_<CandidateBigram>(m, "CandidateBigram")
      .def_readonly("m1", &CandidateBigram::m1)
      .def_readonly("m2", &CandidateBigram::m2)
      .def_readonly("surface_pair", &CandidateBigram::surface_pair)
      .def_readonly("freq_pair", &CandidateBigram::freq_pair)
      .def_readonly("freq_m1", &CandidateBigram::freq_m1)
      .def_readonly("freq_m2", &CandidateBigram::freq_m2)
      .def_readonly("in_longer_chunk", &CandidateBigram::in_longer_chunk)
      .def_readonly("positions", &CandidateBigram::positions)
      .def("__repr__", [](const CandidateBigram& c) {
        return "<CandidateBigram " + c.m1 + " " + c.m2 + " x" +
               std::to_string(c.freq_pair) + ">";
      });

  py::class_<HeuristicsConfig>(m, "HeuristicsConfig")
      .def(py::init<>())
      .def_readwrite("allowed_pos", &HeuristicsConfig::allowed_pos)
      .def_readwrite("allowed_m1_inflections",
                     &HeuristicsConfig::allowed_m1_inflections);

  m.def("parse_corpus", &parse_corpus_text, py::arg("text"));
  m.def("parse_corpus_file", &parse_corpus_file, py::arg("path"));
  m.def(
      "extract_candidates",
      [](const Corpus& corpus, const HeuristicsConfig& cfg) {
        return extract_candidates(corpus, cfg);
      },
      py::arg("corpus"), py::arg("config") = HeuristicsConfig{});
  m.def("unigram_counts", &unigram_counts, py::arg("corpus"),
        py::arg("allowed_pos") = std::set<std::string>{"NN", "NNP"});
  m.def("count_noun_pair_windows", &count_noun_pair_windows,
        py::arg("corpus"),
        py::arg("allowed_pos") = std::set<std::string>{"NN", "NNP"});
  m.def("corpus_noun_roots", &corpus_noun_roots, py::arg("corpus"),
        py::arg("allowed_pos") = std::set<std::string>{"NN", "NNP"});

  py::class_<SenseGroup>(m, "SenseGroup")
      .def_readonly("members", &SenseGroup::members)
      .def_readonly("pos_marker", &SenseGroup::pos_marker)
      .def_readonly("sense_index", &SenseGroup::sense_index);

  py::class_<LexiconEntry>(m, "LexiconEntry")
      .def_readonly("headword", &LexiconEntry::headword)
      .def_readonly("senses", &LexiconEntry::senses);

  py::class_<Lexicon>(m, "Lexicon")
      .def_property_readonly("entries", &Lexicon::entries)
      .def_property_readonly("reverse", &Lexicon::reverse)
      .def_readwrite("fallback_min_prefix", &Lexicon::fallback_min_prefix)
      .def("contains", &Lexicon::contains)
      .def("__len__",
           [](const Lexicon& lex) { return lex.entries().size(); });

  m.def("parse_lexicon", &parse_lexicon_text, py::arg("text"));
  m.def("parse_lexicon_file", &parse_lexicon_file, py::arg("path"));
  m.def("serialize_lexicon", &serialize_lexicon_text, py::arg("lexicon"));
  m.def("synset_of", &synset_of, py::arg("lexicon"), py::arg("noun"));

  py::class_<ContingencyTable>(m, "ContingencyTable")
      .def(py::init([](std::uint64_t n11, std::uint64_t n12,
                       std::uint64_t n21, std::uint64_t n22) {
             return ContingencyTable{n11, n12, n21, n22};
           }),
           py::arg("n11"), py::arg("n12"), py::arg("n21"), py::arg("n22"))
      .def_readonly("n11", &ContingencyTable::n11)
      .def_readonly("n12", &ContingencyTable::n12)
      .def_readonly("n21", &ContingencyTable::n21)
      .def_readonly("n22", &ContingencyTable::n22)
      .def("total", &ContingencyTable::total);

  m.def("contingency_from_candidate", &contingency_from_candidate,
        py::arg("candidate"), py::arg("windows"));
  m.def("pmi", &pmi);
  m.def("llr", &llr);
  m.def("phi", &phi);
  m.def("cooccurrence", &cooccurrence);
  m.def("significance", &significance);

  py::class_<WeightConfig>(m, "WeightConfig")
      .def(py::init<>())
      .def(py::init([](double c, double p, double s) {
             return WeightConfig{c, p, s};
           }),
           py::arg("cooc"), py::arg("phi"), py::arg("sig"))
      .def_readwrite("w_cooc", &WeightConfig::w_cooc)
      .def_readwrite("w_phi", &WeightConfig::w_phi)
      .def_readwrite("w_sig", &WeightConfig::w_sig);

  py::class_<ScoredCandidate>(m, "ScoredCandidate")
      .def_readonly("candidate", &ScoredCandidate::candidate)
      .def_readonly("raw", &ScoredCandidate::raw)
      .def_readonly("normalized", &ScoredCandidate::normalized)
      .def_readonly("combined", &ScoredCandidate::combined);

  py::class_<RankedList>(m, "RankedList")
      .def_readonly("bins", &RankedList::bins);

  m.def(
      "score_candidates",
      [](const std::vector<CandidateBigram>& candidates,
         std::uint64_t windows) {
        return score_candidates(candidates, windows);
      },
      py::arg("candidates"), py::arg("windows"));
  m.def("combine", &combine, py::arg("scored"),
        py::arg("weights") = WeightConfig{});
  m.def(
      "rank_into_bins",
      [](const std::vector<ScoredCandidate>& scored, int k) {
        return rank_into_bins(scored, k);
      },
      py::arg("scored"), py::arg("k") = 5);

  py::enum_<SimilarityMode>(m, "SimilarityMode")
      .value("Cosine", SimilarityMode::Cosine)
      .value("Euclidean", SimilarityMode::Euclidean);

  py::enum_<Decision>(m, "Decision")
      .value("MWE", Decision::MWE)
      .value("NotMWE", Decision::NotMWE);

  py::class_<SemanticCluster>(m, "SemanticCluster")
      .def_readonly("center", &SemanticCluster::center)
      .def_readonly("neighbors", &SemanticCluster::neighbors);

  py::class_<SimilarityVectors>(m, "SimilarityVectors")
      .def(py::init<>())
      .def_readwrite("axes", &SimilarityVectors::axes)
      .def_readwrite("v1", &SimilarityVectors::v1)
      .def_readwrite("v2", &SimilarityVectors::v2);

  py::class_<DecisionConfig>(m, "DecisionConfig")
      .def(py::init<>())
      .def_readwrite("alpha", &DecisionConfig::alpha)
      .def_readwrite("beta", &DecisionConfig::beta)
      .def_readwrite("min_freq_zero_dim", &DecisionConfig::min_freq_zero_dim);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("decision", &CheckResult::decision)
      .def_readonly("axis_count", &CheckResult::axis_count)
      .def_readonly("score", &CheckResult::score)
      .def_readonly("freq_fallback", &CheckResult::freq_fallback)
      .def_readonly("note", &CheckResult::note);

  m.def("comm", &comm, py::arg("lexicon"), py::arg("n1"), py::arg("n2"));
  m.def("build_cluster", &build_cluster, py::arg("lexicon"),
        py::arg("corpus_nouns"), py::arg("center"));
  m.def("intersect_axes", &intersect_axes, py::arg("c1"), py::arg("c2"));
  m.def("cosine_similarity", &cosine_similarity);
  m.def("euclidean_distance", &euclidean_distance);
  m.def("check_mwe", &check_mwe, py::arg("lexicon"),
        py::arg("corpus_nouns"), py::arg("candidate"), py::arg("config"),
        py::arg("mode"));

  py::class_<Taxonomy>(m, "Taxonomy")
      .def(py::init<std::map<std::string, std::string>>(),
           py::arg("parent_of"))
      .def_property_readonly("root", &Taxonomy::root)
      .def("contains", &Taxonomy::contains)
      .def("depth", &Taxonomy::depth)
      .def("parent", &Taxonomy::parent);

  py::class_<TranslationMap>(m, "TranslationMap")
      .def(py::init<>())
      .def_readwrite("entries", &TranslationMap::entries);

  py::enum_<TaxonomyOutcome>(m, "TaxonomyOutcome")
      .value("MWE", TaxonomyOutcome::MWE)
      .value("NotMWE", TaxonomyOutcome::NotMWE)
      .value("Untranslated", TaxonomyOutcome::Untranslated);

  py::class_<TaxonomyResult>(m, "TaxonomyResult")
      .def_readonly("outcome", &TaxonomyResult::outcome)
      .def_readonly("distance", &TaxonomyResult::distance)
      .def_readonly("sense_pairs", &TaxonomyResult::sense_pairs);

  m.def("load_taxonomy_file", &load_taxonomy_file, py::arg("path"));
  m.def("load_translation_map_file", &load_translation_map_file,
        py::arg("path"), py::arg("taxonomy"));
  m.def("lcs", &lcs, py::arg("taxonomy"), py::arg("a"), py::arg("b"));
  m.def("norm_dist", &norm_dist, py::arg("taxonomy"), py::arg("a"),
        py::arg("b"));
  m.def(
      "classify_by_taxonomy",
      [](const Taxonomy& tax, const TranslationMap& tmap,
         const std::string& m1, const std::string& m2, double mu) {
        return classify_by_taxonomy(tax, tmap, m1, m2, mu);
      },
      py::arg("taxonomy"), py::arg("translations"), py::arg("m1"),
      py::arg("m2"), py::arg("mu"));

  py::enum_<GoldClass>(m, "GoldClass")
      .value("M", GoldClass::M)
      .value("S", GoldClass::S)
      .value("B", GoldClass::B)
      .value("E", GoldClass::E);

  py::class_<PRF>(m, "PRF")
      .def_readonly("precision", &PRF::precision)
      .def_readonly("recall", &PRF::recall)
      .def_readonly("f_score", &PRF::f_score);

  py::class_<RankReport>(m, "RankReport")
      .def_readonly("rank", &RankReport::rank)
      .def_readonly("items", &RankReport::items)
      .def_readonly("positives", &RankReport::positives)
      .def_readonly("prf", &RankReport::prf)
      .def_readonly("empty_bin", &RankReport::empty_bin);

  py::class_<BinaryReport>(m, "BinaryReport")
      .def_readonly("items", &BinaryReport::items)
      .def_readonly("predicted_positive", &BinaryReport::predicted_positive)
      .def_readonly("gold_positive", &BinaryReport::gold_positive)
      .def_readonly("true_positive", &BinaryReport::true_positive)
      .def_readonly("prf", &BinaryReport::prf)
      .def_readonly("no_predictions", &BinaryReport::no_predictions);

  m.def("load_gold_file", &load_gold_file, py::arg("path"));
  m.def("f_from_pr", &f_from_pr, py::arg("precision"), py::arg("recall"));
  m.def("prf_per_rank", &prf_per_rank, py::arg("ranked"), py::arg("gold"));
  m.def("prf_binary", &prf_binary, py::arg("decisions"));
  m.def("baseline_classify", &baseline_classify, py::arg("candidate"),
        py::arg("corpus"), py::arg("determiner_pos") = std::string("DT"));
  m.def("cohen_kappa", &cohen_kappa, py::arg("items"));
  m.def("masi", &masi, py::arg("a"), py::arg("b"));
}
