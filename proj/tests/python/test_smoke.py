import math
import os

import pytest

import mwetk

DATA = os.environ.get("MWE_TEST_DATA", "tests/data")


def data(name):
    return os.path.join(DATA, name)


CORPUS_TEXT = (
    "hater\that\tNN\tNP:B\ter\n"
    "panch\tpanch\tNN\tNP:I\t0\n"
    "\n"
    "ghar\tghar\tNN\tNP:B\t0\n"
    "bari\tbari\tNN\tNP:I\t0\n"
)


def test_corpus_roundtrip():
    corpus = mwetk.parse_corpus(CORPUS_TEXT)
    assert len(corpus.sentences) == 2
    assert corpus.sentences[0].tokens[0].root == "hat"

    cfg = mwetk.HeuristicsConfig()
    cfg.allowed_m1_inflections = {"0", "er"}
    cands = mwetk.extract_candidates(corpus, cfg)
    assert [(c.m1, c.m2) for c in cands] == [("hat", "panch"),
                                             ("ghar", "bari")]
    assert mwetk.count_noun_pair_windows(corpus) == 2
    assert mwetk.unigram_counts(corpus)["ghar"] == 1


def test_measures():
    t = mwetk.ContingencyTable(1, 0, 0, 99)
    assert mwetk.pmi(t) == pytest.approx(math.log2(100))
    assert mwetk.llr(mwetk.ContingencyTable(10, 0, 0, 10)) == pytest.approx(
        40 * math.log(2))
    assert mwetk.phi(mwetk.ContingencyTable(10, 0, 0, 10)) == pytest.approx(1.0)
    assert mwetk.cooccurrence(mwetk.ContingencyTable(1, 9, 9, 0)) == \
        pytest.approx(1 / 19)


def test_ranking():
    corpus = mwetk.parse_corpus(CORPUS_TEXT)
    cfg = mwetk.HeuristicsConfig()
    cfg.allowed_m1_inflections = {"0", "er"}
    cands = mwetk.extract_candidates(corpus, cfg)
    scored = mwetk.combine(
        mwetk.score_candidates(cands, mwetk.count_noun_pair_windows(corpus)),
        mwetk.WeightConfig(),
    )
    ranked = mwetk.rank_into_bins(scored, 5)
    total = sum(len(b) for b in ranked.bins)
    assert total == len(cands)


def test_lexicon_and_clusters():
    lex = mwetk.parse_lexicon_file(data("lexicon_pipeline.tsv"))
    assert mwetk.synset_of(lex, "griho") == {"awas", "nibas", "thikana",
                                             "kutir"}
    assert mwetk.comm(lex, "griho", "ghar") == 3

    nouns = {"griho", "bhaban", "ghar", "basha"}
    cluster = mwetk.build_cluster(lex, nouns, "griho")
    assert cluster.neighbors == {"bhaban": 2, "ghar": 3, "basha": 1}

    sv = mwetk.SimilarityVectors()
    sv.axes = ["t", "u"]
    sv.v1 = [3.0, 4.0]
    sv.v2 = [4.0, 3.0]
    assert mwetk.cosine_similarity(sv) == pytest.approx(0.96)
    dist = mwetk.euclidean_distance(sv)
    assert dist * dist == pytest.approx(2 * (1 - 0.96))


def test_check_mwe_fixture():
    corpus = mwetk.parse_corpus_file(data("corpus_main.tsv"))
    lex = mwetk.parse_lexicon_file(data("lexicon_pipeline.tsv"))
    cfg = mwetk.HeuristicsConfig()
    cfg.allowed_m1_inflections = {"0", "er", "r", "e", "y", "ye"}
    cands = mwetk.extract_candidates(corpus, cfg)
    nouns = mwetk.corpus_noun_roots(corpus)
    res = mwetk.check_mwe(lex, nouns, cands[0], mwetk.DecisionConfig(),
                          mwetk.SimilarityMode.Cosine)
    assert res.decision == mwetk.Decision.MWE
    assert res.freq_fallback


def test_taxonomy_and_agreement():
    tax = mwetk.load_taxonomy_file(data("taxonomy_toy.tsv"))
    assert tax.root == "entity"
    assert mwetk.norm_dist(tax, "abstraction", "physical") == 1.0
    tmap = mwetk.load_translation_map_file(data("translations_toy.tsv"), tax)
    res = mwetk.classify_by_taxonomy(tax, tmap, "hat", "panch", 0.5)
    assert res.outcome == mwetk.TaxonomyOutcome.MWE

    assert mwetk.cohen_kappa([("M", "M"), ("S", "S")]) == 1.0
    assert mwetk.masi({"x"}, {"x", "y"}) == pytest.approx(1 / 3)
    assert mwetk.f_from_pr(46.5, 51.0) == pytest.approx(48.6, abs=0.05)
