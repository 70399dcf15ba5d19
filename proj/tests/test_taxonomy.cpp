#include <doctest.h>

#include <random>
#include <sstream>

#include "mwe/error.hpp"
#include "mwe/taxonomy.hpp"
#include "test_util.hpp"

using namespace mwe;

namespace {

// random tree over nodes v0..v{n-1} with v0 as root; parent index < child
std::map<std::string, std::string> random_tree(std::mt19937& rng,
                                               std::size_t n) {
  std::map<std::string, std::string> edges;
  edges["v0"] = "v0";
  for (std::size_t i = 1; i < n; ++i) {
    edges["v" + std::to_string(i)] = "v" + std::to_string(rng() % i);
  }
  return edges;
}

// ancestor-set oracle: root path of each node, deepest shared element
std::vector<std::string> root_path(const Taxonomy& tax,
                                   const std::string& node) {
  std::vector<std::string> path{node};  // node first, root last
  std::string cur = node;
  while (cur != tax.root()) {
    cur = tax.parent(cur);
    path.push_back(cur);
  }
  return path;
}

std::string lcs_oracle(const Taxonomy& tax, const std::string& a,
                       const std::string& b) {
  auto pa = root_path(tax, a);
  auto pb = root_path(tax, b);
  for (const std::string& node : pa) {
    for (const std::string& other : pb) {
      if (node == other) return node;  // first hit is the deepest shared
    }
  }
  return tax.root();
}

double norm_dist_oracle(const Taxonomy& tax, const std::string& a,
                        const std::string& b) {
  auto pa = root_path(tax, a);
  auto pb = root_path(tax, b);
  std::string cp = lcs_oracle(tax, a, b);
  std::size_t da = 0;
  std::size_t db = 0;
  while (pa[da] != cp) ++da;
  while (pb[db] != cp) ++db;
  std::size_t cp_to_root = root_path(tax, cp).size() - 1;
  std::size_t min_dist = std::min(da, db);
  if (min_dist == 0) return 0.0;
  return static_cast<double>(min_dist) /
         static_cast<double>(cp_to_root + min_dist);
}

}  // namespace

TEST_CASE("taxonomy loading and validation") {
  Taxonomy tax = load_taxonomy_file(data_path("taxonomy_toy.tsv"));
  CHECK(tax.root() == "entity");
  CHECK(tax.depth("entity") == 0);
  CHECK(tax.depth("building") == 4);  // entity > physical > artifact > structure > building
  CHECK(tax.contains("number"));

  CHECK_THROWS(load_taxonomy_file(data_path("missing.tsv")));
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return load_taxonomy(in);
  };
  CHECK_THROWS_AS(parse("a\tb\n"), std::runtime_error);       // no root
  CHECK_THROWS_AS(parse("a\ta\nb\tb\n"), std::runtime_error); // two roots
  CHECK_THROWS_AS(parse("r\tr\na\tx\n"), std::runtime_error); // unknown parent
  CHECK_THROWS_AS(parse("a\tb\nb\ta\nr\tr\n"), std::runtime_error);  // cycle
  CHECK_THROWS_AS(parse("r\tr\na\tr\na\tb\n"), ParseError);   // two parents
}

TEST_CASE("lcs basics") {
  Taxonomy tax = load_taxonomy_file(data_path("taxonomy_toy.tsv"));
  CHECK(lcs(tax, "building", "building") == "building");
  CHECK(lcs(tax, "body_part", "person") == "physical");   // siblings
  CHECK(lcs(tax, "building", "artifact") == "artifact");  // ancestor
  CHECK(lcs(tax, "number", "building") == "entity");
  CHECK_THROWS_AS(lcs(tax, "building", "nope"), std::invalid_argument);
}

TEST_CASE("norm_dist hand cases") {
  Taxonomy tax = load_taxonomy_file(data_path("taxonomy_toy.tsv"));
  CHECK(norm_dist(tax, "building", "building") == 0.0);
  // siblings one edge below a parent that is two edges below the root
  std::istringstream chain(
      "r\tr\np1\tr\np2\tp1\na\tp2\nb\tp2\n");
  Taxonomy deep = load_taxonomy(chain);
  CHECK(norm_dist(deep, "a", "b") == doctest::Approx(1.0 / 3.0));
  // children of the root are maximally distant
  CHECK(norm_dist(tax, "abstraction", "physical") == doctest::Approx(1.0));
  // subsumption collapses the distance
  CHECK(norm_dist(tax, "physical", "building") == 0.0);
}

TEST_CASE("norm_dist matches the ancestor-set oracle on random trees") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + rng() % 29;
    Taxonomy tax(random_tree(rng, n));
    for (int probe = 0; probe < 40; ++probe) {
      std::string a = "v" + std::to_string(rng() % n);
      std::string b = "v" + std::to_string(rng() % n);
      CHECK(lcs(tax, a, b) == lcs_oracle(tax, a, b));
      double got = norm_dist(tax, a, b);
      CHECK(got == norm_dist_oracle(tax, a, b));
      CHECK(got == norm_dist(tax, b, a));
      CHECK(got >= 0.0);
      CHECK(got <= 1.0);
      CHECK(norm_dist(tax, a, a) == 0.0);
    }
  }
}

TEST_CASE("deepening below both nodes never changes their distance") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + rng() % 20;
    auto edges = random_tree(rng, n);
    Taxonomy tax(edges);
    std::string a = "v" + std::to_string(rng() % n);
    std::string b = "v" + std::to_string(rng() % n);
    double before = norm_dist(tax, a, b);
    // graft fresh subtrees under arbitrary existing nodes
    for (int extra = 0; extra < 6; ++extra) {
      edges["w" + std::to_string(extra)] =
          "v" + std::to_string(rng() % n);
    }
    Taxonomy grown(edges);
    CHECK(norm_dist(grown, a, b) == before);
  }
}

TEST_CASE("classify_by_taxonomy picks the most charitable sense pair") {
  Taxonomy tax = load_taxonomy_file(data_path("taxonomy_toy.tsv"));
  TranslationMap tmap =
      load_translation_map_file(data_path("translations_toy.tsv"), tax);

  SUBCASE("same concept is compositional for any cut-off") {
    TaxonomyResult r = classify_by_taxonomy(tax, tmap, "griho", "bhaban", 0.0);
    CHECK(r.outcome == TaxonomyOutcome::NotMWE);
    CHECK(*r.distance == 0.0);
  }
  SUBCASE("root-level contrast reads as an MWE") {
    TaxonomyResult r = classify_by_taxonomy(tax, tmap, "hat", "panch", 0.5);
    CHECK(r.outcome == TaxonomyOutcome::MWE);
    CHECK(*r.distance == doctest::Approx(1.0));
    CHECK(r.sense_pairs == 1);
  }
  SUBCASE("missing translations are reported, not decided") {
    TaxonomyResult r = classify_by_taxonomy(tax, tmap, "hat", "zzz", 0.5);
    CHECK(r.outcome == TaxonomyOutcome::Untranslated);
    CHECK_FALSE(r.distance.has_value());
  }
  SUBCASE("translation targets must be taxonomy nodes") {
    std::istringstream bad("hat\tnot_a_node\n");
    CHECK_THROWS_AS(load_translation_map(bad, tax), ParseError);
  }
}

TEST_CASE("classification matches a cross-product oracle") {
  std::istringstream edges(
      "root\troot\nx\troot\ny\troot\nx1\tx\nx2\tx\ny1\ty\n");
  Taxonomy tax = load_taxonomy(edges);
  std::istringstream rows(
      "p\tx1\np\ty1\nq\tx2\nq\ty\nr\troot\n");
  TranslationMap tmap = load_translation_map(rows, tax);

  std::mt19937 rng(61);
  const std::vector<std::string> words = {"p", "q", "r"};
  for (int trial = 0; trial < 40; ++trial) {
    const std::string& a = words[rng() % words.size()];
    const std::string& b = words[rng() % words.size()];
    double mu = static_cast<double>(rng() % 100) / 100.0;
    TaxonomyResult got = classify_by_taxonomy(tax, tmap, a, b, mu);

    double best = 1.0;
    for (const auto& ca : tmap.entries.at(a)) {
      for (const auto& cb : tmap.entries.at(b)) {
        best = std::min(best, norm_dist(tax, ca, cb));
      }
    }
    CHECK(*got.distance == best);
    CHECK((got.outcome == TaxonomyOutcome::MWE) == (best > mu));
    // permutation invariance comes with the min over the cross product
    TaxonomyResult swapped = classify_by_taxonomy(tax, tmap, b, a, mu);
    CHECK(*swapped.distance == *got.distance);
    CHECK(swapped.outcome == got.outcome);
  }
}
