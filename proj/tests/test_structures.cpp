#include "doctest.h"

#include "fmtk/autgroup.hpp"
#include "fmtk/quotient.hpp"
#include "fmtk/structure.hpp"
#include "fmtk/structure_io.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fmtk;

TEST_CASE("diagonal relation") {
  CHECK(diagonal(0).pairs.empty());
  CHECK(diagonal(1).pairs == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(diagonal(4).pairs ==
        std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 2}, {3, 3}});
}

TEST_CASE("Z5add is built from the defining triples and validates") {
  Structure z5 = fixtures::z5add();
  // the 25 defining triples, recomputed independently
  int plus = z5.sig.relation_index("Plus");
  REQUIRE(plus >= 0);
  CHECK(z5.interps[plus].size() == 25);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) CHECK(z5.has_tuple(plus, {x, y, (x + y) % 5}));
  CHECK(validate(z5).ok());
}

TEST_CASE("validate flags out-of-range components") {
  Structure s;
  s.domain_size = 2;
  s.sig.relations = {{"R", 2}};
  s.interps = {{{0, 3}}};
  s.normalize();
  ValidationReport r = validate(s);
  REQUIRE_FALSE(r.ok());
  CHECK(r.issues[0].symbol == "R");
  CHECK(r.issues[0].message.find("component out of range") != std::string::npos);
}

TEST_CASE("validate flags a non-reflexive equality interpretation") {
  Structure s;
  s.domain_size = 2;
  s.sig.relations = {{"Eq", 2}};
  s.sig.equality_name = "Eq";
  s.interps = {{{0, 0}}};
  s.normalize();
  ValidationReport r = validate(s);
  REQUIRE_FALSE(r.ok());
  CHECK(r.issues[0].message.find("not reflexive") != std::string::npos);
  CHECK(r.issues[0].message.find("congruence") != std::string::npos);
}

TEST_CASE("validate flags an equality interpretation incompatible with the relations") {
  // equivalence relation merging 0 and 1, but R holds of 0 only
  Structure s;
  s.domain_size = 2;
  s.sig.relations = {{"R", 1}, {"Eq", 2}};
  s.sig.equality_name = "Eq";
  s.interps = {{{0}}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
  s.normalize();
  ValidationReport r = validate(s);
  REQUIRE_FALSE(r.ok());
  CHECK(r.issues[0].message.find("not a congruence") != std::string::npos);
}

TEST_CASE("singleton extension of Singlet is rigid with I0, I1") {
  Structure ext = singleton_extension(fixtures::singlet());
  CHECK(ext.sig.relation_index("I0") >= 0);
  CHECK(ext.sig.relation_index("I1") >= 0);
  CHECK(ext.interps[ext.sig.relation_index("I0")] == std::vector<Tuple>{{0}});
  CHECK(ext.interps[ext.sig.relation_index("I1")] == std::vector<Tuple>{{1}});
  // brute force over both permutations of a 2-element domain
  auto brute = oracles::brute_force_group(ext);
  CHECK(brute.order == 1);
}

TEST_CASE("singleton extension of a one-element structure") {
  Structure s;
  s.domain_size = 1;
  Structure ext = singleton_extension(s);
  CHECK(ext.sig.relations.size() == 1);
  CHECK(ext.interps[0] == std::vector<Tuple>{{0}});
  CHECK(oracles::brute_force_group(ext).order == 1);
}

TEST_CASE("singleton extension drops the Z5add automorphism count from 4 to 1") {
  Structure z5 = fixtures::z5add();
  CHECK(oracles::brute_force_group(z5).order == 4);  // all 120 permutations swept
  CHECK(oracles::brute_force_group(singleton_extension(z5)).order == 1);
}

TEST_CASE("singleton name collisions are resolved by suffixing") {
  Structure s;
  s.domain_size = 2;
  s.sig.relations = {{"I0", 2}};
  s.interps = {{}};
  Structure ext = singleton_extension(s);
  CHECK(ext.sig.relation_index("I0_") >= 0);
  CHECK(ext.sig.relation_index("I1") >= 0);
  CHECK(validate(ext).ok());
}

TEST_CASE("validate after singleton extension stays clean on a corpus") {
  auto corpus = fixtures::random_corpus(25, fixtures::kCorpusSeed, 6);
  for (const auto& s : corpus) {
    REQUIRE(validate(s).ok());
    CHECK(validate(singleton_extension(s)).ok());
  }
}

TEST_CASE("the diagonal partition is a congruence of every structure") {
  auto corpus = fixtures::random_corpus(15, fixtures::kCorpusSeed + 1, 6);
  corpus.push_back(fixtures::z6add());
  corpus.push_back(fixtures::henkin4());
  for (const auto& s : corpus) CHECK(is_congruence(s, discrete_partition(s.domain_size)));
}

TEST_CASE("full symmetry checks") {
  CHECK(is_fully_symmetric(fixtures::singlet(), "R"));
  CHECK_FALSE(is_fully_symmetric(fixtures::directed_edge(), "R"));
  Structure z5 = fixtures::z5add();
  // (1,2,3) is a Plus triple but its reversal is not, since 3+2 = 0 mod 5
  CHECK(z5.has_tuple(0, {1, 2, 3}));
  CHECK_FALSE(z5.has_tuple(0, {3, 2, 1}));
  CHECK_FALSE(is_fully_symmetric(z5, "Plus"));
  CHECK_THROWS_AS(is_fully_symmetric(z5, "Nope"), std::invalid_argument);
}

TEST_CASE("full symmetry is invariant under relabeling") {
  fixtures::Rng rng(7);
  auto corpus = fixtures::random_corpus(10, fixtures::kCorpusSeed + 2, 5);
  for (const auto& s : corpus) {
    Permutation p = Permutation::identity(s.domain_size);
    for (int i = s.domain_size - 1; i > 0; --i)
      std::swap(p.images[i], p.images[rng.below(i + 1)]);
    Structure t = fixtures::relabel(s, p);
    CHECK(is_fully_symmetric(s, "R") == is_fully_symmetric(t, "R"));
  }
}

TEST_CASE("structure file format round-trips through the canonical form") {
  Structure s = fixtures::z6add();
  s.sig.constants.push_back("zero");
  s.constant_values.push_back(0);
  s.element_names = {"a", "b", "c", "d", "e", "f"};
  std::string text = canonical_text(s);
  Structure back = parse_structure_text(text);
  CHECK(canonical_text(back) == text);
  CHECK(back.domain_size == 6);
  CHECK(back.constant_values == std::vector<int>{0});
}

TEST_CASE("structure files tolerate comments and odd whitespace") {
  const char* text =
      "# a comment\n"
      "version 1;\n"
      "structure   T {\n"
      "  domain 3;   # inline comment\n"
      "  rel E/2 = { (0,1),(1,2) };\n"
      "  const root = 0;\n"
      "}\n";
  Structure s = parse_structure_text(text);
  CHECK(s.domain_size == 3);
  CHECK(s.has_tuple(0, {0, 1}));
  CHECK(s.sig.constants == std::vector<std::string>{"root"});
  CHECK(validate(s).ok());
}

TEST_CASE("structure parser reports malformed input") {
  CHECK_THROWS_AS(parse_structure_text("structure X { domain }"), StructParseError);
  CHECK_THROWS_AS(parse_structure_text("structure X { }"), StructParseError);
  CHECK_THROWS_AS(parse_structure_text("structure X { domain 2; } trailing"),
                  StructParseError);
}

TEST_CASE("a trailing map block is accepted") {
  Structure s = parse_structure_text(
      "structure Q { domain 2; rel R/2 = { (0,1) }; }\nmap { 0 -> 0, 1 -> 0 };");
  CHECK(s.domain_size == 2);
}

TEST_CASE("empty domain is fine everywhere in this module") {
  Structure s;
  s.domain_size = 0;
  s.sig.relations = {{"R", 2}};
  s.interps = {{}};
  CHECK(validate(s).ok());
  CHECK(singleton_extension(s) == s);
  CHECK(is_fully_symmetric(s, "R"));
  std::string text = canonical_text(s);
  CHECK(canonical_text(parse_structure_text(text)) == text);
}
