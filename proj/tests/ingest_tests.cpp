#include <doctest.h>

#include <random>

#include <latticeforge/errors.hpp>
#include <latticeforge/ingest.hpp>
#include <latticeforge/wordnet.hpp>

#include "support/fixtures.hpp"

using latticeforge::DependencyTriple;
using latticeforge::FormalContext;
using latticeforge::Token;
using latticeforge::WordPair;

namespace {

const latticeforge::WordNetDb& db() {
  static auto instance = latticeforge::WordNetDb::load(lf_test::wordnet_dir());
  return instance;
}

constexpr const char* kBellDeps =
    "nsubj(makes-8, Bell-1)\n"
    "nsubj(distributes-10, Bell-1)\n"
    "partmod(Bell-1, based-3)\n"
    "nn(Angeles-6, Los-5)\n"
    "prep_in(based-3, Angeles-6)\n"
    "root(ROOT-0, makes-8)\n"
    "conj_and(makes-8, distributes-10)\n"
    "amod(products-16, electronic-11)\n"
    "dobj(makes-8, products-16)\n"
    "dobj(distributes-10, products-16)\n";

}  // namespace

TEST_SUITE("ingest") {

TEST_CASE("sentences split on stops before capitals") {
  auto sentences = latticeforge::split_sentences(
      "The museum houses art. It opened in 1905. visitors still come");
  REQUIRE(sentences.size() == 2);
  CHECK(sentences[0].text == "The museum houses art.");
  CHECK(sentences[1].text == "It opened in 1905. visitors still come");
}

TEST_CASE("abbreviation stops do not split") {
  auto sentences =
      latticeforge::split_sentences("The fee is approx. ten pounds. Nobody pays.");
  REQUIRE(sentences.size() == 2);
  CHECK(sentences[0].text == "The fee is approx. ten pounds.");
  CHECK(sentences[1].text == "Nobody pays.");
}

TEST_CASE("newline before a capital splits") {
  auto sentences = latticeforge::split_sentences("first line\nSecond line");
  REQUIRE(sentences.size() == 2);
  CHECK(sentences[0].text == "first line");
  CHECK(sentences[1].text == "Second line");
  CHECK(latticeforge::split_sentences("first\nstill first").size() == 1);
}

TEST_CASE("sentence offsets point into the original text") {
  std::string text = "  One two. Three four.";
  auto sentences = latticeforge::split_sentences(text);
  REQUIRE(sentences.size() == 2);
  for (const auto& s : sentences) {
    CHECK(text.substr(s.begin, s.end - s.begin) == s.text);
  }
}

TEST_CASE("tokenize keeps inner separators") {
  auto tokens = latticeforge::tokenize("The motor-bike costs 55,000 pounds, don't buy.");
  std::vector<std::string> words;
  for (const auto& t : tokens) words.push_back(t.text);
  CHECK(words == std::vector<std::string>{"The", "motor-bike", "costs", "55,000",
                                          "pounds", ",", "don't", "buy", "."});
  CHECK(tokens[1].kind == Token::Kind::word);
  CHECK(tokens[3].kind == Token::Kind::number);
  CHECK(tokens[5].kind == Token::Kind::punctuation);
  CHECK(tokens[8].kind == Token::Kind::punctuation);
}

TEST_CASE("token offsets cover their text") {
  std::string sentence = "ab  cd-ef g";
  for (const auto& t : latticeforge::tokenize(sentence)) {
    CHECK(sentence.substr(t.begin, t.end - t.begin) == t.text);
  }
}

TEST_CASE("dependency parsing reads one triple per line") {
  auto triples = latticeforge::parse_dependencies(kBellDeps);
  REQUIRE(triples.size() == 10);
  CHECK(triples[0].base == "nsubj");
  CHECK(triples[0].subtype.empty());
  CHECK(triples[0].governor == latticeforge::WordRef{"makes", 8});
  CHECK(triples[0].dependent == latticeforge::WordRef{"Bell", 1});
  CHECK(triples[4].base == "prep");
  CHECK(triples[4].subtype == "in");
  CHECK(triples[6].base == "conj");
  CHECK(triples[6].subtype == "and");
  CHECK(triples[5].governor == latticeforge::WordRef{"ROOT", 0});
  for (const auto& t : triples) CHECK(t.sentence == 0);
}

TEST_CASE("blank lines advance the sentence ordinal") {
  auto triples = latticeforge::parse_dependencies(
      "nsubj(runs-2, dog-1)\n\n# comment\nnsubj(sleeps-2, cat-1)\n\n\n"
      "dobj(sees-2, bird-3)");
  REQUIRE(triples.size() == 3);
  CHECK(triples[0].sentence == 0);
  CHECK(triples[1].sentence == 1);
  CHECK(triples[2].sentence == 2);
}

TEST_CASE("triples may share a line") {
  auto triples = latticeforge::parse_dependencies(
      "nsubj(runs-2, dog-1), dobj(runs-2, ball-4)\r\n");
  REQUIRE(triples.size() == 2);
  CHECK(triples[1].dependent == latticeforge::WordRef{"ball", 4});
}

TEST_CASE("primes after token indices are tolerated") {
  auto triples = latticeforge::parse_dependencies("nsubj(runs-2', dog-1)");
  REQUIRE(triples.size() == 1);
  CHECK(triples[0].governor == latticeforge::WordRef{"runs", 2});
}

TEST_CASE("malformed dependencies carry line numbers") {
  CHECK_THROWS_WITH_AS(latticeforge::parse_dependencies("nsubj(runs-2, dog-1)\nboom\n"),
                       doctest::Contains("line 2"), latticeforge::ParseError);
  CHECK_THROWS_AS(latticeforge::parse_dependencies("nsubj(runs-x, dog-1)"),
                  latticeforge::ParseError);
  CHECK_THROWS_AS(latticeforge::parse_dependencies("nsubj(runs-2)"),
                  latticeforge::ParseError);
  CHECK_THROWS_AS(latticeforge::parse_dependencies("nsubj(a-1, b-2, c-3)"),
                  latticeforge::ParseError);
  CHECK_THROWS_AS(latticeforge::parse_dependencies("(a-1, b-2)"),
                  latticeforge::ParseError);
}

TEST_CASE("only interesting relations survive the filter") {
  CHECK(latticeforge::relation_interesting("nsubj"));
  CHECK(latticeforge::relation_interesting("dobj"));
  CHECK(latticeforge::relation_interesting("prepc"));
  CHECK(latticeforge::relation_interesting("cop"));
  CHECK_FALSE(latticeforge::relation_interesting("det"));
  CHECK_FALSE(latticeforge::relation_interesting("nn"));
  CHECK_FALSE(latticeforge::relation_interesting("prep"));
  CHECK_FALSE(latticeforge::relation_interesting("root"));
  CHECK_FALSE(latticeforge::relation_interesting("amod"));

  auto kept = latticeforge::filter_triples(latticeforge::parse_dependencies(kBellDeps));
  REQUIRE(kept.size() == 6);
  for (const auto& t : kept) CHECK(latticeforge::relation_interesting(t.base));
}

TEST_CASE("pairs come from governor and dependent with lemmatization") {
  auto kept = latticeforge::filter_triples(latticeforge::parse_dependencies(kBellDeps));
  auto pairs = latticeforge::extract_pairs(kept, &db());
  // makes-Bell, distributes-Bell, Bell-based, makes-distributes,
  // makes-products, distributes-products; lemmatized and deduplicated.
  REQUIRE(pairs.size() == 6);
  CHECK(pairs[0].attribute == "make");
  CHECK(pairs[0].object == "Bell");
  CHECK(pairs[1].attribute == "distribute");
  CHECK(pairs[1].object == "Bell");
  CHECK(pairs[4].attribute == "make");
  CHECK(pairs[4].object == "product");
  REQUIRE(pairs[0].origins.size() == 1);
  CHECK(pairs[0].origins[0].relation == "nsubj");
}

TEST_CASE("copular triples swap the verb onto the attribute side") {
  auto triples = latticeforge::parse_dependencies("cop(institution-4, was-2)");
  auto pairs = latticeforge::extract_pairs(triples, &db());
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].attribute == "be");
  CHECK(pairs[0].object == "institution");
}

TEST_CASE("subtype relations keep their full name in the origin") {
  auto triples = latticeforge::parse_dependencies("prepc_by(documented-2, illustrating-6)");
  auto pairs = latticeforge::extract_pairs(triples, nullptr);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].origins[0].relation == "prepc_by");
  CHECK(pairs[0].attribute == "documented");
}

TEST_CASE("duplicate pairs collapse onto the first occurrence") {
  auto triples = latticeforge::parse_dependencies(
      "nsubj(walks-2, dog-1)\n\nnsubj(walked-2, dogs-1)\n");
  auto pairs = latticeforge::extract_pairs(triples, &db());
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].attribute == "walk");
  CHECK(pairs[0].object == "dog");
  REQUIRE(pairs[0].origins.size() == 2);
  CHECK(pairs[0].origins[0].sentence == 0);
  CHECK(pairs[0].origins[1].sentence == 1);
}

TEST_CASE("case folding happens before lemmatization") {
  auto triples = latticeforge::parse_dependencies("nsubj(Walks-2, Dogs-1)");
  auto pairs = latticeforge::extract_pairs(triples, &db(), true);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].attribute == "walk");
  CHECK(pairs[0].object == "dog");
}

TEST_CASE("a context collects pairs in first-occurrence order") {
  std::vector<WordPair> pairs = {
      {"book", "hotel", {}},
      {"book", "trip", {}},
      {"join", "trip", {}},
      {"book", "hotel", {}},
  };
  auto ctx = latticeforge::context_from_pairs(pairs);
  CHECK(ctx.objects() == std::vector<std::string>{"hotel", "trip"});
  CHECK(ctx.attributes() == std::vector<std::string>{"book", "join"});
  CHECK(ctx.incidence(0, 0));
  CHECK(ctx.incidence(1, 0));
  CHECK(ctx.incidence(1, 1));
  CHECK_FALSE(ctx.incidence(0, 1));
}

TEST_CASE("pair reconstruction is a fixpoint of context building") {
  std::mt19937 rng(555);
  std::uniform_int_distribution<int> count(1, 25);
  std::uniform_int_distribution<int> vocab(0, 9);
  for (int sample = 0; sample < 300; ++sample) {
    std::vector<WordPair> pairs;
    int n = count(rng);
    for (int k = 0; k < n; ++k) {
      pairs.push_back({"v" + std::to_string(vocab(rng)),
                       "n" + std::to_string(vocab(rng)),
                       {}});
    }
    auto ctx = latticeforge::context_from_pairs(pairs);
    auto rebuilt = latticeforge::context_from_pairs(
        latticeforge::pairs_from_context(ctx));
    REQUIRE(rebuilt == ctx);
  }
}

TEST_CASE("tsv pairs parse with comments and folding") {
  auto pairs = latticeforge::pairs_from_tsv(
      "# corpus\nbook\thotel\n\n  drive \t car \nbook\thotel\n");
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].attribute == "book");
  CHECK(pairs[0].object == "hotel");
  CHECK(pairs[1].attribute == "drive");
  CHECK(pairs[1].object == "car");
  REQUIRE(pairs[0].origins.size() == 2);
  CHECK(pairs[0].origins[0].relation == "tsv");
  CHECK(pairs[0].origins[0].sentence == 2);
  CHECK(pairs[0].origins[1].sentence == 5);

  auto folded = latticeforge::pairs_from_tsv("Book\tHotel\n", true);
  CHECK(folded[0].attribute == "book");
  CHECK(folded[0].object == "hotel");
}

TEST_CASE("tsv pairs reject malformed lines") {
  CHECK_THROWS_WITH_AS(latticeforge::pairs_from_tsv("book hotel\n"),
                       doctest::Contains("line 1"), latticeforge::ParseError);
  CHECK_THROWS_AS(latticeforge::pairs_from_tsv("book\t\n"), latticeforge::ParseError);
  CHECK_THROWS_AS(latticeforge::pairs_from_tsv("\thotel\n"), latticeforge::ParseError);
  CHECK_THROWS_AS(latticeforge::pairs_from_tsv("a\tb\tc\n"), latticeforge::ParseError);
}

TEST_CASE("tsv rendering round trips") {
  auto pairs = latticeforge::pairs_from_tsv("book\thotel\ndrive\tcar\n");
  auto text = latticeforge::pairs_to_tsv(pairs);
  CHECK(text == "book\thotel\ndrive\tcar\n");
  auto again = latticeforge::pairs_from_tsv(text);
  REQUIRE(again.size() == pairs.size());
  CHECK(again[0].attribute == pairs[0].attribute);
  CHECK(again[1].object == pairs[1].object);
}

}  // TEST_SUITE
