#include <doctest.h>

#include <latticeforge/context.hpp>
#include <latticeforge/errors.hpp>

#include "support/fixtures.hpp"

using latticeforge::Axis;
using latticeforge::Bitset;
using latticeforge::FormalContext;

TEST_SUITE("context") {

TEST_CASE("from_incidence keeps axis order and cells") {
  auto ctx = lf_test::verbs();
  CHECK(ctx.object_count() == 3);
  CHECK(ctx.attribute_count() == 3);
  CHECK(ctx.objects() == std::vector<std::string>{"house", "combine", "reference"});
  CHECK(ctx.attributes() == std::vector<std::string>{"building", "reference", "allude"});
  CHECK(ctx.incidence(0, 0));
  CHECK(ctx.incidence(0, 2));
  CHECK(ctx.incidence(1, 0));
  CHECK(ctx.incidence(2, 2));
  CHECK_FALSE(ctx.incidence(0, 1));
  CHECK_FALSE(ctx.incidence(2, 0));
}

TEST_CASE("duplicate labels are rejected") {
  CHECK_THROWS_AS(FormalContext::from_incidence({"a", "a"}, {"x"}, {}),
                  latticeforge::DuplicateLabel);
  CHECK_THROWS_AS(FormalContext::from_incidence({"a"}, {"x", "x"}, {}),
                  latticeforge::DuplicateLabel);
}

TEST_CASE("cells must reference declared labels") {
  CHECK_THROWS_AS(FormalContext::from_incidence({"a"}, {"x"}, {{"b", "x"}}),
                  latticeforge::UnknownLabel);
  CHECK_THROWS_AS(FormalContext::from_incidence({"a"}, {"x"}, {{"a", "y"}}),
                  latticeforge::UnknownLabel);
  CHECK_THROWS_AS(lf_test::verbs().object_index("nope"), latticeforge::UnknownLabel);
  CHECK_THROWS_AS(lf_test::verbs().attribute_index("nope"), latticeforge::UnknownLabel);
}

TEST_CASE("rows and columns agree with incidence") {
  auto ctx = lf_test::tourism();
  for (std::size_t i = 0; i < ctx.object_count(); ++i)
    for (std::size_t j = 0; j < ctx.attribute_count(); ++j) {
      CHECK(ctx.row(i)[j] == ctx.incidence(i, j));
      CHECK(ctx.column(j)[i] == ctx.incidence(i, j));
    }
}

TEST_CASE("derivation on the tourism context") {
  auto ctx = lf_test::tourism();
  using Labels = std::vector<std::string>;
  CHECK(ctx.close_attributes(Labels{"drive"}) == Labels{"book", "rent", "drive"});
  CHECK(ctx.close_attributes(Labels{}) == Labels{"book"});
  CHECK(ctx.extent_of(Labels{"book", "rent"}) ==
        Labels{"apartment", "car", "motor-bike"});
  CHECK(ctx.intent_of(Labels{"apartment", "trip"}) == Labels{"book", "reserve"});
}

TEST_CASE("empty index sets derive to the full opposite axis") {
  auto ctx = lf_test::verbs();
  CHECK(ctx.intent_of(Bitset(ctx.object_count())).count() == ctx.attribute_count());
  CHECK(ctx.extent_of(Bitset(ctx.attribute_count())).count() == ctx.object_count());
}

TEST_CASE("label-level derivation ignores duplicates and rejects unknowns") {
  auto ctx = lf_test::tourism();
  using Labels = std::vector<std::string>;
  CHECK(ctx.extent_of(Labels{"join", "join"}) == ctx.extent_of(Labels{"join"}));
  CHECK_THROWS_AS(ctx.extent_of(Labels{"swim"}), latticeforge::UnknownLabel);
}

TEST_CASE("transposition is an involution") {
  auto ctx = lf_test::airlines();
  auto t = ctx.transposed();
  CHECK(t.object_count() == ctx.attribute_count());
  CHECK(t.attribute_count() == ctx.object_count());
  CHECK(t.incidence(0, 0) == ctx.incidence(0, 0));
  CHECK(t.incidence(4, 1) == ctx.incidence(1, 4));
  CHECK(t.transposed() == ctx);
}

TEST_CASE("equality is positional") {
  auto a = lf_test::verbs();
  auto b = lf_test::verbs();
  CHECK(a == b);
  auto shuffled = FormalContext::from_incidence(
      {"combine", "house", "reference"}, {"building", "reference", "allude"},
      {{"house", "building"},
       {"house", "allude"},
       {"combine", "building"},
       {"reference", "allude"}});
  CHECK_FALSE(a == shuffled);
}

TEST_CASE("csv round trip") {
  auto ctx = lf_test::tourism();
  auto text = ctx.to_csv();
  CHECK(FormalContext::from_csv(text) == ctx);
  CHECK(text.substr(0, text.find('\n')) == ",book,reserve,rent,drive,ride,join");
}

TEST_CASE("csv round trip of an empty context") {
  FormalContext empty;
  CHECK(empty.to_csv() == "\n");
  CHECK(FormalContext::from_csv(empty.to_csv()) == empty);
}

TEST_CASE("csv rejects malformed input with line numbers") {
  CHECK_THROWS_AS(FormalContext::from_csv("x,a\no,1\n"), latticeforge::ParseError);
  CHECK_THROWS_WITH_AS(FormalContext::from_csv(",a\no,2\n"),
                       doctest::Contains("line 2"), latticeforge::ParseError);
  CHECK_THROWS_AS(FormalContext::from_csv(",a\no,1,0\n"), latticeforge::ParseError);
}

TEST_CASE("csv rejects labels that cannot be encoded") {
  auto ctx = FormalContext::from_incidence({"a,b"}, {"x"}, {});
  CHECK_THROWS_AS(ctx.to_csv(), latticeforge::Error);
}

TEST_CASE("random csv round trips") {
  std::mt19937 rng(20250814);
  for (int i = 0; i < 50; ++i) {
    auto ctx = lf_test::random_context(rng, 7, 7);
    CHECK(FormalContext::from_csv(ctx.to_csv()) == ctx);
  }
}

}  // TEST_SUITE
