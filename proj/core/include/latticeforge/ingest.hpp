#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "latticeforge/context.hpp"
#include "latticeforge/wordnet.hpp"

namespace latticeforge {

struct Token {
  enum class Kind { word, number, punctuation };

  std::string text;
  // Character offsets into the tokenized span.
  std::size_t begin = 0;
  std::size_t end = 0;
  Kind kind = Kind::word;
};

struct Sentence {
  std::string text;
  // Character offsets into the original input text.
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct WordRef {
  std::string word;
  // 1-based token index; 0 is reserved for ROOT.
  int index = 0;

  bool operator==(const WordRef&) const = default;
};

struct DependencyTriple {
  std::string base;
  std::string subtype;
  WordRef governor;
  WordRef dependent;
  // Ordinal of the blank-line separated block the triple came from.
  std::size_t sentence = 0;

  bool operator==(const DependencyTriple&) const = default;
};

struct PairOrigin {
  std::string relation;
  std::size_t sentence = 0;

  bool operator==(const PairOrigin&) const = default;
};

// A verb-noun pair: the attribute side is the verb, the object side the
// noun. Identity is the (attribute, object) string pair; duplicates merge
// their origins.
struct WordPair {
  std::string attribute;
  std::string object;
  std::vector<PairOrigin> origins;
};

// Splits text into sentences: a full stop followed by a capitalized token
// or by the end of the input ends a sentence, and so does a newline
// followed by a capitalized token. Trailing text forms a final sentence.
std::vector<Sentence> split_sentences(std::string_view text);

// Whitespace tokenization with punctuation split off, except separators
// inside words (motor-bike, don't) and digit groups (55,000 or 3.14).
std::vector<Token> tokenize(std::string_view sentence);

// Parses typed-dependency output: triples `rel(word-idx, word-idx)`, one
// per line or comma-separated, where rel may carry a space or underscore
// subtype. Blank lines advance the sentence ordinal. Malformed input
// throws ParseError with the line number.
std::vector<DependencyTriple> parse_dependencies(std::string_view text);

// Keeps only triples whose relation base is an interesting dependency.
std::vector<DependencyTriple> filter_triples(std::vector<DependencyTriple> triples);
bool relation_interesting(std::string_view base);

// Maps filtered triples to verb-noun pairs (governor is the attribute,
// dependent the object, swapped for cop), lemmatizes both sides when a
// database is given and collapses duplicates in first-occurrence order.
std::vector<WordPair> extract_pairs(const std::vector<DependencyTriple>& triples,
                                    const WordNetDb* db, bool fold_case = false);

// Lemmatizes the attribute side as a verb and the object side as a noun
// (first morphy candidate); sides without a base form pass through
// unchanged. A null database leaves all pairs untouched. Duplicates after
// lemmatization collapse in first-occurrence order.
std::vector<WordPair> prune_pairs(std::vector<WordPair> pairs, const WordNetDb* db);

// Objects are the distinct object sides in first-occurrence order,
// attributes the distinct attribute sides likewise; one incidence cell per
// distinct pair.
FormalContext context_from_pairs(const std::vector<WordPair>& pairs);

// Reconstructs a pair list whose context_from_pairs image is the given
// context, provided the context itself is such an image.
std::vector<WordPair> pairs_from_context(const FormalContext& ctx);

// Pair TSV: one `attribute<TAB>object` per line, # starts a comment.
std::vector<WordPair> pairs_from_tsv(std::string_view text, bool fold_case = false);
std::string pairs_to_tsv(const std::vector<WordPair>& pairs);

}  // namespace latticeforge
