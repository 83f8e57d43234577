#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "latticeforge/errors.hpp"

namespace latticeforge {

enum class Pos { noun, verb };

struct SynsetId {
  std::uint32_t offset = 0;
  Pos pos = Pos::noun;

  auto operator<=>(const SynsetId&) const = default;
};

struct Synset {
  SynsetId id;
  // Member words, normalized (lowercased, separators mapped to underscores),
  // in file order.
  std::vector<std::string> words;
  // Hypernym targets (@ and @i pointers).
  std::vector<SynsetId> hypernyms;
  std::string gloss;
};

// The lexical relatedness queries the reduction techniques depend on.
// Abstracted so tests can substitute a hand-built lexicon.
class RelatednessLexicon {
 public:
  virtual ~RelatednessLexicon() = default;

  virtual bool are_synonyms(const std::string& a, const std::string& b,
                            Pos pos) const = 0;

  // The more general of the two labels when they are synonyms or one
  // subsumes the other within the given hypernym depth; nullopt otherwise.
  // The result is always one of the two labels exactly as passed, and the
  // function is symmetric in a and b.
  virtual std::optional<std::string> most_general_within(const std::string& a,
                                                         const std::string& b,
                                                         Pos pos,
                                                         int depth) const = 0;
};

// Reader for a WordNet 3.x flat-file database directory (the layout of
// index.noun, data.noun, index.verb, data.verb, noun.exc and verb.exc).
class WordNetDb {
 public:
  // dir is the dict directory. All six files must exist, otherwise
  // MissingDatabaseFile is thrown; malformed content throws ParseError.
  static WordNetDb load(const std::filesystem::path& dir);

  // Synsets of a lemma in sense order; empty when the lemma is unknown.
  std::vector<const Synset*> synsets(const std::string& lemma, Pos pos) const;
  bool is_indexed(const std::string& lemma, Pos pos) const;

  // Base-form candidates for an inflected word: the word itself when
  // indexed, then exception-list bases, then indexed results of suffix
  // detachment, deduplicated in that order. Unknown words yield an empty
  // list.
  std::vector<std::string> morphy(const std::string& word, Pos pos) const;

  // True when the two lemmas share at least one synset.
  bool are_synonyms(const std::string& a, const std::string& b, Pos pos) const;

  // See RelatednessLexicon::most_general_within. Synonymy wins regardless
  // of depth; otherwise the bounded hypernym search runs in both
  // directions and the smaller distance decides.
  std::optional<std::string> most_general_within(const std::string& a,
                                                 const std::string& b, Pos pos,
                                                 int depth) const;

  const Synset* synset(SynsetId id) const;
  std::size_t synset_count(Pos pos) const;

  // ASCII-lowercases and maps spaces and hyphens to underscores.
  static std::string normalize(std::string_view word);

 private:
  const std::vector<SynsetId>* find_index(const std::string& normalized,
                                          Pos pos) const;

  std::unordered_map<std::string, std::vector<SynsetId>> index_[2];
  std::map<std::uint32_t, Synset> data_[2];
  std::unordered_map<std::string, std::vector<std::string>> exceptions_[2];
};

// RelatednessLexicon backed by a loaded WordNetDb.
class WordNetLexicon final : public RelatednessLexicon {
 public:
  explicit WordNetLexicon(const WordNetDb& db) : db_(&db) {}

  bool are_synonyms(const std::string& a, const std::string& b,
                    Pos pos) const override {
    return db_->are_synonyms(a, b, pos);
  }

  std::optional<std::string> most_general_within(const std::string& a,
                                                 const std::string& b, Pos pos,
                                                 int depth) const override {
    return db_->most_general_within(a, b, pos, depth);
  }

 private:
  const WordNetDb* db_;
};

}  // namespace latticeforge
