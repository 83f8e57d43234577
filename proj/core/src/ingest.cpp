#include "latticeforge/ingest.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace latticeforge {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// First non-whitespace character at or after pos, or npos.
std::size_t next_visible(std::string_view text, std::size_t pos) {
  while (pos < text.size() && is_space(text[pos])) ++pos;
  return pos < text.size() ? pos : std::string_view::npos;
}

}  // namespace

std::vector<Sentence> split_sentences(std::string_view text) {
  std::vector<Sentence> sentences;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    std::size_t b = start;
    while (b < end && is_space(text[b])) ++b;
    std::size_t e = end;
    while (e > b && is_space(text[e - 1])) --e;
    if (e > b) {
      sentences.push_back({std::string(text.substr(b, e - b)), b, e});
    }
  };

  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      std::size_t next = next_visible(text, pos + 1);
      if (next == std::string_view::npos || is_upper(text[next])) {
        emit(pos + 1);
        start = pos + 1;
      }
    } else if (c == '\n') {
      std::size_t next = next_visible(text, pos + 1);
      if (next != std::string_view::npos && is_upper(text[next])) {
        emit(pos);
        start = pos + 1;
      }
    }
  }
  emit(text.size());
  return sentences;
}

std::vector<Token> tokenize(std::string_view sentence) {
  std::vector<Token> tokens;
  const std::size_t n = sentence.size();
  std::size_t pos = 0;
  auto classify = [](char first) {
    if (is_alpha(first)) return Token::Kind::word;
    if (is_digit(first)) return Token::Kind::number;
    return Token::Kind::punctuation;
  };
  while (pos < n) {
    if (is_space(sentence[pos])) {
      ++pos;
      continue;
    }
    char c = sentence[pos];
    std::size_t begin = pos;
    if (is_alnum(c)) {
      while (pos < n) {
        char cur = sentence[pos];
        if (is_alnum(cur)) {
          ++pos;
          continue;
        }
        bool inner = pos + 1 < n && pos > begin;
        if (inner && (cur == '-' || cur == '\'') && is_alpha(sentence[pos - 1]) &&
            is_alpha(sentence[pos + 1])) {
          ++pos;
          continue;
        }
        if (inner && (cur == ',' || cur == '.') && is_digit(sentence[pos - 1]) &&
            is_digit(sentence[pos + 1])) {
          ++pos;
          continue;
        }
        break;
      }
    } else {
      ++pos;
    }
    tokens.push_back({std::string(sentence.substr(begin, pos - begin)), begin, pos,
                      classify(sentence[begin])});
  }
  return tokens;
}

namespace {

WordRef parse_word_ref(std::string_view text, std::size_t lineno) {
  text = trim(text);
  std::size_t dash = text.rfind('-');
  if (dash == std::string_view::npos || dash == 0 || dash + 1 == text.size()) {
    throw ParseError(lineno, "expected word-index, found '" + std::string(text) + "'");
  }
  std::string_view digits = text.substr(dash + 1);
  // Some emitters mark duplicated words with a trailing prime.
  while (!digits.empty() && digits.back() == '\'') digits.remove_suffix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), is_digit)) {
    throw ParseError(lineno, "bad token index in '" + std::string(text) + "'");
  }
  WordRef ref;
  ref.word = std::string(text.substr(0, dash));
  ref.index = std::stoi(std::string(digits));
  return ref;
}

DependencyTriple parse_triple(std::string_view item, std::size_t lineno,
                              std::size_t sentence) {
  std::size_t open = item.find('(');
  if (open == std::string_view::npos || item.back() != ')') {
    throw ParseError(lineno, "expected rel(gov, dep), found '" + std::string(item) + "'");
  }
  std::string_view rel = trim(item.substr(0, open));
  if (rel.empty()) throw ParseError(lineno, "empty relation name");
  std::string_view args = item.substr(open + 1, item.size() - open - 2);
  std::size_t comma = args.find(',');
  if (comma == std::string_view::npos) {
    throw ParseError(lineno, "expected two comma-separated arguments in '" +
                                 std::string(item) + "'");
  }
  if (args.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError(lineno, "too many arguments in '" + std::string(item) + "'");
  }

  DependencyTriple triple;
  std::size_t sep = rel.find_first_of(" _");
  if (sep == std::string_view::npos) {
    triple.base = std::string(rel);
  } else {
    triple.base = std::string(rel.substr(0, sep));
    triple.subtype = std::string(trim(rel.substr(sep + 1)));
  }
  triple.governor = parse_word_ref(args.substr(0, comma), lineno);
  triple.dependent = parse_word_ref(args.substr(comma + 1), lineno);
  triple.sentence = sentence;
  return triple;
}

}  // namespace

std::vector<DependencyTriple> parse_dependencies(std::string_view text) {
  std::vector<DependencyTriple> triples;
  std::size_t sentence = 0;
  bool block_open = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') {
      if (body.empty() && block_open) {
        ++sentence;
        block_open = false;
      }
      continue;
    }
    block_open = true;

    // Split at top-level commas so a whole sentence may sit on one line.
    int depth = 0;
    std::size_t item_start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i < body.size() && body[i] == '(') ++depth;
      else if (i < body.size() && body[i] == ')') --depth;
      if (i == body.size() || (body[i] == ',' && depth == 0)) {
        std::string_view item = trim(body.substr(item_start, i - item_start));
        if (!item.empty()) triples.push_back(parse_triple(item, lineno, sentence));
        item_start = i + 1;
      }
    }
  }
  return triples;
}

bool relation_interesting(std::string_view base) {
  static const std::set<std::string, std::less<>> kWhitelist = {
      "acomp", "agent",     "conj",      "cop",       "csubj",
      "csubjpass", "dobj",  "infmod",    "nsubj",     "nsubjpass",
      "parataxis", "partmod", "prepc",   "purpcl",    "rcmod",
      "rel",   "tmod",      "xcomp",     "xsubj",
  };
  return kWhitelist.count(base) != 0;
}

std::vector<DependencyTriple> filter_triples(std::vector<DependencyTriple> triples) {
  std::erase_if(triples,
                [](const DependencyTriple& t) { return !relation_interesting(t.base); });
  return triples;
}

namespace {

std::string fold(std::string s, bool fold_case) {
  if (fold_case) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
      return static_cast<char>(std::tolower(c));
    });
  }
  return s;
}

std::vector<WordPair> dedup_pairs(std::vector<WordPair> pairs) {
  std::vector<WordPair> out;
  std::map<std::pair<std::string, std::string>, std::size_t> seen;
  for (auto& pair : pairs) {
    auto key = std::make_pair(pair.attribute, pair.object);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(std::move(key), out.size());
      out.push_back(std::move(pair));
    } else {
      auto& origins = out[it->second].origins;
      origins.insert(origins.end(), pair.origins.begin(), pair.origins.end());
    }
  }
  return out;
}

}  // namespace

std::vector<WordPair> prune_pairs(std::vector<WordPair> pairs, const WordNetDb* db) {
  if (db) {
    for (auto& pair : pairs) {
      if (auto verbs = db->morphy(pair.attribute, Pos::verb); !verbs.empty()) {
        pair.attribute = verbs.front();
      }
      if (auto nouns = db->morphy(pair.object, Pos::noun); !nouns.empty()) {
        pair.object = nouns.front();
      }
    }
  }
  return dedup_pairs(std::move(pairs));
}

std::vector<WordPair> extract_pairs(const std::vector<DependencyTriple>& triples,
                                    const WordNetDb* db, bool fold_case) {
  std::vector<WordPair> pairs;
  pairs.reserve(triples.size());
  for (const auto& triple : triples) {
    // For a copula the dependent carries the verb, so the sides swap.
    const bool swap = triple.base == "cop";
    WordPair pair;
    pair.attribute = fold(swap ? triple.dependent.word : triple.governor.word, fold_case);
    pair.object = fold(swap ? triple.governor.word : triple.dependent.word, fold_case);
    std::string relation = triple.base;
    if (!triple.subtype.empty()) relation += "_" + triple.subtype;
    pair.origins.push_back({std::move(relation), triple.sentence});
    pairs.push_back(std::move(pair));
  }
  return prune_pairs(std::move(pairs), db);
}

FormalContext context_from_pairs(const std::vector<WordPair>& pairs) {
  std::vector<std::string> objects, attributes;
  std::unordered_map<std::string, std::size_t> object_index, attribute_index;
  std::vector<std::pair<std::string, std::string>> cells;
  for (const auto& pair : pairs) {
    if (object_index.emplace(pair.object, objects.size()).second) {
      objects.push_back(pair.object);
    }
    if (attribute_index.emplace(pair.attribute, attributes.size()).second) {
      attributes.push_back(pair.attribute);
    }
    cells.emplace_back(pair.object, pair.attribute);
  }
  return FormalContext::from_incidence(std::move(objects), std::move(attributes), cells);
}

std::vector<WordPair> pairs_from_context(const FormalContext& ctx) {
  // Emit cells so that objects and attributes are both introduced in axis
  // order: cells inside the already-seen prefix first, then the cell that
  // introduces the next label.
  std::set<std::pair<std::size_t, std::size_t>> remaining;
  for (std::size_t i = 0; i < ctx.object_count(); ++i) {
    for (std::size_t j = ctx.row(i).find_first(); j != Bitset::npos;
         j = ctx.row(i).find_next(j)) {
      remaining.emplace(i, j);
    }
  }
  std::vector<WordPair> pairs;
  std::size_t seen_objects = 0, seen_attributes = 0;
  auto emit = [&](std::pair<std::size_t, std::size_t> cell) {
    pairs.push_back({ctx.attributes()[cell.second], ctx.objects()[cell.first], {}});
    seen_objects = std::max(seen_objects, cell.first + 1);
    seen_attributes = std::max(seen_attributes, cell.second + 1);
    remaining.erase(cell);
  };
  while (!remaining.empty()) {
    bool progressed = false;
    for (auto it = remaining.begin(); it != remaining.end();) {
      if (it->first < seen_objects && it->second < seen_attributes) {
        auto cell = *it;
        ++it;
        emit(cell);
        progressed = true;
      } else {
        ++it;
      }
    }
    if (remaining.empty()) break;
    // Introduce the next object, the next attribute, or both at once.
    auto introduces = [&](const std::pair<std::size_t, std::size_t>& cell) {
      bool new_obj = cell.first == seen_objects;
      bool old_obj = cell.first < seen_objects;
      bool new_attr = cell.second == seen_attributes;
      bool old_attr = cell.second < seen_attributes;
      return (new_obj && old_attr) || (old_obj && new_attr) || (new_obj && new_attr);
    };
    auto chosen = remaining.end();
    for (auto it = remaining.begin(); it != remaining.end(); ++it) {
      if (introduces(*it)) {
        chosen = it;
        break;
      }
    }
    if (chosen == remaining.end()) chosen = remaining.begin();
    emit(*chosen);
    (void)progressed;
  }
  return pairs;
}

std::vector<WordPair> pairs_from_tsv(std::string_view text, bool fold_case) {
  std::vector<WordPair> pairs;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::size_t tab = body.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError(lineno, "expected attribute<TAB>object");
    }
    std::string attribute = std::string(trim(body.substr(0, tab)));
    std::string object = std::string(trim(body.substr(tab + 1)));
    if (attribute.empty() || object.empty() ||
        object.find('\t') != std::string::npos) {
      throw ParseError(lineno, "expected exactly two non-empty fields");
    }
    pairs.push_back({fold(std::move(attribute), fold_case),
                     fold(std::move(object), fold_case),
                     {{"tsv", lineno}}});
  }
  return dedup_pairs(std::move(pairs));
}

std::string pairs_to_tsv(const std::vector<WordPair>& pairs) {
  std::ostringstream out;
  for (const auto& pair : pairs) {
    out << pair.attribute << '\t' << pair.object << '\n';
  }
  return out.str();
}

}  // namespace latticeforge
