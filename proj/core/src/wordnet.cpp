#include "latticeforge/wordnet.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace latticeforge {

namespace {

constexpr std::size_t pos_slot(Pos pos) { return pos == Pos::noun ? 0 : 1; }

struct SuffixRule {
  std::string_view suffix;
  std::string_view replacement;
};

constexpr SuffixRule kNounRules[] = {
    {"s", ""},     {"ses", "s"}, {"xes", "x"}, {"zes", "z"},
    {"ches", "ch"}, {"shes", "sh"}, {"men", "man"}, {"ies", "y"},
};

constexpr SuffixRule kVerbRules[] = {
    {"s", ""},   {"ies", "y"}, {"es", "e"}, {"es", ""},
    {"ed", "e"}, {"ed", ""},   {"ing", "e"}, {"ing", ""},
};

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(std::move(tok));
  return tokens;
}

std::uint32_t parse_offset(const std::string& token, const std::string& file,
                           std::size_t lineno) {
  if (token.size() != 8 ||
      !std::all_of(token.begin(), token.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError(lineno, file + ": bad synset offset '" + token + "'");
  }
  return static_cast<std::uint32_t>(std::stoul(token));
}

long parse_int(const std::string& token, int base, const std::string& file,
               std::size_t lineno, const char* what) {
  try {
    std::size_t used = 0;
    long value = std::stol(token, &used, base);
    if (used != token.size() || value < 0) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ParseError(lineno, file + ": bad " + what + " field '" + token + "'");
  }
}

std::ifstream open_db_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw MissingDatabaseFile("cannot open database file: " + path.string());
  }
  return in;
}

bool is_header_line(const std::string& line) {
  return line.empty() || line.front() == ' ';
}

Pos pos_of_tag(const std::string& tag, const std::string& file,
               std::size_t lineno) {
  if (tag == "n") return Pos::noun;
  if (tag == "v") return Pos::verb;
  throw ParseError(lineno, file + ": unsupported part-of-speech tag '" + tag + "'");
}

}  // namespace

std::string WordNetDb::normalize(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (unsigned char c : word) {
    if (c == ' ' || c == '-') {
      out.push_back('_');
    } else {
      out.push_back(static_cast<char>(std::tolower(c)));
    }
  }
  return out;
}

WordNetDb WordNetDb::load(const std::filesystem::path& dir) {
  WordNetDb db;
  const struct {
    Pos pos;
    const char* index_name;
    const char* data_name;
    const char* exc_name;
  } parts[] = {
      {Pos::noun, "index.noun", "data.noun", "noun.exc"},
      {Pos::verb, "index.verb", "data.verb", "verb.exc"},
  };

  for (const auto& part : parts) {
    const std::size_t slot = pos_slot(part.pos);

    {
      auto in = open_db_file(dir / part.data_name);
      std::string line;
      std::size_t lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        if (is_header_line(line)) continue;
        std::string body = line;
        std::string gloss;
        if (auto bar = line.find('|'); bar != std::string::npos) {
          body = line.substr(0, bar);
          gloss = line.substr(bar + 1);
          while (!gloss.empty() && gloss.front() == ' ') gloss.erase(gloss.begin());
          while (!gloss.empty() && (gloss.back() == ' ' || gloss.back() == '\r')) {
            gloss.pop_back();
          }
        }
        std::vector<std::string> tok = split_ws(body);
        if (tok.size() < 4) {
          throw ParseError(lineno, std::string(part.data_name) + ": truncated synset line");
        }
        Synset syn;
        syn.id.offset = parse_offset(tok[0], part.data_name, lineno);
        syn.id.pos = part.pos;
        std::size_t at = 2;  // skip lex_filenum
        Pos ss_pos = pos_of_tag(tok[at], part.data_name, lineno);
        if (ss_pos != part.pos) {
          throw ParseError(lineno, std::string(part.data_name) + ": synset type mismatch");
        }
        ++at;
        long w_cnt = parse_int(tok.at(at++), 16, part.data_name, lineno, "word count");
        if (w_cnt <= 0 || at + 2 * static_cast<std::size_t>(w_cnt) > tok.size()) {
          throw ParseError(lineno, std::string(part.data_name) + ": bad word count");
        }
        for (long w = 0; w < w_cnt; ++w) {
          syn.words.push_back(normalize(tok.at(at)));
          at += 2;  // word, lex_id
        }
        long p_cnt = parse_int(tok.at(at++), 10, part.data_name, lineno, "pointer count");
        for (long p = 0; p < p_cnt; ++p) {
          if (at + 4 > tok.size()) {
            throw ParseError(lineno, std::string(part.data_name) + ": truncated pointer");
          }
          const std::string& symbol = tok[at];
          std::uint32_t target = parse_offset(tok[at + 1], part.data_name, lineno);
          Pos target_pos = pos_of_tag(tok[at + 2], part.data_name, lineno);
          if (symbol == "@" || symbol == "@i") {
            syn.hypernyms.push_back({target, target_pos});
          }
          at += 4;
        }
        syn.gloss = std::move(gloss);
        if (!db.data_[slot].emplace(syn.id.offset, std::move(syn)).second) {
          throw ParseError(lineno, std::string(part.data_name) + ": duplicate synset offset");
        }
      }
    }

    {
      auto in = open_db_file(dir / part.index_name);
      std::string line;
      std::size_t lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        if (is_header_line(line)) continue;
        std::vector<std::string> tok = split_ws(line);
        if (tok.size() < 7) {
          throw ParseError(lineno, std::string(part.index_name) + ": truncated index line");
        }
        const std::string lemma = normalize(tok[0]);
        pos_of_tag(tok[1], part.index_name, lineno);
        long synset_cnt = parse_int(tok[2], 10, part.index_name, lineno, "synset count");
        long p_cnt = parse_int(tok[3], 10, part.index_name, lineno, "pointer count");
        std::size_t at = 4 + static_cast<std::size_t>(p_cnt) + 2;
        if (synset_cnt <= 0 || at + static_cast<std::size_t>(synset_cnt) != tok.size()) {
          throw ParseError(lineno, std::string(part.index_name) + ": field count mismatch");
        }
        std::vector<SynsetId> ids;
        for (long s = 0; s < synset_cnt; ++s) {
          std::uint32_t offset = parse_offset(tok[at + s], part.index_name, lineno);
          if (!db.data_[slot].count(offset)) {
            throw ParseError(lineno, std::string(part.index_name) +
                                         ": offset not present in data file");
          }
          ids.push_back({offset, part.pos});
        }
        if (!db.index_[slot].emplace(lemma, std::move(ids)).second) {
          throw ParseError(lineno, std::string(part.index_name) + ": duplicate lemma");
        }
      }
    }

    {
      auto in = open_db_file(dir / part.exc_name);
      std::string line;
      std::size_t lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        if (is_header_line(line)) continue;
        std::vector<std::string> tok = split_ws(line);
        if (tok.size() < 2) {
          throw ParseError(lineno, std::string(part.exc_name) + ": expected inflected form and base");
        }
        std::vector<std::string> bases;
        for (std::size_t i = 1; i < tok.size(); ++i) bases.push_back(normalize(tok[i]));
        db.exceptions_[slot][normalize(tok[0])] = std::move(bases);
      }
    }
  }
  return db;
}

const std::vector<SynsetId>* WordNetDb::find_index(const std::string& normalized,
                                                   Pos pos) const {
  const auto& table = index_[pos_slot(pos)];
  auto it = table.find(normalized);
  return it == table.end() ? nullptr : &it->second;
}

bool WordNetDb::is_indexed(const std::string& lemma, Pos pos) const {
  return find_index(normalize(lemma), pos) != nullptr;
}

const Synset* WordNetDb::synset(SynsetId id) const {
  const auto& table = data_[pos_slot(id.pos)];
  auto it = table.find(id.offset);
  return it == table.end() ? nullptr : &it->second;
}

std::size_t WordNetDb::synset_count(Pos pos) const {
  return data_[pos_slot(pos)].size();
}

std::vector<const Synset*> WordNetDb::synsets(const std::string& lemma,
                                              Pos pos) const {
  std::vector<const Synset*> out;
  if (const auto* ids = find_index(normalize(lemma), pos)) {
    out.reserve(ids->size());
    for (SynsetId id : *ids) out.push_back(synset(id));
  }
  return out;
}

std::vector<std::string> WordNetDb::morphy(const std::string& word, Pos pos) const {
  const std::string form = normalize(word);
  std::vector<std::string> out;
  auto add = [&](const std::string& candidate) {
    if (find_index(candidate, pos) &&
        std::find(out.begin(), out.end(), candidate) == out.end()) {
      out.push_back(candidate);
    }
  };

  add(form);
  const auto& exc = exceptions_[pos_slot(pos)];
  if (auto it = exc.find(form); it != exc.end()) {
    for (const auto& base : it->second) add(base);
  }
  const auto rules = pos == Pos::noun
                         ? std::pair(std::begin(kNounRules), std::end(kNounRules))
                         : std::pair(std::begin(kVerbRules), std::end(kVerbRules));
  for (auto rule = rules.first; rule != rules.second; ++rule) {
    if (form.size() <= rule->suffix.size() || !form.ends_with(rule->suffix)) continue;
    std::string candidate = form.substr(0, form.size() - rule->suffix.size());
    candidate += rule->replacement;
    add(candidate);
  }
  return out;
}

bool WordNetDb::are_synonyms(const std::string& a, const std::string& b,
                             Pos pos) const {
  const auto* ids_a = find_index(normalize(a), pos);
  const auto* ids_b = find_index(normalize(b), pos);
  if (!ids_a || !ids_b) return false;
  for (SynsetId ia : *ids_a) {
    if (std::find(ids_b->begin(), ids_b->end(), ia) != ids_b->end()) return true;
  }
  return false;
}

namespace {

// Smallest hypernym distance (1..depth) from any start synset to a synset
// containing the target word; 0 when unreachable within depth.
int hypernym_distance(const WordNetDb& db, const std::vector<const Synset*>& start,
                      const std::string& target, int depth) {
  std::set<SynsetId> visited;
  std::vector<const Synset*> frontier = start;
  for (const Synset* s : frontier) visited.insert(s->id);
  for (int dist = 1; dist <= depth; ++dist) {
    std::vector<const Synset*> next;
    for (const Synset* s : frontier) {
      for (SynsetId up : s->hypernyms) {
        if (!visited.insert(up).second) continue;
        if (const Synset* parent = db.synset(up)) next.push_back(parent);
      }
    }
    for (const Synset* s : next) {
      if (std::find(s->words.begin(), s->words.end(), target) != s->words.end()) {
        return dist;
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return 0;
}

}  // namespace

std::optional<std::string> WordNetDb::most_general_within(const std::string& a,
                                                          const std::string& b,
                                                          Pos pos,
                                                          int depth) const {
  const std::string fa = normalize(a);
  const std::string fb = normalize(b);
  const auto* ids_a = find_index(fa, pos);
  const auto* ids_b = find_index(fb, pos);
  if (!ids_a || !ids_b) return std::nullopt;

  // Synonyms first: the word listed earlier in the first shared synset is
  // kept as the more general form.
  for (SynsetId ia : *ids_a) {
    if (std::find(ids_b->begin(), ids_b->end(), ia) == ids_b->end()) continue;
    const Synset* shared = synset(ia);
    auto pa = std::find(shared->words.begin(), shared->words.end(), fa);
    auto pb = std::find(shared->words.begin(), shared->words.end(), fb);
    if (pa == pb) return std::min(a, b);
    return pa < pb ? a : b;
  }

  if (depth <= 0) return std::nullopt;
  std::vector<const Synset*> start_a = synsets(a, pos);
  std::vector<const Synset*> start_b = synsets(b, pos);
  // b is above a within dist_up_from_a steps, and vice versa.
  int dist_b_above = hypernym_distance(*this, start_a, fb, depth);
  int dist_a_above = hypernym_distance(*this, start_b, fa, depth);
  if (!dist_b_above && !dist_a_above) return std::nullopt;
  if (dist_b_above && dist_a_above && dist_b_above == dist_a_above) {
    return std::min(a, b);
  }
  if (!dist_a_above || (dist_b_above && dist_b_above < dist_a_above)) return b;
  return a;
}

}  // namespace latticeforge
