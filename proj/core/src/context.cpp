#include "latticeforge/context.hpp"

#include <algorithm>
#include <sstream>

namespace latticeforge {

namespace {

void check_labels(const std::vector<std::string>& labels, const char* axis) {
  std::unordered_map<std::string, std::size_t> seen;
  for (const auto& label : labels) {
    if (!seen.emplace(label, seen.size()).second) {
      throw DuplicateLabel(std::string("duplicate ") + axis + " label: " + label);
    }
  }
}

void check_csv_label(const std::string& label) {
  if (label.find(',') != std::string::npos ||
      label.find('\n') != std::string::npos ||
      label.find('\r') != std::string::npos) {
    throw Error("label not representable in csv: " + label);
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

}  // namespace

void FormalContext::rebuild_indices() {
  object_index_.clear();
  attribute_index_.clear();
  for (std::size_t i = 0; i < objects_.size(); ++i) object_index_[objects_[i]] = i;
  for (std::size_t j = 0; j < attributes_.size(); ++j) attribute_index_[attributes_[j]] = j;
}

FormalContext FormalContext::from_rows(std::vector<std::string> objects,
                                       std::vector<std::string> attributes,
                                       std::vector<Bitset> rows) {
  check_labels(objects, "object");
  check_labels(attributes, "attribute");
  if (rows.size() != objects.size()) {
    throw Error("row count does not match object count");
  }
  FormalContext ctx;
  ctx.objects_ = std::move(objects);
  ctx.attributes_ = std::move(attributes);
  ctx.rows_ = std::move(rows);
  for (auto& r : ctx.rows_) {
    if (r.size() != ctx.attributes_.size()) {
      throw Error("row width does not match attribute count");
    }
  }
  ctx.cols_.assign(ctx.attributes_.size(), Bitset(ctx.objects_.size()));
  for (std::size_t i = 0; i < ctx.rows_.size(); ++i) {
    for (std::size_t j = ctx.rows_[i].find_first(); j != Bitset::npos;
         j = ctx.rows_[i].find_next(j)) {
      ctx.cols_[j].set(i);
    }
  }
  ctx.rebuild_indices();
  return ctx;
}

FormalContext FormalContext::from_incidence(
    std::vector<std::string> objects, std::vector<std::string> attributes,
    const std::vector<std::pair<std::string, std::string>>& cells) {
  check_labels(objects, "object");
  check_labels(attributes, "attribute");
  FormalContext ctx;
  ctx.objects_ = std::move(objects);
  ctx.attributes_ = std::move(attributes);
  ctx.rows_.assign(ctx.objects_.size(), Bitset(ctx.attributes_.size()));
  ctx.cols_.assign(ctx.attributes_.size(), Bitset(ctx.objects_.size()));
  ctx.rebuild_indices();
  for (const auto& [obj, attr] : cells) {
    auto oi = ctx.object_index_.find(obj);
    if (oi == ctx.object_index_.end()) throw UnknownLabel("unknown object label: " + obj);
    auto ai = ctx.attribute_index_.find(attr);
    if (ai == ctx.attribute_index_.end()) throw UnknownLabel("unknown attribute label: " + attr);
    ctx.rows_[oi->second].set(ai->second);
    ctx.cols_[ai->second].set(oi->second);
  }
  return ctx;
}

std::size_t FormalContext::object_index(const std::string& label) const {
  auto it = object_index_.find(label);
  if (it == object_index_.end()) throw UnknownLabel("unknown object label: " + label);
  return it->second;
}

std::size_t FormalContext::attribute_index(const std::string& label) const {
  auto it = attribute_index_.find(label);
  if (it == attribute_index_.end()) throw UnknownLabel("unknown attribute label: " + label);
  return it->second;
}

bool FormalContext::has_object(const std::string& label) const {
  return object_index_.count(label) != 0;
}

bool FormalContext::has_attribute(const std::string& label) const {
  return attribute_index_.count(label) != 0;
}

bool FormalContext::incidence(std::size_t object, std::size_t attribute) const {
  return rows_.at(object).test(attribute);
}

Bitset FormalContext::object_universe() const {
  Bitset all(objects_.size());
  all.set();
  return all;
}

Bitset FormalContext::attribute_universe() const {
  Bitset all(attributes_.size());
  all.set();
  return all;
}

Bitset FormalContext::intent_of(const Bitset& object_set) const {
  Bitset common = attribute_universe();
  for (std::size_t i = object_set.find_first(); i != Bitset::npos;
       i = object_set.find_next(i)) {
    common &= rows_[i];
  }
  return common;
}

Bitset FormalContext::extent_of(const Bitset& attribute_set) const {
  Bitset common = object_universe();
  for (std::size_t j = attribute_set.find_first(); j != Bitset::npos;
       j = attribute_set.find_next(j)) {
    common &= cols_[j];
  }
  return common;
}

Bitset FormalContext::close_attributes(const Bitset& attribute_set) const {
  return intent_of(extent_of(attribute_set));
}

namespace {

template <typename IndexFn>
Bitset labels_to_bits(const std::vector<std::string>& labels, std::size_t size,
                      IndexFn index_of) {
  Bitset bits(size);
  for (const auto& label : labels) bits.set(index_of(label));
  return bits;
}

std::vector<std::string> bits_to_labels(const Bitset& bits,
                                        const std::vector<std::string>& axis) {
  std::vector<std::string> out;
  out.reserve(bits.count());
  for (std::size_t i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) {
    out.push_back(axis[i]);
  }
  return out;
}

}  // namespace

std::vector<std::string> FormalContext::intent_of(
    const std::vector<std::string>& objs) const {
  Bitset bits = labels_to_bits(objs, objects_.size(),
                               [&](const std::string& l) { return object_index(l); });
  return bits_to_labels(intent_of(bits), attributes_);
}

std::vector<std::string> FormalContext::extent_of(
    const std::vector<std::string>& attrs) const {
  Bitset bits = labels_to_bits(attrs, attributes_.size(),
                               [&](const std::string& l) { return attribute_index(l); });
  return bits_to_labels(extent_of(bits), objects_);
}

std::vector<std::string> FormalContext::close_attributes(
    const std::vector<std::string>& attrs) const {
  Bitset bits = labels_to_bits(attrs, attributes_.size(),
                               [&](const std::string& l) { return attribute_index(l); });
  return bits_to_labels(close_attributes(bits), attributes_);
}

FormalContext FormalContext::transposed() const {
  FormalContext ctx;
  ctx.objects_ = attributes_;
  ctx.attributes_ = objects_;
  ctx.rows_ = cols_;
  ctx.cols_ = rows_;
  ctx.rebuild_indices();
  return ctx;
}

bool FormalContext::operator==(const FormalContext& other) const {
  return objects_ == other.objects_ && attributes_ == other.attributes_ &&
         rows_ == other.rows_;
}

std::string FormalContext::to_csv() const {
  std::ostringstream out;
  for (const auto& a : attributes_) check_csv_label(a);
  for (const auto& o : objects_) check_csv_label(o);
  for (const auto& a : attributes_) out << ',' << a;
  out << '\n';
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    out << objects_[i];
    for (std::size_t j = 0; j < attributes_.size(); ++j) {
      out << ',' << (rows_[i].test(j) ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

FormalContext FormalContext::from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing csv header row");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> header = split_csv_line(line);
  if (!header.front().empty()) {
    throw ParseError(1, "csv header must start with an empty cell");
  }
  std::vector<std::string> attributes(header.begin() + 1, header.end());

  std::vector<std::string> objects;
  std::vector<Bitset> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != attributes.size() + 1) {
      throw ParseError(lineno, "expected " + std::to_string(attributes.size() + 1) +
                                   " cells, found " + std::to_string(fields.size()));
    }
    objects.push_back(fields.front());
    Bitset row(attributes.size());
    for (std::size_t j = 0; j < attributes.size(); ++j) {
      const std::string& cell = fields[j + 1];
      if (cell == "1") {
        row.set(j);
      } else if (cell != "0") {
        throw ParseError(lineno, "incidence cell must be 0 or 1, found '" + cell + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  return from_rows(std::move(objects), std::move(attributes), std::move(rows));
}

}  // namespace latticeforge
