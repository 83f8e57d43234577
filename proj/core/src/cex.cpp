#include "latticeforge/cex.hpp"

#include <algorithm>
#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <map>
#include <sstream>

namespace latticeforge {

namespace {

namespace pt = boost::property_tree;

std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

long parse_identifier(const std::string& value) {
  try {
    std::size_t used = 0;
    long id = std::stol(value, &used);
    if (used != value.size() || id < 0) throw std::invalid_argument(value);
    return id;
  } catch (const std::exception&) {
    throw UnsupportedDocument("non-numeric identifier '" + value + "'");
  }
}

std::size_t parse_frequency(const std::string& value) {
  try {
    std::size_t used = 0;
    long freq = std::stol(value, &used);
    if (used != value.size() || freq < 0) throw std::invalid_argument(value);
    return static_cast<std::size_t>(freq);
  } catch (const std::exception&) {
    throw UnsupportedDocument("non-numeric frequency '" + value + "'");
  }
}

const pt::ptree* find_binary_context(const pt::ptree& root) {
  const auto system = root.get_child_optional("ConceptualSystem");
  if (!system) return nullptr;
  const auto contexts = system->get_child_optional("Contexts");
  if (!contexts) return nullptr;
  for (const auto& [name, node] : *contexts) {
    if (name != "Context") continue;
    if (node.get<std::string>("<xmlattr>.Type", "") == "Binary") return &node;
  }
  return nullptr;
}

}  // namespace

CexDocument read_cex(std::string_view bytes) {
  pt::ptree root;
  try {
    std::istringstream in{std::string(bytes)};
    pt::read_xml(in, root, pt::xml_parser::trim_whitespace);
  } catch (const pt::xml_parser_error& e) {
    throw XmlError(std::string("xml parse failure: ") + e.what());
  }

  const pt::ptree* context_node = find_binary_context(root);
  if (!context_node) {
    throw UnsupportedDocument("document holds no binary context");
  }

  CexDocument doc;
  struct AttrEntry {
    long identifier;
    std::string name;
    std::size_t frequency = 0;
  };
  std::vector<AttrEntry> attr_entries;
  if (const auto attrs = context_node->get_child_optional("Attributes")) {
    for (const auto& [name, node] : *attrs) {
      if (name != "Attribute") continue;
      AttrEntry entry;
      auto id = node.get_optional<std::string>("<xmlattr>.Identifier");
      if (!id) throw UnsupportedDocument("attribute without Identifier");
      entry.identifier = parse_identifier(*id);
      entry.name = node.get<std::string>("Name", "");
      if (auto freq = node.get_optional<std::string>("<xmlattr>.Frequency")) {
        entry.frequency = parse_frequency(*freq);
        doc.extended = true;
      }
      attr_entries.push_back(std::move(entry));
    }
  }
  std::stable_sort(attr_entries.begin(), attr_entries.end(),
                   [](const AttrEntry& a, const AttrEntry& b) {
                     return a.identifier < b.identifier;
                   });
  std::map<long, std::size_t> attr_position;
  std::vector<std::string> attributes;
  for (const auto& entry : attr_entries) {
    if (!attr_position.emplace(entry.identifier, attributes.size()).second) {
      throw UnsupportedDocument("duplicate attribute identifier " +
                                std::to_string(entry.identifier));
    }
    attributes.push_back(entry.name);
  }

  std::vector<std::string> objects;
  std::vector<Bitset> rows;
  std::vector<std::size_t> object_frequencies;
  if (const auto objs = context_node->get_child_optional("Objects")) {
    for (const auto& [name, node] : *objs) {
      if (name != "Object") continue;
      objects.push_back(node.get<std::string>("Name", ""));
      std::size_t frequency = 0;
      if (auto freq = node.get_optional<std::string>("<xmlattr>.Frequency")) {
        frequency = parse_frequency(*freq);
        doc.extended = true;
      }
      object_frequencies.push_back(frequency);
      Bitset row(attributes.size());
      if (const auto intent = node.get_child_optional("Intent")) {
        for (const auto& [iname, inode] : *intent) {
          if (iname != "HasAttribute") continue;
          auto ref = inode.get_optional<std::string>("<xmlattr>.AttributeIdentifier");
          if (!ref) throw UnsupportedDocument("HasAttribute without AttributeIdentifier");
          long id = parse_identifier(*ref);
          auto it = attr_position.find(id);
          if (it == attr_position.end()) {
            throw DanglingReference("intent references unknown attribute identifier " +
                                    std::to_string(id));
          }
          row.set(it->second);
        }
      }
      rows.push_back(std::move(row));
    }
  }

  doc.context = FormalContext::from_rows(std::move(objects), std::move(attributes),
                                         std::move(rows));
  if (doc.extended) {
    doc.object_frequencies = std::move(object_frequencies);
    doc.attribute_frequencies.reserve(attr_entries.size());
    for (const auto& entry : attr_entries) {
      doc.attribute_frequencies.push_back(entry.frequency);
    }
  }
  return doc;
}

std::string write_cex(const FormalContext& ctx, bool extended) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>"
      << "<ConceptualSystem><Version MajorNumber=\"1\" MinorNumber=\"0\"/>\n";
  out << "<Contexts><Context Identifier=\"0\" Type=\"Binary\">\n";
  if (ctx.attribute_count() == 0) {
    out << "<Attributes/>\n";
  } else {
    out << "<Attributes>\n";
    for (std::size_t j = 0; j < ctx.attribute_count(); ++j) {
      out << "<Attribute ";
      if (extended) out << "Frequency=\"" << ctx.column(j).count() << "\" ";
      out << "Identifier=\"" << j << "\"><Name Identifier=\"" << j << "\">"
          << escape_xml(ctx.attributes()[j]) << "</Name></Attribute>\n";
    }
    out << "</Attributes>\n";
  }
  if (ctx.object_count() == 0) {
    out << "<Objects/>\n";
  } else {
    out << "<Objects>\n";
    for (std::size_t i = 0; i < ctx.object_count(); ++i) {
      out << "<Object";
      if (extended) out << " Frequency=\"" << ctx.row(i).count() << "\"";
      out << "><Name>" << escape_xml(ctx.objects()[i]) << "</Name>";
      if (ctx.row(i).none()) {
        out << "<Intent/>";
      } else {
        out << "<Intent>";
        for (std::size_t j = ctx.row(i).find_first(); j != Bitset::npos;
             j = ctx.row(i).find_next(j)) {
          out << "<HasAttribute AttributeIdentifier=\"" << j << "\"/>";
        }
        out << "</Intent>";
      }
      out << "</Object>\n";
    }
    out << "</Objects>\n";
  }
  out << "</Context></Contexts><RecalculationPolicy Value=\"Clear\"/>"
      << "<Lattices/></ConceptualSystem>\n";
  return out.str();
}

std::vector<std::string> frequency_mismatches(const CexDocument& doc) {
  std::vector<std::string> mismatches;
  if (!doc.extended) return mismatches;
  const FormalContext& ctx = doc.context;
  for (std::size_t j = 0; j < ctx.attribute_count(); ++j) {
    std::size_t stored = j < doc.attribute_frequencies.size()
                             ? doc.attribute_frequencies[j]
                             : 0;
    std::size_t actual = ctx.column(j).count();
    if (stored != actual) {
      mismatches.push_back("attribute '" + ctx.attributes()[j] + "' stores frequency " +
                           std::to_string(stored) + " but has " +
                           std::to_string(actual) + " incidences");
    }
  }
  for (std::size_t i = 0; i < ctx.object_count(); ++i) {
    std::size_t stored = i < doc.object_frequencies.size()
                             ? doc.object_frequencies[i]
                             : 0;
    std::size_t actual = ctx.row(i).count();
    if (stored != actual) {
      mismatches.push_back("object '" + ctx.objects()[i] + "' stores frequency " +
                           std::to_string(stored) + " but has " +
                           std::to_string(actual) + " incidences");
    }
  }
  return mismatches;
}

void validate_frequencies(const CexDocument& doc) {
  auto mismatches = frequency_mismatches(doc);
  if (mismatches.empty()) return;
  std::string message = "stored frequencies disagree with incidence:";
  for (const auto& m : mismatches) message += "\n  " + m;
  throw FrequencyMismatch(message);
}

}  // namespace latticeforge
