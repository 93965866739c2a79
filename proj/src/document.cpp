#include "edm/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace edm {

namespace {

using nlohmann::json;

ValidationReport single(ErrorCode code, std::string subset, std::string detail) {
  ValidationReport report;
  report.violations.push_back({code, std::move(subset), std::move(detail)});
  return report;
}

void require_keys(const json& object, std::initializer_list<std::string_view> allowed, const std::string& where) {
  if (!object.is_object()) throw EvidenceError(ErrorCode::ParseError, where + " must be an object");
  for (const auto& [key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw EvidenceError(ErrorCode::ParseError, "unknown field '" + key + "' in " + where);
    }
  }
  for (const auto key : allowed) {
    if (!object.contains(key)) throw EvidenceError(ErrorCode::ParseError, "missing field '" + std::string(key) + "' in " + where);
  }
}

std::vector<std::string> string_list(const json& value, const std::string& where) {
  if (!value.is_array()) throw EvidenceError(ErrorCode::ParseError, where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) throw EvidenceError(ErrorCode::ParseError, where + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

double number(const json& value, const std::string& where) {
  if (!value.is_number()) throw EvidenceError(ErrorCode::ParseError, where + " must be a number");
  return value.get<double>();
}

std::string raw_label(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out + "}";
}

ValidationResult parse_structured(const json& doc) {
  require_keys(doc, {"frame", "masses"}, "document");

  std::optional<Frame> frame;
  try {
    frame.emplace(string_list(doc.at("frame"), "frame"));
  } catch (const EvidenceError& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw EvidenceError(ErrorCode::ParseError, e.detail());
  }

  const json& masses = doc.at("masses");
  if (!masses.is_array()) throw EvidenceError(ErrorCode::ParseError, "masses must be an array");

  ValidationReport unknown;
  std::vector<MassEntry> entries;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const std::string where = "masses[" + std::to_string(i) + "]";
    const json& record = masses[i];
    require_keys(record, {"set", "re", "im"}, where);
    const auto names = string_list(record.at("set"), where + ".set");
    const double re = number(record.at("re"), where + ".re");
    const double im = number(record.at("im"), where + ".im");

    std::uint32_t bits = 0;
    bool known = true;
    for (const auto& name : names) {
      const int index = frame->index_of(name);
      if (index < 0) {
        unknown.violations.push_back({ErrorCode::UnknownElement, raw_label(names), "'" + name + "' is not a frame element"});
        known = false;
        continue;
      }
      const std::uint32_t bit = std::uint32_t{1} << index;
      if (bits & bit) throw EvidenceError(ErrorCode::ParseError, where + ".set repeats '" + name + "'");
      bits |= bit;
    }
    if (known) entries.push_back({SubsetMask(frame->size(), bits), Complex(re, im)});
  }
  if (!unknown.valid()) return unknown;
  return validate_cbba(*frame, entries);
}

}  // namespace

ValidationResult parse_cbba_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    return single(ErrorCode::ParseError, "global", e.what());
  }
  try {
    return parse_structured(doc);
  } catch (const EvidenceError& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    return single(ErrorCode::ParseError, "global", e.detail());
  }
}

ValidationResult parse_cbba_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return single(ErrorCode::ParseError, "global", "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_cbba_document(buffer.str());
}

std::string serialize_cbba(const Cbba& m) {
  json doc;
  doc["frame"] = m.frame().elements();
  json masses = json::array();
  for (const auto& e : m.focal_elements()) {
    masses.push_back({{"set", m.frame().names_of(e.subset)}, {"re", e.mass.re()}, {"im", e.mass.im()}});
  }
  doc["masses"] = std::move(masses);
  return doc.dump() + "\n";
}

}  // namespace edm
