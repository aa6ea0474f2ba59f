#include "vlh/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "vlh/error.hpp"

namespace vlh {

namespace {

[[noreturn]] void json_error(const std::string& what) { throw Error(ErrorKind::bad_syntax, what, "json"); }

}  // namespace

DiagramRecord diagram_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array()) {
    json_error("diagram JSON needs a \"components\" array");
  }
  std::vector<std::vector<Passage>> components;
  for (const auto& comp : j["components"]) {
    if (!comp.is_array()) json_error("each component must be an array of passages");
    std::vector<Passage> passages;
    for (const auto& p : comp) {
      if (!p.is_object() || !p.contains("c") || !p.contains("o") || !p.contains("s") ||
          !p["c"].is_number_integer() || !p["o"].is_boolean() || !p["s"].is_number_integer()) {
        json_error("a passage is {\"c\": int, \"o\": bool, \"s\": 1|-1}");
      }
      passages.push_back({p["c"].get<int>(), p["o"].get<bool>(), p["s"].get<int>()});
    }
    components.push_back(std::move(passages));
  }
  DiagramRecord record{VirtualLinkDiagram(std::move(components), j.value("name", std::string{})), false, {}, {}};
  if (j.contains("classical")) {
    if (!j["classical"].is_boolean()) json_error("\"classical\" must be a boolean");
    record.classical = j["classical"].get<bool>();
  }
  if (j.contains("equivalence_class")) {
    if (!j["equivalence_class"].is_string()) json_error("\"equivalence_class\" must be a string");
    record.equivalence_class = j["equivalence_class"].get<std::string>();
  }
  return record;
}

nlohmann::ordered_json diagram_to_json(const DiagramRecord& record) {
  nlohmann::ordered_json j;
  j["name"] = record.diagram.name();
  auto comps = nlohmann::ordered_json::array();
  for (const auto& comp : record.diagram.components()) {
    auto arr = nlohmann::ordered_json::array();
    for (const Passage& p : comp) {
      nlohmann::ordered_json pj;
      pj["c"] = p.crossing;
      pj["o"] = p.over;
      pj["s"] = p.sign;
      arr.push_back(std::move(pj));
    }
    comps.push_back(std::move(arr));
  }
  j["components"] = std::move(comps);
  if (record.classical) j["classical"] = true;
  if (!record.equivalence_class.empty()) j["equivalence_class"] = record.equivalence_class;
  return j;
}

DiagramRecord load_diagram(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot read " + path.string(), path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  DiagramRecord record;
  if (path.extension() == ".json") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::bad_syntax, path.string() + ": " + e.what(), std::to_string(e.byte));
    }
    record = diagram_from_json(j);
  } else {
    std::string code;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      code += line;
    }
    record.diagram = parse_gauss(code);
  }
  if (record.diagram.name().empty()) record.diagram.set_name(path.stem().string());
  record.source = path.string();
  return record;
}

std::vector<DiagramRecord> load_corpus(const std::filesystem::path& directory) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(directory, ec)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".json" || ext == ".gauss")) files.push_back(entry.path());
  }
  if (ec) throw Error(ErrorKind::io, "cannot list " + directory.string(), directory.string());
  std::sort(files.begin(), files.end());
  std::vector<DiagramRecord> out;
  for (const auto& f : files) out.push_back(load_diagram(f));
  return out;
}

}  // namespace vlh
