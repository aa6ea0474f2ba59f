#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "vlh/diagram.hpp"

namespace vlh {

/// A diagram together with the optional corpus annotations of its file.
struct DiagramRecord {
  VirtualLinkDiagram diagram;
  bool classical = false;          // planar-realizable; enables planar-only checks
  std::string equivalence_class;   // diagrams sharing a class are related by R3 moves
  std::string source;              // path it was read from
};

/// {"name", "components": [[{"c", "o", "s"}, ...], ...], "classical"?, "equivalence_class"?}
DiagramRecord diagram_from_json(const nlohmann::json& j);
nlohmann::ordered_json diagram_to_json(const DiagramRecord& record);

/// Reads ".json" files as JSON and anything else as Gauss-code text; in text
/// files '#' starts a comment line and the remaining lines are joined. The
/// name defaults to the file stem. Throws IoError and the parse errors.
DiagramRecord load_diagram(const std::filesystem::path& path);

/// Every *.json and *.gauss file of a directory, sorted by file name.
std::vector<DiagramRecord> load_corpus(const std::filesystem::path& directory);

}  // namespace vlh
