#include "vlh/diagram.hpp"

#include <map>

#include "vlh/error.hpp"

namespace vlh {

VirtualLinkDiagram::VirtualLinkDiagram(std::vector<std::vector<Passage>> components, std::string name)
    : components_(std::move(components)), name_(std::move(name)) {
  if (components_.empty()) {
    throw Error(ErrorKind::bad_syntax, "a diagram needs at least one component", "0");
  }
  struct Roles {
    int over = 0, under = 0, sign = 0;
  };
  std::map<int, Roles> seen;
  for (const auto& component : components_) {
    for (const Passage& p : component) {
      const std::string label = std::to_string(p.crossing);
      if (p.crossing <= 0) {
        throw Error(ErrorKind::bad_syntax, "crossing labels must be positive", label);
      }
      if (p.sign != 1 && p.sign != -1) {
        throw Error(ErrorKind::bad_syntax, "crossing sign must be +1 or -1", label);
      }
      Roles& r = seen[p.crossing];
      if (r.sign != 0 && r.sign != p.sign) {
        throw Error(ErrorKind::sign_mismatch, "crossing " + label + " has passages of both signs", label);
      }
      r.sign = p.sign;
      int& count = p.over ? r.over : r.under;
      if (++count > 1) {
        throw Error(ErrorKind::duplicate_role,
                    "crossing " + label + " has two " + (p.over ? "over" : "under") + " passages", label);
      }
    }
  }
  const int n = seen.empty() ? 0 : seen.rbegin()->first;
  signs_.assign(static_cast<std::size_t>(n), 0);
  for (int label = 1; label <= n; ++label) {
    auto it = seen.find(label);
    if (it == seen.end() || it->second.over == 0 || it->second.under == 0) {
      throw Error(ErrorKind::missing_passage,
                  "crossing " + std::to_string(label) + " is missing a passage", std::to_string(label));
    }
    signs_[static_cast<std::size_t>(label - 1)] = it->second.sign;
    if (it->second.sign > 0) ++n_plus_;
  }
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

[[noreturn]] void syntax_error(std::size_t offset, const std::string& what) {
  throw Error(ErrorKind::bad_syntax, what + " at offset " + std::to_string(offset),
              std::to_string(offset));
}

// Parses one passage occupying text[begin, end) with surrounding blanks removed.
Passage parse_passage(std::string_view text, std::size_t begin, std::size_t end) {
  if (begin == end) syntax_error(begin, "empty passage");
  Passage p;
  const char role = text[begin];
  if (role == 'O' || role == 'o') {
    p.over = true;
  } else if (role == 'U' || role == 'u') {
    p.over = false;
  } else {
    syntax_error(begin, "expected 'O' or 'U'");
  }
  std::size_t i = begin + 1;
  const std::size_t digits = i;
  long label = 0;
  while (i < end && text[i] >= '0' && text[i] <= '9') {
    label = label * 10 + (text[i] - '0');
    if (label > 1'000'000) syntax_error(digits, "crossing label too large");
    ++i;
  }
  if (i == digits) syntax_error(i, "expected a crossing label");
  p.crossing = static_cast<int>(label);
  const std::string_view rest = text.substr(i, end - i);
  if (rest == "+") {
    p.sign = 1;
  } else if (rest == "-" || rest == "−") {
    p.sign = -1;
  } else {
    syntax_error(i, "expected a sign");
  }
  return p;
}

}  // namespace

VirtualLinkDiagram parse_gauss(std::string_view text, std::string name) {
  std::vector<std::vector<Passage>> components(1);
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const bool at_end = i == text.size();
    if (!at_end && text[i] != ',' && text[i] != ';') continue;
    std::size_t b = start, e = i;
    while (b < e && is_space(text[b])) ++b;
    while (e > b && is_space(text[e - 1])) --e;
    const bool component_empty = components.back().empty();
    const bool closes_component = at_end || text[i] == ';';
    if (b == e && component_empty && closes_component) {
      // Crossingless component.
    } else {
      components.back().push_back(parse_passage(text, b, e));
    }
    if (!at_end && text[i] == ';') components.emplace_back();
    start = i + 1;
  }
  return VirtualLinkDiagram(std::move(components), std::move(name));
}

std::string to_gauss(const VirtualLinkDiagram& d) {
  std::string out;
  bool first_component = true;
  for (const auto& component : d.components()) {
    if (!first_component) out += ';';
    first_component = false;
    bool first = true;
    for (const Passage& p : component) {
      if (!first) out += ',';
      first = false;
      out += p.over ? 'O' : 'U';
      out += std::to_string(p.crossing);
      out += p.sign > 0 ? '+' : '-';
    }
  }
  return out;
}

VirtualLinkDiagram from_braid(int strands, std::span<const BraidLetter> word, std::string name) {
  if (strands < 1) throw Error(ErrorKind::invalid_config, "a braid needs at least one strand");
  std::vector<int> labels(word.size(), 0);
  int next = 0;
  for (std::size_t k = 0; k < word.size(); ++k) {
    const BraidLetter& letter = word[k];
    if (letter.generator < 1 || letter.generator >= strands || letter.power < -1 || letter.power > 1) {
      throw Error(ErrorKind::invalid_config, "bad braid letter at index " + std::to_string(k));
    }
    if (letter.power != 0) labels[k] = ++next;
  }
  std::vector<bool> visited(static_cast<std::size_t>(strands), false);
  std::vector<std::vector<Passage>> components;
  for (int start = 0; start < strands; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::vector<Passage> component;
    int position = start;
    do {
      visited[static_cast<std::size_t>(position)] = true;
      for (std::size_t k = 0; k < word.size(); ++k) {
        const BraidLetter& letter = word[k];
        const int left = letter.generator - 1;
        if (position != left && position != left + 1) continue;
        const bool is_left = position == left;
        if (letter.power != 0) {
          component.push_back({labels[k], is_left == (letter.power > 0), letter.power});
        }
        position = is_left ? left + 1 : left;
      }
    } while (position != start);
    components.push_back(std::move(component));
  }
  return VirtualLinkDiagram(std::move(components), std::move(name));
}

VirtualLinkDiagram from_braid(int strands, std::string_view word, std::string name) {
  std::vector<BraidLetter> letters;
  std::size_t i = 0;
  while (i < word.size()) {
    if (is_space(word[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < word.size() && !is_space(word[j])) ++j;
    std::string token(word.substr(i, j - i));
    BraidLetter letter;
    try {
      if (token[0] == 'v') {
        letter = {std::stoi(token.substr(1)), 0};
      } else {
        const int g = std::stoi(token);
        letter = {g < 0 ? -g : g, g < 0 ? -1 : 1};
      }
    } catch (const std::exception&) {
      syntax_error(i, "bad braid token '" + token + "'");
    }
    letters.push_back(letter);
    i = j;
  }
  return from_braid(strands, letters, std::move(name));
}

}  // namespace vlh
