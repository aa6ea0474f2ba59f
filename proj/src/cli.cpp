#include "vlh/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "vlh/complex.hpp"
#include "vlh/error.hpp"
#include "vlh/jones.hpp"
#include "vlh/moves.hpp"
#include "vlh/tqft.hpp"

namespace vlh {

using Json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    std::string piece(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    const auto b = piece.find_first_not_of(" \t");
    const auto e = piece.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string{} : piece.substr(b, e - b + 1));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

[[noreturn]] void config_error(const std::string& what, const std::string& subject = {}) {
  throw Error(ErrorKind::invalid_config, what, subject);
}

Field pick_field(const RunConfig& cfg, const std::optional<std::string>& inner) {
  if (inner && cfg.field && Field::parse(*inner) != Field::parse(*cfg.field)) {
    config_error("conflicting fields '" + *inner + "' and '" + *cfg.field + "'", "field");
  }
  if (inner) return Field::parse(*inner);
  if (cfg.field) return Field::parse(*cfg.field);
  return Field::rationals();
}

}  // namespace

NamedTheory resolve_theory(const RunConfig& cfg, bool validate) {
  const int selectors = cfg.theory.has_value() + cfg.params.has_value() + cfg.triple.has_value();
  if (selectors != 1) config_error("exactly one of --theory, --params, --triple is required", "theory");

  if (cfg.theory) {
    TheoryParams th = preset(*cfg.theory);
    if (cfg.field && !(Field::parse(*cfg.field) == th.field())) {
      config_error("preset theories are defined over f2", "field");
    }
    return {*cfg.theory, th};
  }

  if (cfg.params) {
    std::map<std::string, std::string> kv;
    std::optional<std::string> inner_field;
    for (const auto& item : split(*cfg.params, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) config_error("expected K=V in --params, got '" + item + "'", item);
      const std::string key = item.substr(0, eq);
      const std::string value = item.substr(eq + 1);
      if (key == "field") {
        inner_field = value;
      } else if (key == "a" || key == "t" || key == "lambda" || key == "mu" || key == "beta") {
        if (!kv.emplace(key, value).second) config_error("parameter '" + key + "' given twice", key);
      } else {
        config_error("unknown parameter '" + key + "'", key);
      }
    }
    for (const char* key : {"a", "t", "lambda", "mu", "beta"}) {
      if (!kv.count(key)) config_error(std::string("missing parameter '") + key + "'", key);
    }
    const Field F = pick_field(cfg, inner_field);
    auto s = [&](const char* key) { return Scalar::parse(F, kv.at(key)); };
    TheoryParams th = validate ? theory_from_params(s("a"), s("t"), s("lambda"), s("mu"), s("beta"))
                               : TheoryParams::unchecked(s("a"), s("t"), s("lambda"), s("mu"), s("beta"));
    return {"params:" + *cfg.params, th};
  }

  std::vector<std::string> values;
  std::optional<std::string> inner_field;
  for (const auto& item : split(*cfg.triple, ',')) {
    if (item.rfind("field=", 0) == 0) {
      inner_field = item.substr(6);
    } else {
      values.push_back(item);
    }
  }
  if (values.size() != 3) config_error("--triple takes a,lambda,mu", *cfg.triple);
  const Field F = pick_field(cfg, inner_field);
  TheoryParams th = theory_from_triple(Scalar::parse(F, values[0]), Scalar::parse(F, values[1]),
                                       Scalar::parse(F, values[2]));
  return {"triple:" + *cfg.triple, th};
}

bool is_homogeneous(const TheoryParams& th) {
  return th.h.is_zero() && th.t.is_zero() && th.lambda.is_zero() && th.mu.is_zero();
}

InvarianceOutcome run_invariance(const std::vector<DiagramRecord>& records,
                                 const std::vector<NamedTheory>& theories, int moves, std::uint64_t seed,
                                 int check_every) {
  InvarianceOutcome outcome;
  std::vector<std::vector<Betti>> baselines(records.size());
  for (std::size_t idx = 0; idx < records.size(); ++idx) {
    const VirtualLinkDiagram& start = records[idx].diagram;
    for (const auto& t : theories) baselines[idx].push_back(homology(build_complex(start, t.params)).betti);

    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(idx)};
    std::mt19937_64 rng(seq);
    const int cap = start.crossing_count() + 3;
    InvarianceOutcome::Walk walk{start.name(), {}, 0, start.crossing_count()};
    VirtualLinkDiagram current = start;
    std::vector<bool> failed(theories.size(), false);
    for (int step = 1; step <= moves; ++step) {
      RandomMove mv = random_move(current, rng, cap);
      current = std::move(mv.result);
      walk.moves.push_back(std::move(mv.description));
      if (step % check_every != 0 && step != moves) continue;
      ++walk.checks;
      for (std::size_t ti = 0; ti < theories.size(); ++ti) {
        if (failed[ti]) continue;
        Betti found = homology(build_complex(current, theories[ti].params)).betti;
        if (found != baselines[idx][ti]) {
          failed[ti] = true;
          outcome.mismatches.push_back({start.name(), theories[ti].selector, step, walk.moves,
                                        baselines[idx][ti], std::move(found)});
        }
      }
    }
    walk.final_crossings = current.crossing_count();
    outcome.walks.push_back(std::move(walk));
  }

  std::map<std::string, std::vector<std::size_t>> classes;
  for (std::size_t idx = 0; idx < records.size(); ++idx) {
    if (!records[idx].equivalence_class.empty()) classes[records[idx].equivalence_class].push_back(idx);
  }
  for (const auto& [name, members] : classes) {
    if (members.size() < 2) continue;
    for (std::size_t ti = 0; ti < theories.size(); ++ti) {
      R3Comparison cmp{name, {}, theories[ti].selector, true};
      for (std::size_t idx : members) {
        cmp.diagrams.push_back(records[idx].diagram.name());
        cmp.equal = cmp.equal && baselines[idx][ti] == baselines[members.front()][ti];
      }
      outcome.r3.push_back(std::move(cmp));
    }
  }
  return outcome;
}

namespace {

Json theory_json(const NamedTheory& t) {
  Json j;
  j["selector"] = t.selector;
  j["field"] = t.params.field().name();
  j["a"] = t.params.a.to_string();
  j["t"] = t.params.t.to_string();
  j["lambda"] = t.params.lambda.to_string();
  j["mu"] = t.params.mu.to_string();
  j["beta"] = t.params.beta.to_string();
  j["h"] = t.params.h.to_string();
  return j;
}

Json betti_json(const Betti& b) {
  Json j = Json::object();
  for (const auto& [degree, dim] : b) j[std::to_string(degree)] = dim;
  return j;
}

std::string betti_text(const Betti& b) {
  std::string out = "{";
  for (const auto& [degree, dim] : b) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(degree) + ": " + std::to_string(dim);
  }
  return out + "}";
}

Json poly_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

std::vector<DiagramRecord> load_all(const RunConfig& cfg) {
  if (cfg.diagrams.empty()) config_error("at least one --diagram is required", "diagram");
  std::vector<DiagramRecord> out;
  for (const auto& path : cfg.diagrams) out.push_back(load_diagram(path));
  return out;
}

struct Outcome {
  Json json;
  std::string text;
  int exit_code = 0;
};

Outcome cmd_compute(const RunConfig& cfg) {
  const NamedTheory theory = resolve_theory(cfg);
  if (cfg.graded && !is_homogeneous(theory.params)) {
    config_error("--graded needs a theory with h = t = 0 and theta = 0", theory.selector);
  }
  Outcome o;
  o.json["command"] = "compute";
  o.json["theory"] = theory_json(theory);
  Json reports = Json::array();
  std::ostringstream text;
  for (const auto& record : load_all(cfg)) {
    const VirtualLinkDiagram& d = record.diagram;
    const ChainComplex c = build_complex(d, theory.params);
    const HomologyResult h = cfg.graded ? graded_homology(c) : homology(c);
    const std::int64_t j1 = jones_at_one(d);
    Json r;
    r["diagram"] = d.name();
    r["theory"] = theory.selector;
    r["dims"] = c.dimensions();
    r["betti"] = betti_json(h.betti);
    if (h.qtable) {
      Json q = Json::object();
      for (const auto& [key, dim] : *h.qtable) q[std::to_string(key.first)][std::to_string(key.second)] = dim;
      r["qtable"] = std::move(q);
    }
    r["euler"] = h.euler;
    r["jones_at_one"] = j1;
    r["euler_matches_jones"] = h.euler == j1;
    if (h.euler != j1) o.exit_code = 2;
    text << d.name() << ": dims [";
    for (std::size_t i = 0; i < c.groups.size(); ++i) text << (i ? "," : "") << c.groups[i].dimension;
    text << "] betti " << betti_text(h.betti) << " euler " << h.euler << " jones(1) " << j1;
    if (h.qtable) {
      const LaurentPoly ge = graded_euler(h);
      const LaurentPoly jp = kauffman_jones(d);
      r["graded_euler"] = poly_json(ge);
      r["graded_euler_matches_jones"] = ge == jp;
      if (!(ge == jp)) o.exit_code = 2;
      text << " graded euler " << ge.to_string();
    }
    text << (h.euler == j1 ? "" : "  MISMATCH") << "\n";
    reports.push_back(std::move(r));
  }
  o.json["reports"] = std::move(reports);
  o.text = text.str();
  return o;
}

Outcome cmd_verify(const RunConfig& cfg) {
  const NamedTheory theory = resolve_theory(cfg, false);
  const AxiomReport report = verify_axioms(theory.params);
  const FourTuResult four = verify_4tu(theory.params);
  Outcome o;
  o.json["command"] = "verify";
  o.json["theory"] = theory_json(theory);
  Json checks = Json::array();
  std::ostringstream text;
  text << "theory " << theory.selector << " over " << theory.params.field().name() << "\n";
  for (const auto& c : report.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    if (!c.passed) cj["witness"] = c.witness;
    checks.push_back(std::move(cj));
    text << (c.passed ? "  pass " : "  FAIL ") << c.name << (c.passed ? "" : "  (" + c.witness + ")") << "\n";
  }
  o.json["checks"] = std::move(checks);
  Json fj;
  fj["passed"] = four.passed;
  if (four.witness) fj["witness"] = four.witness->to_string();
  o.json["four_tu"] = std::move(fj);
  text << (four.passed ? "  pass " : "  FAIL ") << "four_tu\n";
  const bool ok = report.all_passed() && four.passed;
  o.json["all_passed"] = ok;
  o.exit_code = ok ? 0 : 2;
  o.text = text.str();
  return o;
}

Outcome cmd_invariance(const RunConfig& cfg) {
  if (cfg.moves < 0) config_error("--moves must be nonnegative", "moves");
  const NamedTheory theory = resolve_theory(cfg);
  const auto records = load_all(cfg);
  const InvarianceOutcome result = run_invariance(records, {theory}, cfg.moves, cfg.seed);
  Outcome o;
  o.json["command"] = "invariance";
  o.json["theory"] = theory_json(theory);
  o.json["seed"] = cfg.seed;
  o.json["moves"] = cfg.moves;
  std::ostringstream text;
  Json walks = Json::array();
  for (const auto& w : result.walks) {
    Json wj;
    wj["diagram"] = w.diagram;
    wj["checks"] = w.checks;
    wj["final_crossings"] = w.final_crossings;
    wj["moves"] = w.moves;
    walks.push_back(std::move(wj));
    text << w.diagram << ": " << w.moves.size() << " moves, " << w.checks << " checks, ends with "
         << w.final_crossings << " crossings\n";
  }
  o.json["walks"] = std::move(walks);
  Json mismatches = Json::array();
  for (const auto& m : result.mismatches) {
    Json mj;
    mj["kind"] = std::string(to_string(ErrorKind::mismatch_found));
    mj["diagram"] = m.diagram;
    mj["step"] = m.step;
    mj["moves"] = m.moves;
    mj["expected"] = betti_json(m.expected);
    mj["found"] = betti_json(m.found);
    mismatches.push_back(std::move(mj));
    text << "MISMATCH " << m.diagram << " after move " << m.step << ": expected " << betti_text(m.expected)
         << " found " << betti_text(m.found) << "\n";
  }
  Json r3 = Json::array();
  bool r3_ok = true;
  for (const auto& cmp : result.r3) {
    Json rj;
    rj["equivalence_class"] = cmp.equivalence_class;
    rj["diagrams"] = cmp.diagrams;
    rj["equal"] = cmp.equal;
    r3.push_back(std::move(rj));
    r3_ok = r3_ok && cmp.equal;
    text << "class " << cmp.equivalence_class << ": " << (cmp.equal ? "equal betti" : "DIFFERENT betti") << "\n";
  }
  o.json["mismatches"] = std::move(mismatches);
  o.json["r3_pairs"] = std::move(r3);
  o.exit_code = result.mismatches.empty() && r3_ok ? 0 : 2;
  o.text = text.str();
  return o;
}

Outcome cmd_surface(const RunConfig& cfg) {
  const NamedTheory theory = resolve_theory(cfg);
  const Scalar value = evaluate_closed_surface(theory.params, cfg.genus, cfg.crosscaps);
  Outcome o;
  o.json["command"] = "surface";
  o.json["theory"] = theory_json(theory);
  o.json["genus"] = cfg.genus;
  o.json["crosscaps"] = cfg.crosscaps;
  o.json["value"] = value.to_string();
  o.text = "genus " + std::to_string(cfg.genus) + " crosscaps " + std::to_string(cfg.crosscaps) + ": " +
           value.to_string() + "\n";
  return o;
}

Outcome cmd_jones(const RunConfig& cfg) {
  Outcome o;
  o.json["command"] = "jones";
  Json reports = Json::array();
  std::ostringstream text;
  for (const auto& record : load_all(cfg)) {
    const LaurentPoly p = kauffman_jones(record.diagram);
    const std::int64_t j1 = jones_at_one(record.diagram);
    Json r;
    r["diagram"] = record.diagram.name();
    r["jones"] = poly_json(p);
    r["jones_at_one"] = j1;
    reports.push_back(std::move(r));
    text << record.diagram.name() << ": " << p.to_string() << "\n";
    if (p.at_one() != j1) o.exit_code = 2;
  }
  o.json["reports"] = std::move(reports);
  o.text = text.str();
  return o;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::d_squared_nonzero:
    case ErrorKind::mismatch_found:
      return 2;
    case ErrorKind::not_invertible:
    case ErrorKind::constraint_violated:
    case ErrorKind::unknown_preset:
    case ErrorKind::field_mismatch:
    case ErrorKind::duplicate_role:
    case ErrorKind::missing_passage:
    case ErrorKind::sign_mismatch:
    case ErrorKind::bad_syntax:
    case ErrorKind::length_mismatch:
    case ErrorKind::invalid_site:
    case ErrorKind::invalid_config:
    case ErrorKind::io:
      return 3;
    default:
      return 1;
  }
}

Json error_json(std::string_view kind, const std::string& message, const std::string& subject,
                const std::string& value) {
  Json e;
  e["kind"] = kind;
  e["message"] = message;
  if (!subject.empty()) e["subject"] = subject;
  if (!value.empty()) e["value"] = value;
  Json j;
  j["error"] = std::move(e);
  return j;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Link homology of virtual links from rank-two extended Frobenius algebras", "vlh"};
  app.add_option("command", cfg.command, "compute | verify | invariance | surface | jones")
      ->required()
      ->check(CLI::IsMember({"compute", "verify", "invariance", "surface", "jones"}));
  app.add_option("--diagram", cfg.diagrams, "diagram file (.json or Gauss-code text); repeatable");
  app.add_option("--theory", cfg.theory, "preset: f2_row1 .. f2_row8, manturov");
  app.add_option("--params", cfg.params, "explicit parameters a=..,t=..,lambda=..,mu=..,beta=..[,field=..]");
  app.add_option("--triple", cfg.triple, "a,lambda,mu[,field=..]; beta = 0 and t solved");
  app.add_option("--field", cfg.field, "q | f2 | fp:P");
  app.add_flag("--graded", cfg.graded, "report the quantum-graded table (homogeneous theories only)");
  app.add_option("--moves", cfg.moves, "random moves per diagram for invariance");
  app.add_option("--seed", cfg.seed, "seed for invariance");
  app.add_option("--out", cfg.out, "write the report here instead of standard output");
  app.add_option("--format", cfg.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--genus", cfg.genus, "handles, for surface");
  app.add_option("--crosscaps", cfg.crosscaps, "crosscaps, for surface");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_json("InvalidConfig", e.what(), {}, {}).dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return 3;
  }

  Outcome o;
  try {
    if (cfg.command == "compute") {
      o = cmd_compute(cfg);
    } else if (cfg.command == "verify") {
      o = cmd_verify(cfg);
    } else if (cfg.command == "invariance") {
      o = cmd_invariance(cfg);
    } else if (cfg.command == "surface") {
      o = cmd_surface(cfg);
    } else {
      o = cmd_jones(cfg);
    }
  } catch (const Error& e) {
    out << error_json(to_string(e.kind()), e.what(), e.subject(), e.value()).dump(2) << "\n";
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    out << error_json("ComputationError", e.what(), {}, {}).dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const std::string body = cfg.format == "json" ? o.json.dump(2) + "\n" : o.text;
  if (cfg.out.empty()) {
    out << body;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!(file << body)) {
      out << error_json("IoError", "cannot write " + cfg.out, cfg.out, {}).dump(2) << "\n";
      return 3;
    }
  }
  return o.exit_code;
}

}  // namespace vlh
