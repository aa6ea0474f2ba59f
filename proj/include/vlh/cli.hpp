#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vlh/algebra.hpp"
#include "vlh/io.hpp"

namespace vlh {

struct RunConfig {
  std::string command;  // compute | verify | invariance | surface | jones
  std::vector<std::string> diagrams;
  std::optional<std::string> theory;  // preset name
  std::optional<std::string> params;  // "a=1,t=0,lambda=0,mu=1,beta=0[,field=q]"
  std::optional<std::string> triple;  // "a,lambda,mu[,field=q]"
  std::optional<std::string> field;
  bool graded = false;
  int moves = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  unsigned genus = 0;
  unsigned crosscaps = 0;
};

struct NamedTheory {
  std::string selector;  // echo of the command-line selector
  TheoryParams params;
};

/// Resolves the single theory selector of a config. With `validate` false
/// the classification equations are not enforced (used by verify, which
/// reports them instead). Throws InvalidConfig and the construction errors.
NamedTheory resolve_theory(const RunConfig& cfg, bool validate = true);

/// h = t = 0 and theta = 0: the theories carrying a quantum grading.
bool is_homogeneous(const TheoryParams& th);

using Betti = std::map<int, std::size_t>;

struct InvarianceMismatch {
  std::string diagram;
  std::string theory;
  int step = 0;
  std::vector<std::string> moves;  // the walk up to the failing step
  Betti expected, found;
};

struct R3Comparison {
  std::string equivalence_class;
  std::vector<std::string> diagrams;
  std::string theory;
  bool equal = true;
};

struct InvarianceOutcome {
  struct Walk {
    std::string diagram;
    std::vector<std::string> moves;
    int checks = 0;  // betti recomputations per theory
    int final_crossings = 0;
  };
  std::vector<Walk> walks;
  std::vector<InvarianceMismatch> mismatches;
  std::vector<R3Comparison> r3;
};

/// Applies `moves` random R1/R2 moves (and inverses) to each diagram,
/// recomputing homology every `check_every` moves and after the last one.
/// Each diagram walks with its own generator seeded from (seed, index), so
/// results do not depend on the other inputs. The walk keeps at most
/// three crossings above the starting diagram. Records sharing an
/// equivalence class are compared with each other.
InvarianceOutcome run_invariance(const std::vector<DiagramRecord>& records,
                                 const std::vector<NamedTheory>& theories, int moves,
                                 std::uint64_t seed, int check_every = 1);

/// Entry point shared by the executable and the tests. Exit codes: 0 all
/// checks pass, 1 computation error, 2 failed assertion or mismatch,
/// 3 input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vlh
