#pragma once

// Identity suites: every identity is evaluated on all admissible tuples of a
// (possibly truncated) group and reported with counts and counterexamples.

#include <cstdint>
#include <string>
#include <vector>

#include "tlkl/engine.hpp"

namespace tlkl {

enum class Suite { RIdentities, DIdentities, AIdentities, LIdentities, Projection, All };

Suite parse_suite(std::string_view name);
std::string suite_name(Suite s);

struct Failure {
  std::size_t order = 0;  // index of w in the enumeration
  std::string tuple;
  std::string lhs;
  std::string rhs;
};

struct IdentityResult {
  std::string name;
  bool gated = false;   // needs the projection dichotomy
  bool skipped = false;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<Failure> failures;  // first few, by enumeration order
};

struct SuiteReport {
  std::string suite;
  std::string graph;
  int max_length = -1;
  bool cw0_holds = false;
  std::size_t elements = 0;
  std::vector<IdentityResult> results;

  bool passed() const;
  std::size_t checked() const;
  /// 0 all pass, 1 a failure, 3 failures confined to the projection
  /// identities on a graph where the dichotomy is not expected.
  int exit_code() const;
};

struct VerifyOptions {
  int max_length = -1;  // < 0: whole group (finite graphs only)
  unsigned threads = 1;
  std::uint64_t seed = 0;  // nonzero: shuffle the order in which w is visited
  std::size_t max_dump = 10;
  std::size_t element_cap = CoxeterGroup::kDefaultElementCap;
};

SuiteReport run_suite(const std::string& graph_spec, Suite suite, const VerifyOptions& options);
std::string format_report(const SuiteReport& report);

/// (i, k, j) with i in [2,n], k in [1,n-i], j in [1,i-1], for A_n.
struct TypeATriple {
  int i, k, j;
  Word x;
  Word w;
};
std::vector<TypeATriple> type_a_triples(int n);

}  // namespace tlkl
