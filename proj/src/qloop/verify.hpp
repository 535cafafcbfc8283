#pragma once
// Property checks for the R-matrices: Yang-Baxter, unitarity, symmetries,
// crossing, pole residues, rank-one-tail reconstruction, fusion-kernel
// identities, and the rational scaling limit.  Symbolic mode proves each
// identity over the rational-function field; sampled mode evaluates at
// seeded exact points with pole-colliding samples rejected.

#include "qloop/algebra.hpp"

#include <string>
#include <vector>

namespace qloop {

struct CheckResult {
  std::string check_id;
  std::string status;          // "pass" | "fail" | "skipped"
  std::string mode;            // "symbolic" | "sampled"
  std::string counterexample;  // empty unless status == "fail"
  long timing_ms = 0;
};

struct VerifyOptions {
  std::string mode = "auto";  // auto | symbolic | sampled
  int samples = 8;
  unsigned long seed = 12345;
  int scaling_order = 1;
};

// Seeded generator of small exact rationals, matching the documented
// rejection rules (no zero numerators, |s| != 1, no pole collisions).
class Sampler {
 public:
  explicit Sampler(unsigned long seed) : state_(seed) {}
  // num in [-9,9]\{0}, den in [1,9].
  Rat frac();
  // (s, u, v, w) avoiding all pole loci of the family's checks.
  void tuple(const AlgebraSpec& sp, Rat& s, Rat& u, Rat& v, Rat& w);

 private:
  unsigned long next();
  unsigned long state_;
};

// Full R-matrix property suite for one family/rank; results sorted by id.
std::vector<CheckResult> run_rmatrix_suite(const AlgebraSpec& sp, const VerifyOptions& opt);

// Scaling limit alone (also part of the suite).
CheckResult check_scaling_limit(const AlgebraSpec& sp, int order = 1);

// Mutation sensitivity: asserts each seeded mutation flips exactly its
// documented set of checks at the fixed sample point.  One result per
// mutation: pass = observed flip-set matches the documented one.
std::vector<CheckResult> run_mutation_suite();

bool all_pass(const std::vector<CheckResult>& rs);

}  // namespace qloop
