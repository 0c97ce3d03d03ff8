#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hinv/lie_algebra.hpp"

namespace hinv {

struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string first_failure;
  bool ok() const { return passed == total; }
};

struct AlgebraCheckReport {
  std::string file;
  std::string error;  ///< load or evaluation error; checks are incomplete when set
  std::size_t dim = 0;
  std::size_t invariant_dim = 0;
  std::vector<CheckTally> checks;
  double seconds = 0;
  bool passed() const;
};

struct CorpusOptions {
  int trunc = 6;
  /// Run the pairwise central-element and product-relation checks.
  bool pairs = true;
  /// Worker threads for run_corpus; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Property suite for every basis invariant r (and ordered pair r != s) of g:
/// validity, CYB, commuting components, abelian-ideal support, symplectic support,
/// support round trip, twist and invariance defects, central element, product relation.
/// PBW checks need a weight-filtered basis and are reported as failures otherwise.
AlgebraCheckReport check_algebra(const LieAlgebra& g, const CorpusOptions& options = {});

/// Loads every *.json file (Lie or group documents) in `dir`, sorted by name, and
/// checks them in parallel. Per-file errors are recorded, not thrown.
std::vector<AlgebraCheckReport> run_corpus(const std::filesystem::path& dir, const CorpusOptions& options = {});

}  // namespace hinv
