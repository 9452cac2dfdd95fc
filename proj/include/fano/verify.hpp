#pragma once

// Comparison of the computed pipeline against the published counts and
// vertex matrices.

#include <string>
#include <vector>

#include "fano/growth.hpp"
#include "fano/reference_data.hpp"

namespace fano {

enum class VerifyScope { all, weights, tetrahedra, minimal, classification };

struct CheckResult {
  std::string name;
  bool passed{false};
  std::string expected;
  std::string actual;
};

struct VerifyOptions {
  VerifyScope scope{VerifyScope::all};
  unsigned jobs{1};
  bool oracle{false};
  Int box{7};
  reference::PublishedCounts expected{};
};

/// Expected counts with every scalar nudged, so each scope must fail.
reference::PublishedCounts perturbed(reference::PublishedCounts c);

/// Every found polytope is equivalent to exactly one reference polytope and
/// vice versa.
bool matches_bijectively(const std::vector<Polytope>& found, const std::vector<Polytope>& reference);

std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// Checks that need only the records (counts, histograms, maximal matrices,
/// Picard breakdown).
std::vector<CheckResult> verify_classification(const std::vector<ClassificationRecord>& records,
                                               const reference::PublishedCounts& expected);

}  // namespace fano
