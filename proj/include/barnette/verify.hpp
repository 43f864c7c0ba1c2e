#pragma once

#include <optional>
#include <string>
#include <vector>

#include "barnette/oracle.hpp"

namespace barnette {

/// Result of the full property sweep over one instance: for every path abc,
/// run the edge-avoid driver (property (1)) and, when a and c share a color,
/// the through driver (property (2)); convert each output partition to a
/// Hamilton cycle of the dual and cross-check the H+-/H-- statements; with
/// `use_oracle`, also require agreement with the brute-force searches.
struct SweepResult {
  std::string instance;
  bool hypothesis_ok = false;
  int paths_total = 0;
  int paths_checked = 0;      // ordered paths abc
  int through_checked = 0;    // same-color subset
  int property_failures = 0;
  int oracle_disagreements = 0;
  int seed_audit_failures = 0;
  int seeds_audited = 0;
  bool oracle_used = false;
  bool oracle_skipped = false;  // bound exceeded
  std::vector<std::string> failures;  // descriptions of violations

  bool ok() const {
    return property_failures == 0 && oracle_disagreements == 0 && seed_audit_failures == 0;
  }
};

SweepResult verify_sweep(const InstanceRecord& rec, bool use_oracle, int jobs = 1);

/// All ordered paths abc of the graph (ab, bc edges, a != c).
std::vector<PathABC> all_paths(const PlaneTriangulation& g);

}  // namespace barnette
