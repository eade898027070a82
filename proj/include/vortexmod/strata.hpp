#pragma once

// Stratification of the local moduli space (n = r) by the multiplicity type of the
// support divisor. A point sum m_i x_i with a distinct points has a fiber built from one
// tower per point: m steps, each a projective bundle of relative dimension r - 1.

#include <string>
#include <vector>

namespace vortexmod::strata {

using Partition = std::vector<int>;  // weakly decreasing, positive

/// All partitions of d in reverse-lexicographic order; d = 0 gives one empty partition.
std::vector<Partition> partitions(int d);

struct PartTower {
  int multiplicity = 1;
  std::vector<int> step_dims;  // one entry per step, each r - 1
};

struct FiberTower {
  int r = 1;
  std::vector<PartTower> parts;

  int total_dim() const;
};

FiberTower fiber_tower(const Partition& p, int r);

/// Parameter dimension a + d(r - 1): a support points plus the tower over them. For
/// non-generic strata this bounds the fiber dimension from above.
int stratum_dim(const Partition& p, int r);

struct StratumRow {
  Partition partition;
  int points = 0;          // a
  std::string tower;       // e.g. "2x(P^1) + 1x(P^1)"
  int parameter_dim = 0;
  int codim = 0;           // relative to d * r
};

std::vector<StratumRow> stratification_report(int d, int r);

std::string to_string(const Partition& p);

}  // namespace vortexmod::strata
