#include "vortexmod/strata.hpp"

#include "vortexmod/errors.hpp"

#include <algorithm>
#include <numeric>

namespace vortexmod::strata {

namespace {

void extend(int remaining, int max_part, Partition& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    extend(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

void validate(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) throw ParameterError("partition parts must be positive");
    if (i > 0 && p[i] > p[i - 1]) throw ParameterError("partition parts must be weakly decreasing");
  }
}

}  // namespace

std::vector<Partition> partitions(int d) {
  if (d < 0) throw ParameterError("partitions: d must be >= 0");
  std::vector<Partition> out;
  Partition prefix;
  extend(d, d, prefix, out);
  return out;
}

int FiberTower::total_dim() const {
  int total = 0;
  for (const auto& part : parts) total = std::accumulate(part.step_dims.begin(), part.step_dims.end(), total);
  return total;
}

FiberTower fiber_tower(const Partition& p, int r) {
  if (r < 1) throw ParameterError("fiber_tower: r must be >= 1");
  validate(p);
  FiberTower out{r, {}};
  for (int m : p) out.parts.push_back(PartTower{m, std::vector<int>(static_cast<std::size_t>(m), r - 1)});
  return out;
}

int stratum_dim(const Partition& p, int r) {
  if (r < 1) throw ParameterError("stratum_dim: r must be >= 1");
  validate(p);
  const int d = std::accumulate(p.begin(), p.end(), 0);
  return static_cast<int>(p.size()) + d * (r - 1);
}

std::string to_string(const Partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(p[i]);
  }
  return out + "]";
}

std::vector<StratumRow> stratification_report(int d, int r) {
  if (r < 1) throw ParameterError("stratification_report: r must be >= 1");
  std::vector<StratumRow> rows;
  for (const auto& p : partitions(d)) {
    StratumRow row;
    row.partition = p;
    row.points = static_cast<int>(p.size());
    const auto tower = fiber_tower(p, r);
    for (std::size_t i = 0; i < tower.parts.size(); ++i) {
      if (i > 0) row.tower += " + ";
      row.tower += std::to_string(tower.parts[i].multiplicity) + "x(P^" + std::to_string(r - 1) + ")";
    }
    row.parameter_dim = stratum_dim(p, r);
    row.codim = d * r - row.parameter_dim;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace vortexmod::strata
