#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nlicp/dag.hpp"
#include "nlicp/dataset.hpp"
#include "nlicp/rng.hpp"

namespace nlicp {

enum class NoiseDistribution { student_t, standard_normal };

struct NoiseSpec {
  NoiseDistribution distribution = NoiseDistribution::standard_normal;
  double df = 10.0;    // only for student_t
  double scale = 1.0;  // > 0

  double sample(Rng& rng) const;
};

enum class Composition { additive, multiplicative };

/// Parent aggregation: sum or product of f_id(sign * parent value), where
/// f1(x)=x, f2(x)=max(0,x), f3(x)=sign(x)*sqrt(|x|), f4(x)=sin(2*pi*x).
struct Mechanism {
  int nonlinearity_id = 1;  // 1..4
  Composition composition = Composition::additive;
};

double eval_nonlinearity(int id, double x);

double eval_mechanism(std::span<const double> parent_values, std::span<const int> signs,
                      const Mechanism& mech);

enum class InterventionKind { replace, shift };

/// Per-environment intervention plan. The intervention value for node k is
/// strength * (t_df + meanshift), drawn once per (environment, node) and
/// held constant across all rows of that environment.
struct InterventionSpec {
  InterventionKind kind = InterventionKind::shift;
  std::vector<int> targets;  // node ids, 1-based
  double strength = 0.0;
  double meanshift = 0.0;
  double df = 10.0;
};

struct StructuralCausalModel {
  Dag dag;
  std::vector<Mechanism> mechanisms;  // one per node
  std::vector<NoiseSpec> noises;      // one per node

  StructuralCausalModel(Dag d, std::vector<Mechanism> m, std::vector<NoiseSpec> k);
};

/// Sample a multi-environment dataset in topological node order.
/// env_plan holds one spec per environment; the first environment must be
/// observational (no targets). Columns: X = all nodes except `target` in
/// ascending order (named Z<k>), y = the target node.
Dataset sample_dataset(const StructuralCausalModel& scm, int target,
                       const std::vector<InterventionSpec>& env_plan,
                       const std::vector<int>& per_env_counts, std::uint64_t seed);

}  // namespace nlicp
