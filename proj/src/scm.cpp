#include "nlicp/scm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nlicp {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double NoiseSpec::sample(Rng& rng) const {
  switch (distribution) {
    case NoiseDistribution::standard_normal:
      return scale * rng.normal();
    case NoiseDistribution::student_t:
      return scale * rng.student_t(df);
  }
  return 0.0;
}

double eval_nonlinearity(int id, double x) {
  switch (id) {
    case 1:
      return x;
    case 2:
      return x > 0.0 ? x : 0.0;
    case 3:
      return x >= 0.0 ? std::sqrt(x) : -std::sqrt(-x);
    case 4:
      return std::sin(kTwoPi * x);
    default:
      throw std::invalid_argument("eval_nonlinearity: id must be in 1..4");
  }
}

double eval_mechanism(std::span<const double> parent_values, std::span<const int> signs,
                      const Mechanism& mech) {
  if (parent_values.size() != signs.size() || parent_values.empty())
    throw std::invalid_argument("eval_mechanism: parent_values and signs must have equal length >= 1");
  if (mech.composition == Composition::additive) {
    double sum = 0.0;
    for (std::size_t j = 0; j < parent_values.size(); ++j)
      sum += eval_nonlinearity(mech.nonlinearity_id, signs[j] * parent_values[j]);
    return sum;
  }
  double prod = 1.0;
  for (std::size_t j = 0; j < parent_values.size(); ++j)
    prod *= eval_nonlinearity(mech.nonlinearity_id, signs[j] * parent_values[j]);
  return prod;
}

StructuralCausalModel::StructuralCausalModel(Dag d, std::vector<Mechanism> m,
                                             std::vector<NoiseSpec> k)
    : dag(std::move(d)), mechanisms(std::move(m)), noises(std::move(k)) {
  const std::size_t q = static_cast<std::size_t>(dag.num_nodes());
  if (mechanisms.size() != q || noises.size() != q)
    throw std::invalid_argument("StructuralCausalModel: need one mechanism and one noise per node");
  for (const NoiseSpec& spec : noises) {
    if (spec.scale <= 0.0) throw std::invalid_argument("NoiseSpec: scale must be positive");
    if (spec.distribution == NoiseDistribution::student_t && spec.df <= 0.0)
      throw std::invalid_argument("NoiseSpec: df must be positive");
  }
}

Dataset sample_dataset(const StructuralCausalModel& scm, int target,
                       const std::vector<InterventionSpec>& env_plan,
                       const std::vector<int>& per_env_counts, std::uint64_t seed) {
  const int q = scm.dag.num_nodes();
  if (target < 1 || target > q) throw std::invalid_argument("sample_dataset: target out of range");
  if (env_plan.empty() || env_plan.size() != per_env_counts.size())
    throw std::invalid_argument("sample_dataset: env_plan and per_env_counts must align");
  if (!env_plan.front().targets.empty())
    throw std::invalid_argument("sample_dataset: environment 1 must be observational");
  for (const InterventionSpec& spec : env_plan) {
    for (int node : spec.targets) {
      if (node < 1 || node > q)
        throw std::invalid_argument("sample_dataset: intervention on undefined node " +
                                    std::to_string(node));
    }
    if (spec.strength < 0.0)
      throw std::invalid_argument("sample_dataset: intervention strength must be nonnegative");
  }
  int n = 0;
  for (int c : per_env_counts) {
    if (c <= 0) throw std::invalid_argument("sample_dataset: per_env_counts must be positive");
    n += c;
  }

  const std::vector<int> topo = scm.dag.topological_order();
  std::vector<std::vector<int>> parents(q + 1), signs(q + 1);
  for (int v = 1; v <= q; ++v) {
    parents[v] = scm.dag.parents(v);
    signs[v] = scm.dag.parent_signs(v);
  }

  Dataset data;
  data.X.resize(n, q - 1);
  data.y.resize(n);
  data.env.resize(n);
  for (int v = 1; v <= q; ++v) {
    if (v == target) continue;
    data.x_names.push_back("Z" + std::to_string(v));
  }
  data.y_name = "Z" + std::to_string(target);

  Rng rng(seed);
  std::vector<double> value(q + 1, 0.0);
  std::vector<double> parent_vals;
  int row = 0;
  for (std::size_t e = 0; e < env_plan.size(); ++e) {
    const InterventionSpec& plan = env_plan[e];
    // Intervention values drawn once per (environment, node), ascending
    // node order. strength 0 consumes no randomness so a zero-strength
    // shift plan reproduces the observational stream bit for bit.
    std::vector<double> intervention_value(q + 1, 0.0);
    std::vector<char> intervened(q + 1, 0);
    std::vector<int> nodes = plan.targets;
    std::sort(nodes.begin(), nodes.end());
    for (int node : nodes) {
      intervened[node] = 1;
      intervention_value[node] =
          plan.strength == 0.0 ? 0.0 : plan.strength * (rng.student_t(plan.df) + plan.meanshift);
    }
    for (int i = 0; i < per_env_counts[e]; ++i, ++row) {
      for (int v : topo) {
        if (intervened[v] && plan.kind == InterventionKind::replace) {
          value[v] = intervention_value[v];
          continue;
        }
        double mean = 0.0;
        if (!parents[v].empty()) {
          parent_vals.clear();
          for (int pa : parents[v]) parent_vals.push_back(value[pa]);
          mean = eval_mechanism(parent_vals, signs[v], scm.mechanisms[v - 1]);
        }
        value[v] = mean + scm.noises[v - 1].sample(rng);
        if (intervened[v]) value[v] += intervention_value[v];
      }
      data.y[row] = value[target];
      int col = 0;
      for (int v = 1; v <= q; ++v) {
        if (v == target) continue;
        data.X(row, col++) = value[v];
      }
      data.env[row] = static_cast<int>(e) + 1;
    }
  }
  return data;
}

}  // namespace nlicp
