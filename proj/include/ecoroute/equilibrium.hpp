#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecoroute/cost.hpp"
#include "ecoroute/net.hpp"
#include "ecoroute/shortest_path.hpp"

namespace ecoroute {

struct SolverConfig {
  double epsilon = 1e-6;     // relative gap threshold
  int max_iterations = 20000;
  enum class StepRule { MSA } step_rule = StepRule::MSA;
};

struct GapSample {
  int iteration;
  double gap; // relative gap, Eq-style: (experienced - minimum) / experienced
  double aec; // average excess cost: (experienced - minimum) / total demand
};

struct EquilibriumResult {
  FlowState state;
  std::vector<GapSample> gap_trace;
  bool converged = false;
  int iterations = 0;
  double final_gap = 0.0;
  SystemMetrics metrics;
};

class UnreachableDemandError : public std::runtime_error {
 public:
  UnreachableDemandError(int origin, int destination, VehicleClass c);
  int origin;
  int destination;
  VehicleClass vehicle_class;
};

class NetworkValidationError : public std::runtime_error {
 public:
  explicit NetworkValidationError(const std::vector<Diagnostic>& diags);
};

// Loads every positive demand entry onto the shortest paths at the state's
// current costs; returns the resulting auxiliary flow. Throws
// UnreachableDemandError when a positive entry has no path.
FlowState all_or_nothing(const Network& net, const FlowState& state,
                         const DemandTable& demand,
                         const CostModel& model = default_cost_model());

// Relative equilibrium gap of a feasible state: the difference between the
// experienced total cost and the demand-weighted minimum cost, normalized by
// the experienced total. Zero demand yields 0. Fresh shortest paths are
// computed at the state's costs.
double relative_gap(const Network& net, const FlowState& state,
                    const DemandTable& demand,
                    const CostModel& model = default_cost_model());

// Optional warm start for solve(). `flow` must be feasible for the demand
// passed to solve (the caller is responsible; fraction sweeps obtain one by
// rescaling class flows). `step` is the averaging step the MSA continues
// from, so the first update blends rather than overwrites.
struct WarmStart {
  FlowState flow;
  int step = 8;
};

// Multiclass user equilibrium by the method of successive averages, step
// exactly 1/k. Each iteration computes one set of per-class shortest path
// trees at the current aggregate flows; those trees provide the auxiliary
// all-or-nothing flow, the minimum-cost sum for the gap, and the loading.
// Iteration 1 with a cold start is the free-flow bootstrap (no flow loaded
// yet); its trace entry records gap = 1 by convention. Non-convergence
// within max_iterations is reported via converged = false, not an error.
EquilibriumResult solve(const Network& net, const DemandTable& demand,
                        const SolverConfig& config,
                        const std::optional<WarmStart>& warm = std::nullopt,
                        const CostModel& model = default_cost_model());

// Independent equilibrium oracle for one origin-destination pair served by
// exactly two parallel links and a single class: bisection on the flow split
// exploiting strict monotonicity of the class cost. Returns the boundary
// split when no interior root exists; interior roots are located to a cost
// difference of at most 1e-10 in class units.
std::pair<double, double> two_link_oracle(const Link& link1, const Link& link2,
                                          double demand_vph, VehicleClass c,
                                          const CostModel& model = default_cost_model());

}  // namespace ecoroute
