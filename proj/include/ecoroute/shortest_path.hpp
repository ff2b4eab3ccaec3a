#pragma once

#include <limits>
#include <span>
#include <vector>

#include "ecoroute/cost.hpp"
#include "ecoroute/net.hpp"

namespace ecoroute {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

// One-to-all shortest path tree from a single origin under one class's link
// costs. Labels and predecessors are indexed by internal node index; helpers
// translate from external ids.
struct ShortestPathTree {
  int origin = 0; // external id
  VehicleClass vehicle_class = VehicleClass::Time;
  std::vector<double> label;     // cost in class units, kUnreachable if not reached
  std::vector<int32_t> pred_link; // index into Network::links(), -1 at origin/unreached

  double label_of(const Network& net, int external_id) const {
    return label[net.internal_index(external_id)];
  }
  int32_t pred_of(const Network& net, int external_id) const {
    return pred_link[net.internal_index(external_id)];
  }
};

// Dijkstra over precomputed per-link costs (same indexing as net.links()).
// Nodes with external id below net.first_through_node() are not expanded
// unless they are the origin; they can still terminate a path. Ties are
// broken toward the predecessor link with the smallest external link id.
// All costs must be nonnegative.
ShortestPathTree shortest_path_tree(const Network& net,
                                    std::span<const double> link_costs,
                                    int origin_external_id);

// Convenience wrapper evaluating class costs at the state's aggregate flows.
ShortestPathTree shortest_paths(const Network& net, const FlowState& state,
                                int origin_external_id, VehicleClass c,
                                const CostModel& model = default_cost_model());

// Per-link class costs at the given aggregate flows, index-aligned with
// net.links().
std::vector<double> cost_snapshot(const Network& net,
                                  std::span<const double> aggregate_flows,
                                  VehicleClass c,
                                  const CostModel& model = default_cost_model());

}  // namespace ecoroute
