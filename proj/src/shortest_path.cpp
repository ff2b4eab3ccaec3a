#include "ecoroute/shortest_path.hpp"

#include <queue>
#include <stdexcept>

namespace ecoroute {

ShortestPathTree shortest_path_tree(const Network& net,
                                    std::span<const double> link_costs,
                                    int origin_external_id) {
  const int n = net.node_count();
  ShortestPathTree tree;
  tree.origin = origin_external_id;
  tree.label.assign(n, kUnreachable);
  tree.pred_link.assign(n, -1);

  const int src = net.internal_index(origin_external_id);
  tree.label[src] = 0.0;

  using Item = std::pair<double, int32_t>; // (label, node)
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  heap.push({0.0, src});
  std::vector<char> settled(n, 0);

  while (!heap.empty()) {
    const auto [dist, v] = heap.top();
    heap.pop();
    if (settled[v]) continue;
    settled[v] = 1;
    if (v != src && !net.traversable(v)) continue; // centroid: sink only
    for (int32_t li : net.out_links(v)) {
      const double c = link_costs[li];
      const int w = net.internal_index(net.link(li).head);
      const double nd = dist + c;
      if (nd < tree.label[w]) {
        tree.label[w] = nd;
        tree.pred_link[w] = li;
        heap.push({nd, static_cast<int32_t>(w)});
      } else if (nd == tree.label[w] && tree.pred_link[w] >= 0 &&
                 net.link(li).id < net.link(tree.pred_link[w]).id) {
        tree.pred_link[w] = li; // equal-cost tie: keep the smallest link id
      }
    }
  }
  return tree;
}

std::vector<double> cost_snapshot(const Network& net,
                                  std::span<const double> aggregate_flows,
                                  VehicleClass c, const CostModel& model) {
  std::vector<double> costs(net.link_count());
  for (int li = 0; li < net.link_count(); ++li)
    costs[li] = model.class_cost(net.link(li), aggregate_flows[li], c);
  return costs;
}

ShortestPathTree shortest_paths(const Network& net, const FlowState& state,
                                int origin_external_id, VehicleClass c,
                                const CostModel& model) {
  const auto agg = state.aggregate_flows();
  const auto costs = cost_snapshot(net, agg, c, model);
  ShortestPathTree tree = shortest_path_tree(net, costs, origin_external_id);
  tree.vehicle_class = c;
  return tree;
}

}  // namespace ecoroute
