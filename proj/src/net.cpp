#include "ecoroute/net.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ecoroute {

const char* class_letter(VehicleClass c) {
  switch (c) {
    case VehicleClass::Time: return "t";
    case VehicleClass::Emissions: return "e";
    case VehicleClass::Fuel: return "f";
  }
  return "?";
}

VehicleClass class_from_letter(const std::string& s) {
  if (s == "t") return VehicleClass::Time;
  if (s == "e") return VehicleClass::Emissions;
  if (s == "f") return VehicleClass::Fuel;
  throw std::invalid_argument("unknown vehicle class '" + s + "' (expected t, e or f)");
}

Link Link::from_speed(int id, int tail, int head, double capacity,
                      double length_mi, double free_flow_speed_mph,
                      double alpha, double beta) {
  Link l;
  l.id = id;
  l.tail = tail;
  l.head = head;
  l.capacity = capacity;
  l.length = length_mi;
  l.free_flow_speed = free_flow_speed_mph;
  l.free_flow_time_min = length_mi / free_flow_speed_mph * 60.0;
  l.alpha = alpha;
  l.beta = beta;
  return l;
}

Link Link::from_time(int id, int tail, int head, double capacity,
                     double length_mi, double free_flow_time_min,
                     double alpha, double beta) {
  Link l;
  l.id = id;
  l.tail = tail;
  l.head = head;
  l.capacity = capacity;
  l.length = length_mi;
  l.free_flow_time_min = free_flow_time_min;
  l.free_flow_speed = length_mi / (free_flow_time_min / 60.0);
  l.alpha = alpha;
  l.beta = beta;
  return l;
}

std::string format_diagnostics(const std::vector<Diagnostic>& diags) {
  std::ostringstream out;
  for (const auto& d : diags)
    out << d.code << " (" << d.subject << "): " << d.message << "\n";
  return out.str();
}

Network::Network(std::vector<int> node_ids, std::vector<Link> links,
                 int zone_count, int first_through_node)
    : node_ids_(std::move(node_ids)),
      links_(std::move(links)),
      zone_count_(zone_count),
      first_through_node_(first_through_node) {
  std::sort(node_ids_.begin(), node_ids_.end());
  node_ids_.erase(std::unique(node_ids_.begin(), node_ids_.end()),
                  node_ids_.end());
  ext_to_int_.reserve(node_ids_.size());
  for (int i = 0; i < static_cast<int>(node_ids_.size()); ++i)
    ext_to_int_.emplace(node_ids_[i], i);
  out_links_.resize(node_ids_.size());
  for (int li = 0; li < static_cast<int>(links_.size()); ++li) {
    auto it = ext_to_int_.find(links_[li].tail);
    if (it != ext_to_int_.end()) out_links_[it->second].push_back(li);
    // Dangling endpoints are reported by validate_network, not dropped here.
  }
}

bool Network::is_zone(int external_id) const {
  // Zones are the zone_count smallest node ids; with the usual dense 1-based
  // numbering this is external_id <= zone_count.
  if (!has_node(external_id)) return false;
  return internal_index(external_id) < zone_count_;
}

std::vector<int> Network::zones() const {
  std::vector<int> z;
  z.reserve(zone_count_);
  for (int i = 0; i < zone_count_ && i < node_count(); ++i)
    z.push_back(node_ids_[i]);
  return z;
}

bool Network::has_node(int external_id) const {
  return ext_to_int_.count(external_id) > 0;
}

int Network::internal_index(int external_id) const {
  auto it = ext_to_int_.find(external_id);
  if (it == ext_to_int_.end())
    throw std::out_of_range("unknown node id " + std::to_string(external_id));
  return it->second;
}

std::vector<Diagnostic> validate_network(const Network& net) {
  std::vector<Diagnostic> diags;
  auto link_name = [](const Link& l) {
    return "link " + std::to_string(l.id) + " (" + std::to_string(l.tail) +
           "->" + std::to_string(l.head) + ")";
  };

  std::unordered_map<int, int> id_seen;
  for (const Link& l : net.links()) {
    if (++id_seen[l.id] == 2)
      diags.push_back({"duplicate-link-id", "link " + std::to_string(l.id),
                       "link id appears more than once"});
    if (!(l.capacity > 0.0))
      diags.push_back({"nonpositive-capacity", link_name(l),
                       "capacity " + std::to_string(l.capacity)});
    if (!(l.length > 0.0))
      diags.push_back({"nonpositive-length", link_name(l),
                       "length " + std::to_string(l.length)});
    if (!(l.free_flow_speed > 0.0) || !std::isfinite(l.free_flow_speed))
      diags.push_back({"nonpositive-free-flow-speed", link_name(l),
                       "free-flow speed " + std::to_string(l.free_flow_speed)});
    if (!(l.free_flow_time_min > 0.0))
      diags.push_back({"nonpositive-free-flow-time", link_name(l),
                       "free-flow time " + std::to_string(l.free_flow_time_min)});
    if (l.alpha < 0.0)
      diags.push_back({"negative-alpha", link_name(l),
                       "alpha " + std::to_string(l.alpha)});
    if (l.beta < 1.0)
      diags.push_back({"beta-below-one", link_name(l),
                       "beta " + std::to_string(l.beta)});
    for (int endpoint : {l.tail, l.head})
      if (!net.has_node(endpoint))
        diags.push_back({"unknown-endpoint", link_name(l),
                         "node " + std::to_string(endpoint) +
                             " is not in the node set"});
  }
  if (net.zone_count() > net.node_count())
    diags.push_back({"zones-exceed-nodes", "network",
                     std::to_string(net.zone_count()) + " zones but only " +
                         std::to_string(net.node_count()) + " nodes"});
  return diags;
}

void DemandTable::add(int origin, int destination, VehicleClass c, double rate) {
  if (rate < 0.0)
    throw std::invalid_argument("negative demand rate for " +
                                std::to_string(origin) + "->" +
                                std::to_string(destination));
  if (origin == destination) {
    if (rate > 0.0) {
      ++dropped_intrazonal_;
      dropped_intrazonal_total_ += rate;
    }
    return;
  }
  entries_[{origin, destination}][static_cast<int>(c)] += rate;
  totals_[static_cast<int>(c)] += rate;
}

double DemandTable::rate(int origin, int destination, VehicleClass c) const {
  auto it = entries_.find({origin, destination});
  if (it == entries_.end()) return 0.0;
  return it->second[static_cast<int>(c)];
}

double DemandTable::total() const {
  return totals_[0] + totals_[1] + totals_[2];
}

std::vector<DemandTable::OriginBlock> DemandTable::by_origin(VehicleClass c) const {
  std::vector<OriginBlock> blocks;
  const int ci = static_cast<int>(c);
  for (const auto& [od, rates] : entries_) {
    if (rates[ci] <= 0.0) continue;
    if (blocks.empty() || blocks.back().origin != od.first)
      blocks.push_back({od.first, {}});
    blocks.back().destinations.emplace_back(od.second, rates[ci]);
  }
  return blocks;
}

DemandTable split_demand(const DemandTable& base, double eco_fraction,
                         VehicleClass eco_class) {
  if (!(eco_fraction >= 0.0 && eco_fraction <= 1.0))
    throw std::invalid_argument("eco fraction " + std::to_string(eco_fraction) +
                                " outside [0,1]");
  if (eco_class == VehicleClass::Time)
    throw std::invalid_argument("eco class must be Emissions or Fuel");
  if (base.total(VehicleClass::Emissions) != 0.0 ||
      base.total(VehicleClass::Fuel) != 0.0)
    throw std::invalid_argument("split_demand expects a pure time-routing table");

  DemandTable out;
  for (const auto& [od, rates] : base.entries()) {
    const double d = rates[static_cast<int>(VehicleClass::Time)];
    if (d == 0.0) continue;
    if (eco_fraction < 1.0)
      out.add(od.first, od.second, VehicleClass::Time, (1.0 - eco_fraction) * d);
    if (eco_fraction > 0.0)
      out.add(od.first, od.second, eco_class, eco_fraction * d);
  }
  return out;
}

FlowState::FlowState(int link_count) {
  for (auto& v : class_flow) v.assign(link_count, 0.0);
}

std::vector<double> FlowState::aggregate_flows() const {
  std::vector<double> agg(class_flow[0].size(), 0.0);
  for (const auto& v : class_flow)
    for (std::size_t i = 0; i < v.size(); ++i) agg[i] += v[i];
  return agg;
}

double FlowState::class_total(VehicleClass c) const {
  double s = 0.0;
  for (double x : class_flow[static_cast<int>(c)]) s += x;
  return s;
}

}  // namespace ecoroute
