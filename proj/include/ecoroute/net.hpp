#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace ecoroute {

// Vehicle classes: minimize travel time, CO2 emissions, or fuel consumption.
enum class VehicleClass : int { Time = 0, Emissions = 1, Fuel = 2 };

inline constexpr int kClassCount = 3;
inline constexpr std::array<VehicleClass, kClassCount> kAllClasses = {
    VehicleClass::Time, VehicleClass::Emissions, VehicleClass::Fuel};

const char* class_letter(VehicleClass c);           // "t", "e", "f"
VehicleClass class_from_letter(const std::string&); // throws std::invalid_argument

// Directed link. Node ids are external (as read from input); lengths are in
// miles, capacities in veh/hr, free-flow time in minutes, speed in mi/hr.
struct Link {
  int id = 0;
  int tail = 0;
  int head = 0;
  double capacity = 0.0;
  double length = 0.0;
  double free_flow_time_min = 0.0;
  double free_flow_speed = 0.0;
  double alpha = 0.15;
  double beta = 4.0;
  // Opaque TNTP metadata, never used by the cost functions.
  double speed_limit = 0.0;
  double toll = 0.0;
  int link_type = 0;

  // Free-flow time is the stored primary quantity when parsed from TNTP;
  // free-flow speed is primary for programmatic construction. The factory
  // keeps the two consistent.
  static Link from_speed(int id, int tail, int head, double capacity,
                         double length_mi, double free_flow_speed_mph,
                         double alpha = 0.15, double beta = 4.0);
  static Link from_time(int id, int tail, int head, double capacity,
                        double length_mi, double free_flow_time_min,
                        double alpha = 0.15, double beta = 4.0);
};

struct Diagnostic {
  std::string code;    // stable identifier, e.g. "nonpositive-capacity"
  std::string subject; // "link 12", "node 3", ...
  std::string message;
};

std::string format_diagnostics(const std::vector<Diagnostic>& diags);

// Directed network with explicit zone set. Parallel links between the same
// node pair are allowed and distinguished by link id. Nodes whose external id
// is below first_through_node may appear in a path only as its origin or
// destination, never as an intermediate node (TNTP centroid convention).
class Network {
 public:
  Network() = default;
  Network(std::vector<int> node_ids, std::vector<Link> links, int zone_count,
          int first_through_node = 1);

  int node_count() const { return static_cast<int>(node_ids_.size()); }
  int link_count() const { return static_cast<int>(links_.size()); }
  int zone_count() const { return zone_count_; }
  int first_through_node() const { return first_through_node_; }

  const std::vector<int>& node_ids() const { return node_ids_; }
  const std::vector<Link>& links() const { return links_; }
  const Link& link(int index) const { return links_[index]; }

  // Zones are the nodes with the zone_count smallest external ids
  // (TNTP convention: zones are nodes 1..zone_count).
  bool is_zone(int external_id) const;
  std::vector<int> zones() const;

  // Internal dense indexing. External ids are preserved for all I/O.
  bool has_node(int external_id) const;
  int internal_index(int external_id) const; // throws if unknown
  int external_id(int internal_index) const { return node_ids_[internal_index]; }

  // Outgoing links of an internal node index, as indices into links().
  const std::vector<int32_t>& out_links(int internal_index) const {
    return out_links_[internal_index];
  }

  bool traversable(int internal_index) const {
    return node_ids_[internal_index] >= first_through_node_;
  }

 private:
  std::vector<int> node_ids_; // sorted external ids
  std::vector<Link> links_;
  int zone_count_ = 0;
  int first_through_node_ = 1;
  std::unordered_map<int, int> ext_to_int_;
  std::vector<std::vector<int32_t>> out_links_;
};

// Structural checks; returns one diagnostic per violated invariant.
std::vector<Diagnostic> validate_network(const Network& net);

// Per-class origin-destination trip rates in veh/hr. Intrazonal entries
// (origin == destination) are dropped at insert and counted.
class DemandTable {
 public:
  void add(int origin, int destination, VehicleClass c, double rate);

  double rate(int origin, int destination, VehicleClass c) const;
  double total(VehicleClass c) const { return totals_[static_cast<int>(c)]; }
  double total() const;
  std::size_t entry_count() const { return entries_.size(); }

  int dropped_intrazonal_count() const { return dropped_intrazonal_; }
  double dropped_intrazonal_total() const { return dropped_intrazonal_total_; }

  struct OriginBlock {
    int origin;
    std::vector<std::pair<int, double>> destinations; // (external id, rate)
  };
  // Per-class view grouped by origin, ascending origin and destination ids.
  // Entries with zero rate are omitted.
  std::vector<OriginBlock> by_origin(VehicleClass c) const;

  // All (origin, destination) pairs with their per-class rates, ascending.
  const std::map<std::pair<int, int>, std::array<double, kClassCount>>&
  entries() const {
    return entries_;
  }

 private:
  std::map<std::pair<int, int>, std::array<double, kClassCount>> entries_;
  std::array<double, kClassCount> totals_ = {0.0, 0.0, 0.0};
  int dropped_intrazonal_ = 0;
  double dropped_intrazonal_total_ = 0.0;
};

// Splits a pure time-routing table: each entry d becomes (1-p)*d time-routing
// and p*d eco_class. Throws std::invalid_argument if p is outside [0,1], if
// base carries non-time demand, or if eco_class is Time.
DemandTable split_demand(const DemandTable& base, double eco_fraction,
                         VehicleClass eco_class);

// Per-class link flows indexed like Network::links().
struct FlowState {
  std::array<std::vector<double>, kClassCount> class_flow;

  FlowState() = default;
  explicit FlowState(int link_count);

  int link_count() const { return static_cast<int>(class_flow[0].size()); }
  double aggregate(int link_index) const {
    return class_flow[0][link_index] + class_flow[1][link_index] +
           class_flow[2][link_index];
  }
  std::vector<double> aggregate_flows() const;
  double class_total(VehicleClass c) const;
};

}  // namespace ecoroute
