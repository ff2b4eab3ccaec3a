#pragma once

#include "ecoroute/net.hpp"

namespace ecoroute {

// Per-vehicle costs of one link at a given aggregate flow.
struct LinkCosts {
  double travel_time_min = 0.0;
  double speed_mph = 0.0;
  double fuel_kwh = 0.0;
  double emissions_g = 0.0;
};

// Flow-weighted system totals.
struct SystemMetrics {
  double tse_g = 0.0;       // total system CO2 emissions
  double tsfc_kwh = 0.0;    // total system fuel consumption
  double tstt_veh_min = 0.0;
};

// Handling of degenerate centroid-connector style links. Links shorter than
// short_link_length carry the fixed travel time below, zero fuel and zero
// emissions, and are excluded from the TSE/TSFC sums.
struct CostModel {
  double short_link_length_mi = 1e-3;
  double short_link_time_min = 0.01;

  bool is_short(const Link& l) const { return l.length < short_link_length_mi; }

  // BPR travel time in minutes: tff * (1 + alpha * (x/Q)^beta).
  double bpr_time(const Link& l, double flow_vph) const;
  // Speed in mi/hr: length / travel time. Equals free-flow speed at zero flow.
  double speed(const Link& l, double flow_vph) const;
  // Per-vehicle energy in kWh: length * 14.58 * u^-0.6253.
  double fuel(const Link& l, double flow_vph) const;
  // Per-vehicle CO2 in grams: length * 3158 * u^-0.56.
  double emissions(const Link& l, double flow_vph) const;

  double class_cost(const Link& l, double flow_vph, VehicleClass c) const;
  LinkCosts link_costs(const Link& l, double flow_vph) const;

  SystemMetrics system_metrics(const Network& net, const FlowState& state) const;
};

const CostModel& default_cost_model();

inline double bpr_time(const Link& l, double flow_vph) {
  return default_cost_model().bpr_time(l, flow_vph);
}
inline double speed(const Link& l, double flow_vph) {
  return default_cost_model().speed(l, flow_vph);
}
inline double fuel(const Link& l, double flow_vph) {
  return default_cost_model().fuel(l, flow_vph);
}
inline double emissions(const Link& l, double flow_vph) {
  return default_cost_model().emissions(l, flow_vph);
}
inline double class_cost(const Link& l, double flow_vph, VehicleClass c) {
  return default_cost_model().class_cost(l, flow_vph, c);
}
inline SystemMetrics system_metrics(const Network& net, const FlowState& state) {
  return default_cost_model().system_metrics(net, state);
}

}  // namespace ecoroute
