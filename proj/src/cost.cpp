#include "ecoroute/cost.hpp"

#include <cmath>
#include <stdexcept>

namespace ecoroute {

namespace {
constexpr double kFuelScale = 14.58;     // kWh per mile at u = 1 mi/hr
constexpr double kFuelExponent = -0.6253;
constexpr double kCo2Scale = 3158.0;     // grams per mile at u = 1 mi/hr
constexpr double kCo2Exponent = -0.56;
}  // namespace

const CostModel& default_cost_model() {
  static const CostModel model;
  return model;
}

double CostModel::bpr_time(const Link& l, double flow_vph) const {
  if (flow_vph < 0.0)
    throw std::invalid_argument("negative flow " + std::to_string(flow_vph) +
                                " on link " + std::to_string(l.id));
  if (is_short(l)) return short_link_time_min;
  if (flow_vph == 0.0 || l.alpha == 0.0) return l.free_flow_time_min;
  return l.free_flow_time_min *
         (1.0 + l.alpha * std::pow(flow_vph / l.capacity, l.beta));
}

double CostModel::speed(const Link& l, double flow_vph) const {
  return l.length / (bpr_time(l, flow_vph) / 60.0);
}

double CostModel::fuel(const Link& l, double flow_vph) const {
  if (is_short(l)) {
    bpr_time(l, flow_vph); // keeps the negative-flow check
    return 0.0;
  }
  return l.length * kFuelScale * std::pow(speed(l, flow_vph), kFuelExponent);
}

double CostModel::emissions(const Link& l, double flow_vph) const {
  if (is_short(l)) {
    bpr_time(l, flow_vph);
    return 0.0;
  }
  return l.length * kCo2Scale * std::pow(speed(l, flow_vph), kCo2Exponent);
}

double CostModel::class_cost(const Link& l, double flow_vph, VehicleClass c) const {
  switch (c) {
    case VehicleClass::Time: return bpr_time(l, flow_vph);
    case VehicleClass::Emissions: return emissions(l, flow_vph);
    case VehicleClass::Fuel: return fuel(l, flow_vph);
  }
  throw std::logic_error("unreachable");
}

LinkCosts CostModel::link_costs(const Link& l, double flow_vph) const {
  LinkCosts c;
  c.travel_time_min = bpr_time(l, flow_vph);
  c.speed_mph = l.length / (c.travel_time_min / 60.0);
  if (is_short(l)) {
    c.fuel_kwh = 0.0;
    c.emissions_g = 0.0;
  } else {
    c.fuel_kwh = l.length * kFuelScale * std::pow(c.speed_mph, kFuelExponent);
    c.emissions_g = l.length * kCo2Scale * std::pow(c.speed_mph, kCo2Exponent);
  }
  return c;
}

SystemMetrics CostModel::system_metrics(const Network& net,
                                        const FlowState& state) const {
  SystemMetrics m;
  for (int li = 0; li < net.link_count(); ++li) {
    const Link& l = net.link(li);
    const double x = state.aggregate(li);
    if (x == 0.0) continue;
    m.tstt_veh_min += bpr_time(l, x) * x;
    if (is_short(l)) continue; // connectors excluded from TSE/TSFC
    const double u = speed(l, x);
    m.tsfc_kwh += l.length * kFuelScale * std::pow(u, kFuelExponent) * x;
    m.tse_g += l.length * kCo2Scale * std::pow(u, kCo2Exponent) * x;
  }
  return m;
}

}  // namespace ecoroute
