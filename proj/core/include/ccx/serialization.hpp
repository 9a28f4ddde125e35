#pragma once

#include <string>

#include "ccx/moebius_metric.hpp"
#include "json.hpp"

namespace ccx {

template <class Space>
std::string provenance_name(typename MoebiusMetric<Space>::Provenance p) {
  using P = typename MoebiusMetric<Space>::Provenance;
  switch (p) {
    case P::kVisual:
      return "visual";
    case P::kPushforward:
      return "pushforward";
    default:
      return "synthetic";
  }
}

// JSON form of a boundary metric: provenance, the reference base point, and
// log-density samples over the grid.  Enough to reconstruct the metric on
// the grid and to diff two runs.
inline nlohmann::json metric_json(const DiskSpace& s,
                                  const MoebiusMetric<DiskSpace>& rho,
                                  const SampleGrid<DiskSpace>& grid) {
  nlohmann::json j;
  j["provenance"] = provenance_name<DiskSpace>(rho.provenance());
  j["label"] = rho.label();
  j["validated"] = rho.validated();
  DiskPoint o = s.basepoint();
  j["base_point"] = {{"u", o.u()}, {"v", o.v()}};
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& xi : grid.points)
    samples.push_back({{"angle", xi.angle}, {"log_density", rho.log_density(xi)}});
  j["samples"] = samples;
  return j;
}

inline MoebiusMetric<DiskSpace> metric_from_json(const DiskSpace& s,
                                                 const nlohmann::json& j) {
  std::vector<double> angles, lams;
  for (const auto& e : j.at("samples")) {
    angles.push_back(e.at("angle").get<double>());
    lams.push_back(e.at("log_density").get<double>());
  }
  if (angles.size() < 2)
    throw std::invalid_argument("metric_from_json: too few samples");
  // piecewise-linear interpolation of the sampled log-density in angle
  auto lam = [angles, lams](const DiskBoundary& xi) {
    double best = 1e300, second = 1e300;
    std::size_t ib = 0, is = 0;
    for (std::size_t i = 0; i < angles.size(); ++i) {
      double d = std::fabs(wrap_angle(angles[i]) - wrap_angle(xi.angle));
      if (d > kPi) d = 2 * kPi - d;
      if (d < best) {
        second = best, is = ib;
        best = d, ib = i;
      } else if (d < second) {
        second = d, is = i;
      }
    }
    double w = best + second;
    if (w <= 0) return lams[ib];
    return (second * lams[ib] + best * lams[is]) / w;
  };
  auto m = MoebiusMetric<DiskSpace>::synthetic(
      s, lam, j.value("label", std::string("deserialized")));
  return m;
}

}  // namespace ccx
