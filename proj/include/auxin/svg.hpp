#pragma once

#include "auxin/atlas.hpp"
#include "auxin/continuation.hpp"
#include "auxin/integrate.hpp"

#include <string>
#include <vector>

namespace auxin::svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

std::string line_plot(const std::vector<Series>& series, const std::string& x_label, const std::string& y_label,
                      const std::string& title = {});

/// a_probe against lambda. Stable stretches solid, unstable dotted; every
/// branch point is one polyline vertex; events drawn as dots.
std::string bifurcation_diagram(const std::vector<Branch>& branches, int probe_cell, const std::string& title = {});

// Stable nodes gray, unstable white, invalid hatched red; optional boundary samples.
std::string stability_heatmap(const StabilityGrid& grid, const BoundaryTypeCurve* boundary = nullptr);

// a_i(t) as a cell-by-time color map.
std::string space_time(const Trajectory& traj, const std::string& title = {});

}  // namespace auxin::svg
