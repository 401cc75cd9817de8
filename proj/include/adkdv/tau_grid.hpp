#pragma once

#include <vector>

#include "adkdv/tau.hpp"

namespace adkdv {

// Batched float-mode tau and vertex-weight evaluation over label grids.
// Entries are independent, so the parallel kernels split the loop over
// labels; the serial versions are the reference the parallel ones are
// tested against (results must match bitwise).

std::vector<double> tau_grid_serial(const TauFunction<double>& tf,
                                    const std::vector<ChamberLabel>& labels);
std::vector<double> tau_grid_parallel(const TauFunction<double>& tf,
                                      const std::vector<ChamberLabel>& labels);

struct VertexQuery {
  ChamberLabel below;
  int upper_class;  // 1..n
  int lower_class;  // 1..n
};

std::vector<double> vertex_grid_serial(const TauFunction<double>& tf,
                                       const std::vector<VertexQuery>& queries);
std::vector<double> vertex_grid_parallel(const TauFunction<double>& tf,
                                         const std::vector<VertexQuery>& queries);

// True when the library was built with OpenMP enabled.
bool parallel_enabled();

}  // namespace adkdv
