#include "pdemlab/grid.hpp"

#include <cmath>
#include <string>

#include "pdemlab/error.hpp"

namespace pdemlab {

GridSpec::GridSpec(double half_width, std::size_t point_count)
    : half_width_(half_width), point_count_(point_count), spacing_(0.0) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw Error(ErrorCode::InvalidArgument, "grid half width must be positive and finite");
  }
  if (point_count < 3 || point_count % 2 == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "grid point count must be odd and >= 3, got " + std::to_string(point_count));
  }
  spacing_ = 2.0 * half_width / static_cast<double>(point_count - 1);
}

RealField GridSpec::nodes() const {
  RealField out(point_count_);
  for (std::size_t k = 0; k < point_count_; ++k) out[k] = x(k);
  return out;
}

void require_on_grid(std::size_t sample_count, const GridSpec& grid, const char* what) {
  if (sample_count != grid.size()) {
    throw Error(ErrorCode::GridMismatch, std::string(what) + " has " + std::to_string(sample_count) +
                                             " samples, grid has " + std::to_string(grid.size()));
  }
}

}  // namespace pdemlab
