#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace pdemlab {

using RealField = std::vector<double>;
using ComplexField = std::vector<std::complex<double>>;

/// Uniform grid on [-L, L] with an odd number of nodes, so x = 0 is a node.
/// Node coordinates are generated as (k - centre) * h which makes the grid
/// exactly antisymmetric in floating point.
class GridSpec {
 public:
  GridSpec(double half_width, std::size_t point_count);

  double half_width() const noexcept { return half_width_; }
  std::size_t size() const noexcept { return point_count_; }
  double spacing() const noexcept { return spacing_; }
  std::size_t centre() const noexcept { return point_count_ / 2; }

  double x(std::size_t k) const noexcept {
    return (static_cast<double>(k) - static_cast<double>(centre())) * spacing_;
  }
  RealField nodes() const;

  /// Same grid, twice the resolution (h -> h/2).
  GridSpec refined() const { return GridSpec(half_width_, 2 * point_count_ - 1); }

  bool operator==(const GridSpec& other) const noexcept {
    return half_width_ == other.half_width_ && point_count_ == other.point_count_;
  }

 private:
  double half_width_;
  std::size_t point_count_;
  double spacing_;
};

inline constexpr double kDefaultHalfWidth = 8.0;
inline constexpr std::size_t kDefaultPointCount = 2001;

inline GridSpec default_grid() { return GridSpec(kDefaultHalfWidth, kDefaultPointCount); }

/// Throws GridMismatch when a sampled field does not live on `grid`.
void require_on_grid(std::size_t sample_count, const GridSpec& grid, const char* what);

/// Samples a callable at every node.
template <typename F>
RealField sample(const GridSpec& grid, F&& f) {
  RealField out(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) out[k] = f(grid.x(k));
  return out;
}

}  // namespace pdemlab
