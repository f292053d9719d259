#include "pdemlab/stencil.hpp"

#include "pdemlab/error.hpp"

namespace pdemlab {

const CentralStencil& central_stencil(int order) {
  static const CentralStencil second_order{{0.0, -0.5, 0.0, 0.5, 0.0}, {0.0, 1.0, -2.0, 1.0, 0.0}};
  static const CentralStencil fourth_order{{1.0 / 12.0, -8.0 / 12.0, 0.0, 8.0 / 12.0, -1.0 / 12.0},
                                           {-1.0 / 12.0, 16.0 / 12.0, -30.0 / 12.0, 16.0 / 12.0, -1.0 / 12.0}};
  switch (order) {
    case 2: return second_order;
    case 4: return fourth_order;
    default: throw Error(ErrorCode::InvalidArgument, "stencil order must be 2 or 4");
  }
}

namespace {

template <typename T>
std::vector<T> first_derivative(std::span<const T> f, double h, int order);

// interior of width 3 each side; the three outermost nodes fall back to order 4
template <typename T>
std::vector<T> first_derivative6(std::span<const T> f, double h) {
  constexpr double w[3] = {3.0 / 4.0, -3.0 / 20.0, 1.0 / 60.0};
  const std::size_t n = f.size();
  if (n < 9) throw Error(ErrorCode::InvalidArgument, "too few samples to differentiate");
  std::vector<T> d = first_derivative(f, h, 4);
  const double inv = 1.0 / h;
  for (std::size_t i = 3; i + 3 < n; ++i) {
    T acc{};
    for (std::size_t j = 1; j <= 3; ++j) acc += w[j - 1] * (f[i + j] - f[i - j]);
    d[i] = acc * inv;
  }
  return d;
}

template <typename T>
std::vector<T> first_derivative(std::span<const T> f, double h, int order) {
  if (order == 6) return first_derivative6(f, h);
  const auto& st = central_stencil(order);
  const std::size_t n = f.size();
  const std::size_t reach = order == 2 ? 1 : 2;
  if (n < 2 * reach + 3) throw Error(ErrorCode::InvalidArgument, "too few samples to differentiate");
  std::vector<T> d(n);
  const double inv = 1.0 / h;
  for (std::size_t i = reach; i + reach < n; ++i) {
    T acc{};
    for (int o = -2; o <= 2; ++o) {
      if (st.first[o + 2] != 0.0) acc += st.first[o + 2] * f[i + o];
    }
    d[i] = acc * inv;
  }
  if (order == 2) {
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * (0.5 * inv);
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * (0.5 * inv);
  } else {
    const double c = inv / 12.0;
    d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) * c;
    d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) * c;
    d[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]) * c;
    d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) * c;
  }
  return d;
}

template <typename T>
std::vector<T> second_derivative(std::span<const T> f, double h, int order) {
  const auto& st = central_stencil(order);
  const std::size_t n = f.size();
  const std::size_t reach = order == 2 ? 1 : 2;
  if (n < 2 * reach + 4) throw Error(ErrorCode::InvalidArgument, "too few samples to differentiate");
  std::vector<T> d(n);
  const double inv = 1.0 / (h * h);
  for (std::size_t i = reach; i + reach < n; ++i) {
    T acc{};
    for (int o = -2; o <= 2; ++o) {
      if (st.second[o + 2] != 0.0) acc += st.second[o + 2] * f[i + o];
    }
    d[i] = acc * inv;
  }
  if (order == 2) {
    d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) * inv;
    d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) * inv;
  } else {
    const double c = inv / 12.0;
    d[0] = (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] - 10.0 * f[5]) * c;
    d[1] = (10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] - 6.0 * f[4] + f[5]) * c;
    d[n - 1] = (45.0 * f[n - 1] - 154.0 * f[n - 2] + 214.0 * f[n - 3] - 156.0 * f[n - 4] + 61.0 * f[n - 5] -
                10.0 * f[n - 6]) *
               c;
    d[n - 2] =
        (10.0 * f[n - 1] - 15.0 * f[n - 2] - 4.0 * f[n - 3] + 14.0 * f[n - 4] - 6.0 * f[n - 5] + f[n - 6]) * c;
  }
  return d;
}

}  // namespace

std::vector<double> differentiate(std::span<const double> f, double h, int order) {
  return first_derivative(f, h, order);
}
std::vector<std::complex<double>> differentiate(std::span<const std::complex<double>> f, double h, int order) {
  return first_derivative(f, h, order);
}
std::vector<double> differentiate2(std::span<const double> f, double h, int order) {
  return second_derivative(f, h, order);
}
std::vector<std::complex<double>> differentiate2(std::span<const std::complex<double>> f, double h, int order) {
  return second_derivative(f, h, order);
}

}  // namespace pdemlab
