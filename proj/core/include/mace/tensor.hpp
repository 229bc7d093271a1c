#pragma once

#include <Eigen/Dense>
#include <vector>

namespace mace {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using BoolGrid = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

// Dense H x W x D tensor, stored site-major / channel-minor:
// data[(h * width + w) * depth + d]. Used for conv feature maps and
// images (depth = channels).
struct Tensor3 {
  int height = 0;
  int width = 0;
  int depth = 0;
  std::vector<double> data;

  Tensor3() = default;
  Tensor3(int h, int w, int d)
      : height(h), width(w), depth(d),
        data(static_cast<std::size_t>(h) * w * d, 0.0) {}

  double& at(int h, int w, int d) {
    return data[(static_cast<std::size_t>(h) * width + w) * depth + d];
  }
  double at(int h, int w, int d) const {
    return data[(static_cast<std::size_t>(h) * width + w) * depth + d];
  }

  std::size_t size() const { return data.size(); }
  int sites() const { return height * width; }

  // (H*W) x D view, row s = h * W + w holds the channel vector of site s.
  // The storage order makes this a plain row-major map.
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
  sites_by_channels() const {
    return {data.data(), sites(), depth};
  }

  bool same_shape(const Tensor3& other) const {
    return height == other.height && width == other.width &&
           depth == other.depth;
  }
};

// Flattened H x W grid with site index s = h * W + w, matching the
// Tensor3 site order. Column vectors of this layout are what the
// embedding nets consume.
inline Vector flatten_grid(const Matrix& grid) {
  Vector out(grid.size());
  for (int h = 0; h < grid.rows(); ++h)
    for (int w = 0; w < grid.cols(); ++w)
      out(h * grid.cols() + w) = grid(h, w);
  return out;
}

inline Matrix unflatten_grid(const Eigen::Ref<const Vector>& values, int height,
                             int width) {
  Matrix grid(height, width);
  for (int h = 0; h < height; ++h)
    for (int w = 0; w < width; ++w) grid(h, w) = values(h * width + w);
  return grid;
}

}  // namespace mace
