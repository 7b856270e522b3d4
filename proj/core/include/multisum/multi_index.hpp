#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace multisum {

using Index = std::int64_t;

/// A point of the positive integer lattice N^r.  Every coordinate is >= 1.
/// |n| denotes the product of the coordinates.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<Index> coords);
  MultiIndex(std::initializer_list<Index> coords);

  static MultiIndex ones(std::size_t rank);

  std::size_t rank() const { return coords_.size(); }
  Index operator[](std::size_t axis) const { return coords_[axis]; }
  const std::vector<Index>& coords() const { return coords_; }

  /// |n| = n_1 * ... * n_r.  Throws std::overflow_error if the product does
  /// not fit in Index.
  Index product() const;

  /// Coordinatewise partial order k <= n.
  bool dominated_by(const MultiIndex& other) const;

  /// Returns a copy with coords[axis] replaced by value.
  MultiIndex with(std::size_t axis, Index value) const;

  /// In-place coordinate update (value must stay >= 1); used by iteration
  /// helpers to avoid reallocating.
  void set_coord(std::size_t axis, Index value);

  bool operator==(const MultiIndex& other) const { return coords_ == other.coords_; }
  bool operator!=(const MultiIndex& other) const { return !(*this == other); }

  std::string to_string() const;  // e.g. "(3,4)"

 private:
  std::vector<Index> coords_;
};

/// The lattice rectangle {k in N^r : k <= upper}.  Linearization is row-major
/// with the last axis fastest; all CSV dumps follow this order.
class LatticeBox {
 public:
  LatticeBox() = default;
  explicit LatticeBox(MultiIndex upper);

  std::size_t rank() const { return upper_.rank(); }
  const MultiIndex& upper() const { return upper_; }
  Index extent(std::size_t axis) const { return upper_[axis]; }

  /// Number of lattice points, |upper|.
  std::size_t point_count() const;

  std::size_t linear_index(const MultiIndex& n) const;
  MultiIndex index_at(std::size_t linear) const;
  bool contains(const MultiIndex& n) const;

  /// Stride of one step along `axis` in the linearization.
  std::size_t stride(std::size_t axis) const { return strides_[axis]; }

  bool operator==(const LatticeBox& other) const { return upper_ == other.upper_; }

 private:
  MultiIndex upper_;
  std::vector<std::size_t> strides_;
};

/// Visits every point of the box in linearization order (last axis fastest).
/// fn receives (linear offset, MultiIndex).
template <typename Fn>
void for_each_index(const LatticeBox& box, Fn&& fn) {
  const std::size_t r = box.rank();
  if (r == 0) return;
  MultiIndex n = MultiIndex::ones(r);
  const std::size_t count = box.point_count();
  for (std::size_t lin = 0; lin < count; ++lin) {
    fn(lin, const_cast<const MultiIndex&>(n));
    // odometer increment, last axis fastest
    std::size_t axis = r;
    while (axis > 0) {
      --axis;
      if (n[axis] < box.extent(axis)) {
        n.set_coord(axis, n[axis] + 1);
        break;
      }
      n.set_coord(axis, 1);
    }
  }
}

/// Convergence regime distinguished throughout: |n| -> infinity
/// (max-convergence) versus min(n_i) -> infinity (min-convergence).
enum class ConvergenceMode { kMax, kMin };

std::string to_string(ConvergenceMode mode);

}  // namespace multisum
