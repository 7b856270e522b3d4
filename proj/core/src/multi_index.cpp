#include "multisum/multi_index.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace multisum {

namespace {

void validate_coords(const std::vector<Index>& coords) {
  if (coords.empty()) {
    throw std::invalid_argument("MultiIndex: rank must be >= 1");
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 1) {
      throw std::invalid_argument("MultiIndex: coordinate " + std::to_string(i + 1) +
                                  " is " + std::to_string(coords[i]) + ", must be >= 1");
    }
  }
}

}  // namespace

MultiIndex::MultiIndex(std::vector<Index> coords) : coords_(std::move(coords)) {
  validate_coords(coords_);
}

MultiIndex::MultiIndex(std::initializer_list<Index> coords) : coords_(coords) {
  validate_coords(coords_);
}

MultiIndex MultiIndex::ones(std::size_t rank) {
  return MultiIndex(std::vector<Index>(rank, 1));
}

Index MultiIndex::product() const {
  Index p = 1;
  for (Index c : coords_) {
    if (p > std::numeric_limits<Index>::max() / c) {
      throw std::overflow_error("MultiIndex::product overflows Index at " + to_string());
    }
    p *= c;
  }
  return p;
}

bool MultiIndex::dominated_by(const MultiIndex& other) const {
  if (rank() != other.rank()) {
    throw std::invalid_argument("MultiIndex::dominated_by: rank mismatch");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

MultiIndex MultiIndex::with(std::size_t axis, Index value) const {
  std::vector<Index> c = coords_;
  c.at(axis) = value;
  return MultiIndex(std::move(c));
}

void MultiIndex::set_coord(std::size_t axis, Index value) {
  coords_.at(axis) = value;
}

std::string MultiIndex::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ',';
    out << coords_[i];
  }
  out << ')';
  return out.str();
}

LatticeBox::LatticeBox(MultiIndex upper) : upper_(std::move(upper)) {
  strides_.assign(upper_.rank(), 1);
  // last axis fastest: stride of axis a is the product of extents after it
  for (std::size_t a = upper_.rank(); a-- > 1;) {
    strides_[a - 1] = strides_[a] * static_cast<std::size_t>(upper_[a]);
  }
}

std::size_t LatticeBox::point_count() const {
  return static_cast<std::size_t>(upper_.product());
}

std::size_t LatticeBox::linear_index(const MultiIndex& n) const {
  if (!contains(n)) {
    throw std::out_of_range("LatticeBox::linear_index: " + n.to_string() +
                            " outside box " + upper_.to_string());
  }
  std::size_t lin = 0;
  for (std::size_t a = 0; a < rank(); ++a) {
    lin += static_cast<std::size_t>(n[a] - 1) * strides_[a];
  }
  return lin;
}

MultiIndex LatticeBox::index_at(std::size_t linear) const {
  if (linear >= point_count()) {
    throw std::out_of_range("LatticeBox::index_at: offset " + std::to_string(linear) +
                            " outside box " + upper_.to_string());
  }
  std::vector<Index> c(rank());
  for (std::size_t a = 0; a < rank(); ++a) {
    c[a] = static_cast<Index>(linear / strides_[a]) + 1;
    linear %= strides_[a];
  }
  return MultiIndex(std::move(c));
}

bool LatticeBox::contains(const MultiIndex& n) const {
  if (n.rank() != rank()) return false;
  for (std::size_t a = 0; a < rank(); ++a) {
    if (n[a] < 1 || n[a] > upper_[a]) return false;
  }
  return true;
}

std::string to_string(ConvergenceMode mode) {
  return mode == ConvergenceMode::kMax ? "max" : "min";
}

}  // namespace multisum
