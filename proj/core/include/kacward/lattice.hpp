#pragma once

#include <cstdint>
#include <vector>

namespace kacward {

struct Site {
  int x{};
  int y{};
};

/// Oriented, uniquely numbered bond. Horizontal bonds point +x, vertical
/// bonds point +y; the orientation never changes after construction.
struct Bond {
  int id{};
  Site from{};
  Site to{};
  bool horizontal{};
};

/// Spin configuration of an N x N lattice packed into a 64-bit word.
/// Bit k corresponds to site (k % N, k / N); bit value 1 means spin +1.
using SpinConfig = std::uint64_t;

/// Finite planar N x N square lattice with open boundaries.
///
/// Bond numbering: horizontal bonds first in row-major order
/// (id = row*(N-1) + col), then vertical bonds (id = N*(N-1) + row*N + col).
/// Immutable after construction.
class Lattice {
public:
  explicit Lattice(int side);

  int side() const { return side_; }
  int site_count() const { return side_ * side_; }
  int bond_count() const { return static_cast<int>(bonds_.size()); }

  const std::vector<Bond>& bonds() const { return bonds_; }
  const Bond& bond(int id) const { return bonds_[static_cast<std::size_t>(id)]; }

  int site_index(int x, int y) const { return y * side_ + x; }
  bool contains(int x, int y) const {
    return x >= 0 && x < side_ && y >= 0 && y < side_;
  }

  /// Bond reached by stepping from (x,y) by one of the four unit vectors.
  /// Returns -1 if the step leaves the lattice. `dir` is set to +1 when the
  /// step follows the bond orientation and -1 when it runs against it.
  int bond_towards(int x, int y, int dx, int dy, int& dir) const;

  /// Sum of sigma_i * sigma_j over all bonds.
  int alignment_sum(SpinConfig sigma) const;

  /// E = -J * sum over nearest-neighbour bonds of sigma_i sigma_j.
  double config_energy(SpinConfig sigma, double coupling_j) const;

  /// Valence of a site (2, 3 or 4 depending on corner/edge/interior).
  int valence(int x, int y) const;

private:
  int side_;
  std::vector<Bond> bonds_;
};

}  // namespace kacward
