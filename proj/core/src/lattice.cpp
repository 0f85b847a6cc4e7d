#include "kacward/lattice.hpp"

#include <stdexcept>

namespace kacward {

Lattice::Lattice(int side) : side_(side) {
  if (side < 1) {
    throw std::invalid_argument("lattice side must be at least 1");
  }
  const int n = side_;
  bonds_.reserve(static_cast<std::size_t>(2 * n * (n - 1)));
  // horizontal bonds: id = row*(n-1) + col
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n - 1; ++x) {
      Bond b;
      b.id = y * (n - 1) + x;
      b.from = {x, y};
      b.to = {x + 1, y};
      b.horizontal = true;
      bonds_.push_back(b);
    }
  }
  // vertical bonds: id = n*(n-1) + row*n + col
  for (int y = 0; y < n - 1; ++y) {
    for (int x = 0; x < n; ++x) {
      Bond b;
      b.id = n * (n - 1) + y * n + x;
      b.from = {x, y};
      b.to = {x, y + 1};
      b.horizontal = false;
      bonds_.push_back(b);
    }
  }
}

int Lattice::bond_towards(int x, int y, int dx, int dy, int& dir) const {
  const int n = side_;
  if (dx == 1 && dy == 0) {
    if (x + 1 >= n || !contains(x, y)) return -1;
    dir = +1;
    return y * (n - 1) + x;
  }
  if (dx == -1 && dy == 0) {
    if (x - 1 < 0 || !contains(x, y)) return -1;
    dir = -1;
    return y * (n - 1) + (x - 1);
  }
  if (dx == 0 && dy == 1) {
    if (y + 1 >= n || !contains(x, y)) return -1;
    dir = +1;
    return n * (n - 1) + y * n + x;
  }
  if (dx == 0 && dy == -1) {
    if (y - 1 < 0 || !contains(x, y)) return -1;
    dir = -1;
    return n * (n - 1) + (y - 1) * n + x;
  }
  throw std::invalid_argument("step must be a unit lattice vector");
}

int Lattice::alignment_sum(SpinConfig sigma) const {
  int sum = 0;
  for (const Bond& b : bonds_) {
    const int i = site_index(b.from.x, b.from.y);
    const int j = site_index(b.to.x, b.to.y);
    const bool same = (((sigma >> i) ^ (sigma >> j)) & 1u) == 0;
    sum += same ? 1 : -1;
  }
  return sum;
}

double Lattice::config_energy(SpinConfig sigma, double coupling_j) const {
  return -coupling_j * static_cast<double>(alignment_sum(sigma));
}

int Lattice::valence(int x, int y) const {
  if (!contains(x, y)) throw std::out_of_range("site outside lattice");
  int v = 0;
  if (x > 0) ++v;
  if (x < side_ - 1) ++v;
  if (y > 0) ++v;
  if (y < side_ - 1) ++v;
  return v;
}

}  // namespace kacward
