#include "kacward/hightemp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

namespace kacward {

int brute_force_size_limit() {
  if (const char* env = std::getenv("KACWARD_BRUTE_MAX_N")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 5;
}

double partition_brute_force(const Lattice& lattice, double coupling_k,
                             int size_guard) {
  const int n = lattice.side();
  const int limit = size_guard > 0 ? size_guard : brute_force_size_limit();
  if (n > limit) {
    throw IntractableSizeError("intractable size: N=" + std::to_string(n) +
                               " exceeds brute-force guard " +
                               std::to_string(limit));
  }
  const int sites = lattice.site_count();
  const std::uint64_t configs = std::uint64_t{1} << sites;

  // Kahan summation keeps the 1e-12 cross-check tolerance honest at N=5.
  double sum = 0.0;
  double comp = 0.0;
  for (std::uint64_t sigma = 0; sigma < configs; ++sigma) {
    const double w = std::exp(coupling_k *
                              static_cast<double>(lattice.alignment_sum(sigma)));
    const double y = w - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

namespace detail {

namespace {

// Per-site incidence masks over bond ids.
std::vector<std::uint64_t> incidence_masks(const Lattice& lattice) {
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(lattice.site_count()), 0);
  for (const Bond& b : lattice.bonds()) {
    masks[static_cast<std::size_t>(lattice.site_index(b.from.x, b.from.y))] |=
        std::uint64_t{1} << b.id;
    masks[static_cast<std::size_t>(lattice.site_index(b.to.x, b.to.y))] |=
        std::uint64_t{1} << b.id;
  }
  return masks;
}

}  // namespace

std::vector<EvenSubgraph> even_subgraphs_subset_scan(const Lattice& lattice) {
  const int x = lattice.bond_count();
  if (x > 24) {
    throw IntractableSizeError("intractable size: subset scan over 2^" +
                               std::to_string(x) + " bond subsets");
  }
  const auto masks = incidence_masks(lattice);
  std::vector<EvenSubgraph> result;
  const std::uint64_t subsets = std::uint64_t{1} << x;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    bool even = true;
    for (const std::uint64_t site_mask : masks) {
      if (std::popcount(mask & site_mask) % 2 != 0) {
        even = false;
        break;
      }
    }
    if (even) {
      result.push_back({mask, std::popcount(mask)});
    }
  }
  return result;
}

std::vector<EvenSubgraph> even_subgraphs_cycle_space(const Lattice& lattice) {
  const int n = lattice.side();
  const int faces = (n - 1) * (n - 1);
  if (faces > 26) {
    throw IntractableSizeError("intractable size: cycle space of dimension " +
                               std::to_string(faces));
  }
  if (faces == 0) return {};

  // Boundary cycle of each unit face, as a bond bitmask.
  std::vector<std::uint64_t> face_cycles;
  face_cycles.reserve(static_cast<std::size_t>(faces));
  for (int fy = 0; fy < n - 1; ++fy) {
    for (int fx = 0; fx < n - 1; ++fx) {
      std::uint64_t c = 0;
      c |= std::uint64_t{1} << (fy * (n - 1) + fx);            // bottom
      c |= std::uint64_t{1} << ((fy + 1) * (n - 1) + fx);      // top
      c |= std::uint64_t{1} << (n * (n - 1) + fy * n + fx);    // left
      c |= std::uint64_t{1} << (n * (n - 1) + fy * n + fx + 1);  // right
      face_cycles.push_back(c);
    }
  }

  // Every nonzero combination of independent basis cycles is distinct, so the
  // Gray-code walk visits each nonempty even subgraph exactly once.
  std::vector<EvenSubgraph> result;
  result.reserve((std::size_t{1} << faces) - 1);
  std::uint64_t current = 0;
  std::uint64_t gray_prev = 0;
  const std::uint64_t combos = std::uint64_t{1} << faces;
  for (std::uint64_t i = 1; i < combos; ++i) {
    const std::uint64_t gray = i ^ (i >> 1);
    const std::uint64_t flipped = gray ^ gray_prev;
    gray_prev = gray;
    current ^= face_cycles[static_cast<std::size_t>(std::countr_zero(flipped))];
    result.push_back({current, std::popcount(current)});
  }
  return result;
}

}  // namespace detail

std::vector<EvenSubgraph> enumerate_even_subgraphs(const Lattice& lattice) {
  if (lattice.bond_count() <= 24) {
    return detail::even_subgraphs_subset_scan(lattice);
  }
  return detail::even_subgraphs_cycle_space(lattice);
}

IntPolynomial graph_generating_polynomial(const Lattice& lattice) {
  IntPolynomial poly = IntPolynomial::one();
  for (const EvenSubgraph& g : enumerate_even_subgraphs(lattice)) {
    poly.add_term(g.size, 1);
  }
  return poly;
}

double partition_from_graphs(const Lattice& lattice, double coupling_k) {
  const int n = lattice.side();
  const double u = std::tanh(coupling_k);
  const IntPolynomial poly = graph_generating_polynomial(lattice);
  const double prefactor =
      std::pow(2.0, n * n) * std::pow(1.0 - u * u, -(n * (n - 1)));
  return prefactor * poly.evaluate(u);
}

}  // namespace kacward
