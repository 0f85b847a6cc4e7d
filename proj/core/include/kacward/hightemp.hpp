#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kacward/lattice.hpp"
#include "kacward/polynomial.hpp"

namespace kacward {

/// Thrown when an exhaustive computation is asked for a size it cannot
/// handle (brute-force spin sums, subgraph enumeration).
class IntractableSizeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Nonempty bond subset in which every touched site has even valence.
/// `bonds` is a bitmask over bond ids, `size` its popcount.
struct EvenSubgraph {
  std::uint64_t bonds{};
  int size{};
};

/// Default brute-force size guard, overridable via KACWARD_BRUTE_MAX_N.
int brute_force_size_limit();

/// Z = sum over all 2^(N^2) spin configurations of exp(K * sum sigma_i sigma_j),
/// accumulated with compensated summation in a fixed configuration order.
/// `size_guard` <= 0 means "use brute_force_size_limit()".
double partition_brute_force(const Lattice& lattice, double coupling_k,
                             int size_guard = 0);

/// All nonempty even subgraphs, each exactly once.
/// Direct 2^x subset scan for x <= 24, face-cycle span otherwise.
std::vector<EvenSubgraph> enumerate_even_subgraphs(const Lattice& lattice);

/// 1 + sum over even subgraphs of u^L, as an exact integer polynomial.
IntPolynomial graph_generating_polynomial(const Lattice& lattice);

/// Z = 2^(N^2) (1-u^2)^(-N(N-1)) * P(u) with u = tanh K.
double partition_from_graphs(const Lattice& lattice, double coupling_k);

namespace detail {
// Both enumeration strategies, exposed so tests can cross-check them.
std::vector<EvenSubgraph> even_subgraphs_subset_scan(const Lattice& lattice);
std::vector<EvenSubgraph> even_subgraphs_cycle_space(const Lattice& lattice);
}  // namespace detail

}  // namespace kacward
