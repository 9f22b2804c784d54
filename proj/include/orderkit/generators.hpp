#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orderkit/lattice.hpp"
#include "orderkit/poset.hpp"

namespace orderkit {

enum class UniverseKind { posets, lattices, random };

/// Parameters of a generated universe.
struct GenSpec {
  std::size_t n = 1;
  UniverseKind kind = UniverseKind::posets;
  std::uint64_t seed = 0;
  double density = 0.5;
};

/// chain(k), antichain(k), boolean(k), M3, N5. Throws UnknownName.
FinitePoset named(std::string_view name);

/// Name of a named structure isomorphic to `p` (chain, antichain, boolean,
/// M3, N5), if there is one.
std::optional<std::string> recognize(const FinitePoset& p);

/// One representative per isomorphism class of n-element posets, in
/// canonical order (by canonical code). Elements are labelled "0".."n-1" in
/// canonical position order; the k-th poset is named "P<n>.<k>".
/// Throws SizeLimit when n > limits().enumerate_max_n.
std::vector<FinitePoset> enumerate_posets(std::size_t n);

/// The lattices among enumerate_posets(n), named "L<n>.<k>".
std::vector<FiniteLattice> enumerate_lattices(std::size_t n);

/// Random poset on a shuffled linear extension: each pair (i before j) is
/// related with probability `density`, then transitively closed. A pure
/// function of (n, seed, density).
FinitePoset random_poset(const GenSpec& spec);

}  // namespace orderkit
