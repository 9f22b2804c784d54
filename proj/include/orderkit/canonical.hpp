#pragma once

#include <string>
#include <vector>

#include "orderkit/poset.hpp"

namespace orderkit {

/// Result of canonical labeling: `order[k]` is the original index placed at
/// canonical position k; `code` is the permuted relation read block by block
/// (for each position k, the comparabilities between k and every earlier
/// position), as '0'/'1' characters.
struct CanonicalLabeling {
  std::vector<Element> order;
  std::string code;
};

/// Isomorphism-invariant element colors from iterated refinement of
/// (down-set size, up-set size, cover degrees) by neighbouring colors.
/// Colors are dense ranks; a smaller color sorts earlier in canonical order.
std::vector<std::size_t> refined_colors(const FinitePoset& p);

/// Lexicographically least code over color-respecting permutations; among
/// permutations reaching it, the lexicographically least `order`.
CanonicalLabeling canonical_labeling(const FinitePoset& p);

/// The code alone; equal codes (at equal size) iff isomorphic.
std::string canonical_code(const FinitePoset& p);

/// `p` permuted into canonical order with labels replaced by "0".."n-1".
/// Equal for isomorphic inputs; idempotent.
FinitePoset canonical_form(const FinitePoset& p);

/// `p` permuted into canonical order, keeping its labels.
FinitePoset canonical_reorder(const FinitePoset& p);

bool is_isomorphic(const FinitePoset& a, const FinitePoset& b);

/// Total order on posets: by size, then by canonical code.
bool canonical_less(const FinitePoset& a, const FinitePoset& b);

}  // namespace orderkit
