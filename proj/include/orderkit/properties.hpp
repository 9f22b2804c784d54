#pragma once

#include <cstddef>

#include "orderkit/lattice.hpp"
#include "orderkit/poset.hpp"
#include "orderkit/relations.hpp"
#include "orderkit/verdict.hpp"

namespace orderkit {

// Every failing verdict reports the first failure in canonical order:
// elements by index, subsets shortlex.

/// Each x is the directed sup of its approximants. `mode` selects how the
/// way-below relation is computed.
Verdict is_continuous(const FinitePoset& p, Mode mode = Mode::fast);

/// Each fin(x) is directed under reverse inclusion and intersects to up(x).
Verdict is_quasicontinuous(const FinitePoset& p);

/// For every x and directed D with sup D >= x: x lies in the Scott closure
/// of down(x) & down(D). Directed sets are always enumerated; `mode` selects
/// the closure computation.
Verdict is_meet_continuous(const FinitePoset& p, Mode mode = Mode::fast);

/// x meet sup(D) = sup{x meet d} for every directed D.
Verdict is_meet_continuous_algebraic(const FiniteLattice& l);

/// x join inf(S) = inf{x join s} for all x and S. Decided on pairs S = {s, t}:
/// the empty and singleton cases always hold and larger S follow by folding,
/// so the first failure for a given x is always a pair.
Verdict is_join_continuous(const FiniteLattice& l);

/// The same law checked literally for every S (2^n, capped).
Verdict join_continuity_oracle(const FiniteLattice& l);

/// Join continuity of the order dual: x meet sup(S) = sup{x meet s}.
Verdict is_frame(const FiniteLattice& l);

/// y = sup{x | x prec y} for every y.
Verdict is_hypercontinuous(const FiniteLattice& l, Mode mode = Mode::fast);

/// y = sup{x | x <| y} for every y.
Verdict is_prime_continuous(const FiniteLattice& l, Mode mode = Mode::fast);

/// x meet (y join z) = (x meet y) join (x meet z) for all triples.
Verdict is_distributive(const FiniteLattice& l);

/// The complete distributive law for every family indexed by at most
/// `family_bound` subsets of the carrier (repetition allowed), with all choice
/// functions enumerated.
Verdict is_completely_distributive_oracle(const FiniteLattice& l, std::size_t family_bound = 3);

/// sup{inf U | x in U, U Scott open}.
Element supinf_continuous_rhs(const FiniteLattice& l, Element x);
/// sup{inf(L \ down M) | M a subset, x not in down M}.
Element supinf_hyper_rhs(const FiniteLattice& l, Element x);
/// sup{inf(L \ down y) | x not in down y}.
Element supinf_prime_rhs(const FiniteLattice& l, Element x);

}  // namespace orderkit
