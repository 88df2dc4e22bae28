#pragma once

// Serre functor and Auslander-Reiten translate on twisted complexes.
//
// The Serre functor is the derived Nakayama functor: each projective P_v is
// sent to the injective I_v and the resulting complex of injective modules
// is replaced by a minimal complex of projectives.  The replacement is built
// degree by degree from the top, choosing generators for the cocycles of the
// mapping cone modulo its boundaries and radical.

#include <gentle/twisted.hpp>

namespace gentle {

constexpr int kDefaultCutoff = 64;

/// Throws Error(GradedSerreUnsupported) for algebras with nonzero arrow
/// degrees and Error(InfiniteGlobalDimension) when the replacement needs more
/// than `cutoff` degrees below the input.
TwistedComplex serre(const TwistedComplex& x, int cutoff = kDefaultCutoff);

/// tau = S[-1], i.e. shift(serre(x), 1) in positional terms.
TwistedComplex tau(const TwistedComplex& x, int cutoff = kDefaultCutoff);

}  // namespace gentle
