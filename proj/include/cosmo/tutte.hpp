// Tutte polynomial, computed two independent ways, and the specialization
// counting acyclic edge subsets.
#pragma once

#include "cosmo/limits.hpp"
#include "cosmo/multigraph.hpp"
#include "cosmo/polynomial.hpp"

namespace cosmo {

// Direct subset expansion: sum over all H of
// (x-1)^(c(H)-c(E)) (y-1)^(c(H)+|H|-|V|).  Exponential; limited to
// limits.max_subset_edges edges.
BivarPoly tutte_subset_expansion(const Multigraph& g, const EnumLimits& limits = {});

// Deletion-contraction recursion, memoized on canonical_key.  Pivot is the
// lowest-index edge that is neither a loop nor a bridge; when none is left
// the value is x^(#bridges) y^(#loops).
BivarPoly tutte_delcon(const Multigraph& g, const EnumLimits& limits = {});

// T_G(2, 1), the number of acyclic edge subsets.
Int count_acyclic_via_tutte(const Multigraph& g, const EnumLimits& limits = {});

}  // namespace cosmo
