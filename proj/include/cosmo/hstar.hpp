// The four triangulation-independent computations of the h*-polynomial of a
// cosmological polytope, closed forms for named graph families, and volume.
#pragma once

#include "cosmo/limits.hpp"
#include "cosmo/multigraph.hpp"
#include "cosmo/polynomial.hpp"
#include "cosmo/tutte.hpp"

namespace cosmo {

enum class HstarMethod { acyclic, delcon, tutte, moebius, triangulation };

const char* to_string(HstarMethod m);

struct HstarReport {
    Poly polynomial;
    HstarMethod method = HstarMethod::acyclic;
    Int volume;        // polynomial evaluated at 1
    int degree_bound;  // m, the edge count
};

// Sum over acyclic H of (2z)^|H| (1+z)^(m-|H|).
Poly hstar_acyclic(const Multigraph& g, const EnumLimits& limits = {});

// Deletion-contraction: (1+z) h*(G\e) + 2z h*(G/e) for a non-loop non-bridge
// pivot; loops factor (1+z), bridges factor (1+3z); edgeless graphs give 1.
Poly hstar_delcon(const Multigraph& g, const EnumLimits& limits = {});

// (1+z)^(m-r) (2z)^r T_G((1+3z)/(2z), 1) with r the graph rank, expanded
// exactly: sum_k c_k (1+3z)^k (2z)^(r-k) for T(x,1) = sum_k c_k x^k.
Poly hstar_tutte(const Multigraph& g, const EnumLimits& limits = {});

// Moebius inversion over the inclusion poset of bridge-free edge sets:
// sum_H mu(H) (2z)^|H| (1+3z)^(m-|H|).
Poly hstar_moebius(const Multigraph& g, const EnumLimits& limits = {});

// Exposed for tests: mu values keyed by subset, mu(0) = 1,
// mu(H) = -sum_{H' strictly below H} mu(H').
std::vector<std::pair<EdgeSubset, Int>> moebius_function(const Multigraph& g,
                                                         const EnumLimits& limits = {});

Poly closed_form_multitree(const std::vector<int>& multiplicities);
Poly closed_form_multicycle(const std::vector<int>& multiplicities);
Poly closed_form_theta(int a, int b, int c);
Poly closed_form_k2n(int n);

// Concrete graphs realizing the families, for cross-checks.
Multigraph multitree_graph(const std::vector<int>& multiplicities);
Multigraph multicycle_graph(const std::vector<int>& multiplicities);
Multigraph theta_graph(int a, int b, int c);
Multigraph k2n_graph(int n);

// Normalized volume 2^m T_G(2, 1).
Int volume(const Multigraph& g, const EnumLimits& limits = {});

// Formula-pipeline report (method != triangulation).
HstarReport hstar_report(const Multigraph& g, HstarMethod method, const EnumLimits& limits = {});

}  // namespace cosmo
