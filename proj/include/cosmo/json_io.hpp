// JSON renderings of polynomials, triangulations and half-open
// decompositions.  Big integers are rendered as decimal strings.
#pragma once

#include <json.hpp>

#include "cosmo/halfopen.hpp"
#include "cosmo/polynomial.hpp"
#include "cosmo/polytope.hpp"

namespace cosmo {

// Array of decimal coefficient strings, index = degree: ["1","6","5"].
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

// Array of [x-degree, y-degree, "coefficient"] triples, sorted.
nlohmann::json bivar_to_json(const BivarPoly& p);

// { "cells": [["v:0", ...], ...], "h_vector": [...], "dual_edges": [[i,j], ...] }
nlohmann::json triangulation_to_json(const Triangulation& t);

// Triangulation schema with each cell as { "cell": [...], "removed": [[...], ...] },
// plus the visibility point.
nlohmann::json halfopen_to_json(const Triangulation& t, const HalfOpenDecomposition& h);

}  // namespace cosmo
