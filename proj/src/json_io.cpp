#include "cosmo/json_io.hpp"

namespace cosmo {

using nlohmann::json;

json poly_to_json(const Poly& p) {
    json coeffs = json::array();
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff(i).get_str());
    return coeffs;
}

Poly poly_from_json(const json& j) {
    std::vector<Int> coeffs;
    for (const auto& entry : j) coeffs.emplace_back(entry.get<std::string>());
    return Poly(std::move(coeffs));
}

json bivar_to_json(const BivarPoly& p) {
    json terms = json::array();
    for (const auto& [key, c] : p.coeffs())
        terms.push_back(json::array({key.first, key.second, c.get_str()}));
    return terms;
}

namespace {

json cell_labels(const Triangulation& t, const Simplex& cell) {
    json labels = json::array();
    for (const int pid : cell) labels.push_back(t.points[static_cast<std::size_t>(pid)].label());
    return labels;
}

json dual_edges_json(const Triangulation& t) {
    json edges = json::array();
    for (const auto& [a, b] : t.dual_edges) edges.push_back(json::array({a, b}));
    return edges;
}

}  // namespace

json triangulation_to_json(const Triangulation& t) {
    json cells = json::array();
    for (const Simplex& cell : t.cells) cells.push_back(cell_labels(t, cell));
    return json{{"cells", std::move(cells)},
                {"h_vector", poly_to_json(h_vector_from_triangulation(t))},
                {"dual_edges", dual_edges_json(t)}};
}

json halfopen_to_json(const Triangulation& t, const HalfOpenDecomposition& h) {
    json cells = json::array();
    for (const HalfOpenCell& hoc : h.cells) {
        const Simplex& cell = t.cells[static_cast<std::size_t>(hoc.cell)];
        json removed = json::array();
        for (const int apex : hoc.removed_apexes) {
            Simplex facet;
            for (const int pid : cell)
                if (pid != apex) facet.push_back(pid);
            removed.push_back(cell_labels(t, facet));
        }
        cells.push_back(json{{"cell", cell_labels(t, cell)}, {"removed", std::move(removed)}});
    }
    json q_star = json::array();
    for (const Rat& v : h.visibility_point) q_star.push_back(v.get_str());
    return json{{"cells", std::move(cells)},
                {"h_vector", poly_to_json(h_vector_from_triangulation(t))},
                {"dual_edges", dual_edges_json(t)},
                {"visibility_point", std::move(q_star)}};
}

}  // namespace cosmo
