#include "wforge/immersion.hpp"

#include <cmath>
#include <numbers>
#include <queue>
#include <unordered_map>

namespace wf {

std::vector<CVec3> null_curve(const WeierstrassData& d, cplx basepoint,
                              const std::vector<cplx>& targets, double tol, Exec exec) {
    auto coeff = [&d](cplx z) { return d.omega(z); };
    std::vector<CVec3> out(targets.size());
    for_each_index(exec, static_cast<std::ptrdiff_t>(targets.size()), [&](std::ptrdiff_t i) {
        if (targets[i] == basepoint) {
            out[i] = CVec3{};
            return;
        }
        Route route = route_between(d.domain(), basepoint, targets[i]);
        out[i] = integrate_route(coeff, route, tol);
    });
    return out;
}

std::vector<Vec3> immerse(const WeierstrassData& d, cplx basepoint, Vec3 base_value,
                          const std::vector<cplx>& targets, double tol, Exec exec) {
    std::vector<CVec3> f = null_curve(d, basepoint, targets, tol, exec);
    std::vector<Vec3> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = base_value + real_part(f[i]);
    return out;
}

GridImmersion immerse_grid(const WeierstrassData& d, const ParamGrid& grid, cplx basepoint,
                           Vec3 base_value, double tol, Exec exec) {
    const int nverts = static_cast<int>(grid.vertices.size());
    const int nedges = static_cast<int>(grid.edges.size());
    auto coeff = [&d](cplx z) { return d.omega(z); };

    // One quadrature per lattice edge; edges are short segments that stay
    // clear of the punctures by grid construction.
    std::vector<CVec3> edge_int(nedges);
    for_each_index(exec, nedges, [&](std::ptrdiff_t e) {
        cplx a = grid.vertices[grid.edges[e].a];
        cplx b = grid.vertices[grid.edges[e].b];
        edge_int[e] = integrate_form(coeff, PathSpec::polyline({a, b}), tol);
    });

    // adjacency
    std::vector<std::vector<std::pair<int, int>>> adj(nverts);  // (neighbor, edge index)
    for (int e = 0; e < nedges; ++e) {
        adj[grid.edges[e].a].push_back({grid.edges[e].b, e});
        adj[grid.edges[e].b].push_back({grid.edges[e].a, e});
    }

    GridImmersion out;
    out.values.assign(nverts, Vec3{});
    std::vector<char> seen(nverts, 0);

    // Breadth-first sweep per connected component, each rooted at its vertex
    // nearest the basepoint and anchored by one quadrature from the
    // basepoint itself.
    for (int seed = 0; seed < nverts; ++seed) {
        if (seen[seed]) continue;
        // collect the component
        std::vector<int> comp;
        {
            std::queue<int> q;
            q.push(seed);
            seen[seed] = 1;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                comp.push_back(v);
                for (auto [w, e] : adj[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        q.push(w);
                    }
            }
        }
        int root = comp.front();
        for (int v : comp)
            if (std::abs(grid.vertices[v] - basepoint) < std::abs(grid.vertices[root] - basepoint))
                root = v;

        Vec3 root_value = base_value;
        if (grid.vertices[root] != basepoint) {
            Route route = route_between(d.domain(), basepoint, grid.vertices[root]);
            root_value += real_part(integrate_route(coeff, route, tol));
        }
        out.values[root] = root_value;

        std::vector<char> placed(nverts, 0);
        placed[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, e] : adj[v]) {
                if (placed[w]) continue;
                CVec3 step = grid.edges[e].a == v ? edge_int[e] : -edge_int[e];
                out.values[w] = out.values[v] + real_part(step);
                placed[w] = 1;
                q.push(w);
            }
        }
    }

    // Plaquette circulation of the real part measures local failure of
    // exactness (zero for integrable data up to quadrature error).
    {
        // map vertex pair -> edge index for defect accumulation
        auto key = [nverts](int a, int b) { return static_cast<long long>(a) * nverts + b; };
        std::unordered_map<long long, int> lookup;
        lookup.reserve(grid.edges.size() * 2);
        for (int e = 0; e < nedges; ++e) {
            lookup[key(grid.edges[e].a, grid.edges[e].b)] = e + 1;
            lookup[key(grid.edges[e].b, grid.edges[e].a)] = -(e + 1);
        }
        double worst = 0;
        for (const auto& quad : grid.quads) {
            Vec3 circ{};
            bool complete = true;
            for (int k = 0; k < 4; ++k) {
                int a = quad[k], b = quad[(k + 1) % 4];
                auto it = lookup.find(key(a, b));
                if (it == lookup.end()) {
                    complete = false;
                    break;
                }
                int signed_e = it->second;
                CVec3 step = signed_e > 0 ? edge_int[signed_e - 1] : -edge_int[-signed_e - 1];
                circ += real_part(step);
            }
            if (complete) worst = std::max(worst, max_abs(circ));
        }
        out.max_cycle_defect = worst;
    }
    return out;
}

WeierstrassData adjoint(const WeierstrassData& d) {
    if (!d.holomorphic()) throw NotHolomorphic();
    return d.scaled(cplx(0, -1));
}

cplx associate_multiplier(double theta) {
    const double half_pi = std::numbers::pi / 2;
    if (theta == 0.0) return cplx(1, 0);
    if (theta == half_pi) return cplx(0, -1);
    if (theta == 2 * half_pi) return cplx(-1, 0);
    if (theta == 3 * half_pi) return cplx(0, 1);
    return std::polar(1.0, -theta);
}

WeierstrassData associate_family(const WeierstrassData& d, double theta) {
    if (!d.holomorphic()) throw NotHolomorphic();
    return d.scaled(associate_multiplier(theta));
}

}  // namespace wf
