#include "wforge/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace wf {

namespace {

double point_rect_distance(cplx p, cplx lo, cplx hi) {
    double dx = std::max({lo.real() - p.real(), p.real() - hi.real(), 0.0});
    double dy = std::max({lo.imag() - p.imag(), p.imag() - hi.imag(), 0.0});
    return std::hypot(dx, dy);
}

// distance from p to the annular sector {r in [r0,r1], ang in [a0,a1]} around c
double point_sector_distance(cplx p, cplx c, double r0, double r1, double a0, double a1) {
    cplx rel = p - c;
    double r = std::abs(rel);
    double ang = std::arg(rel);
    // normalize into [a0, a0 + 2pi)
    while (ang < a0) ang += 2.0 * M_PI;
    while (ang >= a0 + 2.0 * M_PI) ang -= 2.0 * M_PI;
    if (ang <= a1) {
        return r < r0 ? r0 - r : (r > r1 ? r - r1 : 0.0);
    }
    // nearest point lies on one of the radial boundary segments
    auto seg_dist = [&](double a) {
        cplx e = std::polar(1.0, a);
        double t = std::clamp(rel.real() * e.real() + rel.imag() * e.imag(), r0, r1);
        return std::abs(rel - t * e);
    };
    return std::min(seg_dist(a0), seg_dist(a1));
}

}  // namespace

ParamGrid sample_domain(const Domain& domain, int nx, int ny) {
    if (nx < 2 || ny < 2) throw ConfigError("grid needs nx, ny >= 2");
    ParamGrid g;
    g.kind = domain.kind();
    g.nx = nx;
    g.ny = ny;

    const double margin = domain.pole_margin();
    std::vector<cplx> verts;
    std::vector<std::array<int, 4>> quads;

    if (domain.kind() == Domain::Kind::Rectangle) {
        cplx lo = domain.rect_lo(), hi = domain.rect_hi();
        auto vid = [&](int ix, int iy) { return iy * nx + ix; };
        verts.resize(static_cast<std::size_t>(nx) * ny);
        for (int iy = 0; iy < ny; ++iy)
            for (int ix = 0; ix < nx; ++ix)
                verts[vid(ix, iy)] =
                    cplx(lo.real() + (hi.real() - lo.real()) * ix / (nx - 1.0),
                         lo.imag() + (hi.imag() - lo.imag()) * iy / (ny - 1.0));
        for (int iy = 0; iy + 1 < ny; ++iy) {
            for (int ix = 0; ix + 1 < nx; ++ix) {
                cplx clo = verts[vid(ix, iy)], chi = verts[vid(ix + 1, iy + 1)];
                bool keep = true;
                for (const Puncture& p : domain.punctures())
                    if (point_rect_distance(p.point, clo, chi) < margin) keep = false;
                if (keep)
                    quads.push_back({vid(ix, iy), vid(ix + 1, iy), vid(ix + 1, iy + 1),
                                     vid(ix, iy + 1)});
            }
        }
    } else {
        // polar lattice: nx radial rings, ny angular steps; the angular seam
        // is duplicated (column ny repeats column 0 at angle 2 pi)
        const int cols = ny + 1;
        auto vid = [&](int ir, int ia) { return ir * cols + ia; };
        verts.resize(static_cast<std::size_t>(nx) * cols);
        for (int ir = 0; ir < nx; ++ir) {
            double r = domain.inner_radius() +
                       (domain.outer_radius() - domain.inner_radius()) * ir / (nx - 1.0);
            for (int ia = 0; ia < cols; ++ia) {
                double ang = 2.0 * M_PI * ia / ny;
                verts[vid(ir, ia)] = domain.center() + std::polar(r, ang);
            }
        }
        for (int ir = 0; ir + 1 < nx; ++ir) {
            double r0 = domain.inner_radius() +
                        (domain.outer_radius() - domain.inner_radius()) * ir / (nx - 1.0);
            double r1 = domain.inner_radius() +
                        (domain.outer_radius() - domain.inner_radius()) * (ir + 1) / (nx - 1.0);
            for (int ia = 0; ia + 1 < cols; ++ia) {
                double a0 = 2.0 * M_PI * ia / ny, a1 = 2.0 * M_PI * (ia + 1) / ny;
                bool keep = true;
                for (const Puncture& p : domain.punctures())
                    if (point_sector_distance(p.point, domain.center(), r0, r1, a0, a1) < margin)
                        keep = false;
                if (keep)
                    quads.push_back({vid(ir, ia), vid(ir, ia + 1), vid(ir + 1, ia + 1),
                                     vid(ir + 1, ia)});
            }
        }
        for (int ir = 0; ir < nx; ++ir) g.seam_pairs.push_back({vid(ir, 0), vid(ir, ny)});
    }

    if (quads.empty()) throw EmptyGrid();

    // compact away vertices not referenced by any kept cell
    std::vector<int> remap(verts.size(), -1);
    for (const auto& q : quads)
        for (int v : q) remap[v] = 0;
    // seam partners stay alive together so the weld bookkeeping survives
    for (auto& [a, b] : g.seam_pairs)
        if (remap[a] == 0 || remap[b] == 0) remap[a] = remap[b] = 0;
    int next = 0;
    for (std::size_t v = 0; v < verts.size(); ++v)
        if (remap[v] == 0) remap[v] = next++;
    g.vertices.resize(next);
    for (std::size_t v = 0; v < verts.size(); ++v)
        if (remap[v] >= 0) g.vertices[remap[v]] = verts[v];
    for (auto& q : quads) {
        g.quads.push_back({remap[q[0]], remap[q[1]], remap[q[2]], remap[q[3]]});
    }
    std::vector<std::pair<int, int>> seam;
    for (auto& [a, b] : g.seam_pairs)
        if (remap[a] >= 0 && remap[b] >= 0) seam.push_back({remap[a], remap[b]});
    g.seam_pairs = std::move(seam);

    // unique undirected edges of the kept cells
    std::map<std::pair<int, int>, int> seen;
    for (const auto& q : g.quads) {
        for (int k = 0; k < 4; ++k) {
            int a = q[k], b = q[(k + 1) % 4];
            auto key = std::minmax(a, b);
            if (seen.emplace(key, 1).second) g.edges.push_back({key.first, key.second});
        }
    }
    return g;
}

SurfaceMesh build_mesh(const WeierstrassData& d, const ParamGrid& grid, cplx basepoint,
                       Vec3 base_value, double tol, double weld_tol, Exec exec) {
    SurfaceMesh mesh;
    GridImmersion gi = immerse_grid(d, grid, basepoint, base_value, tol, exec);
    mesh.metadata.basepoint = basepoint;
    mesh.metadata.max_cycle_defect = gi.max_cycle_defect;

    const int n = static_cast<int>(grid.vertices.size());
    mesh.vertices = gi.values;
    mesh.parameter = grid.vertices;
    mesh.normals.resize(n);
    mesh.lambda.resize(n);
    mesh.H.resize(n);
    mesh.K.resize(n);
    mesh.abs_q.resize(n);
    mesh.umbilic.resize(n);
    for_each_index(exec, n, [&](std::ptrdiff_t i) {
        GeometrySample s = geometry_sample(d, grid.vertices[i]);
        mesh.normals[i] = s.eta;
        mesh.lambda[i] = s.lambda;
        mesh.H[i] = s.H;
        mesh.K[i] = s.K;
        mesh.abs_q[i] = std::abs(s.q_coeff);
        mesh.umbilic[i] = s.umbilic ? 1 : 0;
    });

    // triangulate each quad along its shorter parameter-space diagonal
    for (const auto& q : grid.quads) {
        double d02 = std::abs(grid.vertices[q[0]] - grid.vertices[q[2]]);
        double d13 = std::abs(grid.vertices[q[1]] - grid.vertices[q[3]]);
        if (d02 <= d13) {
            mesh.faces.push_back({q[0], q[1], q[2]});
            mesh.faces.push_back({q[0], q[2], q[3]});
        } else {
            mesh.faces.push_back({q[0], q[1], q[3]});
            mesh.faces.push_back({q[1], q[2], q[3]});
        }
    }

    // seam handling: weld when the surface values agree across the cut, i.e.
    // when the real part of the seam-loop transport vanishes
    if (!grid.seam_pairs.empty()) {
        double defect = 0;
        for (auto [a, b] : grid.seam_pairs)
            defect = std::max(defect, norm(mesh.vertices[a] - mesh.vertices[b]));
        mesh.metadata.seam_defect = defect;
        if (defect <= weld_tol) {
            mesh.metadata.seam_welded = true;
            std::vector<int> remap(n);
            for (int i = 0; i < n; ++i) remap[i] = i;
            for (auto [a, b] : grid.seam_pairs) remap[b] = a;
            std::vector<char> keep(n, 1);
            for (auto [a, b] : grid.seam_pairs) keep[b] = 0;
            std::vector<int> compact(n, -1);
            int next = 0;
            for (int i = 0; i < n; ++i)
                if (keep[i]) compact[i] = next++;
            auto squeeze = [&](auto& arr) {
                auto copy = arr;
                arr.resize(next);
                for (int i = 0; i < n; ++i)
                    if (keep[i]) arr[compact[i]] = copy[i];
            };
            squeeze(mesh.vertices);
            squeeze(mesh.normals);
            squeeze(mesh.parameter);
            squeeze(mesh.lambda);
            squeeze(mesh.H);
            squeeze(mesh.K);
            squeeze(mesh.abs_q);
            squeeze(mesh.umbilic);
            for (auto& f : mesh.faces)
                for (int& v : f) v = compact[remap[v]];
            mesh.metadata.seam_defect = 0;
        }
    }
    return mesh;
}

namespace {

void write_float(std::string& out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

}  // namespace

void export_obj(const SurfaceMesh& mesh, const std::string& path) {
    std::string out;
    out.reserve(mesh.vertices.size() * 80);
    for (const Vec3& v : mesh.vertices) {
        out += "v ";
        write_float(out, v.x);
        out += ' ';
        write_float(out, v.y);
        out += ' ';
        write_float(out, v.z);
        out += '\n';
    }
    for (const Vec3& nrm : mesh.normals) {
        out += "vn ";
        write_float(out, nrm.x);
        out += ' ';
        write_float(out, nrm.y);
        out += ' ';
        write_float(out, nrm.z);
        out += '\n';
    }
    for (const auto& f : mesh.faces) {
        out += "f";
        for (int v : f) {
            out += ' ';
            out += std::to_string(v + 1);
            out += "//";
            out += std::to_string(v + 1);
        }
        out += '\n';
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open '" + path + "' for writing");
    file << out;
    if (!file) throw Error("write to '" + path + "' failed");
}

void export_csv(const SurfaceMesh& mesh, const std::string& path) {
    std::string out = "re_z,im_z,x,y,z,lambda,H,K,absq,umbilic\n";
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        write_float(out, mesh.parameter[i].real());
        out += ',';
        write_float(out, mesh.parameter[i].imag());
        out += ',';
        write_float(out, mesh.vertices[i].x);
        out += ',';
        write_float(out, mesh.vertices[i].y);
        out += ',';
        write_float(out, mesh.vertices[i].z);
        out += ',';
        write_float(out, mesh.lambda[i]);
        out += ',';
        write_float(out, mesh.H[i]);
        out += ',';
        write_float(out, mesh.K[i]);
        out += ',';
        write_float(out, mesh.abs_q[i]);
        out += ',';
        out += mesh.umbilic[i] ? '1' : '0';
        out += '\n';
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open '" + path + "' for writing");
    file << out;
    if (!file) throw Error("write to '" + path + "' failed");
}

ParsedObj parse_obj(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw Error("cannot open '" + path + "' for reading");
    ParsedObj obj;
    std::string line;
    while (std::getline(file, line)) {
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "v" || tag == "vn") {
            Vec3 v;
            ss >> v.x >> v.y >> v.z;
            (tag == "v" ? obj.vertices : obj.normals).push_back(v);
        } else if (tag == "f") {
            std::array<int, 3> f{};
            for (int k = 0; k < 3; ++k) {
                std::string tok;
                ss >> tok;
                f[k] = std::stoi(tok.substr(0, tok.find('/'))) - 1;
            }
            obj.faces.push_back(f);
        }
    }
    return obj;
}

}  // namespace wf
