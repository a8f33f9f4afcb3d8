// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wforge/config.hpp"
#include "wforge/geometry.hpp"
#include "wforge/mesh.hpp"

using namespace wf;

namespace {

const cplx I(0, 1);

struct Criterion {
    int id;
    std::string label;
    bool pass = true;
    std::string detail;
    double ms = 0;
};

std::vector<Criterion> results;

template <typename Fn>
void criterion(int id, const std::string& label, Fn&& body) {
    Criterion c{id, label};
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = std::string("exception: ") + e.what();
    }
    c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
               .count();
    results.push_back(std::move(c));
}

void fail(Criterion& c, const std::string& why) {
    c.pass = false;
    if (!c.detail.empty()) c.detail += "; ";
    c.detail += why;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

std::vector<cplx> interior_samples(const WeierstrassData& d, int count, double shrink) {
    // admissible points comfortably inside the domain, away from boundaries
    std::vector<cplx> out;
    std::uint64_t index = 1;
    const Domain& dom = d.domain();
    while (static_cast<int>(out.size()) < count && index < 200000) {
        double u = halton(index, 2), v = halton(index, 3);
        ++index;
        cplx z;
        if (dom.kind() == Domain::Kind::Rectangle) {
            cplx lo = dom.rect_lo(), hi = dom.rect_hi();
            cplx cen = 0.5 * (lo + hi);
            z = cen + shrink * cplx((u - 0.5) * (hi.real() - lo.real()),
                                    (v - 0.5) * (hi.imag() - lo.imag()));
        } else {
            double r0 = dom.inner_radius(), r1 = dom.outer_radius();
            double pad = (1.0 - shrink) * 0.5 * (r1 - r0);
            double r = (r0 + pad) + u * (r1 - r0 - 2 * pad);
            z = dom.center() + std::polar(r, 2.0 * M_PI * v);
        }
        if (dom.admissible(z) && dom.distance_to_punctures(z) > 1.5 * dom.pole_margin())
            out.push_back(z);
    }
    return out;
}

// Shape operator of the integrated surface: finite differences over a 3x3
// stencil of immerse() values.
struct FdShapeAtPoints {
    std::vector<oracles::ShapeSample> samples;
};

FdShapeAtPoints fd_shape_integrated(const WeierstrassData& d, cplx basepoint,
                                    const std::vector<cplx>& pts, double h) {
    std::vector<cplx> stencil;
    const cplx offs[9] = {cplx(0, 0),  cplx(h, 0),  cplx(-h, 0), cplx(0, h), cplx(0, -h),
                          cplx(h, h), cplx(h, -h), cplx(-h, h), cplx(-h, -h)};
    for (cplx z : pts)
        for (const cplx& o : offs) stencil.push_back(z + o);
    std::vector<Vec3> vals = immerse(d, basepoint, {0, 0, 0}, stencil, 1e-12);
    FdShapeAtPoints out;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const Vec3* s = &vals[9 * k];
        auto phi = [&](cplx w) -> Vec3 {
            for (int j = 0; j < 9; ++j)
                if (w == pts[k] + offs[j]) return s[j];
            return {};
        };
        out.samples.push_back(oracles::fd_shape(phi, pts[k], h));
    }
    return out;
}

}  // namespace

int main() {
    criterion(1, "isotropy residual <= 1e-10 on 4096 samples for every preset", [](Criterion& c) {
        for (const std::string& name : preset_names()) {
            Materialized m = materialize(preset(name));
            std::vector<cplx> pts = m.data.domain().sample(4096);
            double worst = 0;
            for (cplx z : pts) worst = std::max(worst, isotropy_residual(m.data, z));
            if (worst > 1e-10) fail(c, name + " residual " + num(worst));
            if (c.detail.empty()) c.detail = "max residual " + num(worst);
        }
    });
    if (!results.empty() && results.back().ms > 1000.0)
        fail(results.back(), "runtime " + num(results.back().ms) + " ms exceeds 1 s");

    criterion(2, "catenoid periods pure imaginary, helicoid fails by -i times them",
              [](Criterion& c) {
                  Materialized cat = materialize(preset("catenoid"));
                  PeriodReport cp =
                      periods(cat.data, {LoopSpec::circle(cplx(0, 0), 1.0, "waist")}, 1e-8);
                  // residue computation: the third coefficient -2/z has
                  // residue -2, so the loop integral is -4 pi i
                  cplx oracle(0.0, -4.0 * M_PI);
                  if (!cp.verdict) fail(c, "catenoid period condition failed");
                  if (max_abs(real_part(cp.loops[0].period)) > 1e-8)
                      fail(c, "catenoid |Re| " + num(max_abs(real_part(cp.loops[0].period))));
                  if (std::abs(cp.loops[0].period.z - oracle) > 1e-8)
                      fail(c, "catenoid period vs oracle " +
                                  num(std::abs(cp.loops[0].period.z - oracle)));

                  Materialized hel = materialize(preset("helicoid"));
                  PeriodReport hp =
                      periods(hel.data, {LoopSpec::circle(cplx(0, 0), 1.0, "waist")}, 1e-8);
                  if (hp.verdict) fail(c, "helicoid period condition unexpectedly passed");
                  cplx expected = -I * oracle;  // (0, 0, -4 pi), real
                  if (std::abs(hp.loops[0].period.z - expected) > 1e-8)
                      fail(c, "helicoid period vs -i*oracle " +
                                  num(std::abs(hp.loops[0].period.z - expected)));
                  c.detail = "catenoid transport " + num(std::abs(cp.loops[0].period.z)) +
                             ", helicoid real defect " + num(hp.loops[0].period.z.real());
              });
    if (results.back().ms > 1000.0)
        fail(results.back(), "runtime " + num(results.back().ms) + " ms exceeds 1 s");

    criterion(3, "minimality: |H| <= 1e-8 and K <= 0 on 64x64 grids", [](Criterion& c) {
        for (const char* name : {"enneper", "catenoid"}) {
            Materialized m = materialize(preset(name));
            ParamGrid grid = sample_domain(m.data.domain(), 64, 64);
            double worstH = 0, worstK = -1;
            for (cplx z : grid.vertices) {
                GeometrySample s = geometry_sample(m.data, z);
                worstH = std::max(worstH, std::abs(s.H));
                worstK = std::max(worstK, s.K);
            }
            if (worstH > 1e-8) fail(c, std::string(name) + " max|H| " + num(worstH));
            if (worstK > 0) fail(c, std::string(name) + " max K " + num(worstK));
        }
    });
    if (results.back().ms > 5000.0)
        fail(results.back(), "runtime " + num(results.back().ms) + " ms exceeds 5 s");

    criterion(4, "sphere: |H| = 1, K = 1, totally umbilic, integrable", [](Criterion& c) {
        Materialized m = materialize(preset("sphere"));
        ParamGrid grid = sample_domain(m.data.domain(), 64, 64);
        double worstH = 0, worstK = 0, worstQ = 0;
        for (cplx z : grid.vertices) {
            GeometrySample s = geometry_sample(m.data, z);
            worstH = std::max(worstH, std::abs(std::abs(s.H) - 1.0));
            worstK = std::max(worstK, std::abs(s.K - 1.0));
            worstQ = std::max(worstQ, std::abs(s.q_coeff));
        }
        if (worstH > 1e-6) fail(c, "|H|-1 off by " + num(worstH));
        if (worstK > 1e-6) fail(c, "K-1 off by " + num(worstK));
        if (worstQ > 1e-8) fail(c, "|q| " + num(worstQ));
        double res = integrability_residual(m.data, 64);
        if (res > 1e-8) fail(c, "integrability residual " + num(res));
        c.detail = "max deviations H " + num(worstH) + ", K " + num(worstK) + ", |q| " +
                   num(worstQ) + ", residual " + num(res);
    });

    criterion(5, "closed-form H, K vs shape operator of the integrated surface",
              [](Criterion& c) {
                  for (const char* name : {"enneper", "catenoid", "sphere"}) {
                      Materialized m = materialize(preset(name));
                      std::vector<cplx> pts = interior_samples(m.data, 50, 0.75);
                      FdShapeAtPoints fd =
                          fd_shape_integrated(m.data, m.config.basepoint, pts, 1e-3);
                      double worstH = 0, worstK = 0;
                      for (std::size_t k = 0; k < pts.size(); ++k) {
                          GeometrySample s = geometry_sample(m.data, pts[k]);
                          const auto& o = fd.samples[k];
                          worstH = std::max(worstH,
                                            std::abs(s.H - o.H) / (1.0 + std::abs(o.H)));
                          worstK = std::max(worstK,
                                            std::abs(s.K - o.K) / (1.0 + std::abs(o.K)));
                      }
                      if (worstH > 1e-4)
                          fail(c, std::string(name) + " H deviation " + num(worstH));
                      if (worstK > 1e-4)
                          fail(c, std::string(name) + " K deviation " + num(worstK));
                  }
              });

    criterion(6, "gauss map vs normalized cross product of integrated tangents",
              [](Criterion& c) {
                  for (const char* name :
                       {"plane", "enneper", "catenoid", "sphere", "order-demo"}) {
                      Materialized m = materialize(preset(name));
                      std::vector<cplx> pts = interior_samples(m.data, 100, 0.8);
                      FdShapeAtPoints fd =
                          fd_shape_integrated(m.data, m.config.basepoint, pts, 1e-4);
                      double worst = 0;
                      for (std::size_t k = 0; k < pts.size(); ++k)
                          worst = std::max(worst, norm(gauss_map(m.data, pts[k]) -
                                                       fd.samples[k].normal));
                      if (worst > 1e-5) fail(c, std::string(name) + " deviation " + num(worst));
                  }
              });

    criterion(7, "induced metric matches |phi_x|^2 of the integrated surface",
              [](Criterion& c) {
                  for (const char* name : {"enneper", "catenoid", "sphere"}) {
                      Materialized m = materialize(preset(name));
                      std::vector<cplx> pts = interior_samples(m.data, 50, 0.8);
                      FdShapeAtPoints fd =
                          fd_shape_integrated(m.data, m.config.basepoint, pts, 1e-3);
                      double worst = 0;
                      for (std::size_t k = 0; k < pts.size(); ++k) {
                          double lam = induced_metric(m.data, pts[k]);
                          worst = std::max(worst,
                                           std::abs(lam - fd.samples[k].lambda) /
                                               fd.samples[k].lambda);
                      }
                      if (worst > 1e-4) fail(c, std::string(name) + " deviation " + num(worst));
                  }
              });

    criterion(8, "spinor round trip and norm identity on every preset", [](Criterion& c) {
        for (const std::string& name : preset_names()) {
            Materialized m = materialize(preset(name));
            SpinorRep sp = spinor_from_weierstrass(m.data, m.chart, m.chart_base);
            std::uint64_t index = 1;
            int used = 0;
            double worst_rt = 0, worst_norm = 0;
            while (used < 64 && index < 10000) {
                double u = halton(index, 2), v = halton(index, 3);
                ++index;
                cplx z(m.chart.lo.real() + u * (m.chart.hi.real() - m.chart.lo.real()),
                       m.chart.lo.imag() + v * (m.chart.hi.imag() - m.chart.lo.imag()));
                if (!m.data.domain().admissible(z)) continue;
                ++used;
                CVec3 w = m.data.omega(z);
                CVec3 r = weierstrass_from_spinor(sp, z);
                double scale = 1.0 + norm(w);
                worst_rt = std::max(worst_rt, max_abs(r - w) / scale);
                auto [su, sv] = sp.coeffs(z);
                worst_norm = std::max(worst_norm,
                                      std::abs(std::sqrt(2.0) * (std::norm(su) + std::norm(sv)) -
                                               norm(w)) /
                                          scale);
            }
            if (worst_rt > 1e-12) fail(c, name + " round trip " + num(worst_rt));
            if (worst_norm > 1e-10) fail(c, name + " norm identity " + num(worst_norm));
        }
    });

    criterion(9, "integrability residuals agree across the two formulations", [](Criterion& c) {
        for (const std::string& name : preset_names()) {
            Materialized m = materialize(preset(name));
            double omega_res = integrability_residual(m.data, 64);
            SpinorRep sp = spinor_from_weierstrass(m.data, m.chart, m.chart_base);
            std::vector<cplx> pts;
            std::uint64_t index = 1;
            while (pts.size() < 256 && index < 20000) {
                double u = halton(index, 2), v = halton(index, 3);
                ++index;
                cplx z(m.chart.lo.real() + u * (m.chart.hi.real() - m.chart.lo.real()),
                       m.chart.lo.imag() + v * (m.chart.hi.imag() - m.chart.lo.imag()));
                if (m.data.domain().admissible(z)) pts.push_back(z);
            }
            double spin_res = spinor_integrability_residual(sp, pts);
            if (name == "perturbed") {
                if (omega_res <= 1e-4) fail(c, "perturbed omega residual only " + num(omega_res));
                if (spin_res <= 1e-4) fail(c, "perturbed spinor residual only " + num(spin_res));
            } else {
                if (omega_res > 1e-8) fail(c, name + " omega residual " + num(omega_res));
                if (spin_res > 1e-8) fail(c, name + " spinor residual " + num(spin_res));
            }
        }
    });

    criterion(10, "quaternionic action: equivariance, conformality, period preservation",
              [](Criterion& c) {
                  std::mt19937 rng(20260809);
                  std::uniform_real_distribution<double> U(-1.5, 1.5);
                  Materialized cat = materialize(preset("catenoid"));
                  std::vector<LoopSpec> waist = {LoopSpec::circle(cplx(0, 0), 1.0, "waist")};
                  std::vector<cplx> pts = interior_samples(cat.data, 12, 0.8);
                  for (int k = 0; k < 20; ++k) {
                      cplx a(U(rng), U(rng)), b(U(rng), U(rng));
                      if (std::abs(a) + std::abs(b) < 0.1) a += 1.0;
                      MoebiusAction T = MoebiusAction::quaternion(a, b);
                      Mat3 shadow = so3_shadow(T);
                      double scale = std::norm(a) + std::norm(b);

                      Mat3 gram = shadow.transposed() * shadow;
                      for (int r = 0; r < 3; ++r)
                          for (int cc = 0; cc < 3; ++cc) {
                              double expect = r == cc ? scale * scale : 0.0;
                              if (std::abs(gram(r, cc) - expect) > 1e-12 * (1.0 + scale * scale))
                                  fail(c, "gram deviation " +
                                              num(std::abs(gram(r, cc) - expect)));
                          }

                      WeierstrassData td = act(cat.data, T);
                      for (cplx z : pts) {
                          CVec3 expect = shadow * cat.data.omega(z);
                          CVec3 got = td.omega(z);
                          double wscale = 1.0 + norm(expect);
                          if (max_abs(got - expect) > 1e-12 * wscale) {
                              fail(c, "equivariance deviation " +
                                          num(max_abs(got - expect) / wscale));
                              break;
                          }
                      }

                      if (!periods(td, waist, 1e-6).verdict) {
                          fail(c, "period condition lost under the action");
                          break;
                      }
                  }
              });

    criterion(11, "associate family: invariants constant, quarter turn is the adjoint",
              [](Criterion& c) {
                  for (const char* name : {"enneper", "catenoid"}) {
                      Materialized m = materialize(preset(name));
                      const WeierstrassData& base = m.data;
                      std::vector<cplx> pts = interior_samples(base, 32, 0.85);
                      for (double theta : {0.3, 1.1, 2.7}) {
                          WeierstrassData rot = associate_family(base, theta);
                          for (cplx z : pts) {
                              GeometrySample s0 = geometry_sample(base, z);
                              GeometrySample s1 = geometry_sample(rot, z);
                              double scale = 1.0 + s0.lambda + std::abs(s0.K);
                              if (std::abs(s0.lambda - s1.lambda) > 1e-10 * scale ||
                                  std::abs(s0.H - s1.H) > 1e-10 * scale ||
                                  std::abs(s0.K - s1.K) > 1e-10 * scale ||
                                  std::abs(std::abs(s0.q_coeff) - std::abs(s1.q_coeff)) >
                                      1e-10 * scale) {
                                  fail(c, std::string(name) + " invariants drift at theta " +
                                              num(theta));
                                  break;
                              }
                          }
                      }
                      WeierstrassData quarter = associate_family(base, std::numbers::pi / 2);
                      WeierstrassData adj = adjoint(base);
                      for (cplx z : pts) {
                          CVec3 qa = quarter.omega(z), qb = adj.omega(z);
                          if (qa.x != qb.x || qa.y != qb.y || qa.z != qb.z) {
                              fail(c, std::string(name) + " quarter turn differs from adjoint");
                              break;
                          }
                      }
                  }
              });

    criterion(12, "mesh integrity: bit-exact OBJ round trip, defects, orientation",
              [](Criterion& c) {
                  Materialized m = materialize(preset("enneper"));
                  ParamGrid grid = sample_domain(m.data.domain(), 64, 64);
                  SurfaceMesh mesh =
                      build_mesh(m.data, grid, m.config.basepoint, m.config.base_value);
                  if (mesh.metadata.max_cycle_defect > 1e-8)
                      fail(c, "cycle defect " + num(mesh.metadata.max_cycle_defect));

                  std::string path = "/tmp/wforge_acceptance_enneper.obj";
                  export_obj(mesh, path);
                  ParsedObj back = parse_obj(path);
                  std::remove(path.c_str());
                  if (back.vertices.size() != mesh.vertices.size()) {
                      fail(c, "vertex count changed in the round trip");
                  } else {
                      for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
                          const Vec3& a = mesh.vertices[i];
                          const Vec3& b = back.vertices[i];
                          if (a.x != b.x || a.y != b.y || a.z != b.z) {
                              fail(c, "vertex bits changed in the round trip");
                              break;
                          }
                      }
                  }

                  int aligned = 0;
                  for (const auto& f : mesh.faces) {
                      Vec3 fn = cross(mesh.vertices[f[1]] - mesh.vertices[f[0]],
                                      mesh.vertices[f[2]] - mesh.vertices[f[0]]);
                      bool ok = true;
                      for (int v : f) ok = ok && dot(fn, mesh.normals[v]) > 0;
                      aligned += ok ? 1 : 0;
                  }
                  double frac = static_cast<double>(aligned) / mesh.faces.size();
                  if (frac < 0.99) fail(c, "face-normal consistency " + num(frac));
                  c.detail = "defect " + num(mesh.metadata.max_cycle_defect) +
                             ", orientation " + num(frac);
              });

    criterion(13, "symbolic derivatives match central differences on random expressions",
              [](Criterion& c) {
                  std::mt19937 rng(1234);
                  std::uniform_real_distribution<double> U(-0.8, 0.8);
                  std::uniform_int_distribution<int> pick(0, 5);
                  std::function<ComplexExpr(int)> gen = [&](int depth) -> ComplexExpr {
                      if (depth == 0) {
                          switch (pick(rng) % 3) {
                              case 0: return ComplexExpr::var_z();
                              case 1: return ComplexExpr::literal(U(rng));
                              default: return ComplexExpr::literal(cplx(U(rng), U(rng)));
                          }
                      }
                      switch (pick(rng)) {
                          case 0: return gen(depth - 1) + gen(depth - 1);
                          case 1: return gen(depth - 1) - gen(depth - 1);
                          case 2: return gen(depth - 1) * gen(depth - 1);
                          case 3:
                              return gen(depth - 1) /
                                     (ComplexExpr::literal(cplx(2.5, 1.0)) + ComplexExpr::var_z());
                          case 4: return ComplexExpr::pow(gen(depth - 1), 2);
                          default:
                              return ComplexExpr::apply(
                                  pick(rng) % 2 ? FuncKind::Sin : FuncKind::Cos, gen(depth - 1));
                      }
                  };
                  const double h = 1e-5;
                  int accepted = 0;
                  double worst = 0;
                  while (accepted < 100) {
                      ComplexExpr e = gen(3);
                      cplx z0(U(rng), U(rng));
                      cplx dv, fd;
                      try {
                          dv = e.wirtinger(WirtingerVar::DZ).eval(z0);
                          fd = (e.eval(z0 + h) - e.eval(z0 - h)) / (2.0 * h);
                      } catch (const Error&) {
                          continue;
                      }
                      if (std::abs(dv) > 1e3) continue;
                      ++accepted;
                      worst = std::max(worst, std::abs(dv - fd) / (1.0 + std::abs(dv)));
                  }
                  if (worst > 1e-6) fail(c, "max deviation " + num(worst));
                  c.detail = "max deviation " + num(worst);
              });

    int failures = 0;
    for (const Criterion& c : results) {
        std::printf("%-4s %2d  %-72s (%7.1f ms)%s%s\n", c.pass ? "PASS" : "FAIL", c.id,
                    c.label.c_str(), c.ms, c.detail.empty() ? "" : "  -- ",
                    c.detail.c_str());
        failures += c.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
