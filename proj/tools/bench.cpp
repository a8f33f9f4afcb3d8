// Benchmark of the parallel kernels against their serial reference paths.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "wforge/config.hpp"
#include "wforge/mesh.hpp"

using namespace wf;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::string(argv[1]) == "--quick";
    const int scale = quick ? 1 : 4;

    std::printf("threads: %d (OpenMP %s)\n", max_threads(),
                openmp_enabled() ? "enabled" : "disabled");
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        Materialized m = materialize(preset("catenoid"));
        int n = 65536 * scale;
        double s = time_ms([&] { validate(m.data, n, {}, Exec::Serial); });
        double p = time_ms([&] { validate(m.data, n, {}, Exec::Parallel); });
        report("validate sampling", s, p);
    }
    {
        Materialized m = materialize(preset("sphere"));
        int n = 128 * scale;
        double s = time_ms([&] { integrability_residual(m.data, n, Exec::Serial); });
        double p = time_ms([&] { integrability_residual(m.data, n, Exec::Parallel); });
        report("integrability residual", s, p);
    }
    {
        Materialized m = materialize(preset("enneper"));
        int n = 48 * scale;
        ParamGrid grid = sample_domain(m.data.domain(), n, n);
        double s = time_ms([&] {
            build_mesh(m.data, grid, m.config.basepoint, m.config.base_value, 1e-10, 1e-8,
                       Exec::Serial);
        });
        double p = time_ms([&] {
            build_mesh(m.data, grid, m.config.basepoint, m.config.base_value, 1e-10, 1e-8,
                       Exec::Parallel);
        });
        report("mesh build", s, p);
    }
    {
        Materialized m = materialize(preset("catenoid"));
        std::vector<LoopSpec> loops;
        for (int k = 0; k < 16 * scale; ++k)
            loops.push_back(LoopSpec::circle(cplx(0, 0), 0.6 + 1.2 * (k + 1.0) / (16.0 * scale + 1),
                                             "ring-" + std::to_string(k)));
        double s = time_ms([&] { periods(m.data, loops, 1e-8, 1e-12, Exec::Serial); });
        double p = time_ms([&] { periods(m.data, loops, 1e-8, 1e-12, Exec::Parallel); });
        report("loop periods", s, p);
    }
    {
        Materialized m = materialize(preset("sphere"));
        SpinorRep sp = spinor_from_weierstrass(m.data, m.chart, m.chart_base);
        std::vector<cplx> pts = m.data.domain().sample(256 * scale);
        double s = time_ms([&] { spinor_integrability_residual(sp, pts, Exec::Serial); });
        double p = time_ms([&] { spinor_integrability_residual(sp, pts, Exec::Parallel); });
        report("spinor residual", s, p);
    }
    return 0;
}
