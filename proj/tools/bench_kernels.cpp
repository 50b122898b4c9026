// Timing comparison of the serial and OpenMP element loops for the
// reconstruction + right-hand-side kernels.

#include <chrono>
#include <cstdio>

#include "hdg/operator.hpp"
#include "hdg/scenarios.hpp"

using clk = std::chrono::steady_clock;

static double time_rhs(const hdg::PolyField& u, const std::function<double(double)>& Ub,
                       hdg::ExecPolicy exec, int reps) {
    hdg::RhsOptions opt;
    opt.exec = exec;
    volatile double sink = 0.0;
    auto t0 = clk::now();
    for (int r = 0; r < reps; ++r) {
        auto res = hdg::assemble_rhs(u, 0.0, Ub, opt);
        sink += res.coeffs[0];
    }
    auto t1 = clk::now();
    (void)sink;
    return std::chrono::duration<double>(t1 - t0).count() / reps;
}

int main(int argc, char** argv) {
    int N = argc > 1 ? std::atoi(argv[1]) : 20000;
    int k = argc > 2 ? std::atoi(argv[2]) : 2;
    int reps = argc > 3 ? std::atoi(argv[3]) : 20;

    hdg::Scenario sc = hdg::example1();
    hdg::Mesh mesh = hdg::build_uniform(sc.b, N);
    hdg::PolyField u = hdg::initial_data(sc, mesh, k);

    double ts = time_rhs(u, sc.Ub, hdg::ExecPolicy::Serial, reps);
    double tp = time_rhs(u, sc.Ub, hdg::ExecPolicy::Parallel, reps);
    std::printf("N=%d k=%d reps=%d\n", N, k, reps);
    std::printf("  serial   %10.3f ms/rhs\n", 1e3 * ts);
    std::printf("  parallel %10.3f ms/rhs  (speedup %.2fx)\n", 1e3 * tp, ts / tp);
    return 0;
}
