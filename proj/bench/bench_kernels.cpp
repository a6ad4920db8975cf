// Timing harness comparing the OpenMP kernels against their serial reference
// implementations. Every pair is also checked for identical output, so a run
// doubles as a consistency smoke test.
//
//   specmom_bench [--quick]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "specmom/estimate.hpp"
#include "specmom/graph_sample.hpp"
#include "specmom/walk_oracle.hpp"
#include "specmom/walk_table.hpp"

using namespace specmom;

namespace {

double seconds(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* name, double serial_s, double parallel_s, bool identical) {
    std::printf("%-22s %10.3fs %10.3fs %8.2fx   %s\n", name, serial_s, parallel_s,
                parallel_s > 0 ? serial_s / parallel_s : 0.0, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel entry points run serially\n");
#endif
    std::printf("%-22s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        const int order = quick ? 24 : 40;
        WalkCountTable serial = build_walk_table_serial(0, BigRat(1));
        WalkCountTable parallel = build_walk_table_serial(0, BigRat(1));
        const double ts = seconds([&] { serial = build_walk_table_serial(order, BigRat(1)); });
        const double tp = seconds([&] { parallel = build_walk_table(order, BigRat(1)); });
        bool same = true;
        for (int u = 0; u <= order && same; ++u)
            for (int v = 0; v <= u; ++v)
                if (serial.at(u, v) != parallel.at(u, v)) {
                    same = false;
                    break;
                }
        report("walk_table", ts, tp, same);
    }

    {
        const int k = quick ? 5 : 6;
        std::uint64_t serial = 0, parallel = 0;
        const double ts = seconds([&] { serial = oracle_moment_serial(k); });
        const double tp = seconds([&] { parallel = oracle_moment(k); });
        report("oracle_moment", ts, tp, serial == parallel);
    }

    {
        const int u = quick ? 5 : 6;
        std::map<int, std::uint64_t> direct, per_tree;
        const double ts = seconds([&] { direct = walks_by_returns(u); });
        const double tp = seconds([&] { per_tree = walks_by_returns_per_tree(u); });
        report("walks_by_returns", ts, tp, direct == per_tree);
    }

    {
        const std::uint32_t n = quick ? 2000 : 4000;
        GraphSample serial, parallel;
        const double ts = seconds([&] { serial = sample_graph_serial(n, 1.0, 7); });
        const double tp = seconds([&] { parallel = sample_graph(n, 1.0, 7); });
        report("sample_graph", ts, tp, serial.edges == parallel.edges);
    }

    {
        const std::uint32_t n = quick ? 128 : 384;
        const int samples = quick ? 8 : 24;
        SpectralEstimate serial, parallel;
        const double ts =
            seconds([&] { serial = estimate_moments_serial(n, 1.0, 6, samples, 11); });
        const double tp = seconds([&] { parallel = estimate_moments(n, 1.0, 6, samples, 11); });
        bool same = serial.pooled_eigenvalues == parallel.pooled_eigenvalues;
        for (std::size_t s = 0; s < serial.records.size() && same; ++s)
            same = serial.records[s].mean == parallel.records[s].mean &&
                   serial.records[s].stderr_ == parallel.records[s].stderr_;
        report("estimate_moments", ts, tp, same);
    }

    return 0;
}
