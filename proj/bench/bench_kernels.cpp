// Times the OpenMP kernels against their serial reference implementations:
// forest enumeration over bitmask subsets, and evaluation-row construction
// for the kernel sampling.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fpoly/forests.hpp"
#include "fpoly/graph.hpp"
#include "fpoly/idspace.hpp"

using namespace fpoly;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename F>
double time_best_of(int reps, F fn) {
    double best = 1e100;
    for (int i = 0; i < reps; ++i) {
        auto start = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, seconds_since(start));
    }
    return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    {
        MarkedGraph k8 = MarkedGraph::complete(8, {1, 2, 3, 4, 5});
        Partition p({1, 2, 2, 1, 3});
        std::size_t count = spanning_forests_serial(k8, p).size();
        double serial = time_best_of(3, [&] { spanning_forests_serial(k8, p); });
        double parallel = time_best_of(3, [&] { spanning_forests(k8, p); });
        bool same = spanning_forests(k8, p) == spanning_forests_serial(k8, p);
        std::printf("forest enumeration on K_8 (%zu forests): serial %.3fs, parallel %.3fs, "
                    "speedup %.2fx, identical output: %s\n",
                    count, serial, parallel, serial / parallel, same ? "yes" : "no");
    }

    {
        std::vector<MarkedGraph> corpus{MarkedGraph::complete(4, {1, 2, 3, 4}),
                                        MarkedGraph::complete(5, {1, 2, 3, 4})};
        const int points = 40;
        double serial = time_best_of(3, [&] { eval_rows_serial(4, corpus, points, 7); });
        double parallel = time_best_of(3, [&] { eval_rows(4, corpus, points, 7); });
        bool same = eval_rows(4, corpus, points, 7) == eval_rows_serial(4, corpus, points, 7);
        std::printf("evaluation rows (m=4, %d points/graph): serial %.3fs, parallel %.3fs, "
                    "speedup %.2fx, identical output: %s\n",
                    points, serial, parallel, serial / parallel, same ? "yes" : "no");
    }
    return 0;
}
