// Serial vs OpenMP dense rank over F_p, plus a Koszul strand as a real workload.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include <omp.h>

#include "syzygy/exactla.hpp"
#include "syzygy/koszul.hpp"

namespace {

template <class F>
double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    using namespace syzygy;
    const std::uint32_t p = 1009;
    std::printf("threads %d\n", omp_get_max_threads());
    std::printf("%8s %8s %10s %10s %8s %s\n", "rows", "cols", "serial_s", "omp_s", "speedup", "agree");
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
    for (std::size_t n : {200, 400, 800, 1200}) {
        std::vector<std::uint32_t> a(n * n);
        for (auto& v : a) v = coef(rng);
        auto b = a;
        std::size_t rs = 0, rp = 0;
        const double ts = seconds([&] { rs = kernels::rank_dense_serial(a, n, n, p); });
        const double tp = seconds([&] { rp = kernels::rank_dense_parallel(b, n, n, p); });
        std::printf("%8zu %8zu %10.4f %10.4f %8.2f %s\n", n, n, ts, tp, ts / tp, rs == rp && a == b ? "yes" : "NO");
    }
    const auto ring = koszul::model_from_spec("genus4 seed=1", p, 3);
    double tk = seconds([&] { koszul::betti_table(ring, 3, 2); });
    std::printf("betti_table genus4 pmax=3 qmax=2: %.3f s\n", tk);
    return 0;
}
