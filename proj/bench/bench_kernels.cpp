// Timings for the OpenMP kernels against their serial references. The
// two sides must agree exactly; a mismatch aborts.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "z4trace/kernels.hpp"
#include "z4trace/trace_codes.hpp"

using namespace z4trace;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double, std::milli>(dt).count();
}

template <typename F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return ms_since(t0);
}

void report(const char* name, double serial_ms, double parallel_ms, bool agree) {
    std::printf("%-34s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms, agree ? "agree" : "MISMATCH");
    if (!agree) std::abort();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run serially\n");
#endif

    {
        GaloisRing ring(6);
        DefiningSet d = skew_set(ring);
        std::vector<std::uint64_t> a, b;
        double ts = timed([&] { a = kernels::lee_weight_histogram_serial(ring, d.elements); });
        double tp = timed([&] { b = kernels::lee_weight_histogram(ring, d.elements); });
        report("lee histogram (skew m=6, n=2016)", ts, tp, a == b);
    }

    {
        GaloisRing ring(7);
        BooleanFunction f = BooleanFunction::affine(ring.field(), 1, 1);
        DefiningSet d = defining_set_support_plus(ring, f);
        std::vector<std::uint64_t> a, b;
        double ts = timed([&] { a = kernels::lee_weight_histogram_serial(ring, d.elements); });
        double tp = timed([&] { b = kernels::lee_weight_histogram(ring, d.elements); });
        report("lee histogram (support+ m=7)", ts, tp, a == b);
    }

    {
        BinaryField field(12);
        std::mt19937_64 rng(7);
        std::vector<std::uint8_t> table(field.size());
        for (auto& t : table) t = rng() & 1;
        std::vector<std::int32_t> a, b;
        double ts = timed([&] { a = kernels::walsh_spectrum_serial(field, table); });
        double tp = timed([&] { b = kernels::walsh_spectrum(field, table); });
        report("walsh spectrum (random f, m=12)", ts, tp, a == b);
    }

    {
        // Random nonlinear word set: 4096 words of 512 bits.
        std::mt19937_64 rng(11);
        const std::size_t words = 4096, blocks = 8;
        std::vector<std::uint64_t> flat(words * blocks);
        for (auto& x : flat) x = rng();
        std::uint32_t a = 0, b = 0;
        double ts = timed([&] { a = kernels::min_pairwise_distance_serial(flat, words, blocks); });
        double tp = timed([&] { b = kernels::min_pairwise_distance(flat, words, blocks); });
        report("min distance (4096 x 512 bits)", ts, tp, a == b);
    }

    return 0;
}
