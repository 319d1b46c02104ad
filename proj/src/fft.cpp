#include "gnx/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gnx::fft {

namespace {

struct PlanKey {
    int rank, n, sign;
    auto operator<=>(const PlanKey&) const = default;
};

// FFTW's planner is not thread-safe; executing a cached plan on fresh
// buffers via fftw_execute_dft is. All buffers come from fftw_malloc so
// alignment matches the buffer the plan was created on.
std::mutex planner_mutex;
std::map<PlanKey, fftw_plan>& plan_cache() {
    static std::map<PlanKey, fftw_plan> cache;
    return cache;
}

fftw_plan get_plan(int rank, int n, int sign) {
    std::lock_guard<std::mutex> lock(planner_mutex);
    PlanKey key{rank, n, sign};
    auto& cache = plan_cache();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::size_t total = 1;
    for (int a = 0; a < rank; ++a) total *= static_cast<std::size_t>(n);
    fftw_complex* buf = fftw_alloc_complex(total);
    if (!buf) throw std::bad_alloc();
    int dims[3] = {n, n, n};
    fftw_plan plan = fftw_plan_dft(rank, dims, buf, buf,
                                   sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                   FFTW_ESTIMATE);
    fftw_free(buf);
    if (!plan) throw std::runtime_error("fftw: plan creation failed");
    cache.emplace(key, plan);
    return plan;
}

}  // namespace

void dft(std::complex<double>* data, int rank, int n, int sign) {
    if (rank < 1 || rank > 3) throw std::invalid_argument("fft: rank must be 1..3");
    std::size_t total = 1;
    for (int a = 0; a < rank; ++a) total *= static_cast<std::size_t>(n);

    fftw_plan plan = get_plan(rank, n, sign);
    fftw_complex* buf = fftw_alloc_complex(total);
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, data, total * sizeof(fftw_complex));
    fftw_execute_dft(plan, buf, buf);
    std::memcpy(data, buf, total * sizeof(fftw_complex));
    fftw_free(buf);
}

}  // namespace gnx::fft
