#include "muhs/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace muhs {

namespace {

// FFTW plan creation is not thread-safe; execution of a cached plan on
// caller-owned buffers is.  Plans are created with FFTW_UNALIGNED so they
// apply to any buffer of the right size.
std::mutex plan_mutex;

fftw_plan plan_for(int n, int sign) {
    static std::map<std::pair<int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<cplx> scratch(n);
    fftw_plan plan = fftw_plan_dft_1d(
        n, reinterpret_cast<fftw_complex*>(scratch.data()),
        reinterpret_cast<fftw_complex*>(scratch.data()), sign,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, plan);
    return plan;
}

void execute(std::vector<cplx>& data, int sign) {
    if (data.empty()) return;
    fftw_plan plan = plan_for(static_cast<int>(data.size()), sign);
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, buf, buf);
}

} // namespace

void dft_forward(std::vector<cplx>& data) { execute(data, FFTW_FORWARD); }

void dft_inverse(std::vector<cplx>& data) {
    execute(data, FFTW_BACKWARD);
    double scale = 1.0 / static_cast<double>(data.size());
    for (auto& v : data) v *= scale;
}

double dft_frequency(int m, int n, double h) {
    const double two_pi = 6.28318530717958647692;
    int folded = m <= (n - 1) / 2 ? m : m - n;
    return two_pi * folded / (n * h);
}

} // namespace muhs
