#include "besselwell/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <stdexcept>
#include <thread>

namespace besselwell {

int thread_budget() {
    const char* env = std::getenv("BESSELWELL_THREADS");
    int hw = int(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (env != nullptr) {
        const int n = std::atoi(env);
        if (n > 0) return std::min(n, hw);
    }
    return hw;
}

std::vector<double> parallel_map(const std::function<double(double)>& f,
                                 const std::vector<double>& xs) {
    const int nthreads = thread_budget();
    std::vector<double> ys(xs.size());
    if (nthreads <= 1 || xs.size() < 64) {
        for (size_t i = 0; i < xs.size(); ++i) ys[i] = f(xs[i]);
        return ys;
    }
    const size_t chunk = (xs.size() + nthreads - 1) / nthreads;
    std::vector<std::future<void>> jobs;
    for (int t = 0; t < nthreads; ++t) {
        const size_t beg = t * chunk;
        if (beg >= xs.size()) break;
        const size_t end = std::min(xs.size(), beg + chunk);
        jobs.push_back(std::async(std::launch::async, [&, beg, end] {
            for (size_t i = beg; i < end; ++i) ys[i] = f(xs[i]);
        }));
    }
    for (auto& j : jobs) j.get();
    return ys;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i)
        xs[i] = lo + (hi - lo) * double(i) / double(n - 1);
    xs.back() = hi;
    return xs;
}

std::vector<Bracket> scan_sign_changes(const std::function<double(double)>& f,
                                       const std::vector<double>& nodes) {
    const std::vector<double> ys = parallel_map(f, nodes);
    std::vector<Bracket> out;
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double a = ys[i], b = ys[i + 1];
        if (!std::isfinite(a) || !std::isfinite(b)) continue;
        if (a == 0.0) {
            // node exactly on a root: shrink into a degenerate bracket
            out.push_back({nodes[i], nodes[i], a, a});
        } else if (a * b < 0.0) {
            out.push_back({nodes[i], nodes[i + 1], a, b});
        }
    }
    return out;
}

double bisect(const std::function<double(double)>& f, const Bracket& b,
              double rel_tol) {
    if (b.lo == b.hi) return b.lo;
    double lo = b.lo, hi = b.hi;
    double flo = b.f_lo;
    if (flo == 0.0) return lo;
    if (b.f_hi == 0.0) return hi;
    if (flo * b.f_hi > 0.0)
        throw std::invalid_argument("bisect: no sign change on bracket");
    (void)rel_tol;  // the loop always runs to the floating-point limit
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval collapsed to adjacent doubles
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace besselwell
