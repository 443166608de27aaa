#pragma once

#include <functional>
#include <vector>

namespace besselwell {

struct Bracket {
    double lo, hi;
    double f_lo, f_hi;
};

/// Evaluate f on the node set and collect sign-change cells. Nodes must be
/// strictly increasing; evaluation is spread across the thread budget.
std::vector<Bracket> scan_sign_changes(const std::function<double(double)>& f,
                                       const std::vector<double>& nodes);

/// Uniform nodes, endpoints included.
std::vector<double> linspace(double lo, double hi, int n);

/// Bisection, driven to a relative width of rel_tol and then on to the
/// floating-point limit of the interval (the extra iterations are what push
/// root residuals to the noise floor of the condition function).
double bisect(const std::function<double(double)>& f, const Bracket& b,
              double rel_tol = 1e-12);

/// Thread cap: BESSELWELL_THREADS env var, 0/unset = hardware concurrency.
int thread_budget();

/// ys[i] = f(xs[i]) evaluated across the thread budget; deterministic order.
std::vector<double> parallel_map(const std::function<double(double)>& f,
                                 const std::vector<double>& xs);

}  // namespace besselwell
