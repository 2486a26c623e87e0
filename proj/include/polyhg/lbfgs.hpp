#pragma once

#include <functional>
#include <span>
#include <vector>

namespace polyhg {

/// Objective value; writes the gradient into the second argument.
using Objective = std::function<double(std::span<const double>, std::span<double>)>;

struct MinimizeOptions {
    std::size_t max_iterations = 500;
    double gradient_tolerance = 1e-6;  // on the max-norm of the gradient
    std::size_t memory = 10;
    double c1 = 1e-4;
    double c2 = 0.9;
    std::size_t max_line_search = 40;
};

enum class MinimizeStatus { Converged, IterationCap, LineSearchFailed };
[[nodiscard]] const char* to_string(MinimizeStatus s);

struct MinimizeResult {
    std::vector<double> x;
    double value = 0;
    double gradient_norm = 0;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
    MinimizeStatus status = MinimizeStatus::Converged;
    std::vector<double> history;  // objective after each accepted step, starting value first
};

/// Limited-memory BFGS with a strong Wolfe line search. Accepted steps
/// never increase the objective; on line search failure the best point
/// found so far is returned.
[[nodiscard]] MinimizeResult minimize(const Objective& f, std::vector<double> x0,
                                      const MinimizeOptions& opt);

}  // namespace polyhg
