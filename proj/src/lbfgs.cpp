#include "polyhg/lbfgs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace polyhg {

const char* to_string(MinimizeStatus s) {
    switch (s) {
        case MinimizeStatus::Converged: return "converged";
        case MinimizeStatus::IterationCap: return "iteration_cap";
        case MinimizeStatus::LineSearchFailed: return "line_search_failed";
    }
    return "unknown";
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double max_norm(std::span<const double> a) {
    double m = 0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

struct Sample {
    double alpha = 0;
    double value = 0;
    double slope = 0;
};

// Minimizer of the cubic through two samples with slopes, or NaN.
double cubic_min(const Sample& a, const Sample& b) {
    const double d1 = a.slope + b.slope - 3 * (a.value - b.value) / (a.alpha - b.alpha);
    const double disc = d1 * d1 - a.slope * b.slope;
    if (disc < 0) return std::numeric_limits<double>::quiet_NaN();
    const double d2 = std::copysign(std::sqrt(disc), b.alpha - a.alpha);
    return b.alpha - (b.alpha - a.alpha) * (b.slope + d2 - d1) / (b.slope - a.slope + 2 * d2);
}

class LineSearch {
public:
    LineSearch(const Objective& f, std::span<const double> x, std::span<const double> dir,
               double f0, double slope0, const MinimizeOptions& opt)
        : f_(f), x_(x), dir_(dir), opt_(opt), zero_{0, f0, slope0},
          trial_(x.size()), grad_(x.size()), best_x_(x.begin(), x.end()), best_g_(x.size()) {
        best_ = zero_;
    }

    // Returns true with a point satisfying the strong Wolfe conditions.
    bool run(double alpha) {
        Sample prev = zero_;
        for (std::size_t i = 0; i < opt_.max_line_search; ++i) {
            Sample cur = probe(alpha);
            if (cur.value > armijo(alpha) || (i > 0 && cur.value >= prev.value)) {
                return zoom(prev, cur);
            }
            if (std::abs(cur.slope) <= -opt_.c2 * zero_.slope) return true;
            if (cur.slope >= 0) return zoom(cur, prev);
            prev = cur;
            alpha *= 2;
        }
        return false;
    }

    [[nodiscard]] bool improved() const { return best_.value < zero_.value; }
    [[nodiscard]] const Sample& best() const { return best_; }
    [[nodiscard]] const std::vector<double>& best_x() const { return best_x_; }
    [[nodiscard]] const std::vector<double>& best_g() const { return best_g_; }
    [[nodiscard]] std::size_t evaluations() const { return evals_; }

private:
    double armijo(double alpha) const { return zero_.value + opt_.c1 * alpha * zero_.slope; }

    Sample probe(double alpha) {
        ++evals_;
        for (std::size_t i = 0; i < x_.size(); ++i) trial_[i] = x_[i] + alpha * dir_[i];
        Sample s{alpha, f_(trial_, grad_), 0};
        s.slope = dot(grad_, dir_);
        if (!std::isfinite(s.value)) s.value = std::numeric_limits<double>::infinity();
        if (s.value < best_.value && s.value <= armijo(alpha)) {
            best_ = s;
            best_x_ = trial_;
            best_g_ = grad_;
        }
        return s;
    }

    bool zoom(Sample lo, Sample hi) {
        for (std::size_t i = 0; i < opt_.max_line_search; ++i) {
            const double lo_a = std::min(lo.alpha, hi.alpha);
            const double hi_a = std::max(lo.alpha, hi.alpha);
            const double width = hi_a - lo_a;
            if (width <= 1e-16 * std::max(1.0, hi_a)) return false;
            double a = cubic_min(lo, hi);
            if (!std::isfinite(a) || a < lo_a + 0.1 * width || a > hi_a - 0.1 * width) {
                a = 0.5 * (lo.alpha + hi.alpha);
            }
            Sample cur = probe(a);
            if (cur.value > armijo(a) || cur.value >= lo.value) {
                hi = cur;
            } else {
                if (std::abs(cur.slope) <= -opt_.c2 * zero_.slope) return true;
                if (cur.slope * (hi.alpha - lo.alpha) >= 0) hi = lo;
                lo = cur;
            }
        }
        return false;
    }

    const Objective& f_;
    std::span<const double> x_, dir_;
    const MinimizeOptions& opt_;
    Sample zero_, best_;
    std::vector<double> trial_, grad_, best_x_, best_g_;
    std::size_t evals_ = 0;
};

}  // namespace

MinimizeResult minimize(const Objective& f, std::vector<double> x0, const MinimizeOptions& opt) {
    MinimizeResult res;
    const std::size_t n = x0.size();
    std::vector<double> g(n);
    res.x = std::move(x0);
    res.value = f(res.x, g);
    res.evaluations = 1;
    res.history.push_back(res.value);
    res.gradient_norm = max_norm(g);

    std::deque<std::vector<double>> s_hist, y_hist;
    std::deque<double> rho_hist;
    std::vector<double> dir(n), alpha_buf;

    while (true) {
        if (res.gradient_norm <= opt.gradient_tolerance) {
            res.status = MinimizeStatus::Converged;
            return res;
        }
        if (res.iterations >= opt.max_iterations) {
            res.status = MinimizeStatus::IterationCap;
            return res;
        }

        // Two-loop recursion.
        dir = g;
        alpha_buf.assign(s_hist.size(), 0.0);
        for (std::size_t k = s_hist.size(); k-- > 0;) {
            alpha_buf[k] = rho_hist[k] * dot(s_hist[k], dir);
            for (std::size_t i = 0; i < n; ++i) dir[i] -= alpha_buf[k] * y_hist[k][i];
        }
        double gamma = 1.0;
        if (!s_hist.empty()) {
            gamma = dot(s_hist.back(), y_hist.back()) / dot(y_hist.back(), y_hist.back());
        }
        for (double& d : dir) d *= gamma;
        for (std::size_t k = 0; k < s_hist.size(); ++k) {
            const double beta = rho_hist[k] * dot(y_hist[k], dir);
            for (std::size_t i = 0; i < n; ++i) dir[i] += (alpha_buf[k] - beta) * s_hist[k][i];
        }
        for (double& d : dir) d = -d;

        double slope = dot(g, dir);
        if (!(slope < 0)) {
            s_hist.clear();
            y_hist.clear();
            rho_hist.clear();
            for (std::size_t i = 0; i < n; ++i) dir[i] = -g[i];
            slope = dot(g, dir);
        }
        const double initial = s_hist.empty() ? 1.0 / std::max(1.0, std::sqrt(-slope)) : 1.0;

        LineSearch ls(f, res.x, dir, res.value, slope, opt);
        ls.run(initial);
        res.evaluations += ls.evaluations();
        if (!ls.improved()) {
            if (!s_hist.empty()) {
                // Retry from steepest descent before giving up.
                s_hist.clear();
                y_hist.clear();
                rho_hist.clear();
                continue;
            }
            res.status = MinimizeStatus::LineSearchFailed;
            return res;
        }

        std::vector<double> s(n), y(n);
        const auto& nx = ls.best_x();
        const auto& ng = ls.best_g();
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = nx[i] - res.x[i];
            y[i] = ng[i] - g[i];
        }
        const double sy = dot(s, y);
        if (sy > 1e-12 * std::sqrt(dot(s, s) * dot(y, y))) {
            s_hist.push_back(std::move(s));
            y_hist.push_back(std::move(y));
            rho_hist.push_back(1.0 / sy);
            if (s_hist.size() > opt.memory) {
                s_hist.pop_front();
                y_hist.pop_front();
                rho_hist.pop_front();
            }
        }
        res.x = nx;
        g = ng;
        res.value = ls.best().value;
        res.gradient_norm = max_norm(g);
        res.history.push_back(res.value);
        ++res.iterations;
    }
}

}  // namespace polyhg
