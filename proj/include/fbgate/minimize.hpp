/*
 * Copyright 2026 The fbgate Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FBGATE_MINIMIZE_HPP
#define FBGATE_MINIMIZE_HPP

#include <Eigen/Dense>
#include <cmath>
#include <deque>
#include <functional>

namespace fbgate {

using ObjectiveFn = std::function<double(const Eigen::VectorXd&)>;

/// Central differences, step h per coordinate.
inline Eigen::VectorXd finite_difference_gradient(const ObjectiveFn& f, const Eigen::VectorXd& x,
                                                  double h = 1e-6) {
    Eigen::VectorXd g(x.size());
    Eigen::VectorXd p = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double xi = x(i);
        p(i) = xi + h;
        const double fp = f(p);
        p(i) = xi - h;
        const double fm = f(p);
        p(i) = xi;
        g(i) = (fp - fm) / (2.0 * h);
    }
    return g;
}

struct MinimizeOptions {
    int max_iterations = 300;
    int history = 8;           // L-BFGS memory
    double gradient_tol = 1e-8;
    double step_tol = 1e-12;
    double fd_step = 1e-6;
    double armijo_c1 = 1e-4;
};

struct MinimizeResult {
    Eigen::VectorXd x;
    double value = 0.0;
    int iterations = 0;
    long evaluations = 0;
    bool converged = false;
};

/// Limited-memory BFGS with finite-difference gradients and a backtracking
/// Armijo line search. Deterministic for a deterministic objective.
inline MinimizeResult lbfgs_minimize(const ObjectiveFn& f, Eigen::VectorXd x0,
                                     const MinimizeOptions& opts = {}) {
    MinimizeResult res;
    long evals = 0;
    const auto eval = [&](const Eigen::VectorXd& x) {
        ++evals;
        return f(x);
    };
    const auto grad = [&](const Eigen::VectorXd& x) {
        evals += 2 * x.size();
        return finite_difference_gradient(f, x, opts.fd_step);
    };

    Eigen::VectorXd x = std::move(x0);
    double fx = eval(x);
    Eigen::VectorXd g = grad(x);

    std::deque<Eigen::VectorXd> s_hist, y_hist;
    std::deque<double> rho_hist;

    int it = 0;
    for (; it < opts.max_iterations; ++it) {
        if (g.lpNorm<Eigen::Infinity>() < opts.gradient_tol) {
            res.converged = true;
            break;
        }

        // two-loop recursion
        Eigen::VectorXd q = g;
        std::vector<double> alpha(s_hist.size());
        for (int i = static_cast<int>(s_hist.size()) - 1; i >= 0; --i) {
            const auto idx = static_cast<std::size_t>(i);
            alpha[idx] = rho_hist[idx] * s_hist[idx].dot(q);
            q -= alpha[idx] * y_hist[idx];
        }
        if (!s_hist.empty()) {
            const auto& s = s_hist.back();
            const auto& y = y_hist.back();
            q *= s.dot(y) / y.squaredNorm();
        }
        for (std::size_t i = 0; i < s_hist.size(); ++i) {
            const double beta = rho_hist[i] * y_hist[i].dot(q);
            q += (alpha[i] - beta) * s_hist[i];
        }
        Eigen::VectorXd d = -q;
        double gd = g.dot(d);
        if (!(gd < 0.0)) {  // not a descent direction: restart from steepest descent
            d = -g;
            gd = -g.squaredNorm();
            s_hist.clear();
            y_hist.clear();
            rho_hist.clear();
        }

        // backtracking Armijo
        double t = 1.0;
        double f_new = fx;
        Eigen::VectorXd x_new = x;
        bool accepted = false;
        for (int bt = 0; bt < 50; ++bt) {
            x_new = x + t * d;
            f_new = eval(x_new);
            if (f_new <= fx + opts.armijo_c1 * t * gd) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted || (x_new - x).lpNorm<Eigen::Infinity>() < opts.step_tol) break;

        Eigen::VectorXd g_new = grad(x_new);
        Eigen::VectorXd s = x_new - x;
        Eigen::VectorXd y = g_new - g;
        const double sy = s.dot(y);
        if (sy > 1e-12 * s.norm() * y.norm()) {
            s_hist.push_back(std::move(s));
            y_hist.push_back(std::move(y));
            rho_hist.push_back(1.0 / sy);
            if (static_cast<int>(s_hist.size()) > opts.history) {
                s_hist.pop_front();
                y_hist.pop_front();
                rho_hist.pop_front();
            }
        }
        x = std::move(x_new);
        fx = f_new;
        g = std::move(g_new);
    }

    res.x = std::move(x);
    res.value = fx;
    res.iterations = it;
    res.evaluations = evals;
    return res;
}

}  // namespace fbgate

#endif
