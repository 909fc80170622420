#include "qwalk/observables.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/simd/kernels.hpp"

namespace qwalk {

namespace {

// Squared norm of the (c1, i1) row restricted to coin c2 of walker 2.
double block_norm(const TwoWalkerState& state, int pair, std::size_t offset, std::size_t len) {
    const auto plane = state.plane(pair);
    return simd::active_kernels().sum_squares(reinterpret_cast<const double*>(plane.data() + offset), 2 * len);
}

}  // namespace

ProbabilityGrid marginal_first(const TwoWalkerState& state) {
    ProbabilityGrid grid;
    const std::size_t n1 = state.cells_first();
    const std::size_t n2 = state.cells_second();
    for (std::size_t i1 = 0; i1 < n1; ++i1) {
        double p = 0.0;
        for (int k = 0; k < 16; ++k) {
            p += block_norm(state, k, i1 * n2, n2);
        }
        if (p != 0.0) {
            grid.set(state.first_node(i1), p);
        }
    }
    return grid;
}

ProbabilityGrid marginal_second(const TwoWalkerState& state) {
    const std::size_t n1 = state.cells_first();
    const std::size_t n2 = state.cells_second();
    std::vector<double> p(n2, 0.0);
    for (int k = 0; k < 16; ++k) {
        const auto plane = state.plane(k);
        for (std::size_t i1 = 0; i1 < n1; ++i1) {
            for (std::size_t i2 = 0; i2 < n2; ++i2) {
                p[i2] += std::norm(plane[i1 * n2 + i2]);
            }
        }
    }
    ProbabilityGrid grid;
    for (std::size_t i2 = 0; i2 < n2; ++i2) {
        if (p[i2] != 0.0) {
            grid.set(state.second_node(i2), p[i2]);
        }
    }
    return grid;
}

double std_dev(const ProbabilityGrid& grid) {
    double mx = 0.0;
    double my = 0.0;
    for (const auto& [node, p] : grid) {
        mx += node.x * p;
        my += node.y * p;
    }
    double var = 0.0;
    for (const auto& [node, p] : grid) {
        const double dx = node.x - mx;
        const double dy = node.y - my;
        var += p * (dx * dx + dy * dy);
    }
    return std::sqrt(std::max(var, 0.0));
}

std::vector<double> schmidt_spectrum(const TwoWalkerState& state, Subsystem keep) {
    const std::size_t n1 = state.cells_first();
    const std::size_t n2 = state.cells_second();

    // Support of the coefficient matrix: rows (c1, i1), columns (c2, i2).
    std::vector<double> row_norm(4 * n1, 0.0);
    std::vector<double> col_norm(4 * n2, 0.0);
    for (int k = 0; k < 16; ++k) {
        const int c1 = k >> 2;
        const int c2 = k & 3;
        const auto plane = state.plane(k);
        for (std::size_t i1 = 0; i1 < n1; ++i1) {
            for (std::size_t i2 = 0; i2 < n2; ++i2) {
                const double a = std::norm(plane[i1 * n2 + i2]);
                row_norm[c1 * n1 + i1] += a;
                col_norm[c2 * n2 + i2] += a;
            }
        }
    }
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    for (std::size_t r = 0; r < row_norm.size(); ++r) {
        if (row_norm[r] > 0.0) {
            rows.push_back(r);
        }
    }
    for (std::size_t c = 0; c < col_norm.size(); ++c) {
        if (col_norm[c] > 0.0) {
            cols.push_back(c);
        }
    }
    if (rows.empty()) {
        throw StateCorruption("entanglement of an all-zero state");
    }

    Eigen::MatrixXcd m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::size_t c1 = rows[r] / n1;
        const std::size_t i1 = rows[r] % n1;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const std::size_t c2 = cols[c] / n2;
            const std::size_t i2 = cols[c] % n2;
            m(r, c) = state.plane(static_cast<int>(c1 * 4 + c2))[i1 * n2 + i2];
        }
    }

    const Eigen::Index dim = keep == Subsystem::first ? m.rows() : m.cols();
    Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(dim, dim);
    if (keep == Subsystem::first) {
        gram.selfadjointView<Eigen::Lower>().rankUpdate(m);
    } else {
        gram.selfadjointView<Eigen::Lower>().rankUpdate(m.adjoint());
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw StateCorruption("eigenvalue solver did not converge");
    }

    std::vector<double> spectrum(solver.eigenvalues().data(), solver.eigenvalues().data() + dim);
    double sum = 0.0;
    for (double& lambda : spectrum) {
        if (lambda < 0.0) {
            if (lambda < -1e-12) {
                throw StateCorruption("reduced density matrix has eigenvalue " + std::to_string(lambda));
            }
            lambda = 0.0;
        }
        sum += lambda;
    }
    if (std::abs(sum - 1.0) > 1e-8) {
        throw StateCorruption("Schmidt spectrum sums to " + std::to_string(sum));
    }
    std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
    return spectrum;
}

double shannon_bits(const std::vector<double>& probabilities) {
    double s = 0.0;
    for (double p : probabilities) {
        if (p > 0.0) {
            s -= p * std::log2(p);
        }
    }
    return s;
}

double entanglement_entropy(const TwoWalkerState& state, Subsystem keep) {
    return shannon_bits(schmidt_spectrum(state, keep));
}

FitResult fit_slope(const SigmaSeries& series, int t_min, int t_max) {
    if (t_min >= t_max) {
        throw std::invalid_argument("fit window needs t_min < t_max");
    }
    double st = 0.0;
    double sv = 0.0;
    int n = 0;
    for (const auto& p : series) {
        if (p.t >= t_min && p.t <= t_max) {
            st += p.t;
            sv += p.value;
            ++n;
        }
    }
    if (n < 3) {
        throw std::invalid_argument("fit window [" + std::to_string(t_min) + ", " + std::to_string(t_max) +
                                    "] holds " + std::to_string(n) + " points; need at least 3");
    }
    const double mt = st / n;
    const double mv = sv / n;
    double stt = 0.0;
    double stv = 0.0;
    double svv = 0.0;
    for (const auto& p : series) {
        if (p.t >= t_min && p.t <= t_max) {
            const double dt = p.t - mt;
            const double dv = p.value - mv;
            stt += dt * dt;
            stv += dt * dv;
            svv += dv * dv;
        }
    }
    FitResult fit;
    fit.points = n;
    fit.alpha = stt > 0.0 ? stv / stt : 0.0;
    fit.intercept = mv - fit.alpha * mt;
    double ss_res = 0.0;
    for (const auto& p : series) {
        if (p.t >= t_min && p.t <= t_max) {
            const double e = p.value - (fit.intercept + fit.alpha * p.t);
            ss_res += e * e;
        }
    }
    if (svv > 0.0) {
        fit.r2 = 1.0 - ss_res / svv;
    } else {
        fit.r2 = ss_res == 0.0 ? 1.0 : 0.0;
    }
    return fit;
}

std::pair<int, int> default_fit_window(int t_max) { return {(t_max + 1) / 2, t_max}; }

}  // namespace qwalk
