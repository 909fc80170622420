#pragma once

// Observables of a two-walker state: position marginals, spread, and the
// entanglement entropy between the walkers.

#include <utility>
#include <vector>

#include "qwalk/probability_grid.hpp"
#include "qwalk/two_walker.hpp"

namespace qwalk {

/// P(x1, y1): |psi|^2 summed over both coins and the second walker's position.
ProbabilityGrid marginal_first(const TwoWalkerState& state);
ProbabilityGrid marginal_second(const TwoWalkerState& state);

/// sqrt(sum P ((x - xbar)^2 + (y - ybar)^2)) with xbar, ybar the means of P.
double std_dev(const ProbabilityGrid& grid);

enum class Subsystem { first, second };

/// Eigenvalues of the reduced density matrix of `keep`, descending. Obtained
/// from the Gram matrix of the Schmidt coefficient matrix
/// M[(c1, l1), (c2, l2)] restricted to its nonzero rows and columns.
/// Throws StateCorruption if an eigenvalue is below -1e-12 or the spectrum
/// does not sum to 1 within 1e-8.
std::vector<double> schmidt_spectrum(const TwoWalkerState& state, Subsystem keep = Subsystem::first);

/// -sum lambda log2 lambda over the spectrum above, in bits.
double entanglement_entropy(const TwoWalkerState& state, Subsystem keep = Subsystem::first);

/// Entropy in bits of a probability vector; 0 log 0 = 0.
double shannon_bits(const std::vector<double>& probabilities);

struct SeriesPoint {
    int t = 0;
    double value = 0.0;
    bool operator==(const SeriesPoint&) const = default;
};

using SigmaSeries = std::vector<SeriesPoint>;
using EntropySeries = std::vector<SeriesPoint>;

struct FitResult {
    double alpha = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    int points = 0;
};

/// Ordinary least squares over the points with t in [t_min, t_max].
/// Throws std::invalid_argument if t_min >= t_max or fewer than 3 points
/// fall in the window. A series with no variance has r2 = 1 when the fit is
/// exact.
FitResult fit_slope(const SigmaSeries& series, int t_min, int t_max);

/// [ceil(t_max / 2), t_max].
std::pair<int, int> default_fit_window(int t_max);

}  // namespace qwalk
