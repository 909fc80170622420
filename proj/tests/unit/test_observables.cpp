#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <map>

#include "qwalk/errors.hpp"
#include "qwalk/observables.hpp"

namespace qwalk {
namespace {

// Squared singular values of the full coefficient matrix, by SVD.
std::vector<double> svd_spectrum(const TwoWalkerState& s) {
    std::map<std::pair<int, Node>, int> rows;
    std::map<std::pair<int, Node>, int> cols;
    s.for_each_nonzero([&](const Term& t) {
        rows.try_emplace({t.c1.index(), t.l1}, static_cast<int>(rows.size()));
        cols.try_emplace({t.c2.index(), t.l2}, static_cast<int>(cols.size()));
    });
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows.size()),
                                                static_cast<Eigen::Index>(cols.size()));
    s.for_each_nonzero([&](const Term& t) {
        m(rows.at({t.c1.index(), t.l1}), cols.at({t.c2.index(), t.l2})) += t.amplitude;
    });
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    std::vector<double> out;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        out.push_back(svd.singularValues()(i) * svd.singularValues()(i));
    }
    return out;
}

TEST(Marginal, Sep1AtZeroIsPointMass) {
    const ProbabilityGrid p = marginal_first(make_initial(InitialStateId::sep1));
    ASSERT_EQ(p.size(), 1u);
    EXPECT_NEAR(p.at({0, 0}), 1.0, 1e-15);
}

TEST(Marginal, SumsToOne) {
    for (InteractionMode mode : {InteractionMode::hpp, InteractionMode::phase}) {
        const TwoWalkerState s = run(make_initial(InitialStateId::sep2), mode, 7);
        EXPECT_NEAR(marginal_first(s).total(), 1.0, 1e-10);
        EXPECT_NEAR(marginal_second(s).total(), 1.0, 1e-10);
    }
}

TEST(Marginal, MatchesBruteSum) {
    const TwoWalkerState s = run(make_initial(InitialStateId::ent), InteractionMode::hpp, 4);
    std::map<Node, double> p1;
    std::map<Node, double> p2;
    s.for_each_nonzero([&](const Term& t) {
        p1[t.l1] += std::norm(t.amplitude);
        p2[t.l2] += std::norm(t.amplitude);
    });
    const ProbabilityGrid a = marginal_first(s);
    const ProbabilityGrid b = marginal_second(s);
    for (const auto& [n, v] : p1) {
        EXPECT_NEAR(a.at(n), v, 1e-15);
    }
    for (const auto& [n, v] : p2) {
        EXPECT_NEAR(b.at(n), v, 1e-15);
    }
}

TEST(StdDev, Examples) {
    ProbabilityGrid point;
    point.add({0, 0}, 1.0);
    EXPECT_EQ(std_dev(point), 0.0);

    ProbabilityGrid corners;
    for (Node n : {Node{1, 1}, Node{1, -1}, Node{-1, 1}, Node{-1, -1}}) {
        corners.add(n, 0.25);
    }
    EXPECT_NEAR(std_dev(corners), std::sqrt(2.0), 1e-15);

    ProbabilityGrid shifted;
    shifted.add({5, 5}, 0.5);
    shifted.add({7, 5}, 0.5);
    EXPECT_NEAR(std_dev(shifted), 1.0, 1e-15);
}

TEST(Fit, ExactLine) {
    SigmaSeries s;
    for (int t = 1; t <= 10; ++t) {
        s.push_back({t, 0.5 * t});
    }
    const FitResult f = fit_slope(s, 1, 10);
    EXPECT_NEAR(f.alpha, 0.5, 1e-15);
    EXPECT_NEAR(f.intercept, 0.0, 1e-14);
    EXPECT_NEAR(f.r2, 1.0, 1e-15);
    EXPECT_EQ(f.points, 10);
}

TEST(Fit, ConstantSeries) {
    SigmaSeries s;
    for (int t = 0; t <= 5; ++t) {
        s.push_back({t, 3.0});
    }
    const FitResult f = fit_slope(s, 0, 5);
    EXPECT_EQ(f.alpha, 0.0);
    EXPECT_EQ(f.intercept, 3.0);
}

TEST(Fit, WindowErrors) {
    SigmaSeries s{{0, 0.0}, {1, 1.0}, {2, 2.0}};
    EXPECT_THROW(fit_slope(s, 2, 2), std::invalid_argument);
    EXPECT_THROW(fit_slope(s, 1, 2), std::invalid_argument);
    EXPECT_EQ(default_fit_window(20), (std::pair<int, int>{10, 20}));
    EXPECT_EQ(default_fit_window(19), (std::pair<int, int>{10, 19}));
}

TEST(Entropy, ProductStatesAreZero) {
    for (InitialStateId id : {InitialStateId::sep1, InitialStateId::sep2, InitialStateId::grov}) {
        EXPECT_NEAR(entanglement_entropy(make_initial(id)), 0.0, 1e-12) << to_string(id);
    }
}

TEST(Entropy, EntIsTwoBits) {
    const TwoWalkerState s = make_initial(InitialStateId::ent);
    EXPECT_NEAR(entanglement_entropy(s), 2.0, 1e-12);
    const auto spectrum = schmidt_spectrum(s);
    ASSERT_EQ(spectrum.size(), 4u);
    for (double l : spectrum) {
        EXPECT_NEAR(l, 0.25, 1e-15);
    }
}

TEST(Entropy, AgreesWithSvdAndIsSymmetric) {
    for (InitialStateId id : {InitialStateId::sep1, InitialStateId::sep2, InitialStateId::ent}) {
        for (InteractionMode mode : {InteractionMode::hpp, InteractionMode::phase}) {
            const TwoWalkerState s = run(make_initial(id), mode, 5);
            auto oracle = svd_spectrum(s);
            std::vector<double> probs(oracle.begin(), oracle.end());
            const double expected = shannon_bits(probs);
            EXPECT_NEAR(entanglement_entropy(s, Subsystem::first), expected, 1e-9);
            EXPECT_NEAR(entanglement_entropy(s, Subsystem::second), expected, 1e-9);
            const auto spectrum = schmidt_spectrum(s);
            double total = 0.0;
            for (double l : spectrum) {
                total += l;
            }
            EXPECT_NEAR(total, 1.0, 1e-8);
        }
    }
}

TEST(Entropy, ShannonBits) {
    EXPECT_EQ(shannon_bits({1.0}), 0.0);
    EXPECT_EQ(shannon_bits({0.5, 0.5, 0.0}), 1.0);
    EXPECT_NEAR(shannon_bits({0.25, 0.25, 0.25, 0.25}), 2.0, 1e-15);
}

TEST(Entropy, UnnormalizedStateRejected) {
    TwoWalkerState s = make_initial(InitialStateId::ent);
    s.add_amplitude(kNorthEast, kNorthWest, {0, 0}, {0, 0}, 0.5);
    EXPECT_THROW(schmidt_spectrum(s), StateCorruption);
}

}  // namespace
}  // namespace qwalk
