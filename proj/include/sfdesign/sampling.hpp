#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sfdesign/error.hpp"
#include "sfdesign/level_matrix.hpp"
#include "sfdesign/matrix.hpp"
#include "sfdesign/oa.hpp"
#include "sfdesign/rng.hpp"

namespace sfdesign {

/// Deterministic test function on the unit cube with optional analytic
/// metadata for cross-checks.
struct TestFunction {
    std::string name;
    int arity = 0;
    std::function<double(const std::vector<double>&)> eval;
};

/// Built-in corpus chosen to separate the main-effect and interaction
/// variance contributions: additive linear, additive monotone nonlinear,
/// a pure two-factor interaction (zero main effects), and a non-monotone
/// additive control.
inline TestFunction test_function(const std::string& name, int k) {
    TestFunction f;
    f.name = name;
    f.arity = k;
    if (name == "additive-linear") {
        f.eval = [](const std::vector<double>& x) {
            double s = 0.0;
            for (double v : x) s += v;
            return s;
        };
    } else if (name == "additive-exp") {
        f.eval = [](const std::vector<double>& x) {
            double s = 0.0;
            for (double v : x) s += std::exp(v);
            return s;
        };
    } else if (name == "interaction") {
        if (k < 2) fail(errc::invalid_dimension, "interaction test function needs k >= 2");
        f.eval = [](const std::vector<double>& x) { return (x[0] - 0.5) * (x[1] - 0.5); };
    } else if (name == "nonmonotone") {
        f.eval = [](const std::vector<double>& x) {
            double s = 0.0;
            for (double v : x) s += (v - 0.5) * (v - 0.5);
            return s;
        };
    } else if (name == "constant") {
        f.eval = [](const std::vector<double>&) { return 1.0; };
    } else {
        fail(errc::unknown_metric, "unknown test function: " + name);
    }
    return f;
}

inline double estimate_mean(const TestFunction& f, const DesignMatrix& D) {
    if (D.cols != f.arity) fail(errc::dimension_mismatch, "estimate_mean: arity mismatch");
    double s = 0.0;
    std::vector<double> x(D.cols);
    for (int i = 0; i < D.rows; ++i) {
        for (int j = 0; j < D.cols; ++j) x[j] = D.at(i, j);
        s += f.eval(x);
    }
    return s / D.rows;
}

/// How the n points of one replication are drawn.
struct SamplingScheme {
    enum Kind { srs, lhs, oalhs } kind = lhs;
    bool midpoint = false;           // lattice-sample variant of lhs
    OrthogonalArray oa;              // required for oalhs

    static SamplingScheme SRS() { return {srs, false, {}}; }
    static SamplingScheme LHS(bool midpoint_jitter = false) { return {lhs, midpoint_jitter, {}}; }
    static SamplingScheme OALHS(OrthogonalArray a) { return {oalhs, false, std::move(a)}; }
};

/// One realization of a scheme: n points in [0,1)^k.
inline DesignMatrix realize_scheme(const SamplingScheme& scheme, int n, int k, Rng& rng) {
    switch (scheme.kind) {
        case SamplingScheme::srs: {
            DesignMatrix D(n, k);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < k; ++j) D.at(i, j) = rng.unit();
            return D;
        }
        case SamplingScheme::lhs: {
            LevelMatrix L = random_latin_hypercube(n, k, rng.next_u64());
            JitterMode m = scheme.midpoint ? JitterMode::Midpoint() : JitterMode::Random(rng.next_u64());
            return to_unit_cube(L, m);
        }
        case SamplingScheme::oalhs: {
            if (scheme.oa.n != n || scheme.oa.k != k)
                fail(errc::shape_mismatch, "realize_scheme: orthogonal array shape must match (n, k)");
            LevelMatrix L = oa_based_lh(scheme.oa, rng.next_u64());
            return to_unit_cube(L, JitterMode::Random(rng.next_u64()));
        }
    }
    fail(errc::invalid_dimension, "realize_scheme: bad scheme");
}

struct VarianceExperiment {
    double variance = 0.0;        // Var over replications of the mean estimate
    double stderr_jackknife = 0.0;
    double mean_of_means = 0.0;
    int replications = 0;
};

/// Repeatedly draw the scheme, estimate the mean, and report the
/// across-replication variance with a jackknife standard error.
/// Replications use split RNG streams, so the reduction order is fixed.
inline VarianceExperiment variance_experiment(const TestFunction& f, int n, int k,
                                              const SamplingScheme& scheme, int replications,
                                              std::uint64_t seed) {
    if (replications < 100) fail(errc::invalid_dimension, "variance_experiment: replications >= 100");
    Rng master(seed);
    std::vector<double> means(replications);
    for (int r = 0; r < replications; ++r) {
        Rng rng = master.split(r);
        means[r] = estimate_mean(f, realize_scheme(scheme, n, k, rng));
    }
    const int R = replications;
    double mbar = 0.0;
    for (double m : means) mbar += m;
    mbar /= R;
    double ss = 0.0;
    for (double m : means) ss += (m - mbar) * (m - mbar);
    const double var = ss / (R - 1);

    // leave-one-out variances
    double theta_bar = 0.0;
    std::vector<double> theta(R);
    for (int i = 0; i < R; ++i) {
        const double mbar_i = (mbar * R - means[i]) / (R - 1);
        const double ss_i = ss - (means[i] - mbar) * (means[i] - mbar) * R / (R - 1.0);
        theta[i] = ss_i / (R - 2);
        theta_bar += theta[i];
        (void)mbar_i;
    }
    theta_bar /= R;
    double jk = 0.0;
    for (double t : theta) jk += (t - theta_bar) * (t - theta_bar);
    VarianceExperiment out;
    out.variance = var;
    out.stderr_jackknife = std::sqrt(jk * (R - 1) / R);
    out.mean_of_means = mbar;
    out.replications = R;
    return out;
}

/// Tensor-grid midpoint quadrature of Var[f_j], the main-effect variance
/// f_j(x_j) = E[f | x_j] - mu. The oracle side of the variance-reduction
/// identities.
inline double main_effect_variance(const TestFunction& f, int j, int quadrature_points) {
    if (quadrature_points < 64) fail(errc::invalid_dimension, "main_effect_variance: need >= 64 points");
    const int k = f.arity, Q = quadrature_points;
    if (j < 0 || j >= k) fail(errc::invalid_dimension, "main_effect_variance: bad coordinate");
    // conditional means on a 1-D grid for x_j, averaging over a tensor grid
    // of the other coordinates
    std::vector<double> cond(Q, 0.0);
    std::vector<int> idx(k, 0);
    std::vector<double> x(k);
    double mu = 0.0;
    for (int g = 0; g < Q; ++g) {
        x[j] = (g + 0.5) / Q;
        std::fill(idx.begin(), idx.end(), 0);
        double acc = 0.0;
        std::int64_t cells = 0;
        for (;;) {
            for (int d = 0; d < k; ++d)
                if (d != j) x[d] = (idx[d] + 0.5) / Q;
            acc += f.eval(x);
            ++cells;
            int d = 0;
            while (d < k) {
                if (d == j) { ++d; continue; }
                if (++idx[d] < Q) break;
                idx[d] = 0;
                ++d;
            }
            if (d == k) break;
        }
        cond[g] = acc / static_cast<double>(cells);
        mu += cond[g];
    }
    mu /= Q;
    double var = 0.0;
    for (double c : cond) var += (c - mu) * (c - mu);
    return var / Q;
}

/// Tensor-grid midpoint quadrature of the total variance Var[f].
inline double function_variance(const TestFunction& f, int quadrature_points) {
    const int k = f.arity, Q = quadrature_points;
    std::vector<int> idx(k, 0);
    std::vector<double> x(k);
    double sum = 0.0, sumsq = 0.0;
    std::int64_t cells = 0;
    for (;;) {
        for (int d = 0; d < k; ++d) x[d] = (idx[d] + 0.5) / Q;
        const double v = f.eval(x);
        sum += v;
        sumsq += v * v;
        ++cells;
        int d = 0;
        while (d < k && ++idx[d] == Q) idx[d++] = 0;
        if (d == k) break;
    }
    const double mean = sum / cells;
    return sumsq / cells - mean * mean;
}

}  // namespace sfdesign
