#pragma once

#include <graphring/clique.hpp>
#include <graphring/graph.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace graphring {

inline constexpr std::size_t theta_max_vertices = 64;

struct ThetaOptions {
    double gap_tol = 1e-6;
    std::size_t max_iterations = 50000;
    /// Certified bounds are recomputed every this many iterations.
    std::size_t check_every = 10;
};

/// Enclosure of the Lovász number: lower comes from a primal feasible matrix, upper from a
/// dual feasible point. converged means upper - lower <= gap_tol.
struct ThetaResult {
    double lower = 0;
    double upper = 0;
    std::size_t iterations = 0;
    bool converged = true;

    [[nodiscard]] auto value() const -> double { return 0.5 * (lower + upper); }
    [[nodiscard]] auto gap() const -> double { return upper - lower; }
};

namespace detail {
    // Alternating-direction augmented Lagrangian on the dual SDP (Wen, Goldfarb and Yin):
    //   min <-J, X>  s.t.  tr X = 1,  sqrt(2) X_uv = 0 for uv in E,  X psd.
    // The constraint operator has orthogonal rows, so the y-update is a diagonal solve.
    class ThetaAdmm {
    public:
        ThetaAdmm(const Graph & g, const ThetaOptions & options) :
            _n(g.size()), _edges(g.edges()), _opt(options), _independent(static_cast<double>(alpha(g)))
        {
        }

        auto run() -> ThetaResult
        {
            const auto n = static_cast<Eigen::Index>(_n);
            const double root2 = std::sqrt(2.0);
            Eigen::MatrixXd c = -Eigen::MatrixXd::Ones(n, n);
            Eigen::MatrixXd x = Eigen::MatrixXd::Identity(n, n) / static_cast<double>(n);
            Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
            double y0 = 0;
            std::vector<double> ye(_edges.size(), 0.0);
            double mu = 1.0;

            // X = 1_S 1_S' / |S| for a maximum independent set S is primal feasible with value |S|
            ThetaResult best;
            best.lower = _independent;
            best.upper = static_cast<double>(_n) + 1;
            best.converged = false;

            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(n);
            for (std::size_t it = 1; it <= _opt.max_iterations; ++it) {
                // y = -(AA*)^{-1} (mu (A(X) - b) + A(S - C))
                Eigen::MatrixXd sc = s - c;
                y0 = -(mu * (x.trace() - 1.0) + sc.trace()) / static_cast<double>(n);
                for (std::size_t k = 0; k < _edges.size(); ++k) {
                    auto [u, v] = _edges[k];
                    ye[k] = -(mu * root2 * x(u, v) + root2 * sc(u, v));
                }
                Eigen::MatrixXd v = c - mu * x;
                v.diagonal().array() -= y0;
                for (std::size_t k = 0; k < _edges.size(); ++k) {
                    auto [a, b] = _edges[k];
                    v(a, b) -= ye[k] / root2;
                    v(b, a) -= ye[k] / root2;
                }
                eig.compute(v);
                const auto & vals = eig.eigenvalues();
                const auto & vecs = eig.eigenvectors();
                Eigen::VectorXd pos = vals.cwiseMax(0.0);
                Eigen::VectorXd neg = vals.cwiseMin(0.0);
                s = vecs * pos.asDiagonal() * vecs.transpose();
                Eigen::MatrixXd x_new = -(vecs * neg.asDiagonal() * vecs.transpose()) / mu;

                if (it % _opt.check_every == 0 || it == _opt.max_iterations) {
                    auto lo = certified_lower(x_new);
                    auto hi = certified_upper(ye);
                    best.lower = std::max(best.lower, lo);
                    best.upper = std::min(best.upper, hi);
                    best.iterations = it;
                    if (best.upper - best.lower <= _opt.gap_tol) {
                        best.converged = true;
                        return best;
                    }
                    // balance primal and dual residuals
                    double primal = primal_residual(x_new);
                    double dual = (s - c + adjoint(y0, ye)).norm();
                    if (primal > 2 * dual)
                        mu = std::min(mu * 1.2, 1e4);
                    else if (dual > 2 * primal)
                        mu = std::max(mu / 1.2, 1e-4);
                }
                x = std::move(x_new);
            }
            return best;
        }

    private:
        auto adjoint(double y0, const std::vector<double> & ye) const -> Eigen::MatrixXd
        {
            const auto n = static_cast<Eigen::Index>(_n);
            const double root2 = std::sqrt(2.0);
            Eigen::MatrixXd m = y0 * Eigen::MatrixXd::Identity(n, n);
            for (std::size_t k = 0; k < _edges.size(); ++k) {
                auto [a, b] = _edges[k];
                m(a, b) += ye[k] / root2;
                m(b, a) += ye[k] / root2;
            }
            return m;
        }

        auto primal_residual(const Eigen::MatrixXd & x) const -> double
        {
            double r = (x.trace() - 1.0) * (x.trace() - 1.0);
            for (auto [a, b] : _edges)
                r += 2.0 * x(a, b) * x(a, b);
            return std::sqrt(r);
        }

        // Any edge multipliers give theta <= lambda_max(J + Y).
        auto certified_upper(const std::vector<double> & ye) const -> double
        {
            const auto n = static_cast<Eigen::Index>(_n);
            Eigen::MatrixXd m = Eigen::MatrixXd::Ones(n, n);
            const double root2 = std::sqrt(2.0);
            for (std::size_t k = 0; k < _edges.size(); ++k) {
                auto [a, b] = _edges[k];
                m(a, b) += ye[k] / root2;
                m(b, a) += ye[k] / root2;
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e(m, Eigen::EigenvaluesOnly);
            return e.eigenvalues().maxCoeff();
        }

        // Zero the edge entries, shift by the most negative eigenvalue to restore
        // semidefiniteness, and evaluate <J,X>/tr X on the resulting feasible direction.
        auto certified_lower(Eigen::MatrixXd x) const -> double
        {
            for (auto [a, b] : _edges) {
                x(a, b) = 0;
                x(b, a) = 0;
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e(x, Eigen::EigenvaluesOnly);
            double shift = std::max(0.0, -e.eigenvalues().minCoeff());
            const double n = static_cast<double>(_n);
            double trace = x.trace() + shift * n;
            if (trace <= 0)
                return 1.0;
            return (x.sum() + shift * n) / trace;
        }

        std::size_t _n;
        std::vector<Edge> _edges;
        ThetaOptions _opt;
        double _independent;
    };
}

/// Lovász number of g: max <J,X> over psd X with tr X = 1 and X_uv = 0 on edges.
inline auto lovasz_theta(const Graph & g, const ThetaOptions & options = {}) -> ThetaResult
{
    if (g.size() > theta_max_vertices)
        throw Error(ErrorKind::SizeCap, "theta on " + std::to_string(g.size()) + " vertices (limit " +
                std::to_string(theta_max_vertices) + ")");
    if (g.size() == 0)
        return {};
    if (g.size() == 1)
        return {1.0, 1.0, 0, true};
    return detail::ThetaAdmm(g, options).run();
}

inline auto lovasz_theta(const Graph & g, double gap_tol) -> ThetaResult
{
    ThetaOptions o;
    o.gap_tol = gap_tol;
    return lovasz_theta(g, o);
}

/// theta of the complement; ω(G) <= theta_bar(G) <= χ_f(G).
inline auto theta_bar(const Graph & g, const ThetaOptions & options = {}) -> ThetaResult
{
    return lovasz_theta(complement(g), options);
}

inline auto theta_bar(const Graph & g, double gap_tol) -> ThetaResult { return lovasz_theta(complement(g), gap_tol); }

} // namespace graphring
