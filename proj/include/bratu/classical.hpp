#pragma once

#include "bratu/branch.hpp"

#include <string>
#include <vector>

namespace bratu::classical {

enum class SolveStatus { Converged, MaxIterations, SingularJacobian, Diverged };

/// Finite-difference Newton solution of u'' + lambda e^u = 0 on a uniform
/// grid of M interior points, u_0 = u_{M+1} = 0 implicit.
struct ClassicalSolution {
    double lambda = 0.0;
    double h = 0.0;              // 1 / (M + 1)
    std::vector<double> u;       // interior values u_1..u_M
    int newton_iterations = 0;
    double residual_norm = 0.0;  // final ||F||_inf
    std::vector<double> residual_history;
    SolveStatus status = SolveStatus::MaxIterations;

    bool converged() const { return status == SolveStatus::Converged; }
    double u_max() const;
    /// Piecewise-linear evaluation of the discrete solution at any x in [0,1].
    double interpolate(double x) const;
    std::vector<double> grid_xs() const;
};

struct NewtonOptions {
    double tolerance = 1e-10;  // on ||F||_inf
    int max_iterations = 50;
};

/// Newton iteration on the tridiagonal system; the Jacobian rows are
/// [1/h^2, -2/h^2 + lambda e^{u_i}, 1/h^2], solved with the Thomas
/// algorithm. Each loop entry (including the terminal convergence check)
/// counts as one iteration.
ClassicalSolution newton_solve(double lambda, std::vector<double> initial_u, int M,
                               const NewtonOptions& options = {});

/// Analytic Bratu solution u(x) = -2 ln[cosh((x-1/2) theta/2) / cosh(theta/4)]
/// where theta solves theta = sqrt(2 lambda) cosh(theta/4); the small root
/// gives the lower branch, the large root the upper branch.
struct ClosedFormSolution {
    double lambda = 0.0;
    double theta = 0.0;
    Branch branch = Branch::Lower;
    double u_max = 0.0;  // u(1/2) = 2 ln cosh(theta/4)

    double operator()(double x) const;
    std::vector<double> sample(const std::vector<double>& xs) const;
};

/// Bisection on the transcendental relation to |residual| < 1e-12.
/// Throws std::domain_error for lambda >= lambda_c and std::invalid_argument
/// for lambda <= 0.
ClosedFormSolution closed_form_solution(double lambda, Branch branch);

/// Fold location: maximum of lambda(theta) = theta^2 / (2 cosh^2(theta/4))
/// by golden-section search, ~3.5138.
double critical_lambda();
double critical_theta();

/// One accepted pseudo arc-length step.
struct ContinuationStep {
    std::vector<double> u;
    double lambda = 0.0;
    std::vector<double> tangent_u;
    double tangent_lambda = 0.0;
    double arc_step = 0.0;  // ds actually used for this step
    double u_max = 0.0;
};

struct ArcLengthOptions {
    double tolerance = 1e-10;
    int max_corrector_iterations = 25;
    int max_step_halvings = 5;
    double min_lambda = 0.0;   // stop once past the fold and lambda falls below
    double max_u = 30.0;       // stop before exp(u) loses meaning
};

struct ArcLengthResult {
    std::vector<ContinuationStep> steps;
    bool completed = true;     // false if the corrector failed after retries
    std::string failure;
};

/// Keller pseudo arc-length continuation from a converged start solution:
/// predictor (u, lambda) += ds * (du, dlambda), corrector Newton on the
/// bordered system [F = 0; du0^T (u-u0) + dl0 (lambda-lambda0) - ds = 0],
/// tridiagonal core eliminated first (bordering algorithm). Traverses the
/// fold where the lambda-tangent changes sign.
ArcLengthResult arc_length_continue(const ClassicalSolution& start, double delta_s,
                                    int n_steps, const ArcLengthOptions& options = {});

} // namespace bratu::classical
