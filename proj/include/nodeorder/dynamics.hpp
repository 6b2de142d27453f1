#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nodeorder/graph.hpp"
#include "nodeorder/preorder.hpp"
#include "nodeorder/refinement.hpp"

namespace nodeorder {

// Parameters of the contact-process-style system
//   dy_i/dt = (sum over neighbors j of gamma * y_j) * (1 - y_i) - y_i
// together with the integration window.
struct LogisticParams {
    double gamma = 1.0;
    double horizon = 10.0;
    double dt = 1e-3;

    void validate() const {
        if (!(gamma >= 0)) throw std::invalid_argument("params: gamma must be >= 0");
        if (!(dt > 0)) throw std::invalid_argument("params: dt must be > 0");
        if (!(horizon >= dt)) throw std::invalid_argument("params: horizon must be >= dt");
    }
};

// States recorded at strictly increasing times starting at 0.
struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
};

// CSV with header "t,y0,...,y{N-1}", one row per recorded step, shortest
// round-trip formatting (byte-stable for identical inputs).
std::string trajectory_to_csv(const Trajectory& traj);

using VectorField = std::function<void(const std::vector<double>&, std::vector<double>&)>;

std::vector<double> logistic_field(const Graph& g, double gamma, const std::vector<double>& y);
VectorField logistic_rhs(const Graph& g, double gamma);

// Node-symmetric field built from a kernel F(self, neighbor_values): the
// kernel always receives the neighbor values as a sorted multiset, so the
// result cannot depend on any neighbor ordering.
using SymmetricKernel = std::function<double(double, const std::vector<double>&)>;
std::vector<double> generic_field(const Graph& g, const SymmetricKernel& kernel,
                                  const std::vector<double>& y);

struct IntegrationError : std::runtime_error {
    IntegrationError(const std::string& what, std::size_t at_step)
        : std::runtime_error(what), step(at_step) {}
    std::size_t step;
};

// Classical fixed-step fourth-order Runge-Kutta. Records the state at t = 0
// and after every step; the last step is shortened so the final time equals
// params.horizon exactly. No clamping of any kind: staying inside [0, 1]^N
// is a property of the dynamics that the tests assert, not something the
// integrator enforces. Throws IntegrationError when a state stops being
// finite.
Trajectory integrate_rk4(const VectorField& field, const std::vector<double>& y0,
                         const LogisticParams& params);

// Largest explicit-Euler step for which the update is monotone in every
// coordinate on [0, 1]^N: 1 / (1 + gamma * max degree).
double max_valid_step(const Graph& g, double gamma);

// One explicit-Euler step y + h * field(y). Throws std::invalid_argument
// when h exceeds max_valid_step(g, gamma).
std::vector<double> discrete_step(const Graph& g, double gamma, double h,
                                  const std::vector<double>& y);

// Class-level copy of the system induced by an equitable partition with
// neighbor-count matrix S:  dz_c/dt = (sum_c2 gamma * S[c][c2] * z_c2) * (1 - z_c) - z_c.
struct QuotientSystem {
    std::vector<std::vector<int>> S;
    std::vector<int> sizes;
    double gamma = 1.0;

    QuotientSystem() = default;
    QuotientSystem(const QuotientMatrix& q, double gamma_)
        : S(q.S), sizes(q.sizes), gamma(gamma_) {}
    int K() const { return static_cast<int>(S.size()); }
};

std::vector<double> quotient_field(const QuotientSystem& q, const std::vector<double>& z);
VectorField quotient_rhs(const QuotientSystem& q);

// lift: class values to node values. project: node values back to class
// values, requiring the input to be constant on classes within `tol`.
std::vector<double> lift(const Partition& p, const std::vector<double>& z);
std::vector<double> project(const Partition& p, const std::vector<double>& y,
                            double tol = 1e-9);

// Thrown when an initial condition contradicts the dominance order.
struct OrderViolationError : std::invalid_argument {
    OrderViolationError(const std::string& what, std::vector<std::pair<int, int>> bad_pairs)
        : std::invalid_argument(what), pairs(std::move(bad_pairs)) {}
    std::vector<std::pair<int, int>> pairs;
};

// Pairs (i, j) with r.at(i, j) but y[i] < y[j] - tol.
std::vector<std::pair<int, int>> order_violating_pairs(const PreorderRelation& r,
                                                       const std::vector<double>& y,
                                                       double tol = 0.0);

// Builds the node vector from per-class values and validates it against the
// dominance order of r (classes must come from r). Throws
// OrderViolationError listing every violated pair.
std::vector<double> consistent_initial(const PreorderRelation& r,
                                       const std::vector<double>& class_values,
                                       const Partition& classes);

struct OrderViolation {
    double t;
    int i;
    int j;
    double gap;  // y[j] - y[i] at time t, positive when the order is broken
};

struct MonitorReport {
    std::vector<OrderViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks y_i(t) >= y_j(t) - tol for every recorded time and every related
// pair i over j of r.
MonitorReport order_monitor(const Trajectory& traj, const PreorderRelation& r,
                            double tol = 1e-8);

nlohmann::json violations_to_json(const MonitorReport& report);

// Full simulation bracketed by lifted quotient runs started from the
// per-class minimum and maximum of y0. All three use the same step sequence,
// so for a class-constant y0 they coincide up to rounding.
struct BoundRun {
    Trajectory lower;
    Trajectory upper;
    Trajectory full;
};
BoundRun bound_run(const Graph& g, const LogisticParams& params, const std::vector<double>& y0,
                   const Partition& cep);

}  // namespace nodeorder
