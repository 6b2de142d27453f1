#include "nodeorder/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace nodeorder {

namespace {

void format_double(std::string& out, double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out += buf;
}

void check_state_size(std::size_t got, std::size_t want, const char* who) {
    if (got != want)
        throw std::invalid_argument(std::string(who) + ": state has " + std::to_string(got) +
                                    " entries, expected " + std::to_string(want));
}

}  // namespace

std::string trajectory_to_csv(const Trajectory& traj) {
    std::string out = "t";
    const std::size_t n = traj.states.empty() ? 0 : traj.states[0].size();
    for (std::size_t i = 0; i < n; ++i) out += ",y" + std::to_string(i);
    out += '\n';
    for (std::size_t row = 0; row < traj.times.size(); ++row) {
        format_double(out, traj.times[row]);
        for (double v : traj.states[row]) {
            out += ',';
            format_double(out, v);
        }
        out += '\n';
    }
    return out;
}

std::vector<double> logistic_field(const Graph& g, double gamma, const std::vector<double>& y) {
    check_state_size(y.size(), g.n(), "logistic_field");
    std::vector<double> f(y.size());
    for (int i = 0; i < g.n(); ++i) {
        double pressure = 0.0;
        for (int j : g.neighbors(i)) pressure += gamma * y[j];
        f[i] = pressure * (1.0 - y[i]) - y[i];
    }
    return f;
}

VectorField logistic_rhs(const Graph& g, double gamma) {
    // Capture a copy so the closure stays valid independent of the argument's
    // lifetime; graphs here are small.
    return [g, gamma](const std::vector<double>& y, std::vector<double>& f) {
        check_state_size(y.size(), g.n(), "logistic_rhs");
        f.resize(y.size());
        for (int i = 0; i < g.n(); ++i) {
            double pressure = 0.0;
            for (int j : g.neighbors(i)) pressure += gamma * y[j];
            f[i] = pressure * (1.0 - y[i]) - y[i];
        }
    };
}

std::vector<double> generic_field(const Graph& g, const SymmetricKernel& kernel,
                                  const std::vector<double>& y) {
    check_state_size(y.size(), g.n(), "generic_field");
    std::vector<double> f(y.size());
    std::vector<double> values;
    for (int i = 0; i < g.n(); ++i) {
        values.clear();
        for (int j : g.neighbors(i)) values.push_back(y[j]);
        std::sort(values.begin(), values.end());
        f[i] = kernel(y[i], values);
    }
    return f;
}

Trajectory integrate_rk4(const VectorField& field, const std::vector<double>& y0,
                         const LogisticParams& params) {
    params.validate();
    const std::size_t n = y0.size();

    Trajectory traj;
    traj.times.push_back(0.0);
    traj.states.push_back(y0);

    // Number of whole steps; a slightly shortened extra step lands exactly on
    // the horizon when dt does not divide it.
    const double ratio = params.horizon / params.dt;
    std::size_t whole = static_cast<std::size_t>(ratio + 1e-9);
    double remainder = params.horizon - static_cast<double>(whole) * params.dt;
    if (remainder <= params.horizon * 1e-12) remainder = 0.0;

    std::vector<double> y = y0;
    std::vector<double> k1(n), k2(n), k3(n), k4(n), scratch(n);

    auto step = [&](double h, double t_next, std::size_t index) {
        field(y, k1);
        for (std::size_t i = 0; i < n; ++i) scratch[i] = y[i] + 0.5 * h * k1[i];
        field(scratch, k2);
        for (std::size_t i = 0; i < n; ++i) scratch[i] = y[i] + 0.5 * h * k2[i];
        field(scratch, k3);
        for (std::size_t i = 0; i < n; ++i) scratch[i] = y[i] + h * k3[i];
        field(scratch, k4);
        for (std::size_t i = 0; i < n; ++i) {
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            if (!std::isfinite(y[i]))
                throw IntegrationError("integrate_rk4: state became non-finite at step " +
                                           std::to_string(index),
                                       index);
        }
        traj.times.push_back(t_next);
        traj.states.push_back(y);
    };

    for (std::size_t s = 0; s < whole; ++s) {
        const double t_next =
            (s + 1 == whole && remainder == 0.0) ? params.horizon
                                                 : static_cast<double>(s + 1) * params.dt;
        step(params.dt, t_next, s);
    }
    if (remainder > 0.0) step(remainder, params.horizon, whole);
    return traj;
}

double max_valid_step(const Graph& g, double gamma) {
    return 1.0 / (1.0 + gamma * g.max_degree());
}

std::vector<double> discrete_step(const Graph& g, double gamma, double h,
                                  const std::vector<double>& y) {
    if (!(h > 0) || h > max_valid_step(g, gamma))
        throw std::invalid_argument("discrete_step: h = " + std::to_string(h) +
                                    " outside (0, " + std::to_string(max_valid_step(g, gamma)) +
                                    "], the monotone range for this graph and gamma");
    const auto f = logistic_field(g, gamma, y);
    std::vector<double> next(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) next[i] = y[i] + h * f[i];
    return next;
}

std::vector<double> quotient_field(const QuotientSystem& q, const std::vector<double>& z) {
    check_state_size(z.size(), q.S.size(), "quotient_field");
    std::vector<double> f(z.size());
    for (std::size_t c = 0; c < z.size(); ++c) {
        double pressure = 0.0;
        for (std::size_t c2 = 0; c2 < z.size(); ++c2)
            pressure += q.gamma * static_cast<double>(q.S[c][c2]) * z[c2];
        f[c] = pressure * (1.0 - z[c]) - z[c];
    }
    return f;
}

VectorField quotient_rhs(const QuotientSystem& q) {
    return [q](const std::vector<double>& z, std::vector<double>& f) {
        f = quotient_field(q, z);
    };
}

std::vector<double> lift(const Partition& p, const std::vector<double>& z) {
    if (static_cast<int>(z.size()) != p.K)
        throw std::invalid_argument("lift: got " + std::to_string(z.size()) +
                                    " class values for " + std::to_string(p.K) + " classes");
    std::vector<double> y(p.size());
    for (int i = 0; i < p.size(); ++i) y[i] = z[p.class_of[i]];
    return y;
}

std::vector<double> project(const Partition& p, const std::vector<double>& y, double tol) {
    check_state_size(y.size(), p.size(), "project");
    std::vector<double> z(p.K);
    for (int c = 0; c < p.K; ++c) {
        const double rep = y[p.classes[c][0]];
        for (int member : p.classes[c])
            if (std::abs(y[member] - rep) > tol)
                throw std::invalid_argument(
                    "project: values not constant on class " + std::to_string(c) + " (node " +
                    std::to_string(member) + " differs by " +
                    std::to_string(std::abs(y[member] - rep)) + ")");
        z[c] = rep;
    }
    return z;
}

std::vector<std::pair<int, int>> order_violating_pairs(const PreorderRelation& r,
                                                       const std::vector<double>& y,
                                                       double tol) {
    check_state_size(y.size(), r.n, "order_violating_pairs");
    std::vector<std::pair<int, int>> bad;
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j)
            if (i != j && r.at(i, j) && y[i] < y[j] - tol) bad.emplace_back(i, j);
    return bad;
}

std::vector<double> consistent_initial(const PreorderRelation& r,
                                       const std::vector<double>& class_values,
                                       const Partition& classes) {
    if (classes.size() != r.n)
        throw std::invalid_argument("consistent_initial: partition and relation sizes differ");
    const auto y = lift(classes, class_values);
    auto bad = order_violating_pairs(r, y);
    if (!bad.empty()) {
        std::string what = "consistent_initial: " + std::to_string(bad.size()) +
                           " pair(s) violate the dominance order, first";
        for (std::size_t k = 0; k < bad.size() && k < 3; ++k)
            what += " (" + std::to_string(bad[k].first) + " over " +
                    std::to_string(bad[k].second) + ")";
        throw OrderViolationError(what, std::move(bad));
    }
    return y;
}

MonitorReport order_monitor(const Trajectory& traj, const PreorderRelation& r, double tol) {
    MonitorReport report;
    const auto pairs = r.related_pairs();
    for (std::size_t row = 0; row < traj.times.size(); ++row) {
        const auto& y = traj.states[row];
        check_state_size(y.size(), r.n, "order_monitor");
        for (const auto& [i, j] : pairs)
            if (y[i] < y[j] - tol)
                report.violations.push_back({traj.times[row], i, j, y[j] - y[i]});
    }
    return report;
}

nlohmann::json violations_to_json(const MonitorReport& report) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& v : report.violations)
        j.push_back({{"t", v.t}, {"i", v.i}, {"j", v.j}, {"gap", v.gap}});
    return j;
}

BoundRun bound_run(const Graph& g, const LogisticParams& params, const std::vector<double>& y0,
                   const Partition& cep) {
    check_state_size(y0.size(), g.n(), "bound_run");
    for (double v : y0)
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("bound_run: initial state outside [0, 1]");
    const QuotientSystem q(quotient_matrix(g, cep), params.gamma);

    std::vector<double> z_lo(cep.K), z_hi(cep.K);
    for (int c = 0; c < cep.K; ++c) {
        double lo = 1.0, hi = 0.0;
        for (int member : cep.classes[c]) {
            lo = std::min(lo, y0[member]);
            hi = std::max(hi, y0[member]);
        }
        z_lo[c] = lo;
        z_hi[c] = hi;
    }

    BoundRun run;
    run.full = integrate_rk4(logistic_rhs(g, params.gamma), y0, params);
    const auto rhs = quotient_rhs(q);
    Trajectory lo_q = integrate_rk4(rhs, z_lo, params);
    Trajectory hi_q = integrate_rk4(rhs, z_hi, params);

    auto lift_all = [&cep](Trajectory& t) {
        for (auto& state : t.states) state = lift(cep, state);
    };
    lift_all(lo_q);
    lift_all(hi_q);
    run.lower = std::move(lo_q);
    run.upper = std::move(hi_q);
    return run;
}

}  // namespace nodeorder
