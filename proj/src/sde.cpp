#include "gltau/sde.hpp"

#include <algorithm>
#include <cmath>

#include "gltau/errors.hpp"
#include "gltau/expm.hpp"

namespace gltau {

namespace {

struct ProcessState {
    Matrix g;
    Matrix g_inv;
};

void validate_config(const TrajectoryConfig& config) {
    if (config.n < 1) throw ContractError("matrix dimension must be >= 1");
    if (config.p < 1) throw ContractError("process count must be >= 1");
    if (config.t_final < 0.0) throw ContractError("t_final must be >= 0");
    if (config.t_final > 0.0 && config.effective_dt() > config.t_final)
        throw ContractError("dt must not exceed t_final");
    if (static_cast<int>(config.params.sigmas.size()) != config.p)
        throw ContractError("params.sigmas length must equal the process count p");
    double prev = 0.0;
    for (double s : config.snapshot_times) {
        if (s < prev || s > config.t_final)
            throw ContractError("snapshot_times must be sorted within [0, t_final]");
        prev = s;
    }
    for (const Matrix& a : config.deterministic) {
        if (a.rows() != config.n || a.cols() != config.n)
            throw ContractError("deterministic companions must be square of size n");
    }
}

std::vector<double> snapshot_list(const TrajectoryConfig& config) {
    if (!config.snapshot_times.empty()) return config.snapshot_times;
    return {config.t_final};
}

double op_norm(const Matrix& m) {
    // Largest singular value via the Hermitian Gram matrix.
    Eigen::SelfAdjointEigenSolver<Matrix> es(m.adjoint() * m,
                                             Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double one_norm(const Matrix& m) {
    return m.cwiseAbs().colwise().sum().maxCoeff();
}

GlSample make_sample(const TrajectoryConfig& config, double time,
                     std::vector<ProcessState>& states, Scheme scheme,
                     std::uint64_t seed, std::uint64_t stream) {
    GlSample out;
    out.time = time;
    out.seed = seed;
    out.stream = stream;
    out.procs.resize(states.size());
    const Matrix id = Matrix::Identity(config.n, config.n);
    for (std::size_t l = 0; l < states.size(); ++l) {
        ProcessMatrices& pm = out.procs[l];
        pm.g = states[l].g;
        if (scheme == Scheme::ItoEuler) {
            Eigen::PartialPivLU<Matrix> lu(pm.g);
            pm.g_inv = lu.solve(id);
            const double cond = one_norm(pm.g) * one_norm(pm.g_inv);
            if (!(cond < kCondMax))
                throw SingularityError("Ito-Euler iterate condition estimate " +
                                       std::to_string(cond) +
                                       " exceeds cond_max; reduce dt");
        } else {
            pm.g_inv = states[l].g_inv;
            const double defect = (pm.g * pm.g_inv - id).norm();
            const double tol = kInverseTolerance * pm.g.norm() * pm.g_inv.norm();
            if (!(defect <= std::max(tol, 1e-14)))
                throw SingularityError("stored inverse drifted beyond tolerance: " +
                                       std::to_string(defect));
        }
        pm.g_star = pm.g.adjoint();
        pm.g_inv_star = pm.g_inv.adjoint();
    }
    out.det.reserve(config.deterministic.size());
    for (const Matrix& a : config.deterministic) out.det.emplace_back(a, a.adjoint());
    return out;
}

}  // namespace

std::vector<GlSample> simulate(const TrajectoryConfig& config, Rng& rng) {
    validate_config(config);
    const int n = config.n;
    const Matrix id = Matrix::Identity(n, n);
    const Complex drift = -0.5 * (config.params.lambda - config.params.tau);

    std::vector<ProcessState> states(config.p);
    for (auto& st : states) {
        st.g = id;
        st.g_inv = id;
    }

    ExpmWorkspace ws;
    Matrix dz, step_arg, factor, factor_inv, tmp(n, n);
    const double dt = config.effective_dt();
    const bool left = config.orientation == Orientation::LeftInvariant;

    std::vector<GlSample> out;
    double t = 0.0;
    for (double target : snapshot_list(config)) {
        while (t < target - 1e-15 * std::max(1.0, target)) {
            const double h = std::min(dt, target - t);
            for (int l = 0; l < config.p; ++l) {
                const double sigma = config.params.sigmas[l];
                dz = sample_elliptic_increment(config.params, n, h, rng);
                if (config.scheme == Scheme::Geometric) {
                    step_arg = Complex(0.0, sigma) * dz;
                    expm_pair_into(step_arg, factor, factor_inv, ws);
                    if (left) {
                        tmp.noalias() = states[l].g * factor;
                        states[l].g.swap(tmp);
                        tmp.noalias() = factor_inv * states[l].g_inv;
                        states[l].g_inv.swap(tmp);
                    } else {
                        tmp.noalias() = factor * states[l].g;
                        states[l].g.swap(tmp);
                        tmp.noalias() = states[l].g_inv * factor_inv;
                        states[l].g_inv.swap(tmp);
                    }
                } else {
                    step_arg = Complex(0.0, sigma) * dz +
                               (sigma * sigma * drift * h) * id;
                    step_arg += id;  // I + u
                    if (left)
                        tmp.noalias() = states[l].g * step_arg;
                    else
                        tmp.noalias() = step_arg * states[l].g;
                    states[l].g.swap(tmp);
                }
            }
            t += h;
        }
        t = target;
        out.push_back(make_sample(config, target, states, config.scheme,
                                  config.seed, 0));
    }
    return out;
}

std::vector<GlSample> simulate(const TrajectoryConfig& config) {
    Rng rng(config.seed, 0);
    return simulate(config, rng);
}

std::pair<GlSample, DriftReport> simulate_with_inverse_tracking(
    const TrajectoryConfig& config, Rng& rng) {
    if (config.scheme != Scheme::ItoEuler)
        throw ContractError("inverse tracking requires the ItoEuler scheme");
    validate_config(config);

    const int n = config.n;
    const Matrix id = Matrix::Identity(n, n);
    const Complex drift = -0.5 * (config.params.lambda - config.params.tau);
    const bool left = config.orientation == Orientation::LeftInvariant;
    const double dt = config.effective_dt();

    std::vector<ProcessState> g_states(config.p);
    std::vector<Matrix> k_states(config.p, id);
    for (auto& st : g_states) {
        st.g = id;
        st.g_inv = id;
    }

    Matrix dz, u, u2, factor;
    DriftReport report;
    std::vector<GlSample> snaps;
    double t = 0.0;
    GlSample last;
    for (double target : snapshot_list(config)) {
        while (t < target - 1e-15 * std::max(1.0, target)) {
            const double h = std::min(dt, target - t);
            for (int l = 0; l < config.p; ++l) {
                const double sigma = config.params.sigmas[l];
                dz = sample_elliptic_increment(config.params, n, h, rng);
                u = Complex(0.0, sigma) * dz + (sigma * sigma * drift * h) * id;
                u2.noalias() = u * u;
                factor = id - u + u2;
                if (left) {
                    g_states[l].g = g_states[l].g * (id + u);
                    k_states[l] = factor * k_states[l];
                } else {
                    g_states[l].g = (id + u) * g_states[l].g;
                    k_states[l] = k_states[l] * factor;
                }
            }
            t += h;
        }
        t = target;
        last = make_sample(config, target, g_states, Scheme::ItoEuler,
                           config.seed, 0);
        double defect = 0.0;
        for (int l = 0; l < config.p; ++l) {
            const Matrix gk = left ? Matrix(g_states[l].g * k_states[l])
                                   : Matrix(k_states[l] * g_states[l].g);
            defect = std::max(defect, op_norm(gk - id));
        }
        report.per_snapshot.emplace_back(target, defect);
        report.max_defect = std::max(report.max_defect, defect);
    }
    return {last, report};
}

Matrix evaluate_word(const Word& word, const GlSample& sample) {
    const int n = sample.n();
    Matrix result = Matrix::Identity(n, n);
    for (const Letter& l : word.letters) {
        if (l.kind == Letter::Kind::Process) {
            if (l.index < 0 || l.index >= sample.p())
                throw IndexError("process index " + std::to_string(l.index + 1) +
                                 " outside sample arity " + std::to_string(sample.p()));
            result = result * sample.procs[l.index].get(l.variant);
        } else {
            if (l.index < 0 || l.index >= static_cast<int>(sample.det.size()))
                throw IndexError("deterministic index " + std::to_string(l.index + 1) +
                                 " outside sample arity " +
                                 std::to_string(sample.det.size()));
            if (l.variant != Variant::Id && l.variant != Variant::Star)
                throw ContractError("deterministic letters admit only Id and Star");
            result = result * (l.variant == Variant::Id ? sample.det[l.index].first
                                                        : sample.det[l.index].second);
        }
    }
    return result;
}

}  // namespace gltau
