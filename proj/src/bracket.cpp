#include "gltau/bracket.hpp"

#include <cmath>
#include <vector>

#include "gltau/errors.hpp"

namespace gltau {

namespace {

Complex tr_n(const Matrix& m) { return m.trace() / static_cast<double>(m.rows()); }

constexpr int cell_index(Variant e1, Variant e2) {
    return 4 * static_cast<int>(e1) + static_cast<int>(e2);
}

}  // namespace

Complex BracketCell::coefficient(const ModelParams& params, double sigma) const {
    const double s2 = sigma * sigma;
    const Complex ct = params.tau - params.lambda;
    const Complex cb = std::conj(params.tau) - params.lambda;
    const double l = params.lambda;
    switch (cell_index(eps1, eps2)) {
        case cell_index(Variant::Id, Variant::Id): return s2 * ct;
        case cell_index(Variant::Id, Variant::Star): return s2 * l;
        case cell_index(Variant::Id, Variant::Inv): return -s2 * ct;
        case cell_index(Variant::Id, Variant::InvStar): return -s2 * l;
        case cell_index(Variant::Star, Variant::Id): return s2 * l;
        case cell_index(Variant::Star, Variant::Star): return s2 * cb;
        case cell_index(Variant::Star, Variant::Inv): return -s2 * l;
        case cell_index(Variant::Star, Variant::InvStar): return -s2 * cb;
        case cell_index(Variant::Inv, Variant::Id): return -s2 * ct;
        case cell_index(Variant::Inv, Variant::Star): return -s2 * l;
        case cell_index(Variant::Inv, Variant::Inv): return s2 * ct;
        case cell_index(Variant::Inv, Variant::InvStar): return s2 * l;
        case cell_index(Variant::InvStar, Variant::Id): return -s2 * l;
        case cell_index(Variant::InvStar, Variant::Star): return -s2 * cb;
        case cell_index(Variant::InvStar, Variant::Inv): return s2 * l;
        case cell_index(Variant::InvStar, Variant::InvStar): return s2 * cb;
    }
    throw ContractError("unreachable bracket cell");
}

Matrix BracketCell::shape(const ProcessMatrices& st, const Matrix& v) const {
    const Matrix id = Matrix::Identity(v.rows(), v.cols());
    switch (cell_index(eps1, eps2)) {
        case cell_index(Variant::Id, Variant::Id):
            return tr_n(st.g * v) * st.g;
        case cell_index(Variant::Id, Variant::Star):
            return tr_n(v) * Matrix(st.g * st.g_star);
        case cell_index(Variant::Id, Variant::Inv):
            return tr_n(v) * id;
        case cell_index(Variant::Id, Variant::InvStar):
            return tr_n(st.g_inv_star * v) * st.g;
        case cell_index(Variant::Star, Variant::Id):
            return tr_n(st.g_star * v * st.g) * id;
        case cell_index(Variant::Star, Variant::Star):
            return tr_n(st.g_star * v) * st.g_star;
        case cell_index(Variant::Star, Variant::Inv):
            return tr_n(st.g_star * v) * st.g_inv;
        case cell_index(Variant::Star, Variant::InvStar):
            return tr_n(st.g_star * v * st.g_inv_star) * id;
        case cell_index(Variant::Inv, Variant::Id):
            return tr_n(v) * id;
        case cell_index(Variant::Inv, Variant::Star):
            return tr_n(st.g_inv * v) * st.g_star;
        case cell_index(Variant::Inv, Variant::Inv):
            return tr_n(st.g_inv * v) * st.g_inv;
        case cell_index(Variant::Inv, Variant::InvStar):
            return tr_n(st.g_inv * v * st.g_inv_star) * id;
        case cell_index(Variant::InvStar, Variant::Id):
            return tr_n(st.g * v) * st.g_inv_star;
        case cell_index(Variant::InvStar, Variant::Star):
            return tr_n(v) * id;
        case cell_index(Variant::InvStar, Variant::Inv):
            return tr_n(v) * Matrix(st.g_inv_star * st.g_inv);
        case cell_index(Variant::InvStar, Variant::InvStar):
            return tr_n(st.g_inv_star * v) * st.g_inv_star;
    }
    throw ContractError("unreachable bracket cell");
}

std::array<BracketEstimate, 16> estimate_bracket_all(const ModelParams& params,
                                                     int n, double dt, int reps,
                                                     Rng& rng) {
    if (reps < 2) throw ContractError("bracket estimation needs reps >= 2");
    if (!(dt > 0.0)) throw ContractError("dt must be positive");

    // Generic base state away from the identity.
    TrajectoryConfig cfg;
    cfg.n = n;
    cfg.p = 1;
    cfg.params = params;
    cfg.params.sigmas = {params.sigmas.at(0)};
    cfg.t_final = 0.5;
    cfg.scheme = Scheme::Geometric;
    const GlSample base = simulate(cfg, rng).back();
    const ProcessMatrices& st = base.procs[0];
    const double sigma = params.sigmas.at(0);

    Matrix v(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            v(i, j) = Complex(rng.gaussian(), rng.gaussian()) * scale;

    std::array<BracketEstimate, 16> out;
    std::array<Matrix, 16> shapes;
    std::array<double, 16> shape_sq;
    for (int c = 0; c < 16; ++c) {
        const BracketCell cell{static_cast<Variant>(c / 4), static_cast<Variant>(c % 4)};
        shapes[c] = cell.shape(st, v);
        shape_sq[c] = shapes[c].squaredNorm();
        out[c].expected = cell.coefficient(params, sigma);
        out[c].reps = reps;
    }

    // Martingale one-step increments frozen at the base state:
    //   dG = i s G dZ, dG* = -i s dZ* G*, dG^-1 = -i s dZ G^-1,
    //   dG^-1,* = i s G^-1,* dZ*.
    std::array<std::vector<Complex>, 16> fits;
    for (auto& f : fits) f.reserve(reps);
    const Complex is(0.0, sigma);
    Matrix dz, dg[4];
    for (int r = 0; r < reps; ++r) {
        dz = sample_elliptic_increment(params, n, dt, rng);
        dg[0] = is * (st.g * dz);
        dg[1] = -is * (dz.adjoint() * st.g_star);
        dg[2] = -is * (dz * st.g_inv);
        dg[3] = is * (st.g_inv_star * dz.adjoint());
        for (int c = 0; c < 16; ++c) {
            const Matrix m = dg[c / 4] * v * dg[c % 4] / dt;
            const Complex proj = (shapes[c].conjugate().cwiseProduct(m)).sum() / shape_sq[c];
            fits[c].push_back(proj);
        }
    }

    for (int c = 0; c < 16; ++c) {
        Complex mean = 0.0;
        for (const Complex& f : fits[c]) mean += f;
        mean /= static_cast<double>(reps);
        double var = 0.0;
        for (const Complex& f : fits[c]) var += std::norm(f - mean);
        var /= static_cast<double>(reps - 1);
        out[c].fitted = mean;
        out[c].se = std::sqrt(var / reps);
    }
    return out;
}

BracketEstimate estimate_bracket(Variant eps1, Variant eps2,
                                 const ModelParams& params, int n, double dt,
                                 int reps, Rng& rng) {
    const auto all = estimate_bracket_all(params, n, dt, reps, rng);
    return all[cell_index(eps1, eps2)];
}

}  // namespace gltau
