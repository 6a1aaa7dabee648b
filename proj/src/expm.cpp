#include "gltau/expm.hpp"

#include <cmath>

namespace gltau {

namespace {

// Pade numerator coefficients and 1-norm thresholds from Higham,
// "The scaling and squaring method for the matrix exponential revisited".
constexpr double kB3[] = {120.0, 60.0, 12.0, 1.0};
constexpr double kB5[] = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr double kB7[] = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                          25200.0,    1512.0,    56.0,      1.0};
constexpr double kB9[] = {17643225600.0, 8821612800.0, 2075673600.0,
                          302702400.0,   30270240.0,   2162160.0,
                          110880.0,      3960.0,       90.0,
                          1.0};
constexpr double kB13[] = {64764752532480000.0, 32382376266240000.0,
                           7771770303897600.0,  1187353796428800.0,
                           129060195264000.0,   10559470521600.0,
                           670442572800.0,      33522128640.0,
                           1323241920.0,        40840800.0,
                           960960.0,            16380.0,
                           182.0,               1.0};
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

double one_norm(const Eigen::MatrixXcd& a) {
    return a.cwiseAbs().colwise().sum().maxCoeff();
}

// Fills ws.u (odd part, already multiplied by a) and ws.v (even part) of the
// selected Pade approximant and returns the number of squarings.
int pade_uv(const Eigen::MatrixXcd& a, ExpmWorkspace& ws) {
    const Eigen::Index n = a.rows();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    const double nrm = one_norm(a);

    ws.a2.resize(n, n);
    ws.u.resize(n, n);
    ws.v.resize(n, n);
    ws.w.resize(n, n);

    if (nrm <= kTheta9) {
        ws.a2.noalias() = a * a;
        if (nrm <= kTheta3) {
            ws.w = kB3[3] * ws.a2 + kB3[1] * id;
            ws.u.noalias() = a * ws.w;
            ws.v = kB3[2] * ws.a2 + kB3[0] * id;
        } else if (nrm <= kTheta5) {
            ws.a4.resize(n, n);
            ws.a4.noalias() = ws.a2 * ws.a2;
            ws.w = kB5[5] * ws.a4 + kB5[3] * ws.a2 + kB5[1] * id;
            ws.u.noalias() = a * ws.w;
            ws.v = kB5[4] * ws.a4 + kB5[2] * ws.a2 + kB5[0] * id;
        } else if (nrm <= kTheta7) {
            ws.a4.resize(n, n);
            ws.a6.resize(n, n);
            ws.a4.noalias() = ws.a2 * ws.a2;
            ws.a6.noalias() = ws.a2 * ws.a4;
            ws.w = kB7[7] * ws.a6 + kB7[5] * ws.a4 + kB7[3] * ws.a2 + kB7[1] * id;
            ws.u.noalias() = a * ws.w;
            ws.v = kB7[6] * ws.a6 + kB7[4] * ws.a4 + kB7[2] * ws.a2 + kB7[0] * id;
        } else {
            ws.a4.resize(n, n);
            ws.a6.resize(n, n);
            ws.a4.noalias() = ws.a2 * ws.a2;
            ws.a6.noalias() = ws.a2 * ws.a4;
            ws.x.resize(n, n);
            ws.x.noalias() = ws.a2 * ws.a6;  // A^8
            ws.w = kB9[9] * ws.x + kB9[7] * ws.a6 + kB9[5] * ws.a4 + kB9[3] * ws.a2 +
                   kB9[1] * id;
            ws.u.noalias() = a * ws.w;
            ws.v = kB9[8] * ws.x + kB9[6] * ws.a6 + kB9[4] * ws.a4 + kB9[2] * ws.a2 +
                   kB9[0] * id;
        }
        return 0;
    }

    const int squarings =
        std::max(0, static_cast<int>(std::ceil(std::log2(nrm / kTheta13))));
    const double scale = std::ldexp(1.0, -squarings);
    ws.x = a * scale;
    ws.a2.noalias() = ws.x * ws.x;
    ws.a4.resize(n, n);
    ws.a6.resize(n, n);
    ws.a4.noalias() = ws.a2 * ws.a2;
    ws.a6.noalias() = ws.a2 * ws.a4;
    ws.w = kB13[13] * ws.a6 + kB13[11] * ws.a4 + kB13[9] * ws.a2;
    ws.u.noalias() = ws.a6 * ws.w;
    ws.u += kB13[7] * ws.a6 + kB13[5] * ws.a4 + kB13[3] * ws.a2 + kB13[1] * id;
    ws.w.noalias() = ws.x * ws.u;
    ws.u = ws.w;
    ws.w = kB13[12] * ws.a6 + kB13[10] * ws.a4 + kB13[8] * ws.a2;
    ws.v.noalias() = ws.a6 * ws.w;
    ws.v += kB13[6] * ws.a6 + kB13[4] * ws.a4 + kB13[2] * ws.a2 + kB13[0] * id;
    return squarings;
}

}  // namespace

void expm_into(const Eigen::MatrixXcd& a, Eigen::MatrixXcd& out, ExpmWorkspace& ws) {
    const int squarings = pade_uv(a, ws);
    // (V - U) X = (V + U)
    ws.w = ws.v - ws.u;
    ws.v += ws.u;
    out = Eigen::PartialPivLU<Eigen::MatrixXcd>(ws.w).solve(ws.v);
    for (int s = 0; s < squarings; ++s) {
        ws.w.noalias() = out * out;
        out.swap(ws.w);
    }
}

void expm_pair_into(const Eigen::MatrixXcd& a, Eigen::MatrixXcd& fwd,
                    Eigen::MatrixXcd& inv, ExpmWorkspace& ws) {
    const int squarings = pade_uv(a, ws);
    ws.w = ws.v - ws.u;  // denominator of exp(a), numerator of exp(-a)
    ws.v += ws.u;        // numerator of exp(a), denominator of exp(-a)
    fwd = Eigen::PartialPivLU<Eigen::MatrixXcd>(ws.w).solve(ws.v);
    inv = Eigen::PartialPivLU<Eigen::MatrixXcd>(ws.v).solve(ws.w);
    for (int s = 0; s < squarings; ++s) {
        ws.w.noalias() = fwd * fwd;
        fwd.swap(ws.w);
        ws.w.noalias() = inv * inv;
        inv.swap(ws.w);
    }
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
    ExpmWorkspace ws;
    Eigen::MatrixXcd out;
    expm_into(a, out, ws);
    return out;
}

}  // namespace gltau
