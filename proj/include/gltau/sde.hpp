#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gltau/increments.hpp"
#include "gltau/params.hpp"
#include "gltau/rng.hpp"
#include "gltau/words.hpp"

namespace gltau {

enum class Scheme { Geometric, ItoEuler };
enum class Orientation { LeftInvariant, RightInvariant };

// Inverse accuracy is judged against 1e-8 * |G| * |G^-1| (condition-scaled);
// an Ito-Euler iterate whose 1-norm condition estimate exceeds cond_max
// raises SingularityError.
inline constexpr double kInverseTolerance = 1e-8;
inline constexpr double kCondMax = 1e12;

struct TrajectoryConfig {
    int n = 8;
    int p = 1;
    ModelParams params;
    double t_final = 1.0;
    double dt = 0.0;  // <= 0 selects the default min(1e-2, t_final / 100)
    Scheme scheme = Scheme::Geometric;
    Orientation orientation = Orientation::LeftInvariant;
    std::uint64_t seed = 0;
    std::vector<double> snapshot_times;  // empty selects {t_final}
    std::vector<Matrix> deterministic;   // square companions A_j, size n

    double effective_dt() const {
        if (dt > 0.0) return dt;
        return t_final > 0.0 ? std::min(1e-2, t_final / 100.0) : 1e-2;
    }
};

// One process's realized tuple at a snapshot time.
struct ProcessMatrices {
    Matrix g, g_star, g_inv, g_inv_star;

    const Matrix& get(Variant v) const {
        switch (v) {
            case Variant::Id: return g;
            case Variant::Star: return g_star;
            case Variant::Inv: return g_inv;
            case Variant::InvStar: return g_inv_star;
        }
        return g;
    }
};

struct GlSample {
    double time = 0.0;
    std::vector<ProcessMatrices> procs;
    std::vector<std::pair<Matrix, Matrix>> det;  // (A_j, A_j^*)
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    int n() const { return procs.empty() ? 0 : static_cast<int>(procs[0].g.rows()); }
    int p() const { return static_cast<int>(procs.size()); }
};

struct DriftReport {
    double max_defect = 0.0;
    std::vector<std::pair<double, double>> per_snapshot;  // (time, |GK - I|)
};

// Integrates the p coupled processes and returns one GlSample per snapshot
// time. Geometric: per step G picks up an exponential factor exp(i sigma dZ)
// on the scheme side, with the stored inverse updated by the exact inverse
// factor. ItoEuler: G <- G (I + i sigma dZ - sigma^2 (lambda-tau)/2 h) (left,
// mirrored right), inverse recomputed by linear solve at snapshots.
std::vector<GlSample> simulate(const TrajectoryConfig& config, Rng& rng);
std::vector<GlSample> simulate(const TrajectoryConfig& config);

// Ito-Euler only: co-integrates the inverse-side process K driven by the
// same noise and reports |G K - I| at snapshots. K's step factor is the
// degree-2 inverse of G's Euler factor, which keeps the same drift and
// diffusion as the inverse SDE while tracking G^-1 to first order in dt.
std::pair<GlSample, DriftReport> simulate_with_inverse_tracking(
    const TrajectoryConfig& config, Rng& rng);

// Ordered matrix product substituting each letter of the word with the
// corresponding stored matrix; the empty word yields the identity.
Matrix evaluate_word(const Word& word, const GlSample& sample);

}  // namespace gltau
