#pragma once

#include <memory>
#include <vector>

namespace gltau {

// Interval [lo, hi]; unions are kept sorted and disjoint.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

std::vector<Interval> merge_intervals(std::vector<Interval> xs);
std::vector<Interval> fatten(const std::vector<Interval>& xs, double amount);
double distance_to(const std::vector<Interval>& xs, double x);

// Compactly supported function with derivatives up to a stated order.
class SmoothFunction {
public:
    virtual ~SmoothFunction() = default;

    // l-th derivative at x (l = 0 is the function itself).
    virtual double derivative(int l, double x) const = 0;
    double operator()(double x) const { return derivative(0, x); }

    virtual double support_lo() const = 0;
    virtual double support_hi() const = 0;
    virtual int order() const = 0;  // derivatives available up to this order
};

// The reference bump rho(x) = C exp(-1/(1-x^2)) on (-1,1), scaled to
// integrate to 1, with derivatives up to order 3 in closed form.
// unnormalized() gives the raw exp(-1/(1-x^2)) value.
class Bump : public SmoothFunction {
public:
    // Bump centered at `center` with half-width `width`, optionally scaled
    // so amplitude = peak value (normalized mass when amplitude <= 0).
    Bump(double center = 0.0, double width = 1.0, double amplitude = -1.0);

    double derivative(int l, double x) const override;
    double support_lo() const override { return center_ - width_; }
    double support_hi() const override { return center_ + width_; }
    int order() const override { return 4; }

    static double unnormalized(double x);
    static double mass_constant();  // integral of exp(-1/(1-x^2)) over (-1,1)

private:
    double center_, width_, scale_;
};

// Mollified indicator of a spectral support: f = 1_{K(delta)} * rho_{delta/2}
// with K(delta) the delta-fattening of the given support. Guarantees
// f == 1 on the delta/2-fattening, supp f inside the 2 delta-fattening,
// and 0 <= f <= 1.
class MollifiedIndicator : public SmoothFunction {
public:
    MollifiedIndicator(std::vector<Interval> support, double delta);

    double derivative(int l, double x) const override;
    double support_lo() const override { return lo_; }
    double support_hi() const override { return hi_; }
    int order() const override { return 4; }

    const std::vector<Interval>& fattened_support() const { return k_delta_; }
    double delta() const { return delta_; }

private:
    std::vector<Interval> k_delta_;
    double delta_;
    double lo_, hi_;
};

// Linear interpolation of tabulated f and derivative columns, for
// user-supplied sampled functions on the CLI path.
class SampledFunction : public SmoothFunction {
public:
    // columns[l][i] is the l-th derivative at grid[i]; grid strictly
    // increasing. The function is treated as 0 outside the grid.
    SampledFunction(std::vector<double> grid,
                    std::vector<std::vector<double>> columns);

    double derivative(int l, double x) const override;
    double support_lo() const override { return grid_.front(); }
    double support_hi() const override { return grid_.back(); }
    int order() const override { return static_cast<int>(columns_.size()) - 1; }

private:
    std::vector<double> grid_;
    std::vector<std::vector<double>> columns_;
};

// Cutoff chi of the almost-analytic extension: smooth, even, 1 on
// |y| <= 0.5, 0 for |y| >= 1.
double hs_chi(double y);
double hs_chi_prime(double y);

// Factory matching the operation vocabulary; throws on delta <= 0.
MollifiedIndicator build_mollified_indicator(std::vector<Interval> support,
                                             double delta);

}  // namespace gltau
