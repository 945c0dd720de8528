#pragma once

#include <cstdint>
#include <vector>

namespace genfourier {

// Gamma function for x > 0, Lanczos approximation (relative error ~1e-15 on (0,50]).
double gamma_fn(double x);

// Order of a normalized Bessel function; the standing assumption nu > -1/2.
struct BesselOrder {
    double nu;
    explicit BesselOrder(double nu_);
};

// Largest |z| the power series evaluates reliably (quad-precision accumulation).
inline constexpr double kBesselZMax = 62.0;

// Normalized Bessel function j_nu(z) = Gamma(nu+1) sum_m (-1)^m/(m! Gamma(nu+m+1)) (z/2)^{2m},
// normalized so j_nu(0) = 1. Even in z, |j_nu| <= 1 for nu >= -1/2.
// Absolute accuracy degrades with the alternating-series cancellation e^z eps:
// ~1e-13 for z <= 52, ~1e-10 at z = 58, ~1e-9 at the domain edge.
double normalized_bessel(BesselOrder order, double z);

// d/dz j_nu(z) = -z/(2(nu+1)) j_{nu+1}(z).
double normalized_bessel_derivative(BesselOrder order, double z);

// Exact Stirling numbers up to l_max (guarded: l_max <= 20 fits int64).
class StirlingTable {
public:
    explicit StirlingTable(int l_max);

    int max_order() const { return l_max_; }
    // second kind S(l,j); zero outside the triangle
    std::int64_t S(int l, int j) const;
    // signed first kind s(l,j)
    std::int64_t s(int l, int j) const;

private:
    int l_max_;
    std::vector<std::vector<std::int64_t>> second_;
    std::vector<std::vector<std::int64_t>> first_signed_;
};

StirlingTable stirling_table(int l_max);

// Coefficients of the falling factorial (lambda)_l in the monomial basis;
// equals row l of the signed first-kind table.
std::vector<std::int64_t> falling_factorial_coeffs(int l);

}  // namespace genfourier
