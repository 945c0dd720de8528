#pragma once

namespace genfourier {

// Validated (k, n) pair with the derived constants every module consumes.
//   nu            = kn - n/2            (standing assumption nu > -1/2)
//   measure_const = (1/(2 Gamma(nu+1))) (n/2)^nu
//   euler_shift   = kn + 1 - n/2        (= nu + 1)
//   lp_shift      = 2k + 2/n
struct Params {
    double k = 1.0;
    int n = 1;
    double nu = 0.5;
    double measure_const = 0.0;
    double euler_shift = 1.5;
    double lp_shift = 4.0;

    static Params create(double k, int n);
};

}  // namespace genfourier
