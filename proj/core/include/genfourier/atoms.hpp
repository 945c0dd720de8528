#pragma once

#include <complex>
#include <string>
#include <vector>

#include "genfourier/params.hpp"
#include "genfourier/rational.hpp"
#include "genfourier/special_fn.hpp"

namespace genfourier {

using Complex = std::complex<double>;

// One deformed-Gaussian atom:  coeff * x^parity * |x|^exponent * e^{-rate * n * |x|^{2/n}}.
struct Atom {
    Complex coeff{0.0, 0.0};
    int parity = 0;        // 0 even, 1 odd (one explicit factor x)
    Rational exponent{0};  // power of |x|, >= 0 for regular atoms
    double rate = 1.0;     // s > 0

    Atom() = default;
    Atom(Complex c, int p, Rational a, double s);
};

// Finite sum of atoms, canonicalized: terms sorted by (parity, exponent, rate),
// no two terms share a key, exact-zero coefficients removed. Immutable value type.
class AtomSum {
public:
    AtomSum() = default;
    explicit AtomSum(std::vector<Atom> terms);

    static AtomSum zero() { return AtomSum(); }
    // e^{-s n |x|^{2/n}}
    static AtomSum gaussian(double s);
    // x e^{-s n |x|^{2/n}}
    static AtomSum odd_gaussian(double s);

    const std::vector<Atom>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    // any term with a negative exponent (arises from apply_L on fractional inputs)
    bool singular_at_origin() const;

    AtomSum operator+(const AtomSum& other) const;
    AtomSum operator-(const AtomSum& other) const;
    AtomSum operator*(Complex scalar) const;

    // max |coeff| over the canonical difference; tests use this for exact comparisons
    double max_coeff_distance(const AtomSum& other) const;
    double max_abs_coeff() const;

private:
    std::vector<Atom> terms_;
};

// Pointwise value. x = 0 is allowed only when every term has integer exponent
// (limit rules: odd parity or positive exponent -> 0, even constant -> coeff).
Complex evaluate(const AtomSum& f, const Params& params, double x);

// Same evaluation carried out in long double, for finite-difference oracles.
std::complex<long double> evaluate_ld(const AtomSum& f, const Params& params, long double x);

// |x|^{2/n} f                                  (exponent shift by 2/n)
AtomSum apply_mult(const AtomSum& f, const Params& params);
// x d/dx f                                     (exact on atoms)
AtomSum apply_euler(const AtomSum& f, const Params& params);
// |x|^{2-2/n} Delta_k f,  Delta_k f = f'' + (2k/x) f' - k (f(x)-f(-x))/x^2
AtomSum apply_L(const AtomSum& f, const Params& params);
// H f = n (x d/dx) f + (kn + 1 - n/2) f
AtomSum apply_H(const AtomSum& f, const Params& params);

// raw d/dx and multiplication by x: the independent symbolic route to x^j f^(j)
AtomSum derivative(const AtomSum& f, const Params& params);
AtomSum multiply_by_x(const AtomSum& f);
// X^j D^j f via the falling-factorial expansion of (x d/dx)
AtomSum apply_xjdj(const AtomSum& f, int j, const Params& params, const StirlingTable& table);

// f_m from the Stirling double sum; equals apply_H iterated m times.
AtomSum sequence_f_m(const AtomSum& f, int m, const Params& params, const StirlingTable& table);

// f~_{beta,l}: three mutually consistent routes (they must agree exactly).
AtomSum sequence_f_tilde(const AtomSum& f, int beta, int l, const Params& params,
                         const StirlingTable& table);
AtomSum sequence_f_tilde_recursive(const AtomSum& f, int beta, int l, const Params& params);
AtomSum sequence_f_tilde_falling(const AtomSum& f, int beta, int l, const Params& params,
                                 const StirlingTable& table);

// g_m = sum_l C(m,l) (2k+2/n)^{m-l} (x d/dx)^l f
AtomSum sequence_g_m(const AtomSum& f, int m, const Params& params);

// h_{alpha,beta} = (n|x|^{2-2/n}Delta_k)^alpha (n|x|^{2/n})^beta f
AtomSum sequence_h(const AtomSum& f, int alpha, int beta, const Params& params);

// JSON wire format: array of {coeff_re, coeff_im, parity, exponent_num, exponent_den, rate}
std::string atom_sum_to_json(const AtomSum& f);
AtomSum atom_sum_from_json(const std::string& text);

double binomial(int n, int k);

}  // namespace genfourier
