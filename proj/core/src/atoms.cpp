#include "genfourier/atoms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <nlohmann/json.hpp>

#include "genfourier/errors.hpp"

namespace genfourier {

Params Params::create(double k, int n) {
    if (n < 1) throw std::domain_error("Params: n must be a positive integer");
    if (!std::isfinite(k)) throw std::domain_error("Params: k must be finite");
    const double nu = k * n - n / 2.0;
    if (!(nu > -0.5)) {
        std::ostringstream os;
        os << "Params: standing assumption kn - n/2 > -1/2 violated (k=" << k << ", n=" << n
           << ", nu=" << nu << ")";
        throw std::domain_error(os.str());
    }
    Params p;
    p.k = k;
    p.n = n;
    p.nu = nu;
    p.measure_const = (1.0 / (2.0 * gamma_fn(nu + 1.0))) * std::pow(n / 2.0, nu);
    p.euler_shift = k * n + 1.0 - n / 2.0;
    p.lp_shift = 2.0 * k + 2.0 / n;
    return p;
}

Atom::Atom(Complex c, int p, Rational a, double s) : coeff(c), parity(p), exponent(a), rate(s) {
    if (p != 0 && p != 1) throw std::domain_error("Atom: parity must be 0 or 1");
    if (!(s > 0.0) || !std::isfinite(s)) throw std::domain_error("Atom: rate must be positive");
}

namespace {

using Key = std::tuple<int, std::int64_t, std::int64_t, double>;

Key key_of(const Atom& a) { return {a.parity, a.exponent.num, a.exponent.den, a.rate}; }

std::vector<Atom> canonicalize(std::vector<Atom> in) {
    std::map<Key, Atom> merged;
    for (auto& a : in) {
        if (a.coeff == Complex(0.0, 0.0)) continue;
        auto [it, fresh] = merged.try_emplace(key_of(a), a);
        if (!fresh) it->second.coeff += a.coeff;
    }
    std::vector<Atom> out;
    out.reserve(merged.size());
    for (auto& [k, a] : merged)
        if (a.coeff != Complex(0.0, 0.0)) out.push_back(a);
    return out;
}

}  // namespace

AtomSum::AtomSum(std::vector<Atom> terms) : terms_(canonicalize(std::move(terms))) {}

AtomSum AtomSum::gaussian(double s) {
    return AtomSum({Atom(Complex(1.0, 0.0), 0, Rational(0), s)});
}

AtomSum AtomSum::odd_gaussian(double s) {
    return AtomSum({Atom(Complex(1.0, 0.0), 1, Rational(0), s)});
}

bool AtomSum::singular_at_origin() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const Atom& a) { return a.exponent.num < 0; });
}

AtomSum AtomSum::operator+(const AtomSum& other) const {
    std::vector<Atom> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    return AtomSum(std::move(all));
}

AtomSum AtomSum::operator-(const AtomSum& other) const {
    return *this + other * Complex(-1.0, 0.0);
}

AtomSum AtomSum::operator*(Complex scalar) const {
    std::vector<Atom> all = terms_;
    for (auto& a : all) a.coeff *= scalar;
    return AtomSum(std::move(all));
}

double AtomSum::max_coeff_distance(const AtomSum& other) const {
    const AtomSum diff = *this - other;
    double m = 0.0;
    for (const auto& a : diff.terms()) m = std::max(m, std::abs(a.coeff));
    return m;
}

double AtomSum::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& a : terms_) m = std::max(m, std::abs(a.coeff));
    return m;
}

namespace {

template <typename Real>
std::complex<Real> evaluate_impl(const AtomSum& f, const Params& params, Real x) {
    using C = std::complex<Real>;
    if (x == Real(0)) {
        C total(0, 0);
        for (const auto& a : f.terms()) {
            if (!a.exponent.is_integer())
                throw std::domain_error("evaluate: x=0 with a fractional-exponent term");
            if (a.exponent.num < 0)
                throw std::domain_error("evaluate: x=0 with a negative-exponent term");
            if (a.parity == 0 && a.exponent.num == 0)
                total += C(Real(a.coeff.real()), Real(a.coeff.imag()));
        }
        return total;
    }
    const Real ax = x < Real(0) ? -x : x;
    const Real deformed = std::pow(ax, Real(2.0) / Real(params.n));  // |x|^{2/n}
    C total(0, 0);
    for (const auto& a : f.terms()) {
        Real v = std::pow(ax, Real(a.exponent.num) / Real(a.exponent.den)) *
                 std::exp(-Real(a.rate) * Real(params.n) * deformed);
        if (a.parity == 1) v *= x;
        total += C(Real(a.coeff.real()), Real(a.coeff.imag())) * v;
    }
    return total;
}

}  // namespace

Complex evaluate(const AtomSum& f, const Params& params, double x) {
    const auto v = evaluate_impl<long double>(f, params, static_cast<long double>(x));
    return Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
}

std::complex<long double> evaluate_ld(const AtomSum& f, const Params& params, long double x) {
    return evaluate_impl<long double>(f, params, x);
}

AtomSum apply_mult(const AtomSum& f, const Params& params) {
    std::vector<Atom> out;
    out.reserve(f.terms().size());
    for (const auto& a : f.terms())
        out.emplace_back(a.coeff, a.parity, a.exponent + Rational(2, params.n), a.rate);
    return AtomSum(std::move(out));
}

AtomSum apply_euler(const AtomSum& f, const Params& params) {
    // even (a,s) -> a (a,s) - 2s (a + 2/n, s); odd (a,s) -> (a+1)(a,s) - 2s (a + 2/n, s)
    const Rational step(2, params.n);
    std::vector<Atom> out;
    out.reserve(2 * f.terms().size());
    for (const auto& a : f.terms()) {
        const double lead = a.exponent.value() + (a.parity == 1 ? 1.0 : 0.0);
        out.emplace_back(a.coeff * lead, a.parity, a.exponent, a.rate);
        out.emplace_back(a.coeff * (-2.0 * a.rate), a.parity, a.exponent + step, a.rate);
    }
    return AtomSum(std::move(out));
}

AtomSum apply_L(const AtomSum& f, const Params& params) {
    // Coefficients derived from product/chain rules and the parity reduction of
    // the difference part (vanishes on even atoms, equals -2k f/x^2 on odd):
    //   even (a,s): a(a-1+2k) (a-2/n) - 2s(2a+2k+2/n-1) (a) + 4s^2 (a+2/n)
    //   odd  (a,s): a(a+1+2k) (a-2/n) - 2s(2a+2k+2/n+1) (a) + 4s^2 (a+2/n)
    const Rational step(2, params.n);
    const double k2 = 2.0 * params.k;
    const double two_over_n = 2.0 / params.n;
    std::vector<Atom> out;
    out.reserve(3 * f.terms().size());
    for (const auto& a : f.terms()) {
        const double av = a.exponent.value();
        const double s = a.rate;
        const double down =
            (a.parity == 0) ? av * (av - 1.0 + k2) : av * (av + 1.0 + k2);
        const double mid = -2.0 * s * (2.0 * av + k2 + two_over_n + (a.parity == 0 ? -1.0 : 1.0));
        if (down != 0.0) out.emplace_back(a.coeff * down, a.parity, a.exponent - step, a.rate);
        out.emplace_back(a.coeff * mid, a.parity, a.exponent, a.rate);
        out.emplace_back(a.coeff * (4.0 * s * s), a.parity, a.exponent + step, a.rate);
    }
    return AtomSum(std::move(out));
}

AtomSum apply_H(const AtomSum& f, const Params& params) {
    return apply_euler(f, params) * Complex(params.n, 0.0) + f * Complex(params.euler_shift, 0.0);
}

AtomSum derivative(const AtomSum& f, const Params& params) {
    // d/dx, exact; parity flips and the exponent of the power factor drops.
    const Rational step(2, params.n);
    std::vector<Atom> out;
    out.reserve(2 * f.terms().size());
    for (const auto& a : f.terms()) {
        const double av = a.exponent.value();
        const double s = a.rate;
        if (a.parity == 0) {
            // (|x|^a E)' = a x|x|^{a-2} E - 2s x|x|^{a+2/n-2} E
            if (av != 0.0)
                out.emplace_back(a.coeff * av, 1, a.exponent - Rational(2), a.rate);
            out.emplace_back(a.coeff * (-2.0 * s), 1, a.exponent + step - Rational(2), a.rate);
        } else {
            // (x|x|^a E)' = (1+a)|x|^a E - 2s |x|^{a+2/n} E
            out.emplace_back(a.coeff * (1.0 + av), 0, a.exponent, a.rate);
            out.emplace_back(a.coeff * (-2.0 * s), 0, a.exponent + step, a.rate);
        }
    }
    return AtomSum(std::move(out));
}

AtomSum multiply_by_x(const AtomSum& f) {
    std::vector<Atom> out;
    out.reserve(f.terms().size());
    for (const auto& a : f.terms()) {
        if (a.parity == 0)
            out.emplace_back(a.coeff, 1, a.exponent, a.rate);
        else
            out.emplace_back(a.coeff, 0, a.exponent + Rational(2), a.rate);
    }
    return AtomSum(std::move(out));
}

AtomSum apply_xjdj(const AtomSum& f, int j, const Params& params, const StirlingTable& table) {
    // X^j D^j = (XD)_j = sum_i s(j,i) (x d/dx)^i
    if (j < 0) throw std::domain_error("apply_xjdj: j must be >= 0");
    if (j > table.max_order()) throw CapacityError("apply_xjdj: Stirling table too small");
    AtomSum acc;
    AtomSum power = f;  // euler^i f
    for (int i = 0; i <= j; ++i) {
        const auto c = static_cast<double>(table.s(j, i));
        if (c != 0.0) acc = acc + power * Complex(c, 0.0);
        if (i < j) power = apply_euler(power, params);
    }
    return acc;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

AtomSum sequence_f_m(const AtomSum& f, int m, const Params& params, const StirlingTable& table) {
    if (m < 0) throw std::domain_error("sequence_f_m: m must be >= 0");
    if (m > table.max_order()) throw CapacityError("sequence_f_m: Stirling table too small");
    // f_m = sum_{l<=m} sum_{j<=l} C(m,l) (kn+1-n/2)^{m-l} n^l S(l,j) x^j f^(j)
    std::vector<AtomSum> xjdj(m + 1);
    for (int j = 0; j <= m; ++j) xjdj[j] = apply_xjdj(f, j, params, table);
    AtomSum acc;
    for (int l = 0; l <= m; ++l) {
        const double outer = binomial(m, l) * std::pow(params.euler_shift, m - l) *
                             std::pow(static_cast<double>(params.n), l);
        for (int j = 0; j <= l; ++j) {
            const auto S = static_cast<double>(table.S(l, j));
            if (S != 0.0) acc = acc + xjdj[j] * Complex(outer * S, 0.0);
        }
    }
    return acc;
}

AtomSum sequence_f_tilde_recursive(const AtomSum& f, int beta, int l, const Params& params) {
    if (l < 0 || beta < 0) throw std::domain_error("sequence_f_tilde: beta, l must be >= 0");
    if (l > beta) throw std::domain_error("sequence_f_tilde: need l <= beta");
    AtomSum cur = f;
    for (int i = 1; i <= l; ++i)
        cur = apply_H(cur, params) + cur * Complex(static_cast<double>(beta - i), 0.0);
    return cur;
}

AtomSum sequence_f_tilde(const AtomSum& f, int beta, int l, const Params& params,
                         const StirlingTable& table) {
    if (l < 0 || beta < 0) throw std::domain_error("sequence_f_tilde: beta, l must be >= 0");
    if (l > beta) throw std::domain_error("sequence_f_tilde: need l <= beta");
    if (l > table.max_order()) throw CapacityError("sequence_f_tilde: Stirling table too small");
    // Stirling double sum of the falling factorial ((beta-1)I + H)_l:
    //   f~_{beta,l} = sum_{j<=l} sum_{m<=j} s(l,j) C(j,m) (beta-1)^{j-m} f_m
    std::vector<AtomSum> fm(l + 1);
    for (int m = 0; m <= l; ++m) fm[m] = sequence_f_m(f, m, params, table);
    AtomSum acc;
    for (int j = 0; j <= l; ++j) {
        const auto sj = static_cast<double>(table.s(l, j));
        if (sj == 0.0) continue;
        for (int m = 0; m <= j; ++m) {
            const double w = sj * binomial(j, m) * std::pow(static_cast<double>(beta - 1), j - m);
            acc = acc + fm[m] * Complex(w, 0.0);
        }
    }
    return acc;
}

AtomSum sequence_f_tilde_falling(const AtomSum& f, int beta, int l, const Params& params,
                                 const StirlingTable& table) {
    if (l < 0 || beta < 0) throw std::domain_error("sequence_f_tilde: beta, l must be >= 0");
    if (l > beta) throw std::domain_error("sequence_f_tilde: need l <= beta");
    // falling factorial (lambda)_l at lambda = (beta-1)I + H, expanded through s(l,j)
    AtomSum acc;
    AtomSum power = f;  // ((beta-1)I + H)^j f
    for (int j = 0; j <= l; ++j) {
        const auto c = static_cast<double>(table.s(l, j));
        if (c != 0.0) acc = acc + power * Complex(c, 0.0);
        if (j < l)
            power = apply_H(power, params) + power * Complex(static_cast<double>(beta - 1), 0.0);
    }
    return acc;
}

AtomSum sequence_g_m(const AtomSum& f, int m, const Params& params) {
    if (m < 0) throw std::domain_error("sequence_g_m: m must be >= 0");
    // g_m = sum_l C(m,l) (2k+2/n)^{m-l} (x d/dx)^l f
    AtomSum acc;
    AtomSum power = f;
    for (int l = 0; l <= m; ++l) {
        const double w = binomial(m, l) * std::pow(params.lp_shift, m - l);
        acc = acc + power * Complex(w, 0.0);
        if (l < m) power = apply_euler(power, params);
    }
    return acc;
}

AtomSum sequence_h(const AtomSum& f, int alpha, int beta, const Params& params) {
    if (alpha < 0 || beta < 0) throw std::domain_error("sequence_h: alpha, beta must be >= 0");
    const Complex n_factor(static_cast<double>(params.n), 0.0);
    AtomSum cur = f;
    for (int b = 0; b < beta; ++b) cur = apply_mult(cur, params) * n_factor;
    for (int a = 0; a < alpha; ++a) cur = apply_L(cur, params) * n_factor;
    return cur;
}

std::string atom_sum_to_json(const AtomSum& f) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& a : f.terms()) {
        arr.push_back({{"coeff_re", a.coeff.real()},
                       {"coeff_im", a.coeff.imag()},
                       {"parity", a.parity},
                       {"exponent_num", a.exponent.num},
                       {"exponent_den", a.exponent.den},
                       {"rate", a.rate}});
    }
    return arr.dump();
}

AtomSum atom_sum_from_json(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("atom_sum_from_json: ") + e.what());
    }
    if (!arr.is_array()) throw std::invalid_argument("atom_sum_from_json: expected a JSON array");
    std::vector<Atom> terms;
    terms.reserve(arr.size());
    for (const auto& t : arr) {
        terms.emplace_back(
            Complex(t.at("coeff_re").get<double>(), t.at("coeff_im").get<double>()),
            t.at("parity").get<int>(),
            Rational(t.at("exponent_num").get<std::int64_t>(),
                     t.at("exponent_den").get<std::int64_t>()),
            t.at("rate").get<double>());
    }
    return AtomSum(std::move(terms));
}

}  // namespace genfourier
