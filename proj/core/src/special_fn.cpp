#include "genfourier/special_fn.hpp"

#include <atomic>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "genfourier/errors.hpp"

namespace genfourier {

namespace {

// Lanczos g=7, n=9 coefficient set.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_gamma(double x) {
    // valid for x >= 0.5
    const double g = 7.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
    const double t = x - 0.5 + g;
    return std::sqrt(2.0 * M_PI) * std::pow(t, x - 0.5) * std::exp(-t) * acc;
}

}  // namespace

double gamma_fn(double x) {
    if (!std::isfinite(x) || x <= 0.0) {
        std::ostringstream os;
        os << "gamma_fn: argument must be positive and finite, got " << x;
        throw std::domain_error(os.str());
    }
    if (x < 0.5) {
        // reflection keeps the Lanczos evaluation at arguments >= 0.5
        return M_PI / (std::sin(M_PI * x) * lanczos_gamma(1.0 - x));
    }
    return lanczos_gamma(x);
}

BesselOrder::BesselOrder(double nu_) : nu(nu_) {
    if (!(nu_ > -0.5) || !std::isfinite(nu_)) {
        std::ostringstream os;
        os << "BesselOrder: need nu > -1/2, got " << nu_;
        throw std::domain_error(os.str());
    }
}

namespace {

// The alternating series loses ~z digits of cancellation; accumulate in a
// type whose epsilon keeps the absolute error below ~1e-12 over the domain.
//   long double (eps ~1e-19): fine to z ~ 25
//   __float128 (eps ~2e-34):  fine to z ~ 62
template <typename Real>
double bessel_series(double nu, double z) {
    const Real z2 = Real(z) * Real(z) / Real(4);
    Real term = Real(1);
    Real sum = Real(1);
    Real comp = Real(0);  // Kahan compensation
    int below = 0;
    const int kMaxTerms = 400;
    for (int m = 0; m < kMaxTerms; ++m) {
        term *= -z2 / (Real(m + 1) * (Real(nu) + Real(m + 1)));
        const Real y = term - comp;
        const Real t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        Real mag = term < Real(0) ? -term : term;
        Real smag = sum < Real(0) ? -sum : sum;
        if (smag < Real(1e-300)) smag = Real(1e-300);
        if (mag <= smag * Real(std::numeric_limits<double>::epsilon())) {
            // two consecutive sub-epsilon terms before accepting
            if (++below >= 2) return static_cast<double>(sum);
        } else {
            below = 0;
        }
    }
    std::ostringstream os;
    os << "normalized_bessel: series did not meet the truncation criterion, nu=" << nu
       << " z=" << z;
    throw ConvergenceError(os.str());
}

}  // namespace

namespace {

// Above the long-double cancellation limit the series needs quad precision,
// which is software arithmetic and slow. The first call above the switch
// builds a uniform table over [14, kBesselZMax] for that order from the quad
// series; 6-point Lagrange interpolation keeps the error near 5e-15, far below
// the series' own cancellation floor up there. Routing every large-z call
// through the table keeps results independent of call order and thread count.
constexpr double kSeriesSwitch = 14.0;
constexpr double kTablePitch = 0.01;

struct OrderEntry {
    std::mutex build_mutex;
    std::atomic<bool> built{false};
    double z0 = 0.0;
    std::vector<double> vals;
};

OrderEntry& entry_for(double nu) {
    static std::mutex map_mutex;
    static std::map<std::int64_t, std::unique_ptr<OrderEntry>> entries;
    std::int64_t key;
    static_assert(sizeof(key) == sizeof(nu));
    std::memcpy(&key, &nu, sizeof(key));
    std::lock_guard<std::mutex> lock(map_mutex);
    auto& slot = entries[key];
    if (!slot) slot = std::make_unique<OrderEntry>();
    return *slot;
}

void build_table(OrderEntry& e, double nu) {
    std::lock_guard<std::mutex> lock(e.build_mutex);
    if (e.built.load()) return;
    const double lo = kSeriesSwitch - 4.0 * kTablePitch;
    const double hi = kBesselZMax + 4.0 * kTablePitch;
    const auto count = static_cast<std::size_t>((hi - lo) / kTablePitch) + 2;
    std::vector<double> vals(count);
    for (std::size_t i = 0; i < count; ++i)
        vals[i] = bessel_series<__float128>(nu, lo + i * kTablePitch);
    e.z0 = lo;
    e.vals = std::move(vals);
    e.built.store(true);
}

double interp_table(const OrderEntry& e, double z) {
    const double t = (z - e.z0) / kTablePitch;
    auto i0 = static_cast<std::ptrdiff_t>(t) - 2;
    if (i0 < 0) i0 = 0;
    if (i0 + 6 > static_cast<std::ptrdiff_t>(e.vals.size()))
        i0 = static_cast<std::ptrdiff_t>(e.vals.size()) - 6;
    double acc = 0.0;
    for (std::ptrdiff_t a = i0; a < i0 + 6; ++a) {
        double lag = 1.0;
        const double za = e.z0 + a * kTablePitch;
        for (std::ptrdiff_t b = i0; b < i0 + 6; ++b) {
            if (b == a) continue;
            const double zb = e.z0 + b * kTablePitch;
            lag *= (z - zb) / (za - zb);
        }
        acc += lag * e.vals[a];
    }
    return acc;
}

}  // namespace

double normalized_bessel(BesselOrder order, double z) {
    if (!std::isfinite(z)) throw std::domain_error("normalized_bessel: non-finite argument");
    const double az = std::fabs(z);
    if (az > kBesselZMax) {
        std::ostringstream os;
        os << "normalized_bessel: |z|=" << az << " outside validated domain |z|<=" << kBesselZMax
           << " (nu=" << order.nu << ")";
        throw ConvergenceError(os.str());
    }
    if (az == 0.0) return 1.0;
    if (az <= kSeriesSwitch) return bessel_series<long double>(order.nu, az);
    OrderEntry& e = entry_for(order.nu);
    if (!e.built.load(std::memory_order_acquire)) build_table(e, order.nu);
    return interp_table(e, az);
}

double normalized_bessel_derivative(BesselOrder order, double z) {
    return -z / (2.0 * (order.nu + 1.0)) * normalized_bessel(BesselOrder(order.nu + 1.0), z);
}

StirlingTable::StirlingTable(int l_max) : l_max_(l_max) {
    if (l_max < 0) throw std::domain_error("StirlingTable: l_max must be >= 0");
    if (l_max > 20)
        throw CapacityError("StirlingTable: l_max > 20 would overflow 64-bit entries");
    second_.assign(l_max + 1, {});
    first_signed_.assign(l_max + 1, {});
    for (int l = 0; l <= l_max; ++l) {
        second_[l].assign(l + 1, 0);
        first_signed_[l].assign(l + 1, 0);
    }
    second_[0][0] = 1;
    first_signed_[0][0] = 1;
    for (int l = 1; l <= l_max; ++l) {
        for (int j = 0; j <= l; ++j) {
            // S(l,j) = j S(l-1,j) + S(l-1,j-1)
            std::int64_t v = 0;
            if (j <= l - 1) v += static_cast<std::int64_t>(j) * second_[l - 1][j];
            if (j >= 1 && j - 1 <= l - 1) v += second_[l - 1][j - 1];
            second_[l][j] = v;
            // s(l,j) = s(l-1,j-1) - (l-1) s(l-1,j)
            std::int64_t w = 0;
            if (j >= 1 && j - 1 <= l - 1) w += first_signed_[l - 1][j - 1];
            if (j <= l - 1) w -= static_cast<std::int64_t>(l - 1) * first_signed_[l - 1][j];
            first_signed_[l][j] = w;
        }
    }
}

std::int64_t StirlingTable::S(int l, int j) const {
    if (l < 0 || l > l_max_) throw CapacityError("StirlingTable::S: order out of range");
    if (j < 0 || j > l) return 0;
    return second_[l][j];
}

std::int64_t StirlingTable::s(int l, int j) const {
    if (l < 0 || l > l_max_) throw CapacityError("StirlingTable::s: order out of range");
    if (j < 0 || j > l) return 0;
    return first_signed_[l][j];
}

StirlingTable stirling_table(int l_max) { return StirlingTable(l_max); }

std::vector<std::int64_t> falling_factorial_coeffs(int l) {
    StirlingTable t(l);
    std::vector<std::int64_t> row(l + 1);
    for (int j = 0; j <= l; ++j) row[j] = t.s(l, j);
    return row;
}

}  // namespace genfourier
