#include "awggn/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>

#include <math.h>  // lgamma_r

namespace awggn {

void QuadratureSpec::validate() const {
    if (!(relative_tolerance > 0.0) || !std::isfinite(relative_tolerance))
        throw DomainError("quadrature relative tolerance must be positive");
    if (!(absolute_tolerance >= 0.0) || !std::isfinite(absolute_tolerance))
        throw DomainError("quadrature absolute tolerance must be nonnegative");
    if (max_subdivisions < 1) throw DomainError("quadrature needs at least one subdivision");
}

double log_gamma(double x) {
    if (!std::isfinite(x) || x <= 0.0) throw DomainError("log_gamma: argument must be finite and positive");
    int sign = 0;
    // Reentrant form; plain lgamma writes the global signgam.
    return ::lgamma_r(x, &sign);
}

double exp_integral_e1(double x) {
    if (!std::isfinite(x) || x <= 0.0) throw DomainError("exp_integral_e1: argument must be finite and positive");
    constexpr double eps = 1e-16;
    constexpr int max_iter = 500;
    if (x <= 1.0) {
        // E1(x) = -γ - ln x + Σ (-1)^{k+1} x^k / (k k!)
        double sum = 0.0;
        double term = 1.0;  // x^k / k!
        for (int k = 1; k < max_iter; ++k) {
            term *= x / k;
            const double contrib = ((k % 2) ? term : -term) / k;
            sum += contrib;
            if (std::abs(contrib) < eps * std::abs(sum)) break;
        }
        return -std::numbers::egamma - std::log(x) + sum;
    }
    // Modified Lentz evaluation of the continued fraction.
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < max_iter; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < eps) break;
    }
    return h * std::exp(-x);
}

namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxIter = 10000;

// Series for P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int n = 0; n < kMaxIter; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
}

// Continued fraction for Q(a, x), valid for x >= a + 1.
double gamma_q_fraction(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return std::exp(-x + a * std::log(x) - log_gamma(a)) * h;
}

void check_incomplete_gamma_args(double a, double x) {
    if (!std::isfinite(a) || a <= 0.0) throw DomainError("incomplete gamma: order must be positive");
    if (std::isnan(x) || x < 0.0) throw DomainError("incomplete gamma: argument must be nonnegative");
}

}  // namespace

double gamma_p(double a, double x) {
    check_incomplete_gamma_args(a, x);
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_fraction(a, x);
}

double gamma_q(double a, double x) {
    check_incomplete_gamma_args(a, x);
    if (x == 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_fraction(a, x);
}

double gamma_q_inverse(double a, double q) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("gamma_q_inverse: tail probability must lie in (0, 1)");
    double hi = std::max(1.0, a);
    while (gamma_q(a, hi) > q) hi *= 2.0;
    double lo = hi / 2.0;
    while (lo > 1e-300 && gamma_q(a, lo) <= q) lo /= 2.0;
    for (int i = 0; i < 200 && hi - lo > 4e-16 * hi; ++i) {
        const double mid = std::sqrt(lo) * std::sqrt(hi);
        if (gamma_q(a, mid) > q)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

double normal_upper_tail(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

// ---------------------------------------------------------------------------
// Adaptive Gauss–Kronrod integration

namespace {

// 21-point Kronrod abscissae/weights and the embedded 10-point Gauss weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208024389021, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

// A piece of the integration range expressed over a finite interval in u.
struct Piece {
    enum class Kind { finite, upper_infinite, lower_infinite } kind;
    double anchor;  // a for [a, ∞), b for (−∞, b]
};

double eval_piece(const Integrand& f, const Piece& p, double u) {
    double value = 0.0;
    switch (p.kind) {
        case Piece::Kind::finite:
            value = f(u);
            break;
        case Piece::Kind::upper_infinite: {
            const double w = 1.0 - u;
            value = f(p.anchor + u / w) / (w * w);
            break;
        }
        case Piece::Kind::lower_infinite: {
            const double w = 1.0 - u;
            value = f(p.anchor - u / w) / (w * w);
            break;
        }
    }
    if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg << "integrand is not finite at transformed abscissa u=" << u;
        throw DomainError(msg.str());
    }
    return value;
}

struct Segment {
    std::size_t piece;
    double lo, hi;
    double value, error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod_21(const Integrand& f, const std::vector<Piece>& pieces, std::size_t piece, double lo,
                         double hi) {
    const Piece& p = pieces[piece];
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = eval_piece(f, p, center);
    double result_gauss = 0.0;
    double result_kronrod = fc * kWgk[10];
    double resabs = std::abs(result_kronrod);
    std::array<double, 10> fv1{}, fv2{};
    for (int j = 0; j < 5; ++j) {
        const int jtw = 2 * j + 1;
        const double dx = half * kXgk[jtw];
        const double f1 = eval_piece(f, p, center - dx);
        const double f2 = eval_piece(f, p, center + dx);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        result_gauss += kWg[j] * (f1 + f2);
        result_kronrod += kWgk[jtw] * (f1 + f2);
        resabs += kWgk[jtw] * (std::abs(f1) + std::abs(f2));
    }
    for (int j = 0; j < 5; ++j) {
        const int jtwm1 = 2 * j;
        const double dx = half * kXgk[jtwm1];
        const double f1 = eval_piece(f, p, center - dx);
        const double f2 = eval_piece(f, p, center + dx);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        result_kronrod += kWgk[jtwm1] * (f1 + f2);
        resabs += kWgk[jtwm1] * (std::abs(f1) + std::abs(f2));
    }
    const double mean = 0.5 * result_kronrod;
    double resasc = kWgk[10] * std::abs(fc - mean);
    for (int j = 0; j < 10; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));

    result_kronrod *= half;
    result_gauss *= half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);

    double err = std::abs(result_kronrod - result_gauss);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double epmach = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * epmach)) err = std::max(epmach * 50.0 * resabs, err);
    return Segment{piece, lo, hi, result_kronrod, err};
}

}  // namespace

QuadratureResult integrate_detailed(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
    return integrate_detailed(f, a, b, std::span<const double>{}, spec);
}

QuadratureResult integrate_detailed(const Integrand& f, double a, double b, std::span<const double> breakpoints,
                                    const QuadratureSpec& spec) {
    spec.validate();
    if (std::isnan(a) || std::isnan(b)) throw DomainError("integrate: NaN interval endpoint");
    if (a == b) return {};
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }

    std::vector<double> cuts{a};
    for (double x : breakpoints)
        if (std::isfinite(x) && x > a && x < b) cuts.push_back(x);
    // A doubly infinite range without breakpoints is split at the origin.
    if (std::isinf(a) && std::isinf(b) && cuts.size() == 1) cuts.push_back(0.0);
    cuts.push_back(b);
    std::sort(cuts.begin() + 1, cuts.end() - 1);
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Piece> pieces;
    std::priority_queue<Segment> queue;
    double total = 0.0;
    double total_error = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i];
        const double hi = cuts[i + 1];
        Piece piece{Piece::Kind::finite, 0.0};
        double ulo = lo, uhi = hi;
        if (std::isinf(lo)) {
            piece = {Piece::Kind::lower_infinite, hi};
            ulo = 0.0;
            uhi = 1.0;
        } else if (std::isinf(hi)) {
            piece = {Piece::Kind::upper_infinite, lo};
            ulo = 0.0;
            uhi = 1.0;
        }
        pieces.push_back(piece);
        Segment s = gauss_kronrod_21(f, pieces, pieces.size() - 1, ulo, uhi);
        total += s.value;
        total_error += s.error;
        queue.push(s);
    }

    auto tolerance = [&] { return std::max(spec.absolute_tolerance, spec.relative_tolerance * std::abs(total)); };

    int subdivisions = 0;
    std::vector<Segment> exhausted;  // segments too narrow to bisect further
    while (total_error > tolerance() && !queue.empty()) {
        if (subdivisions >= spec.max_subdivisions) break;
        Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            exhausted.push_back(worst);
            continue;
        }
        Segment left = gauss_kronrod_21(f, pieces, worst.piece, worst.lo, mid);
        Segment right = gauss_kronrod_21(f, pieces, worst.piece, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++subdivisions;
    }

    // Re-sum from scratch to shed accumulated cancellation in the running totals.
    total = 0.0;
    total_error = 0.0;
    while (!queue.empty()) {
        total += queue.top().value;
        total_error += queue.top().error;
        queue.pop();
    }
    for (const Segment& s : exhausted) {
        total += s.value;
        total_error += s.error;
    }

    if (total_error > tolerance()) {
        std::ostringstream msg;
        msg << "integrate: no convergence after " << subdivisions << " subdivisions (estimate " << sign * total
            << ", error indicator " << total_error << ")";
        throw QuadratureError(msg.str(), sign * total, total_error);
    }
    return {sign * total, total_error, subdivisions};
}

}  // namespace awggn
