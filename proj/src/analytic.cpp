#include "cct/analytic.hpp"

#include <cmath>
#include <numbers>

namespace cct {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

// sin(x t / 2) / x with the small-x limit t/2. The series correction at
// |x| < 1e-12 is below 1e-24 * t^3 / 48, negligible for any t in range.
double half_sinc(double x, double t) {
    if (std::abs(x) < 1e-12) {
        return 0.5 * t;
    }
    return std::sin(0.5 * x * t) / x;
}

}  // namespace

RabiFrequencies rabi_frequencies(const ModelParams& params) {
    params.validate();
    const double d = params.delta;
    const double g = params.g;
    const double c = params.c;
    const double common = d * d + 2.0 * c * c + 4.0 * g * g;
    RabiFrequencies r;
    r.a = std::sqrt(common + 2.0 * kSqrt2 * d * c);
    r.b = std::sqrt(common - 2.0 * kSqrt2 * d * c);
    r.f = std::sqrt(d * d + 4.0 * g * g);
    return r;
}

TransferCoefficients transfer_coefficients(const ModelParams& params, double t) {
    params.validate();
    const auto [ra, rb, rf] = rabi_frequencies(params);
    const double d = params.delta;
    const double g = params.g;
    const double c = params.c;

    // Common phase plus the +/- sqrt(2)c normal-mode shifts.
    const Complex phase = std::exp(Complex(0.0, -(params.omega - 0.5 * d) * t));
    const Complex ep = std::exp(Complex(0.0, -c * t / kSqrt2));
    const Complex em = std::exp(Complex(0.0, c * t / kSqrt2));

    const double ca = std::cos(0.5 * ra * t);
    const double cb = std::cos(0.5 * rb * t);
    const double cf = std::cos(0.5 * rf * t);
    const double sa = half_sinc(ra, t);  // sin(a t/2)/a
    const double sb = half_sinc(rb, t);
    const double sf = half_sinc(rf, t);

    // Exciton-exciton block elements cos + i ((delta + eps)/Omega) sin.
    const Complex ee_a(ca, (d + kSqrt2 * c) * sa);
    const Complex ee_b(cb, (d - kSqrt2 * c) * sb);
    const Complex ee_f(cf, d * sf);
    // Exciton-cavity block elements -i (2g/Omega) sin.
    const Complex ec_a(0.0, -2.0 * g * sa);
    const Complex ec_b(0.0, -2.0 * g * sb);
    const Complex ec_f(0.0, -2.0 * g * sf);

    // Projections of b1 and the receiving mode onto the three blocks:
    // (1/2, 1/sqrt2, 1/2) for site 1, (1/sqrt2, 0, -1/sqrt2) for site 2,
    // (1/2, -1/sqrt2, 1/2) for site 3.
    TransferCoefficients out;
    out.time = t;
    out.u[A1] = phase * 0.25 * (ep * ec_a + em * ec_b + 2.0 * ec_f);
    out.u[B1] = phase * 0.25 * (ep * ee_a + em * ee_b + 2.0 * ee_f);
    out.u[A2] = phase * (kSqrt2 / 4.0) * (ep * ec_a - em * ec_b);
    out.u[B2] = phase * (kSqrt2 / 4.0) * (ep * ee_a - em * ee_b);
    out.u[A3] = phase * 0.25 * (ep * ec_a + em * ec_b - 2.0 * ec_f);
    out.u[B3] = phase * 0.25 * (ep * ee_a + em * ee_b - 2.0 * ee_f);
    return out;
}

double unitarity_defect(const TransferCoefficients& coeffs) {
    double sum = 0.0;
    for (const Complex& u : coeffs.u) {
        sum += std::norm(u);
    }
    return std::abs(sum - 1.0);
}

Complex as_printed_u14(const ModelParams& params, double t) {
    params.validate();
    const auto [ra, rb, rf] = rabi_frequencies(params);
    (void)rf;
    const double d = params.delta;
    const double c = params.c;

    const Complex phase = std::exp(Complex(0.0, -(params.omega - 0.5 * d) * t));
    const Complex ep = std::exp(Complex(0.0, -c * t / kSqrt2));
    const Complex em = std::exp(Complex(0.0, c * t / kSqrt2));

    const double coeff = 2.0 * d + c * kSqrt2;  // same numerator on both terms
    const Complex term_a(kSqrt2 / 4.0 * std::cos(0.5 * ra * t),
                         0.25 * coeff * half_sinc(ra, t));
    const Complex term_b(kSqrt2 / 4.0 * std::cos(0.5 * rb * t),
                         0.25 * coeff * half_sinc(rb, t));
    return phase * (ep * term_a - em * term_b);
}

}  // namespace cct
