#include "divland/polynomial.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "divland/error.hpp"

namespace divland {

double Polynomial::operator()(double w) const {
    double acc = 0.0;
    for (double c : coeffs) acc = acc * w + c;
    return acc;
}

std::complex<double> Polynomial::operator()(std::complex<double> w) const {
    std::complex<double> acc{0.0, 0.0};
    for (double c : coeffs) acc = acc * w + c;
    return acc;
}

std::vector<std::complex<double>> quadratic_roots(double a, double b, double c) {
    if (a == 0.0) throw NumericalError("quadratic_roots: leading coefficient is zero");
    const double disc = b * b - 4.0 * a * c;
    if (disc >= 0.0) {
        const double s = std::sqrt(disc);
        const double q = -0.5 * (b + std::copysign(s, b));
        if (q == 0.0) return {{0.0, 0.0}, {0.0, 0.0}};
        return {{q / a, 0.0}, {c / q, 0.0}};
    }
    const double re = -b / (2.0 * a);
    const double im = std::sqrt(-disc) / (2.0 * a);
    return {{re, im}, {re, -im}};
}

std::vector<std::complex<double>> Polynomial::roots() const {
    std::size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead] == 0.0) ++lead;
    const int n = static_cast<int>(coeffs.size() - lead) - 1;
    if (n < 1) return {};
    const double a = coeffs[lead];
    if (n == 1) return {{-coeffs[lead + 1] / a, 0.0}};
    if (n == 2) return quadratic_roots(a, coeffs[lead + 1], coeffs[lead + 2]);

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) companion(0, j) = -coeffs[lead + 1 + j] / a;
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
    std::vector<std::complex<double>> out(n);
    for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()[i];
    return out;
}

} // namespace divland
