#pragma once

#include <complex>
#include <vector>

namespace divland {

// Real polynomial, coefficients from the highest power down
// (coeffs[0] w^n + ... + coeffs[n]).
struct Polynomial {
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double operator()(double w) const;
    std::complex<double> operator()(std::complex<double> w) const;

    // Closed form for degree <= 2, companion-matrix eigenvalues otherwise.
    std::vector<std::complex<double>> roots() const;
};

// Roots of a w^2 + b w + c with a != 0, cancellation-safe.
std::vector<std::complex<double>> quadratic_roots(double a, double b, double c);

} // namespace divland
