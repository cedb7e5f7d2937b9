#pragma once

#include "fzzt/mastermat/matrix.hpp"

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fzzt::spectra {

/// An eigenvalue counts as real when |Im| <= threshold * spectral radius.
inline constexpr double kRealnessThreshold = 1e-8;

enum class Classification { AllReal, ComplexPairsPresent };
std::string to_string(Classification c);

struct SpectrumReport {
    std::vector<std::complex<double>> eigenvalues;  // sorted by (re, im)
    double max_imag_ratio = 0.0;
    Classification classification = Classification::AllReal;
    double residual = 0.0;  // max |charpoly(lambda)| / ||coeffs||_2
    bool converged = true;
    long sweeps = 0;
    std::string method;
};

/// Dispatches on the matrix structure:
///   symmetric tridiagonal        -> implicit QL (outputs exactly real)
///   tridiagonal, positive c_k    -> diagonal symmetrization, then implicit QL
///   lower Hessenberg / bordered  -> transpose, balance, Francis double-shift QR
///   anything else                -> balance, Hessenberg reduction, QR
/// QR is capped at 30 N sweeps; on hitting the cap the report carries the
/// eigenvalues found so far plus the diagonal of the undeflated block, with
/// converged = false.
SpectrumReport eigenvalues(const mastermat::StructuredMatrix& m);

/// Eigenvalues of a dense row-major n x n real matrix (balance, reduce, QR).
SpectrumReport eigenvalues_dense(std::vector<double> a, int n);

/// Fills max_imag_ratio and classification from the eigenvalue list.
void classify(SpectrumReport& r, double threshold = kRealnessThreshold);

struct RealnessScan {
    std::optional<int> first_complex;
    std::vector<int> n_values;
    std::vector<double> max_imag_ratio;
};

/// Scans N = lo..hi and reports the first N whose spectrum has a complex pair.
RealnessScan realness_boundary(const std::function<mastermat::StructuredMatrix(int)>& family, int lo, int hi);

/// Family from a model spec with n varying. For gaussian21 and minimal31 a
/// missing g means g = 1/N (exact).
RealnessScan realness_boundary(const mastermat::ModelSpec& base, int lo, int hi);
std::function<mastermat::StructuredMatrix(int)> family_of(const mastermat::ModelSpec& base);

}  // namespace fzzt::spectra
