#pragma once

#include "fzzt/exact/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fzzt::mastermat {

enum class Structure { SymmetricTridiagonal, LowerTwoBandedHessenberg, TridiagonalNonsymmetric, Bordered };
enum class ScalarKind { Exact, Floating };
enum class Model { Gaussian21, Minimal31, Minimal31Deformed, MeixnerPollaczek, BorderedMP };

std::string to_string(Structure s);
std::string to_string(Model m);
Model parse_model(const std::string& token);  // "21", "31", "31d", "mp", "bmp" or the long names

/// One nonzero matrix entry, 0-based. `exact` is present for exact-rational
/// matrices; `value` always holds the binary64 value.
struct Entry {
    int row = 0;
    int col = 0;
    double value = 0.0;
    std::optional<Rational> exact;
};

/// Parameters tagged onto a matrix by the builder that made it.
struct ModelParams {
    std::optional<Rational> g;
    std::optional<double> g_float;
    std::optional<double> s1;
    std::vector<double> border;
};

class StructuredMatrix {
public:
    StructuredMatrix(Model model, int n, Structure structure, ScalarKind kind, std::vector<Entry> entries,
                     ModelParams params = {}, std::vector<Rational> offdiag_squared = {});

    Model model() const { return model_; }
    int n() const { return n_; }
    Structure structure() const { return structure_; }
    ScalarKind kind() const { return kind_; }
    const ModelParams& params() const { return params_; }

    /// Nonzero entries sorted by (row, col).
    std::span<const Entry> entries() const { return entries_; }

    double at(int row, int col) const;
    /// Exact entry; empty for floating matrices and for structural zeros of
    /// floating matrices. Structural zeros of exact matrices return 0.
    std::optional<Rational> exact_at(int row, int col) const;

    /// Symmetric-tridiagonal matrices with irrational entries keep the exact
    /// products M(k,k+1) * M(k+1,k) here, k = 0..n-2.
    std::span<const Rational> offdiag_squared() const { return offdiag_sq_; }

    /// Row-major dense copy.
    std::vector<double> dense() const;

private:
    const Entry* find(int row, int col) const;
    void validate() const;

    Model model_;
    int n_;
    Structure structure_;
    ScalarKind kind_;
    std::vector<Entry> entries_;
    ModelParams params_;
    std::vector<Rational> offdiag_sq_;
};

/// Builder selection for CLI and scans.
struct ModelSpec {
    Model model = Model::Gaussian21;
    int n = 1;
    std::optional<Rational> g;
    std::optional<double> g_float;
    double s1 = 0.0;
    std::vector<double> border;
};

StructuredMatrix build(const ModelSpec& spec);

}  // namespace fzzt::mastermat
