#include "fzzt/mastermat/matrix.hpp"

#include "fzzt/mastermat/builders.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fzzt::mastermat {

std::string to_string(Structure s) {
    switch (s) {
        case Structure::SymmetricTridiagonal: return "symmetric-tridiagonal";
        case Structure::LowerTwoBandedHessenberg: return "lower-two-banded-hessenberg";
        case Structure::TridiagonalNonsymmetric: return "tridiagonal-nonsymmetric";
        case Structure::Bordered: return "bordered";
    }
    return "unknown";
}

std::string to_string(Model m) {
    switch (m) {
        case Model::Gaussian21: return "gaussian21";
        case Model::Minimal31: return "minimal31";
        case Model::Minimal31Deformed: return "minimal31-deformed";
        case Model::MeixnerPollaczek: return "meixner-pollaczek";
        case Model::BorderedMP: return "bordered-mp";
    }
    return "unknown";
}

Model parse_model(const std::string& token) {
    if (token == "21" || token == "gaussian21") return Model::Gaussian21;
    if (token == "31" || token == "minimal31") return Model::Minimal31;
    if (token == "31d" || token == "minimal31-deformed") return Model::Minimal31Deformed;
    if (token == "mp" || token == "meixner-pollaczek") return Model::MeixnerPollaczek;
    if (token == "bmp" || token == "bordered-mp") return Model::BorderedMP;
    throw std::invalid_argument("unknown model '" + token + "'");
}

StructuredMatrix::StructuredMatrix(Model model, int n, Structure structure, ScalarKind kind, std::vector<Entry> entries,
                                   ModelParams params, std::vector<Rational> offdiag_squared)
    : model_(model),
      n_(n),
      structure_(structure),
      kind_(kind),
      entries_(std::move(entries)),
      params_(std::move(params)),
      offdiag_sq_(std::move(offdiag_squared)) {
    if (n_ < 1) throw std::invalid_argument("StructuredMatrix: dimension must be >= 1");
    std::erase_if(entries_, [](const Entry& e) { return e.value == 0.0 && (!e.exact || e.exact->is_zero()); });
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
    validate();
}

void StructuredMatrix::validate() const {
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        const auto& e = entries_[k];
        if (e.row < 0 || e.col < 0 || e.row >= n_ || e.col >= n_)
            throw std::invalid_argument("StructuredMatrix: entry outside the matrix");
        if (k > 0 && entries_[k - 1].row == e.row && entries_[k - 1].col == e.col)
            throw std::invalid_argument("StructuredMatrix: duplicate entry");
        if (kind_ == ScalarKind::Exact && structure_ != Structure::SymmetricTridiagonal && !e.exact)
            throw std::invalid_argument("StructuredMatrix: exact matrix entry without exact value");
        const int d = e.col - e.row;
        bool ok = false;
        switch (structure_) {
            case Structure::SymmetricTridiagonal:
            case Structure::TridiagonalNonsymmetric: ok = std::abs(d) <= 1; break;
            case Structure::LowerTwoBandedHessenberg: ok = d <= 1 && d >= -2; break;
            case Structure::Bordered: ok = std::abs(d) <= 1 || e.row == n_ - 1; break;
        }
        if (!ok) throw std::invalid_argument("StructuredMatrix: entry outside declared structure " + to_string(structure_));
    }
    if (structure_ == Structure::SymmetricTridiagonal) {
        for (const auto& e : entries_)
            if (at(e.col, e.row) != e.value)
                throw std::invalid_argument("StructuredMatrix: symmetric-tridiagonal entries are not symmetric");
        if (!offdiag_sq_.empty() && offdiag_sq_.size() != static_cast<std::size_t>(n_ - 1))
            throw std::invalid_argument("StructuredMatrix: offdiag_squared has wrong length");
    }
}

const Entry* StructuredMatrix::find(int row, int col) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col}, [](const Entry& e, const auto& key) {
        return e.row != key.first ? e.row < key.first : e.col < key.second;
    });
    if (it != entries_.end() && it->row == row && it->col == col) return &*it;
    return nullptr;
}

double StructuredMatrix::at(int row, int col) const {
    const Entry* e = find(row, col);
    return e ? e->value : 0.0;
}

std::optional<Rational> StructuredMatrix::exact_at(int row, int col) const {
    const Entry* e = find(row, col);
    if (e) return e->exact;
    if (kind_ == ScalarKind::Exact) return Rational(0);
    return std::nullopt;
}

std::vector<double> StructuredMatrix::dense() const {
    std::vector<double> a(static_cast<std::size_t>(n_) * n_, 0.0);
    for (const auto& e : entries_) a[static_cast<std::size_t>(e.row) * n_ + e.col] = e.value;
    return a;
}

StructuredMatrix build(const ModelSpec& spec) {
    switch (spec.model) {
        case Model::Gaussian21:
            if (spec.g) return build_master_21(spec.n, *spec.g);
            if (spec.g_float) return build_master_21(spec.n, *spec.g_float);
            throw std::invalid_argument("gaussian21 requires g");
        case Model::Minimal31:
            if (spec.g) return build_master_31(spec.n, *spec.g);
            if (spec.g_float) return build_master_31(spec.n, *spec.g_float);
            throw std::invalid_argument("minimal31 requires g");
        case Model::Minimal31Deformed: return build_master_31_deformed(spec.n, spec.s1);
        case Model::MeixnerPollaczek: return build_mp_matrix(spec.n);
        case Model::BorderedMP: return build_bordered_mp(spec.n, spec.border);
    }
    throw std::invalid_argument("build: unknown model");
}

}  // namespace fzzt::mastermat
