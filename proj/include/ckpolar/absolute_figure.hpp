#ifndef CKPOLAR_ABSOLUTE_FIGURE_HPP
#define CKPOLAR_ABSOLUTE_FIGURE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ckpolar/quadric.hpp"

namespace ckpolar {

/// One diagonal block of the normal form: `size` coordinates, the last
/// `negatives` of which carry the sign -1.
struct SignatureBlock {
    int size = 1;
    int negatives = 0;

    friend bool operator==(const SignatureBlock&, const SignatureBlock&) = default;
};

using Signature = std::vector<SignatureBlock>;

/// The chain Q_0, A_1, Q_1, ..., A_r, Q_r, A_{r+1} = empty of a Cayley-Klein
/// space. Built in normal coordinates from a signature; when a change of basis
/// T is given, all stored data describe the figure in the frame x = T x_normal.
class AbsoluteFigure {
public:
    AbsoluteFigure(Signature signature, std::optional<Matrix> basis_change = std::nullopt)
        : signature_(std::move(signature)), basis_change_(std::move(basis_change)) {
        if (signature_.empty()) throw ConstructionError("signature has no blocks");
        int total = 0;
        for (std::size_t i = 0; i < signature_.size(); ++i) {
            const auto& b = signature_[i];
            if (b.size < 1)
                throw ConstructionError("signature block " + std::to_string(i) + " has non-positive size");
            if (b.negatives < 0 || b.negatives > b.size)
                throw ConstructionError("signature block " + std::to_string(i) + " has q out of range");
            offsets_.push_back(total);
            total += b.size;
        }
        n_ = total - 1;
        const auto size = static_cast<std::size_t>(total);
        if (basis_change_) {
            if (basis_change_->rows() != size || basis_change_->cols() != size)
                throw ConstructionError("basis change has the wrong size");
            auto inv = inverse(*basis_change_);
            if (!inv) throw ConstructionError("basis change is singular");
            to_current_ = *basis_change_;
            to_normal_ = *inv;
        } else {
            to_current_ = Matrix::identity(size);
            to_normal_ = Matrix::identity(size);
        }

        const int r = blocks() - 1;
        for (int i = 0; i <= r + 1; ++i) {
            Subspace a = i == 0 ? Subspace::full(n_)
                         : i == r + 1 ? Subspace::empty(n_)
                                      : Subspace::coordinate(n_, offsets_[static_cast<std::size_t>(i)], n_);
            vertices_.push_back(to_current(a));
        }
        for (int i = 0; i <= r; ++i) {
            const Matrix e = Matrix::diagonal(normal_diagonal(i));
            quadrics_.emplace_back(to_normal_.transpose() * e * to_normal_, vertices_[static_cast<std::size_t>(i)]);
        }
        for (int i = 0; i <= r; ++i)
            if (!(vertex(quadrics_[static_cast<std::size_t>(i)]) == vertices_[static_cast<std::size_t>(i + 1)]))
                throw ConstructionError("vertex of Q_" + std::to_string(i) + " is not A_" + std::to_string(i + 1));
    }

    int n() const noexcept { return n_; }
    /// Number of quadrics, r + 1.
    int blocks() const noexcept { return static_cast<int>(signature_.size()); }
    int r() const noexcept { return blocks() - 1; }
    const Signature& signature() const noexcept { return signature_; }
    const std::optional<Matrix>& basis_change() const noexcept { return basis_change_; }

    /// Q_i, 0 <= i <= r.
    const QuadricForm& quadric(int i) const { return quadrics_.at(static_cast<std::size_t>(i)); }
    /// A_i, 0 <= i <= r + 1.
    const Subspace& vertex_space(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }
    /// m_i = dim A_i.
    int vertex_dim(int i) const { return vertex_space(i).dim(); }

    /// Index of the first normal coordinate of block i.
    int block_offset(int i) const { return offsets_.at(static_cast<std::size_t>(i)); }
    int block_size(int i) const { return signature_.at(static_cast<std::size_t>(i)).size; }

    /// Diagonal of E_i, length n_i.
    Vector block_signs(int i) const {
        const auto& b = signature_.at(static_cast<std::size_t>(i));
        Vector d(static_cast<std::size_t>(b.size), Rational(1));
        for (int t = b.size - b.negatives; t < b.size; ++t) d[static_cast<std::size_t>(t)] = -1;
        return d;
    }

    /// Full-length diagonal of Q_i in normal coordinates (zero outside block i).
    Vector normal_diagonal(int i) const {
        Vector d(static_cast<std::size_t>(n_ + 1));
        const auto signs = block_signs(i);
        for (std::size_t t = 0; t < signs.size(); ++t) d[static_cast<std::size_t>(block_offset(i)) + t] = signs[t];
        return d;
    }

    /// T and T^-1 (identity when no basis change was given).
    const Matrix& to_current_matrix() const noexcept { return to_current_; }
    const Matrix& to_normal_matrix() const noexcept { return to_normal_; }

    Vector to_current(const Vector& x) const { return to_current_ * x; }
    Vector to_normal(const Vector& x) const { return to_normal_ * x; }
    Subspace to_current(const Subspace& s) const { return image(to_current_, s); }
    Subspace to_normal(const Subspace& s) const { return image(to_normal_, s); }
    /// Hyperplane rows transform contragrediently: h T^-1.
    Vector row_to_current(const Vector& h) const { return row_times(h, to_normal_); }
    Vector row_to_normal(const Vector& h) const { return row_times(h, to_current_); }
    Matrix matrix_to_current(const Matrix& m) const { return to_current_ * m * to_normal_; }
    Matrix matrix_to_normal(const Matrix& m) const { return to_normal_ * m * to_current_; }
    /// Quadratic-form matrices transform as T^-T C T^-1.
    Matrix form_to_current(const Matrix& c) const { return to_normal_.transpose() * c * to_normal_; }
    Matrix form_to_normal(const Matrix& c) const { return to_current_.transpose() * c * to_current_; }

    /// The same signature in the frame x' = S x, i.e. with basis change S T.
    AbsoluteFigure conjugated(const Matrix& s) const { return AbsoluteFigure(signature_, s * to_current_); }

    void require_ambient(const Subspace& s, const char* op) const {
        if (s.ambient_dim() != n_)
            throw DimensionError(std::string(op) + ": subspace lives in P^" + std::to_string(s.ambient_dim()) +
                                 ", figure in P^" + std::to_string(n_));
    }

private:
    Signature signature_;
    std::optional<Matrix> basis_change_;
    std::vector<int> offsets_;
    int n_ = 0;
    Matrix to_current_;
    Matrix to_normal_;
    std::vector<QuadricForm> quadrics_;
    std::vector<Subspace> vertices_;
};

/// k_j = dim(K n A_j) for j = 0..r+1; non-increasing, ends at -1.
inline std::vector<int> filtration_dims(const AbsoluteFigure& f, const Subspace& k) {
    f.require_ambient(k, "filtration_dims");
    std::vector<int> dims;
    for (int j = 0; j <= f.r() + 1; ++j) dims.push_back(meet(k, f.vertex_space(j)).dim());
    return dims;
}

/// (K n A_j)^{p_j}: the polar of K n A_j with respect to Q_j.
inline Subspace block_polar(const AbsoluteFigure& f, const Subspace& k, int j) {
    return polar(f.quadric(j), meet(k, f.vertex_space(j)));
}

struct PolarEntry {
    int block = 0;    // j
    Subspace space;   // (K n A_j)^{p_j}
    int position = 0; // m_j - k_j - 1, the flag index the entry occupies

    friend bool operator==(const PolarEntry&, const PolarEntry&) = default;
};

using PolarSequence = std::vector<PolarEntry>;

/// The chain (K n A_j)^{p_j}, j = 0..r, with every entry equal to A_{j+1} deleted.
inline PolarSequence polar_sequence(const AbsoluteFigure& f, const Subspace& k) {
    const auto dims = filtration_dims(f, k);
    PolarSequence seq;
    for (int j = 0; j <= f.r(); ++j) {
        Subspace p = block_polar(f, k, j);
        if (p == f.vertex_space(j + 1)) continue;
        seq.push_back({j, std::move(p), f.vertex_dim(j) - dims[static_cast<std::size_t>(j)] - 1});
    }
    return seq;
}

namespace fixtures {

/// Euclidean plane: x_0^2 = 0, A_1: x_0 = 0, Q_1: x_1^2 + x_2^2 = 0.
inline Signature euclidean_plane() { return {{1, 0}, {2, 0}}; }
/// Hyperbolic plane: x_0^2 + x_1^2 - x_2^2 = 0.
inline Signature hyperbolic_plane() { return {{3, 1}}; }
/// Three-space in which every Q_i is a hyperplane of A_i.
inline Signature flag3() { return {{1, 0}, {1, 0}, {1, 0}, {1, 0}}; }

} // namespace fixtures

} // namespace ckpolar

#endif
