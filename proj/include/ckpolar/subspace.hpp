#ifndef CKPOLAR_SUBSPACE_HPP
#define CKPOLAR_SUBSPACE_HPP

#include <string>
#include <utility>
#include <vector>

#include "ckpolar/matrix.hpp"

namespace ckpolar {

/// A projective subspace of P^n, stored by the reduced row echelon form of a
/// spanning set. The form is unique per subspace, so == is geometric equality.
/// The empty subspace has no basis vectors and dimension -1.
class Subspace {
public:
    Subspace() = default;

    static Subspace span(const std::vector<Vector>& vectors, int ambient_dim) {
        check_ambient(ambient_dim);
        for (const auto& v : vectors)
            if (static_cast<int>(v.size()) != ambient_dim + 1)
                throw DimensionError("span: vector of length " + std::to_string(v.size()) + " in P^" +
                                     std::to_string(ambient_dim));
        Subspace s;
        s.n_ = ambient_dim;
        if (!vectors.empty()) s.basis_ = canonical_row_basis(vectors, static_cast<std::size_t>(ambient_dim + 1));
        return s;
    }

    static Subspace empty(int ambient_dim) {
        check_ambient(ambient_dim);
        Subspace s;
        s.n_ = ambient_dim;
        return s;
    }

    static Subspace full(int ambient_dim) {
        check_ambient(ambient_dim);
        std::vector<Vector> e;
        for (int i = 0; i <= ambient_dim; ++i) e.push_back(unit(ambient_dim, i));
        return span(e, ambient_dim);
    }

    /// The coordinate subspace spanned by e_first, ..., e_last.
    static Subspace coordinate(int ambient_dim, int first, int last) {
        std::vector<Vector> e;
        for (int i = first; i <= last; ++i) e.push_back(unit(ambient_dim, i));
        return span(e, ambient_dim);
    }

    static Vector unit(int ambient_dim, int i) {
        Vector v(static_cast<std::size_t>(ambient_dim + 1));
        v[static_cast<std::size_t>(i)] = 1;
        return v;
    }

    int ambient_dim() const noexcept { return n_; }
    int dim() const noexcept { return static_cast<int>(basis_.size()) - 1; }
    bool is_empty() const noexcept { return basis_.empty(); }
    bool is_full() const noexcept { return dim() == n_; }

    /// Canonical basis vectors (each a coordinate vector of length n+1).
    const std::vector<Vector>& basis() const noexcept { return basis_; }

    /// (n+1) x (dim+1) matrix whose columns are the canonical basis.
    Matrix basis_matrix() const {
        return Matrix::from_columns(basis_, static_cast<std::size_t>(n_ + 1));
    }

    bool contains_vector(const Vector& v) const {
        if (static_cast<int>(v.size()) != n_ + 1) throw DimensionError("contains_vector: length mismatch");
        if (ckpolar::is_zero(v)) return true;
        auto rows = basis_;
        rows.push_back(v);
        return rank_of(rows, v.size()) == basis_.size();
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }

private:
    static void check_ambient(int n) {
        if (n < 0) throw DimensionError("negative ambient dimension");
    }

    int n_ = 0;
    std::vector<Vector> basis_;
};

/// Independent hyperplane coordinate rows, canonical (reduced echelon) form.
class DualSubspace {
public:
    DualSubspace() = default;

    static DualSubspace span(const std::vector<Vector>& rows, int ambient_dim) {
        for (const auto& r : rows)
            if (static_cast<int>(r.size()) != ambient_dim + 1) throw DimensionError("dual span: row length mismatch");
        DualSubspace d;
        d.n_ = ambient_dim;
        if (!rows.empty()) d.rows_ = canonical_row_basis(rows, static_cast<std::size_t>(ambient_dim + 1));
        return d;
    }

    int ambient_dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return rows_.size(); }
    const std::vector<Vector>& rows() const noexcept { return rows_; }
    Matrix matrix() const { return Matrix::from_rows(rows_, static_cast<std::size_t>(n_ + 1)); }

    friend bool operator==(const DualSubspace& a, const DualSubspace& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
    int n_ = 0;
    std::vector<Vector> rows_;
};

/// A point of P^n; a thin wrapper over a dimension-0 subspace.
class Point {
public:
    Point() = default;

    Point(Vector coords) {
        if (coords.empty()) throw DimensionError("point: no coordinates");
        if (ckpolar::is_zero(coords)) throw GeometryError("point: the zero vector is not a point");
        const int n = static_cast<int>(coords.size()) - 1;
        space_ = Subspace::span({std::move(coords)}, n);
    }

    static Point from_subspace(const Subspace& s) {
        if (s.dim() != 0) throw DimensionError("point: subspace has dimension " + std::to_string(s.dim()));
        Point p;
        p.space_ = s;
        return p;
    }

    int ambient_dim() const noexcept { return space_.ambient_dim(); }
    /// Representative with first nonzero coordinate equal to 1.
    const Vector& coords() const { return space_.basis().front(); }
    const Subspace& subspace() const noexcept { return space_; }
    operator const Subspace&() const noexcept { return space_; }

    friend bool operator==(const Point& a, const Point& b) { return a.space_ == b.space_; }

private:
    Subspace space_;
};

inline void require_same_ambient(const Subspace& s, const Subspace& t, const char* op) {
    if (s.ambient_dim() != t.ambient_dim())
        throw DimensionError(std::string(op) + ": ambient dimensions " + std::to_string(s.ambient_dim()) + " and " +
                             std::to_string(t.ambient_dim()));
}

inline Subspace join(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t, "join");
    auto v = s.basis();
    v.insert(v.end(), t.basis().begin(), t.basis().end());
    return Subspace::span(v, s.ambient_dim());
}

/// Hyperplane rows vanishing on S; n - dim S of them.
inline DualSubspace annihilator(const Subspace& s) {
    const int n = s.ambient_dim();
    if (s.is_empty()) {
        std::vector<Vector> e;
        for (int i = 0; i <= n; ++i) e.push_back(Subspace::unit(n, i));
        return DualSubspace::span(e, n);
    }
    return DualSubspace::span(kernel(Matrix::from_rows(s.basis(), static_cast<std::size_t>(n + 1))), n);
}

/// Common zero set of the rows of D.
inline Subspace annihilated_by(const DualSubspace& d) {
    const int n = d.ambient_dim();
    if (d.size() == 0) return Subspace::full(n);
    return Subspace::span(kernel(d.matrix()), n);
}

inline Subspace meet(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t, "meet");
    const int n = s.ambient_dim();
    if (s.is_empty() || t.is_empty()) return Subspace::empty(n);
    auto rows = annihilator(s).rows();
    const auto more = annihilator(t).rows();
    rows.insert(rows.end(), more.begin(), more.end());
    return annihilated_by(DualSubspace::span(rows, n));
}

/// True iff T is a subspace of S.
inline bool contains(const Subspace& s, const Subspace& t) {
    require_same_ambient(s, t, "contains");
    for (const auto& v : t.basis())
        if (!s.contains_vector(v)) return false;
    return true;
}

inline bool disjoint(const Subspace& s, const Subspace& t) { return meet(s, t).is_empty(); }

/// With representatives chosen so that x = p + q, returns [p - q].
inline Point harmonic_conjugate(const Point& x, const Point& p, const Point& q) {
    require_same_ambient(x, p, "harmonic_conjugate");
    require_same_ambient(x, q, "harmonic_conjugate");
    if (p == q) throw GeometryError("harmonic_conjugate: P and Q coincide");
    // Solve x = a p + b q.
    const auto& pv = p.coords();
    const auto& qv = q.coords();
    const auto& xv = x.coords();
    Matrix aug(pv.size(), 3);
    for (std::size_t i = 0; i < pv.size(); ++i) {
        aug(i, 0) = pv[i];
        aug(i, 1) = qv[i];
        aug(i, 2) = xv[i];
    }
    const auto pivots = rref_in_place(aug);
    if (pivots.size() != 2 || pivots[1] != 1) throw GeometryError("harmonic_conjugate: X is not on the line PQ");
    const Rational a = aug(0, 2);
    const Rational b = aug(1, 2);
    if (a == 0 || b == 0) throw GeometryError("harmonic_conjugate: X coincides with P or Q");
    Vector out(pv.size());
    for (std::size_t i = 0; i < pv.size(); ++i) out[i] = a * pv[i] - b * qv[i];
    return Point(out);
}

/// Canonical span of the images M * basis(S).
inline Subspace image(const Matrix& m, const Subspace& s) {
    if (m.rows() != m.cols() || static_cast<int>(m.cols()) != s.ambient_dim() + 1)
        throw DimensionError("apply: matrix size does not match ambient dimension");
    std::vector<Vector> v;
    for (const auto& b : s.basis()) v.push_back(m * b);
    return Subspace::span(v, s.ambient_dim());
}

} // namespace ckpolar

#endif
