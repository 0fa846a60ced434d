#ifndef CKPOLAR_MOTIONS_HPP
#define CKPOLAR_MOTIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ckpolar/polar_variety.hpp"

namespace ckpolar {

namespace detail {

inline void require_complementary(const Subspace& k, const Subspace& kp, const char* op) {
    require_same_ambient(k, kp, op);
    if (k.dim() + kp.dim() != k.ambient_dim() - 1)
        throw GeometryError(std::string(op) + ": dimensions do not add up to n - 1");
    if (!disjoint(k, kp)) throw GeometryError(std::string(op) + ": subspaces intersect");
}

} // namespace detail

/// Splits x = k + k' with k in K and k' in K'; returns ([k], [k']).
inline std::pair<Point, Point> project(const Point& x, const Subspace& k, const Subspace& kp) {
    detail::require_complementary(k, kp, "project");
    require_same_ambient(x, k, "project");
    if (contains(k, x) || contains(kp, x)) throw GeometryError("project: X lies in K or K'");
    auto cols = k.basis();
    cols.insert(cols.end(), kp.basis().begin(), kp.basis().end());
    const auto size = static_cast<std::size_t>(k.ambient_dim() + 1);
    const auto inv = inverse(Matrix::from_columns(cols, size));
    if (!inv) throw GeometryError("project: K and K' do not span P^n");
    const Vector coeffs = *inv * x.coords();
    Vector a(size), b(size);
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t t = 0; t < size; ++t) (i < k.basis().size() ? a : b)[t] += coeffs[i] * cols[i][t];
    return {Point(a), Point(b)};
}

/// I - 2 B (C B)^-1 C with B the basis columns of K and C the hyperplane rows cutting out K'.
inline Matrix involution_matrix(const Subspace& k, const Subspace& kp) {
    require_same_ambient(k, kp, "involution_matrix");
    const auto size = static_cast<std::size_t>(k.ambient_dim() + 1);
    const Matrix b = k.basis_matrix();
    const Matrix c = annihilator(kp).matrix();
    if (c.rows() != b.cols()) throw GeometryError("involution_matrix: dimensions do not add up to n - 1");
    const auto cb_inv = inverse(c * b);
    if (!cb_inv) throw GeometryError("involution_matrix: K and K' intersect");
    return Matrix::identity(size) - Rational(2) * (b * *cb_inv * c);
}

struct ReflectionPair {
    Subspace k_space;
    Subspace k_polar;
    Matrix matrix;
};

struct MotionMatrix {
    Matrix matrix;
    /// c > 0 with U_i^T E_i U_i = c E_i for every diagonal block of T^-1 M T.
    Rational block_scalar;
};

/// Either a certified motion or the first block that fails, with a reason.
struct MotionVerdict {
    std::optional<MotionMatrix> motion;
    int failed_block = -1;
    std::string reason;

    explicit operator bool() const noexcept { return motion.has_value(); }
};

inline MotionVerdict is_motion(const AbsoluteFigure& f, const Matrix& m) {
    const auto size = static_cast<std::size_t>(f.n() + 1);
    if (m.rows() != size || m.cols() != size) throw DimensionError("is_motion: matrix has the wrong size");
    const Matrix n = f.matrix_to_normal(m);
    MotionVerdict verdict;
    auto fail = [&](int block, std::string why) {
        verdict.failed_block = block;
        verdict.reason = std::move(why);
        return verdict;
    };
    Rational c;
    for (int i = 0; i <= f.r(); ++i) {
        const auto off = static_cast<std::size_t>(f.block_offset(i));
        const auto len = static_cast<std::size_t>(f.block_size(i));
        for (std::size_t row = off; row < off + len; ++row)
            for (std::size_t col = off + len; col < size; ++col)
                if (n(row, col) != 0) return fail(i, "not block lower triangular");
        const Matrix u = n.block(off, off, len, len);
        const Matrix e = Matrix::diagonal(f.block_signs(i));
        const Matrix g = u.transpose() * e * u;
        const Rational ci = g(0, 0) / e(0, 0);
        if (!(g == ci * e)) return fail(i, "diagonal block is not a scaled isometry of E_i");
        if (ci <= 0) return fail(i, "block scalar is not positive");
        if (i == 0) c = ci;
        else if (ci != c) return fail(i, "block scalar differs from that of block 0");
    }
    verdict.motion = MotionMatrix{m, c};
    return verdict;
}

/// Canonical span of M applied to S.
inline Subspace apply(const MotionMatrix& m, const Subspace& s) { return image(m.matrix, s); }

/// The reflection in a disjoint total-polar pair.
inline ReflectionPair reflection(const AbsoluteFigure& f, const Subspace& k, const Subspace& k_perp) {
    f.require_ambient(k, "reflection");
    f.require_ambient(k_perp, "reflection");
    if (!is_total_polar(f, k, k_perp)) throw DomainError("reflection: K_perp is not a total polar of K");
    if (!disjoint(k, k_perp)) throw DomainError("reflection: K and K_perp intersect");
    if (!is_total_polar(f, k_perp, k)) throw TheoremViolation("reflection: total polarity is not symmetric");
    ReflectionPair pair{k, k_perp, involution_matrix(k, k_perp)};
    if (!is_motion(f, pair.matrix)) throw TheoremViolation("reflection: involution is not a motion");
    return pair;
}

/// Reflections S_1, ..., S_m in point-hyperplane pairs with S_1 ... S_m = sigma M / sqrt(c).
struct MotionDecomposition {
    std::vector<ReflectionPair> reflections;
    int sigma = 1;
    /// m <= n + 1.
    bool within_bound = true;
};

namespace detail {

/// Point and hyperplane row of a point-hyperplane reflection, normal coordinates.
struct NormalPair {
    Vector point;
    Vector row;
};

using PairList = std::vector<NormalPair>;

/// The figure with the first normal coordinate removed.
inline Signature drop_first_coordinate(const Signature& sig) {
    Signature out = sig;
    auto& b = out.front();
    if (b.size == 1) {
        out.erase(out.begin());
        return out;
    }
    const bool first_negative = b.negatives == b.size;
    --b.size;
    if (first_negative) --b.negatives;
    return out;
}

inline Matrix point_hyperplane_matrix(const Vector& x, const Vector& h) {
    const Matrix xm = Matrix::from_columns({x}, x.size());
    const Matrix hm = Matrix::from_rows({h}, h.size());
    return Matrix::identity(x.size()) - (Rational(2) / dot(h, x)) * (xm * hm);
}

inline PairList lift(const PairList& sub) {
    PairList out;
    for (const auto& p : sub) {
        NormalPair q;
        q.point.push_back(0);
        q.point.insert(q.point.end(), p.point.begin(), p.point.end());
        q.row.push_back(0);
        q.row.insert(q.row.end(), p.row.begin(), p.row.end());
        out.push_back(std::move(q));
    }
    return out;
}

/// Shortest list whose product is s N, N an exact isometry in normal form.
inline PairList shortest_factorization(const Signature& sig, const Matrix& n, int s) {
    const std::size_t size = n.rows();
    if (size == 1) {
        if (s * n(0, 0) == 1) return {};
        return {{{Rational(1)}, {Rational(1)}}};
    }
    const Vector u = n.column(0);
    bool on_axis = true;
    for (std::size_t i = 1; i < size; ++i)
        if (u[i] != 0) on_axis = false;
    if (on_axis) {
        PairList out;
        if (s * u[0] == -1) {
            Vector e0(size), r0(size);
            e0[0] = 1;
            r0[0] = 1;
            out.push_back({e0, r0});
        }
        const auto sub = lift(shortest_factorization(drop_first_coordinate(sig), n.block(1, 1, size - 1, size - 1), s));
        out.insert(out.end(), sub.begin(), sub.end());
        return out;
    }
    const auto len0 = static_cast<std::size_t>(sig.front().size);
    std::optional<PairList> best;
    for (int sign : {-1, 1}) {
        Vector x = u;
        x[0] += sign;
        Vector h(size);
        for (std::size_t t = 0; t < len0; ++t)
            h[t] = (static_cast<int>(t) < sig.front().size - sig.front().negatives ? 1 : -1) * x[t];
        if (dot(h, x) == 0) continue;
        const Matrix sx = point_hyperplane_matrix(x, h);
        PairList candidate{{x, h}};
        const auto rest = shortest_factorization(sig, sx * n, s);
        candidate.insert(candidate.end(), rest.begin(), rest.end());
        if (!best || candidate.size() < best->size()) best = std::move(candidate);
    }
    if (!best) throw InternalError("decompose_motion: both g(X) - X and g(X) + X lie on Q_0");
    return *best;
}

} // namespace detail

/// Factors a motion into reflections in point-hyperplane pairs, following the
/// induction on the first normal coordinate and keeping the shortest of the
/// available branches at each step.
inline MotionDecomposition decompose_motion(const AbsoluteFigure& f, const Matrix& m) {
    const auto verdict = is_motion(f, m);
    if (!verdict) throw DomainError("decompose_motion: not a motion (" + verdict.reason + ")");
    Rational root;
    if (!rational_sqrt(verdict.motion->block_scalar, root))
        throw NormalizationError("decompose_motion: block scalar " + format_rational(verdict.motion->block_scalar) +
                                 " is not the square of a rational; rescale the matrix");
    const Rational inv_root = 1 / root;
    const Matrix normalized = inv_root * m;
    const Matrix n = f.matrix_to_normal(normalized);

    // sigma = -1 only when the exact product with sigma = +1 would exceed n + 1 reflections.
    std::optional<detail::PairList> best = detail::shortest_factorization(f.signature(), n, 1);
    int sigma = 1;
    if (static_cast<int>(best->size()) > f.n() + 1) {
        auto flipped = detail::shortest_factorization(f.signature(), n, -1);
        if (flipped.size() < best->size()) {
            best = std::move(flipped);
            sigma = -1;
        }
    }

    MotionDecomposition out;
    out.sigma = sigma;
    Matrix product = Matrix::identity(static_cast<std::size_t>(f.n() + 1));
    for (const auto& p : *best) {
        const Subspace k = Subspace::span({f.to_current(p.point)}, f.n());
        const Subspace kp = annihilated_by(DualSubspace::span({f.row_to_current(p.row)}, f.n()));
        try {
            out.reflections.push_back(reflection(f, k, kp));
        } catch (const DomainError& e) {
            throw InternalError(std::string("decompose_motion: produced an invalid pair: ") + e.what());
        }
        product = product * out.reflections.back().matrix;
    }
    if (!(product == Rational(sigma) * normalized))
        throw InternalError("decompose_motion: product of reflections differs from the motion");
    out.within_bound = static_cast<int>(out.reflections.size()) <= f.n() + 1;
    return out;
}

} // namespace ckpolar

#endif
