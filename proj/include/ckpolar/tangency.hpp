#ifndef CKPOLAR_TANGENCY_HPP
#define CKPOLAR_TANGENCY_HPP

#include <optional>
#include <string>

#include "ckpolar/polar_variety.hpp"

namespace ckpolar {

/// K meets one of its total polars. Every total polar lies inside the first
/// polar-sequence entry, and every point of K inside that entry lies on some
/// total polar, so the test is K n W_top != empty.
inline bool is_tangent(const AbsoluteFigure& f, const Subspace& k) {
    detail::require_proper(f, k, "is_tangent");
    return !disjoint(k, polar_sequence(f, k).front().space);
}

namespace detail {

/// Z in normal coordinates, from its canonical representative in the current frame.
inline Vector normal_representative(const AbsoluteFigure& f, const Point& z) { return f.to_normal(z.coords()); }

/// Z_0^T E_0 Z_0 in normal coordinates.
inline Rational block0_value(const AbsoluteFigure& f, const Vector& z) {
    const auto signs = f.block_signs(0);
    Rational q = 0;
    for (std::size_t t = 0; t < signs.size(); ++t) q += signs[t] * z[t] * z[t];
    return q;
}

inline bool hyperplane_case(const AbsoluteFigure& f) { return f.block_size(0) == 1; }

} // namespace detail

/// The quadric of all points on tangent lines through Z, as a form on P^n.
inline QuadricForm tangent_cone(const AbsoluteFigure& f, const Point& z) {
    f.require_ambient(z, "tangent_cone");
    if (contains(f.vertex_space(1), z)) throw DomainError("tangent_cone: center lies in A_1");
    const auto size = static_cast<std::size_t>(f.n() + 1);
    Vector zn = detail::normal_representative(f, z);
    Matrix c(size, size);
    if (detail::hyperplane_case(f)) {
        if (f.r() == 0) throw DomainError("tangent_cone: P^0 has no lines");
        const Rational z0 = zn[0];
        for (auto& x : zn) x /= z0;
        const auto signs = f.block_signs(1);
        const auto off = static_cast<std::size_t>(f.block_offset(1));
        for (std::size_t t = 0; t < signs.size(); ++t) {
            const std::size_t i = off + t;
            c(0, 0) += signs[t] * zn[i] * zn[i];
            c(i, i) = signs[t];
            c(0, i) = c(i, 0) = -signs[t] * zn[i];
        }
    } else {
        const auto signs = f.block_signs(0);
        Vector w(signs.size());
        for (std::size_t t = 0; t < signs.size(); ++t) w[t] = signs[t] * zn[t];
        const Rational q = detail::block0_value(f, zn);
        for (std::size_t i = 0; i < signs.size(); ++i)
            for (std::size_t j = 0; j < signs.size(); ++j) {
                c(i, j) = w[i] * w[j];
                if (q != 0) c(i, j) = -c(i, j);
                if (q != 0 && i == j) c(i, j) += q * signs[i];
            }
    }
    return QuadricForm(f.form_to_current(c), Subspace::full(f.n()));
}

enum class RadiusKind { real, imaginary, null, arccos_real, arccos_imaginary };

inline const char* to_string(RadiusKind k) {
    switch (k) {
    case RadiusKind::real: return "real";
    case RadiusKind::imaginary: return "imaginary";
    case RadiusKind::null: return "null";
    case RadiusKind::arccos_real: return "arccos_real";
    case RadiusKind::arccos_imaginary: return "arccos_imaginary";
    }
    return "?";
}

/// `exact` is rho = -lambda/mu when A_1 is a hyperplane and
/// beta = 1 + lambda/(mu Z_0^T E_0 Z_0) otherwise; `approx` is sqrt|exact|.
struct RadiusClass {
    RadiusKind kind = RadiusKind::null;
    Rational exact;
    std::string approx;
};

namespace detail {

inline void require_center(const AbsoluteFigure& f, const Point& z, const char* op) {
    f.require_ambient(z, op);
    if (on_quadric(f.quadric(0), z)) throw DomainError(std::string(op) + ": center lies on Q_0");
}

} // namespace detail

inline RadiusClass sphere_radius(const AbsoluteFigure& f, const Point& z, const Rational& lambda, const Rational& mu) {
    detail::require_center(f, z, "sphere_radius");
    if (mu == 0) throw DomainError("sphere_radius: mu = 0, the sphere is Q_0 itself");
    RadiusClass out;
    if (detail::hyperplane_case(f)) {
        out.exact = -lambda / mu;
        out.kind = out.exact > 0 ? RadiusKind::real : out.exact < 0 ? RadiusKind::imaginary : RadiusKind::null;
    } else {
        const Rational q = detail::block0_value(f, detail::normal_representative(f, z));
        out.exact = 1 + lambda / (mu * q);
        out.kind = out.exact == 1   ? RadiusKind::null
                   : out.exact >= 0 ? RadiusKind::arccos_real
                                    : RadiusKind::arccos_imaginary;
    }
    out.approx = sqrt_decimal(abs(out.exact));
    return out;
}

struct Sphere {
    Point center;
    Rational lambda;
    Rational mu;
    QuadricForm form;
    /// Absent when mu = 0.
    std::optional<RadiusClass> radius;
};

/// lambda Q_0 + mu T_Z.
inline Sphere sphere(const AbsoluteFigure& f, const Point& z, const Rational& lambda, const Rational& mu) {
    detail::require_center(f, z, "sphere");
    if (lambda == 0 && mu == 0) throw DomainError("sphere: lambda and mu are both zero");
    const Matrix m = lambda * f.quadric(0).matrix() + mu * tangent_cone(f, z).matrix();
    Sphere s{z, lambda, mu, QuadricForm(m, Subspace::full(f.n())), std::nullopt};
    if (mu != 0) s.radius = sphere_radius(f, z, lambda, mu);
    return s;
}

} // namespace ckpolar

#endif
