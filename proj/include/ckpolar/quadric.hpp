#ifndef CKPOLAR_QUADRIC_HPP
#define CKPOLAR_QUADRIC_HPP

#include <utility>

#include "ckpolar/subspace.hpp"

namespace ckpolar {

/// A quadric living in a carrier subspace, given by a symmetric ambient
/// matrix. The form is only ever evaluated on vectors of the carrier.
class QuadricForm {
public:
    QuadricForm() = default;

    QuadricForm(Matrix matrix, Subspace carrier) : matrix_(std::move(matrix)), carrier_(std::move(carrier)) {
        const auto size = static_cast<std::size_t>(carrier_.ambient_dim() + 1);
        if (matrix_.rows() != size || matrix_.cols() != size)
            throw DimensionError("quadric: matrix size does not match the carrier's ambient space");
        if (!matrix_.is_symmetric()) throw ConstructionError("quadric: matrix is not symmetric");
        if (carrier_.is_empty()) throw ConstructionError("quadric: empty carrier");
        const Matrix c = carrier_.basis_matrix();
        if ((c.transpose() * matrix_ * c).is_zero())
            throw ConstructionError("quadric: form vanishes identically on its carrier");
    }

    int ambient_dim() const noexcept { return carrier_.ambient_dim(); }
    const Matrix& matrix() const noexcept { return matrix_; }
    const Subspace& carrier() const noexcept { return carrier_; }

    Rational value(const Vector& x, const Vector& y) const { return dot(x, matrix_ * y); }

private:
    Matrix matrix_;
    Subspace carrier_;
};

inline void require_in_carrier(const QuadricForm& q, const Subspace& s, const char* op) {
    require_same_ambient(q.carrier(), s, op);
    if (!contains(q.carrier(), s)) throw GeometryError(std::string(op) + ": argument not contained in the carrier");
}

inline bool conjugate(const QuadricForm& q, const Point& x, const Point& y) {
    require_in_carrier(q, x, "conjugate");
    require_in_carrier(q, y, "conjugate");
    return q.value(x.coords(), y.coords()) == 0;
}

inline bool on_quadric(const QuadricForm& q, const Point& x) {
    require_in_carrier(q, x, "on_quadric");
    return q.value(x.coords(), x.coords()) == 0;
}

/// Points of the carrier conjugate to every point of S. polar(empty) is the carrier.
inline Subspace polar(const QuadricForm& q, const Subspace& s) {
    require_in_carrier(q, s, "polar");
    const int n = q.ambient_dim();
    if (s.is_empty()) return q.carrier();
    const Matrix c = q.carrier().basis_matrix();
    const Matrix conditions = s.basis_matrix().transpose() * q.matrix() * c;
    std::vector<Vector> out;
    for (const auto& coeffs : kernel(conditions)) out.push_back(c * coeffs);
    return Subspace::span(out, n);
}

inline Subspace vertex(const QuadricForm& q) { return polar(q, q.carrier()); }

} // namespace ckpolar

#endif
