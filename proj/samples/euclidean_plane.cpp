// Total polars, a sphere and a reflection in the Euclidean plane.

#include <iostream>

#include "ckpolar/ckpolar.hpp"

using namespace ckpolar;

int main() {
    const AbsoluteFigure f(fixtures::euclidean_plane());
    const Point origin(Vector{1, 0, 0});
    const Point ideal(Vector{0, 1, 0});

    const Subspace linf = canonical_total_polar(f, origin);
    std::cout << "total polar of the origin has dimension " << linf.dim() << "\n";
    std::cout << "origin regular: " << is_regular(f, origin) << ", ideal point regular: " << is_regular(f, ideal) << "\n";

    for (const auto& y : sample_schubert(f, ideal, 42, 3)) {
        const Vector& a = y.basis()[0];
        const Vector& b = y.basis()[1];
        std::cout << "total polar of (0,1,0): span of (" << a[0] << "," << a[1] << "," << a[2] << ") and (" << b[0]
                  << "," << b[1] << "," << b[2] << ")\n";
    }

    const Sphere unit = sphere(f, origin, -1, 1);
    std::cout << "unit circle radius class: " << to_string(unit.radius->kind) << " " << unit.radius->approx << "\n";

    const ReflectionPair half_turn = reflection(f, origin, linf);
    const MotionDecomposition d = decompose_motion(f, half_turn.matrix * half_turn.matrix);
    std::cout << "square of the half turn factors into " << d.reflections.size() << " reflections\n";
}
