#ifndef CKPOLAR_TESTS_SUPPORT_HPP
#define CKPOLAR_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ckpolar/ckpolar.hpp"

namespace ckpolar::testing {

inline Vector vec(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

/// Span of the given coordinate vectors.
inline Subspace pts(const std::vector<Vector>& vs) { return Subspace::span(vs, static_cast<int>(vs.front().size()) - 1); }
inline Subspace pt(std::initializer_list<long> xs) { return pts({vec(xs)}); }

/// Common zero set of the given hyperplane rows.
inline Subspace zeros(const std::vector<Vector>& rows) {
    const int n = static_cast<int>(rows.front().size()) - 1;
    return annihilated_by(DualSubspace::span(rows, n));
}
inline Subspace hyperplane(std::initializer_list<long> row) { return zeros({vec(row)}); }

inline AbsoluteFigure euc2() { return AbsoluteFigure(fixtures::euclidean_plane()); }
inline AbsoluteFigure hyp2() { return AbsoluteFigure(fixtures::hyperbolic_plane()); }
inline AbsoluteFigure flag3() { return AbsoluteFigure(fixtures::flag3()); }

inline Rational value_of(const Matrix& m, const Vector& x) { return dot(x, m * x); }

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
    bool coin() { return integer(0, 1) == 1; }

    Rational rational(int b) {
        const int den = integer(1, b);
        return ratio(integer(-b, b), den);
    }

    Vector vector(int n, int b) {
        Vector v;
        do {
            v.clear();
            for (int i = 0; i <= n; ++i) v.emplace_back(integer(-b, b));
        } while (is_zero(v));
        return v;
    }

    /// Uniformly drawn small-coefficient vector inside S.
    Vector vector_in(const Subspace& s, int b) {
        const auto width = static_cast<std::size_t>(s.ambient_dim() + 1);
        Vector v;
        do {
            v.assign(width, Rational(0));
            for (const auto& e : s.basis()) {
                const int c = integer(-b, b);
                for (std::size_t t = 0; t < width; ++t) v[t] += c * e[t];
            }
        } while (is_zero(v));
        return v;
    }

    /// A subspace of dimension d of S (S by default all of P^n).
    Subspace subspace_in(const Subspace& s, int d, int b = 2) {
        std::vector<Vector> vs;
        const auto width = static_cast<std::size_t>(s.ambient_dim() + 1);
        while (static_cast<int>(vs.size()) < d + 1) {
            vs.push_back(vector_in(s, b));
            if (rank_of(vs, width) < vs.size()) vs.pop_back();
        }
        return Subspace::span(vs, s.ambient_dim());
    }

    Subspace subspace(int n, int d, int b = 2) { return subspace_in(Subspace::full(n), d, b); }

    /// Block sizes summing to n + 1 with random sign counts.
    Signature signature(int n) {
        Signature sig;
        int left = n + 1;
        while (left > 0) {
            const int size = integer(1, left);
            sig.push_back({size, integer(0, size)});
            left -= size;
        }
        return sig;
    }

    Matrix invertible(int n, int b = 2) {
        const auto size = static_cast<std::size_t>(n + 1);
        while (true) {
            Matrix m(size, size);
            for (std::size_t i = 0; i < size; ++i)
                for (std::size_t j = 0; j < size; ++j) m(i, j) = integer(-b, b);
            if (determinant(m) != 0) return m;
        }
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

/// EUC2, HYP2, FLAG3 and a random signature with 1 <= n <= 4.
inline AbsoluteFigure random_figure(Rng& rng) {
    switch (rng.integer(0, 3)) {
    case 0: return euc2();
    case 1: return hyp2();
    case 2: return flag3();
    default: return AbsoluteFigure(rng.signature(rng.integer(1, 4)));
    }
}

/// All points of P^n with coordinates in -b..b, one representative each.
inline std::vector<Subspace> small_points(int n, int b) {
    std::vector<Subspace> out;
    const auto size = static_cast<std::size_t>(n + 1);
    std::vector<int> c(size, -b);
    while (true) {
        Vector v;
        for (int x : c) v.emplace_back(x);
        if (!is_zero(v)) {
            Subspace s = Subspace::span({v}, n);
            bool seen = false;
            for (const auto& t : out)
                if (t == s) seen = true;
            if (!seen) out.push_back(s);
        }
        std::size_t i = 0;
        while (i < size && c[i] == b) c[i++] = -b;
        if (i == size) break;
        ++c[i];
    }
    return out;
}

/// Distinct joins of pairs of the given points.
inline std::vector<Subspace> lines_through(const std::vector<Subspace>& points) {
    std::vector<Subspace> out;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            Subspace l = join(points[i], points[j]);
            bool seen = false;
            for (const auto& t : out)
                if (t == l) seen = true;
            if (!seen) out.push_back(l);
        }
    return out;
}

/// Tangency of a line L through X not in A_1, read off the line propositions:
/// A_1 a hyperplane: L n A_1 lies on Q_1. Otherwise, X off Q_0: L n X^p lies on
/// Q_0; X on Q_0: L lies in X^p. Normal coordinates.
inline bool tangent_by_line_propositions(const AbsoluteFigure& f, const Subspace& line, const Vector& x) {
    const Matrix& m0 = f.quadric(0).matrix();
    if (f.block_size(0) == 1) {
        const Subspace y = meet(line, f.vertex_space(1));
        return value_of(f.quadric(1).matrix(), y.basis().front()) == 0;
    }
    const Subspace xp = zeros({row_times(x, m0)});
    if (value_of(m0, x) != 0) {
        const Subspace y = meet(line, xp);
        return value_of(m0, y.basis().front()) == 0;
    }
    return contains(xp, line);
}

} // namespace ckpolar::testing

#endif
