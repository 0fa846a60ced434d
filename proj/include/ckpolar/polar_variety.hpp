#ifndef CKPOLAR_POLAR_VARIETY_HPP
#define CKPOLAR_POLAR_VARIETY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ckpolar/absolute_figure.hpp"

namespace ckpolar {

/// Dimension test against the polar sequence: dim Y = n - k - 1 and
/// dim(Y n (K n A_j)^{p_j}) >= m_j - k_j - 1 for every entry.
/// A dimension mismatch is a plain `false`.
inline bool is_total_polar(const AbsoluteFigure& f, const Subspace& k, const Subspace& y) {
    f.require_ambient(k, "is_total_polar");
    f.require_ambient(y, "is_total_polar");
    if (y.dim() != f.n() - k.dim() - 1) return false;
    for (const auto& entry : polar_sequence(f, k))
        if (meet(y, entry.space).dim() < entry.position) return false;
    return true;
}

/// W_0 ⊂ W_1 ⊂ ... ⊂ W_{n-k-1}; the polar variety of K is the Schubert
/// variety of this flag.
struct PolarFlag {
    std::vector<Subspace> flag;

    int top_index() const noexcept { return static_cast<int>(flag.size()) - 1; }

    /// dim Y = top_index() and dim(Y n W_i) >= i for all i.
    bool admits(const Subspace& y) const {
        if (y.dim() != top_index()) return false;
        for (std::size_t i = 0; i < flag.size(); ++i)
            if (meet(y, flag[i]).dim() < static_cast<int>(i)) return false;
        return true;
    }
};

namespace detail {

/// Greedily appends the vectors of `candidates` that are independent of `base`
/// (and of those already taken) until `count` have been taken.
inline std::vector<Vector> independent_completion(const Subspace& base, const std::vector<Vector>& candidates,
                                                  std::size_t count) {
    std::vector<Vector> taken;
    Subspace current = base;
    for (const auto& v : candidates) {
        if (taken.size() == count) break;
        if (current.contains_vector(v)) continue;
        taken.push_back(v);
        current = join(current, Subspace::span({v}, base.ambient_dim()));
    }
    return taken;
}

inline Subspace span_with(const Subspace& base, const std::vector<Vector>& extra) {
    auto v = base.basis();
    v.insert(v.end(), extra.begin(), extra.end());
    return Subspace::span(v, base.ambient_dim());
}

/// A basis of K adapted to the filtration K n A_r ⊆ ... ⊆ K n A_0, each
/// vector tagged with the deepest level l such that it lies in A_l.
struct AdaptedVector {
    Vector coords;
    int level = 0;
};

inline std::vector<AdaptedVector> adapted_basis(const AbsoluteFigure& f, const Subspace& k) {
    std::vector<AdaptedVector> basis;
    Subspace covered = Subspace::empty(f.n());
    for (int j = f.r(); j >= 0; --j) {
        const Subspace layer = meet(k, f.vertex_space(j));
        for (const auto& v : independent_completion(covered, layer.basis(), layer.basis().size())) {
            basis.push_back({v, j});
            covered = join(covered, Subspace::span({v}, f.n()));
        }
    }
    return basis;
}

/// K = K_0 ⊂ K_1 ⊂ ... ⊂ K_m = K', one dimension per step.
inline std::vector<Subspace> unit_chain(const Subspace& k, const Subspace& k_prime) {
    std::vector<Subspace> chain{k};
    for (const auto& v : independent_completion(k, k_prime.basis(), k_prime.basis().size()))
        chain.push_back(join(chain.back(), Subspace::span({v}, k.ambient_dim())));
    return chain;
}

} // namespace detail

inline PolarFlag schubert_flag(const AbsoluteFigure& f, const Subspace& k) {
    const auto seq = polar_sequence(f, k);
    const int top = f.n() - k.dim() - 1;
    PolarFlag result;
    result.flag.resize(static_cast<std::size_t>(top + 1));
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto& entry = seq[i];
        const int below = i + 1 < seq.size() ? seq[i + 1].position : -1;
        result.flag.at(static_cast<std::size_t>(entry.position)) = entry.space;
        const Subspace& base = f.vertex_space(entry.block + 1);
        const auto gap = static_cast<std::size_t>(entry.position - below - 1);
        const auto z = detail::independent_completion(base, entry.space.basis(), gap);
        if (z.size() != gap) throw InternalError("schubert_flag: not enough vectors to fill a gap");
        for (std::size_t c = 1; c <= gap; ++c)
            result.flag[static_cast<std::size_t>(below) + c] =
                detail::span_with(base, std::vector<Vector>(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(c)));
    }
    for (std::size_t i = 1; i < result.flag.size(); ++i)
        if (!(result.flag[i - 1].dim() < result.flag[i].dim() && contains(result.flag[i], result.flag[i - 1])))
            throw InternalError("schubert_flag: flag is not strictly increasing");
    if (!result.flag.empty() && result.flag.front().is_empty())
        throw InternalError("schubert_flag: W_0 is empty");
    return result;
}

/// One total polar, assembled as an intersection of independent total polars
/// of the points of a filtration-adapted basis of K. Among the hyperplane
/// rows allowed for each point, the lexicographically smallest canonical row
/// that keeps the construction completable is taken; the row x^T M_l is the
/// fallback and is always completable.
inline Subspace canonical_total_polar(const AbsoluteFigure& f, const Subspace& k) {
    f.require_ambient(k, "canonical_total_polar");
    const int n = f.n();
    const auto basis = detail::adapted_basis(f, k);

    // Shallow levels first.
    std::vector<const detail::AdaptedVector*> order;
    for (auto it = basis.rbegin(); it != basis.rend(); ++it) order.push_back(&*it);

    std::vector<Vector> natural; // x^T M_l for each point, in processing order
    for (const auto* x : order) natural.push_back(row_times(x->coords, f.quadric(x->level).matrix()));

    const auto width = static_cast<std::size_t>(n + 1);
    std::vector<Vector> chosen;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto* x = order[i];
        const Subspace point_polar = polar(f.quadric(x->level), Subspace::span({x->coords}, n));
        auto candidates = annihilator(point_polar).rows();
        std::sort(candidates.begin(), candidates.end(),
                  [](const Vector& a, const Vector& b) { return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()); });
        auto completable = [&](const Vector& h) {
            auto rows = chosen;
            rows.push_back(h);
            rows.insert(rows.end(), natural.begin() + static_cast<std::ptrdiff_t>(i + 1), natural.end());
            return rank_of(rows, width) == rows.size();
        };
        const Vector* pick = &natural[i];
        for (const auto& h : candidates)
            if (completable(h)) {
                pick = &h;
                break;
            }
        if (!completable(*pick)) throw InternalError("canonical_total_polar: hyperplanes not independent");
        chosen.push_back(*pick);
    }
    Subspace y = annihilated_by(DualSubspace::span(chosen, n));
    if (!is_total_polar(f, k, y)) throw InternalError("canonical_total_polar: result fails the dimension test");
    return y;
}

namespace detail {

inline void require_proper(const AbsoluteFigure& f, const Subspace& k, const char* op) {
    f.require_ambient(k, op);
    if (k.is_empty() || k.is_full())
        throw DomainError(std::string(op) + ": defined only for nonempty proper subspaces");
}

/// max{j : K n A_j nonempty}.
inline int last_meeting_block(const AbsoluteFigure& f, const Subspace& k) {
    const auto dims = filtration_dims(f, k);
    int l = 0;
    for (int j = 0; j <= f.r(); ++j)
        if (dims[static_cast<std::size_t>(j)] >= 0) l = j;
    return l;
}

} // namespace detail

/// K + A_l = P^n for the last vertex A_l that K meets.
inline bool is_regular(const AbsoluteFigure& f, const Subspace& k) {
    detail::require_proper(f, k, "is_regular");
    return join(k, f.vertex_space(detail::last_meeting_block(f, k))).is_full();
}

/// Decided from the dimension of the first polar-sequence entry and
/// cross-checked against is_regular.
inline bool has_unique_total_polar(const AbsoluteFigure& f, const Subspace& k) {
    detail::require_proper(f, k, "has_unique_total_polar");
    const auto seq = polar_sequence(f, k);
    const bool unique = seq.front().space.dim() == f.n() - k.dim() - 1;
    if (unique != is_regular(f, k))
        throw TheoremViolation("uniqueness of the total polar disagrees with regularity");
    return unique;
}

namespace detail {

/// Codimension-one step K ⊂ K1: a total polar of K1 inside the total polar Y of K.
inline Subspace shrink_step(const AbsoluteFigure& f, const Subspace& k, const Subspace& k1, const Subspace& y) {
    std::vector<Subspace> layers;
    for (const auto* s : {&k, &k1})
        for (const auto& e : polar_sequence(f, *s)) layers.push_back(meet(y, e.space));
    layers.push_back(y);
    std::sort(layers.begin(), layers.end(), [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
    for (std::size_t i = 1; i < layers.size(); ++i)
        if (!contains(layers[i], layers[i - 1])) throw InternalError("shrink_total_polar: layers are not nested");
    std::vector<Vector> adapted;
    Subspace covered = Subspace::empty(f.n());
    for (const auto& layer : layers) {
        const auto more = independent_completion(covered, layer.basis(), layer.basis().size());
        adapted.insert(adapted.end(), more.begin(), more.end());
        covered = span_with(covered, more);
    }
    if (adapted.empty()) throw InternalError("shrink_total_polar: total polar is empty");
    adapted.pop_back();
    return Subspace::span(adapted, f.n());
}

/// Codimension-one step K ⊂ K1: a total polar of K containing the total polar Y1 of K1.
inline Subspace extend_step(const AbsoluteFigure& f, const Subspace& k, const Subspace& y1) {
    const auto seq = polar_sequence(f, k);
    Subspace y = y1;
    while (y.dim() < f.n() - k.dim() - 1) {
        auto it = std::find_if(seq.rbegin(), seq.rend(), [&](const PolarEntry& e) { return !contains(y, e.space); });
        if (it == seq.rend()) throw InternalError("extend_total_polar: every entry already inside");
        const auto v = independent_completion(y, it->space.basis(), 1);
        y = span_with(y, v);
    }
    return y;
}

} // namespace detail

/// For K ⊆ K' and a total polar Y of K: a total polar of K' contained in Y.
inline Subspace shrink_total_polar(const AbsoluteFigure& f, const Subspace& k, const Subspace& k_prime,
                                   const Subspace& y) {
    f.require_ambient(k, "shrink_total_polar");
    f.require_ambient(k_prime, "shrink_total_polar");
    f.require_ambient(y, "shrink_total_polar");
    if (!contains(k_prime, k)) throw DomainError("shrink_total_polar: K is not contained in K'");
    if (!is_total_polar(f, k, y)) throw DomainError("shrink_total_polar: Y is not a total polar of K");
    const auto chain = detail::unit_chain(k, k_prime);
    Subspace current = y;
    for (std::size_t i = 1; i < chain.size(); ++i) current = detail::shrink_step(f, chain[i - 1], chain[i], current);
    if (!is_total_polar(f, k_prime, current) || !contains(y, current))
        throw InternalError("shrink_total_polar: result failed verification");
    return current;
}

/// For K ⊆ K' and a total polar Y' of K': a total polar of K containing Y'.
inline Subspace extend_total_polar(const AbsoluteFigure& f, const Subspace& k, const Subspace& k_prime,
                                   const Subspace& y_prime) {
    f.require_ambient(k, "extend_total_polar");
    f.require_ambient(k_prime, "extend_total_polar");
    f.require_ambient(y_prime, "extend_total_polar");
    if (!contains(k_prime, k)) throw DomainError("extend_total_polar: K is not contained in K'");
    if (!is_total_polar(f, k_prime, y_prime)) throw DomainError("extend_total_polar: Y' is not a total polar of K'");
    const auto chain = detail::unit_chain(k, k_prime);
    Subspace current = y_prime;
    for (std::size_t i = chain.size() - 1; i > 0; --i) current = detail::extend_step(f, chain[i - 1], current);
    if (!is_total_polar(f, k, current) || !contains(current, y_prime))
        throw InternalError("extend_total_polar: result failed verification");
    return current;
}

/// The points that are total polars of the hyperplane H: (H n A_{i-1})^{p_{i-1}}
/// with i the first index such that A_i ⊆ H.
inline Subspace total_polar_locus_of_hyperplane(const AbsoluteFigure& f, const Subspace& h) {
    f.require_ambient(h, "total_polar_locus_of_hyperplane");
    if (h.dim() != f.n() - 1) throw DimensionError("total_polar_locus_of_hyperplane: not a hyperplane");
    int i = 1;
    while (!contains(h, f.vertex_space(i))) ++i;
    return block_polar(f, h, i - 1);
}

/// (K n A_j)^{p_j} = (Y n A_j) + A_{j+1} for every j.
inline bool is_struve_polar(const AbsoluteFigure& f, const Subspace& k, const Subspace& y) {
    f.require_ambient(k, "is_struve_polar");
    f.require_ambient(y, "is_struve_polar");
    for (int j = 0; j <= f.r(); ++j)
        if (!(block_polar(f, k, j) == join(meet(y, f.vertex_space(j)), f.vertex_space(j + 1)))) return false;
    return true;
}

} // namespace ckpolar

#endif
