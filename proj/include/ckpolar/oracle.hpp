#ifndef CKPOLAR_ORACLE_HPP
#define CKPOLAR_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <vector>

#include "ckpolar/polar_variety.hpp"

namespace ckpolar {

struct SearchBudget {
    /// Coefficients range over -b..b.
    int coefficient_bound = 2;
    /// Cap on the number of independent sets B examined.
    std::size_t max_candidates = 200000;
};

enum class OracleVerdict { confirmed, refuted_within_budget };

inline const char* to_string(OracleVerdict v) {
    return v == OracleVerdict::confirmed ? "confirmed" : "refuted_within_budget";
}

/// The independent set B = {X_i} (with the level l_i of each point) and the
/// total polars H_i of the points whose intersection is Y.
struct OracleWitness {
    std::vector<Vector> points;
    std::vector<int> levels;
    std::vector<Vector> hyperplanes;
};

struct OracleResult {
    OracleVerdict verdict = OracleVerdict::refuted_within_budget;
    std::optional<OracleWitness> witness;
    std::size_t configurations = 0;
    bool budget_exhausted = false;
};

namespace detail {

/// Nonzero combinations of `basis` with coefficients in -b..b, one per
/// projective point, ordered by coefficient height and then lexicographically.
inline std::vector<Vector> bounded_combinations(const std::vector<Vector>& basis, int b, std::size_t width) {
    const std::size_t m = basis.size();
    std::vector<std::pair<int, std::vector<int>>> tuples;
    std::vector<int> c(m, -b);
    if (m == 0) return {};
    while (true) {
        int height = 0;
        for (int x : c) height += std::abs(x);
        if (height > 0) tuples.emplace_back(height, c);
        std::size_t i = 0;
        while (i < m && c[i] == b) c[i++] = -b;
        if (i == m) break;
        ++c[i];
    }
    std::sort(tuples.begin(), tuples.end());
    std::set<Vector> seen;
    std::vector<Vector> out;
    for (const auto& [height, coeffs] : tuples) {
        Vector v(width);
        for (std::size_t i = 0; i < m; ++i)
            if (coeffs[i] != 0)
                for (std::size_t t = 0; t < width; ++t) v[t] += coeffs[i] * basis[i][t];
        if (is_zero(v)) continue;
        Vector key = v;
        const auto lead = std::find_if(key.begin(), key.end(), [](const Rational& x) { return x != 0; });
        const Rational scale = 1 / *lead;
        for (auto& x : key) x *= scale;
        if (seen.insert(key).second) out.push_back(std::move(v));
    }
    return out;
}

class TransversalSearch {
public:
    TransversalSearch(std::vector<std::vector<Vector>> candidates, std::size_t width)
        : candidates_(std::move(candidates)), width_(width) {}

    std::optional<std::vector<Vector>> run() {
        std::vector<Vector> chosen;
        if (extend(chosen)) return chosen;
        return std::nullopt;
    }

private:
    bool extend(std::vector<Vector>& chosen) {
        const std::size_t i = chosen.size();
        if (i == candidates_.size()) return true;
        std::vector<Vector> key_rows = chosen.empty() ? std::vector<Vector>{} : canonical_row_basis(chosen, width_);
        auto key = std::make_pair(i, key_rows);
        if (failed_.count(key)) return false;
        for (const auto& h : candidates_[i]) {
            chosen.push_back(h);
            if (rank_of(chosen, width_) == chosen.size() && extend(chosen)) return true;
            chosen.pop_back();
        }
        failed_.insert(std::move(key));
        return false;
    }

    std::vector<std::vector<Vector>> candidates_;
    std::size_t width_;
    std::set<std::pair<std::size_t, std::vector<Vector>>> failed_;
};

} // namespace detail

/// Bounded search for the data of the definition of a total polar: an
/// independent set B in K adapted to the filtration, and independent total
/// polars H_i of its points meeting in Y. A semi-decision procedure.
inline OracleResult oracle_is_total_polar(const AbsoluteFigure& f, const Subspace& k, const Subspace& y,
                                          const SearchBudget& budget = {}) {
    f.require_ambient(k, "oracle_is_total_polar");
    f.require_ambient(y, "oracle_is_total_polar");
    if (budget.coefficient_bound < 1) throw DomainError("oracle_is_total_polar: coefficient bound must be >= 1");
    OracleResult result;
    const int n = f.n();
    if (y.dim() != n - k.dim() - 1) return result;
    if (k.is_empty()) {
        result.verdict = OracleVerdict::confirmed;
        result.witness = OracleWitness{};
        return result;
    }
    const auto width = static_cast<std::size_t>(n + 1);
    const int b = budget.coefficient_bound;

    struct Level {
        int block;
        std::size_t need;
        std::vector<Vector> candidates;
    };
    std::vector<Level> levels;
    for (int j = f.r(); j >= 0; --j) {
        const Subspace layer = meet(k, f.vertex_space(j));
        const Subspace deeper = meet(k, f.vertex_space(j + 1));
        const auto need = static_cast<std::size_t>(layer.dim() - deeper.dim());
        if (need == 0) continue;
        Level lv{j, need, {}};
        for (auto& v : detail::bounded_combinations(layer.basis(), b, width))
            if (!deeper.contains_vector(v)) lv.candidates.push_back(std::move(v));
        levels.push_back(std::move(lv));
    }

    std::set<std::vector<std::vector<Vector>>> failed_spaces;
    std::vector<Vector> points;
    std::vector<int> point_levels;

    auto try_basis = [&]() -> bool {
        std::vector<std::pair<std::vector<Vector>, std::size_t>> spaces;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const Subspace p = polar(f.quadric(point_levels[i]), Subspace::span({points[i]}, n));
            auto rows = annihilator(join(y, p)).rows();
            if (rows.empty()) return false;
            spaces.emplace_back(std::move(rows), i);
        }
        std::sort(spaces.begin(), spaces.end());
        std::vector<std::vector<Vector>> key;
        for (const auto& s : spaces) key.push_back(s.first);
        if (failed_spaces.count(key)) return false;
        std::vector<std::vector<Vector>> candidates;
        for (const auto& s : spaces) candidates.push_back(detail::bounded_combinations(s.first, b, width));
        auto found = detail::TransversalSearch(candidates, width).run();
        if (!found) {
            failed_spaces.insert(std::move(key));
            return false;
        }
        OracleWitness w;
        w.points = points;
        w.levels = point_levels;
        w.hyperplanes.resize(points.size());
        for (std::size_t t = 0; t < spaces.size(); ++t) w.hyperplanes[spaces[t].second] = (*found)[t];
        result.witness = std::move(w);
        return true;
    };

    // Depth-first over levels; within a level, candidates are taken in increasing index order.
    auto search = [&](auto&& self, std::size_t level, std::size_t taken, std::size_t start) -> bool {
        if (result.budget_exhausted) return false;
        if (level == levels.size()) {
            if (++result.configurations > budget.max_candidates) {
                result.budget_exhausted = true;
                return false;
            }
            return try_basis();
        }
        const auto& lv = levels[level];
        if (taken == lv.need) return self(self, level + 1, 0, 0);
        for (std::size_t c = start; c < lv.candidates.size(); ++c) {
            points.push_back(lv.candidates[c]);
            point_levels.push_back(lv.block);
            if (rank_of(points, width) == points.size() && self(self, level, taken + 1, c + 1)) return true;
            points.pop_back();
            point_levels.pop_back();
            if (result.budget_exhausted) return false;
        }
        return false;
    };
    if (search(search, 0, 0, 0)) result.verdict = OracleVerdict::confirmed;
    return result;
}

/// Deterministic generator: state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64),
/// coefficient = (state >> 33) mod (2b + 1) - b, the state advancing before each draw.
class CoefficientStream {
public:
    explicit CoefficientStream(std::uint64_t seed, int bound) : state_(seed), bound_(bound) {}

    int next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        const auto span = static_cast<std::uint64_t>(2 * bound_ + 1);
        return static_cast<int>((state_ >> 33) % span) - bound_;
    }

private:
    std::uint64_t state_;
    int bound_;
};

/// Pseudorandom members of the polar variety of K: y_i drawn from W_i of the
/// Schubert flag as bounded combinations of its canonical basis.
inline std::vector<Subspace> sample_schubert(const AbsoluteFigure& f, const Subspace& k, std::uint64_t seed,
                                             std::size_t count, int bound = 2) {
    f.require_ambient(k, "sample_schubert");
    if (count < 1) throw DomainError("sample_schubert: count must be >= 1");
    if (bound < 1) throw DomainError("sample_schubert: bound must be >= 1");
    const auto flag = schubert_flag(f, k);
    const auto width = static_cast<std::size_t>(f.n() + 1);
    CoefficientStream rng(seed, bound);
    constexpr int kAttempts = 64;
    std::vector<Subspace> out;
    for (std::size_t s = 0; s < count; ++s) {
        std::vector<Vector> ys;
        for (const auto& w : flag.flag) {
            bool placed = false;
            for (int attempt = 0; attempt < kAttempts && !placed; ++attempt) {
                Vector v(width);
                for (const auto& e : w.basis()) {
                    const int c = rng.next();
                    for (std::size_t t = 0; t < width; ++t) v[t] += c * e[t];
                }
                ys.push_back(std::move(v));
                if (rank_of(ys, width) == ys.size()) placed = true;
                else ys.pop_back();
            }
            if (!placed) {
                for (const auto& e : w.basis()) {
                    ys.push_back(e);
                    if (rank_of(ys, width) == ys.size()) break;
                    ys.pop_back();
                }
            }
        }
        Subspace y = Subspace::span(ys, f.n());
        if (!is_total_polar(f, k, y)) throw InternalError("sample_schubert: sample is not a total polar");
        out.push_back(std::move(y));
    }
    return out;
}

} // namespace ckpolar

#endif
