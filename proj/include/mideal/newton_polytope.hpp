#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "detail/checked.hpp"
#include "detail/fourier_motzkin.hpp"
#include "error.hpp"
#include "monomial_ideal.hpp"
#include "rational.hpp"

namespace mideal {

using RationalVector = std::vector<Rational>;

/// The valid inequality <normal, x> >= offset of a Newton polyhedron.
/// Normals are nonnegative and primitive; offsets are nonnegative.
struct Facet {
    std::vector<std::int64_t> normal;
    std::int64_t offset = 0;

    friend bool operator==(const Facet &, const Facet &) = default;
};

enum class Membership { closed, interior };

namespace detail {

/// offset ascending, then normal in descending lex order (x >= 0 before y >= 0)
inline bool facet_order(const Facet &a, const Facet &b)
{
    if (a.offset != b.offset) {
        return a.offset < b.offset;
    }
    return std::lexicographical_compare(b.normal.begin(), b.normal.end(), a.normal.begin(), a.normal.end());
}

inline std::int64_t dot(std::span<const std::int64_t> a, const ExponentVector &g)
{
    __int128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += static_cast<__int128>(a[i]) * g[i];
    }
    return narrow(s);
}

inline Rational dot(std::span<const std::int64_t> a, std::span<const Rational> p)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0) {
            s += a[i] * p[i];
        }
    }
    return s;
}

inline std::int64_t gcd_of(std::span<const std::int64_t> v)
{
    std::int64_t g = 0;
    for (auto x : v) {
        g = std::gcd(g, x);
    }
    return g;
}

/// Extreme rays (a, beta) of the cone {a >= 0, <a, g> >= beta for all g} by
/// the double-description method. Every ray with a != 0 is a facet of
/// conv(points) + R^n_{>=0}; the cone also has the trivial ray (0, -1).
inline std::vector<Facet> facets_by_double_description(std::size_t n, const std::vector<ExponentVector> &points)
{
    struct Ray {
        std::vector<std::int64_t> v; // a_0 .. a_{n-1}, beta
        boost::dynamic_bitset<> tight;
    };

    const std::size_t rows = n + points.size();
    const std::size_t dim = n + 1;
    const ExponentVector &g0 = points.front();

    std::vector<Ray> rays;
    for (std::size_t j = 0; j < n; ++j) {
        Ray r{std::vector<std::int64_t>(dim, 0), boost::dynamic_bitset<>(rows)};
        r.v[j] = 1;
        r.v[n] = g0[j];
        for (std::size_t i = 0; i < n; ++i) {
            if (i != j) {
                r.tight.set(i);
            }
        }
        r.tight.set(n);
        rays.push_back(std::move(r));
    }
    {
        Ray r{std::vector<std::int64_t>(dim, 0), boost::dynamic_bitset<>(rows)};
        r.v[n] = -1;
        for (std::size_t i = 0; i < n; ++i) {
            r.tight.set(i);
        }
        rays.push_back(std::move(r));
    }

    for (std::size_t t = 1; t < points.size(); ++t) {
        const ExponentVector &g = points[t];
        const std::size_t row = n + t;
        std::vector<std::int64_t> slack(rays.size());
        bool any_negative = false;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            slack[k] = checked_sub(dot(std::span(rays[k].v).first(n), g), rays[k].v[n]);
            any_negative = any_negative || slack[k] < 0;
        }
        if (!any_negative) {
            for (std::size_t k = 0; k < rays.size(); ++k) {
                if (slack[k] == 0) {
                    rays[k].tight.set(row);
                }
            }
            continue;
        }

        std::vector<Ray> next;
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (slack[p] <= 0) {
                continue;
            }
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (slack[q] >= 0) {
                    continue;
                }
                auto common = rays[p].tight & rays[q].tight;
                if (common.count() + 2 < dim) {
                    continue;
                }
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k != p && k != q && common.is_subset_of(rays[k].tight)) {
                        adjacent = false;
                    }
                }
                if (!adjacent) {
                    continue;
                }
                std::vector<__int128> combo(dim);
                __int128 g128 = 0;
                for (std::size_t i = 0; i < dim; ++i) {
                    combo[i] = static_cast<__int128>(slack[p]) * rays[q].v[i] -
                               static_cast<__int128>(slack[q]) * rays[p].v[i];
                }
                for (auto c : combo) {
                    __int128 a = c < 0 ? -c : c;
                    __int128 b = g128;
                    while (b != 0) {
                        __int128 tmp = a % b;
                        a = b;
                        b = tmp;
                    }
                    g128 = a;
                }
                Ray r{std::vector<std::int64_t>(dim), std::move(common)};
                for (std::size_t i = 0; i < dim; ++i) {
                    r.v[i] = narrow(g128 > 1 ? combo[i] / g128 : combo[i]);
                }
                r.tight.set(row);
                next.push_back(std::move(r));
            }
        }
        for (std::size_t k = 0; k < rays.size(); ++k) {
            if (slack[k] > 0) {
                next.push_back(std::move(rays[k]));
            } else if (slack[k] == 0) {
                rays[k].tight.set(row);
                next.push_back(std::move(rays[k]));
            }
        }
        rays = std::move(next);
    }

    std::vector<Facet> facets;
    for (const auto &r : rays) {
        std::span<const std::int64_t> a(r.v.data(), n);
        std::int64_t g = gcd_of(a);
        if (g == 0) {
            continue; // the trivial ray (0, -1)
        }
        Facet f;
        f.normal.assign(a.begin(), a.end());
        for (auto &x : f.normal) {
            x /= g;
        }
        ensure(r.v[n] % g == 0, "facet offset is integral");
        f.offset = r.v[n] / g;
        facets.push_back(std::move(f));
    }
    std::sort(facets.begin(), facets.end(), facet_order);
    return facets;
}

} // namespace detail

/// Newt(a) = conv(exponents of a) + R^n_{>=0} in H-representation, together
/// with a multiplicative scale c so the object represents c·Newt(a).
class NewtonPolytope {
public:
    /// Newton polyhedron of a nonzero monomial ideal.
    static NewtonPolytope build(const MonomialIdeal &I)
    {
        detail::require_nonzero(I);
        NewtonPolytope P;
        P.n_ = I.ambient_dim();
        P.points_ = I.generators();
        P.facets_ = detail::facets_by_double_description(P.n_, P.points_);
        P.validate_and_witness();
        return P;
    }

    /// conv(points) + R^n_{>=0}; the points need not be minimal.
    static NewtonPolytope from_points(std::size_t n, std::vector<ExponentVector> points)
    {
        return build(MonomialIdeal(n, std::move(points)));
    }

    [[nodiscard]] std::size_t ambient_dim() const { return n_; }
    [[nodiscard]] const std::vector<ExponentVector> &source_points() const { return points_; }
    [[nodiscard]] const std::vector<Facet> &facets() const { return facets_; }
    [[nodiscard]] const Rational &scale() const { return scale_; }

    /// A point violating facet i and strictly satisfying all other facets of
    /// the scaled polyhedron.
    [[nodiscard]] RationalVector irredundancy_witness(std::size_t i) const
    {
        RationalVector w = witnesses_.at(i);
        for (auto &x : w) {
            x *= scale_;
        }
        return w;
    }

    [[nodiscard]] NewtonPolytope scaled(const Rational &c) const
    {
        if (c < 0) {
            throw InputError("scale factor must be nonnegative, got " + to_string(c));
        }
        NewtonPolytope P = *this;
        P.scale_ *= c;
        return P;
    }

    /// Set equality of the represented (scaled) polyhedra.
    friend bool operator==(const NewtonPolytope &A, const NewtonPolytope &B)
    {
        return A.n_ == B.n_ && A.effective_facets() == B.effective_facets();
    }

private:
    NewtonPolytope() = default;

    [[nodiscard]] std::vector<std::pair<std::vector<std::int64_t>, Rational>> effective_facets() const
    {
        std::vector<std::pair<std::vector<std::int64_t>, Rational>> out;
        if (scale_ == 0) {
            // 0 · Newt is the orthant
            for (std::size_t i = 0; i < n_; ++i) {
                std::vector<std::int64_t> normal(n_, 0);
                normal[i] = 1;
                out.emplace_back(std::move(normal), Rational(0));
            }
            return out;
        }
        for (const auto &f : facets_) {
            out.emplace_back(f.normal, f.offset * scale_);
        }
        return out;
    }

    void validate_and_witness()
    {
        using detail::ensure;
        for (const auto &f : facets_) {
            ensure(f.offset >= 0, "facet offsets are nonnegative");
            ensure(detail::gcd_of(f.normal) == 1, "facet normals are primitive");
            std::int64_t support = 0;
            for (auto a : f.normal) {
                ensure(a >= 0, "facet normals are nonnegative");
                support += a != 0 ? 1 : 0;
            }
            // a facet through the origin must be a coordinate hyperplane
            ensure(f.offset > 0 || support == 1, "offset-zero facets are coordinate facets");
            for (const auto &g : points_) {
                ensure(detail::dot(f.normal, g) >= f.offset, "source points satisfy every facet");
            }
        }

        witnesses_.clear();
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            const Facet &f = facets_[i];
            RationalVector centroid(n_, Rational(0));
            std::int64_t count = 0;
            for (const auto &g : points_) {
                if (detail::dot(f.normal, g) != f.offset) {
                    continue;
                }
                for (std::size_t j = 0; j < n_; ++j) {
                    centroid[j] += g[j];
                }
                ++count;
                for (std::size_t d = 0; d < n_; ++d) {
                    if (f.normal[d] != 0) {
                        continue;
                    }
                    for (std::size_t j = 0; j < n_; ++j) {
                        centroid[j] += g[j] + (j == d ? 1 : 0);
                    }
                    ++count;
                }
            }
            ensure(count > 0, "every facet touches a source point");
            for (auto &x : centroid) {
                x /= count;
            }
            // push outward across facet i, staying strictly inside the others
            Rational step = 1;
            for (std::size_t k = 0; k < facets_.size(); ++k) {
                if (k == i) {
                    continue;
                }
                const Facet &h = facets_[k];
                Rational slack = detail::dot(h.normal, centroid) - h.offset;
                ensure(slack > 0, "facet centroid lies in the relative interior");
                std::int64_t inner = 0;
                for (std::size_t j = 0; j < n_; ++j) {
                    inner += h.normal[j] * f.normal[j];
                }
                if (inner > 0) {
                    step = std::min(step, Rational(slack / (2 * inner)));
                }
            }
            RationalVector w = centroid;
            for (std::size_t j = 0; j < n_; ++j) {
                w[j] -= step * f.normal[j];
            }
            witnesses_.push_back(std::move(w));
        }
    }

    std::size_t n_ = 0;
    std::vector<ExponentVector> points_;
    std::vector<Facet> facets_;
    std::vector<RationalVector> witnesses_;
    Rational scale_{1};
};

namespace detail {

inline void require_dim(std::size_t n, std::size_t m)
{
    if (n != m) {
        throw InputError("point of length " + std::to_string(m) + " used with ambient dimension " +
                         std::to_string(n));
    }
}

} // namespace detail

inline NewtonPolytope build(const MonomialIdeal &I) { return NewtonPolytope::build(I); }

[[nodiscard]] inline bool member(const NewtonPolytope &P, std::span<const Rational> p, Membership mode)
{
    detail::require_dim(P.ambient_dim(), p.size());
    for (const auto &f : P.facets()) {
        Rational lhs = detail::dot(f.normal, p);
        Rational rhs = P.scale() * f.offset;
        if (mode == Membership::closed ? lhs < rhs : lhs <= rhs) {
            return false;
        }
    }
    return true;
}

/// Closed membership p ∈ Newt(I) decided directly from
/// {λ >= 0, Σλ = 1, Σ λ_j g_j <= p} by Fourier–Motzkin elimination,
/// independent of any facet description.
[[nodiscard]] inline bool member_oracle(const MonomialIdeal &I, std::span<const Rational> p)
{
    detail::require_nonzero(I);
    const std::size_t n = I.ambient_dim();
    detail::require_dim(n, p.size());

    Integer scale = 1;
    for (const auto &x : p) {
        scale = boost::multiprecision::lcm(scale, denominator(x));
    }
    std::vector<Integer> target(n);
    for (std::size_t i = 0; i < n; ++i) {
        target[i] = numerator(p[i] * scale);
    }

    // λ_last = 1 - Σ_{j<last} λ_j
    const auto &gens = I.generators();
    const std::size_t vars = gens.size() - 1;
    const ExponentVector &last = gens.back();
    std::vector<detail::FmRow> rows;
    for (std::size_t j = 0; j < vars; ++j) {
        detail::FmRow r{std::vector<Integer>(vars, 0), 0, {}};
        r.coeffs[j] = -1;
        rows.push_back(std::move(r));
    }
    {
        detail::FmRow r{std::vector<Integer>(vars, 1), 1, {}};
        rows.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < n; ++i) {
        detail::FmRow r{std::vector<Integer>(vars), target[i] - scale * last[i], {}};
        for (std::size_t j = 0; j < vars; ++j) {
            r.coeffs[j] = scale * (Integer(gens[j][i]) - last[i]);
        }
        rows.push_back(std::move(r));
    }
    return detail::fm_feasible(std::move(rows), vars);
}

[[nodiscard]] inline NewtonPolytope scale(const NewtonPolytope &P, const Rational &c) { return P.scaled(c); }

/// c1·P ⊕ c2·Q for scaled polyhedra sharing the orthant as recession cone:
/// with c1 = p1/r, c2 = p2/r the sum is (1/r)·conv{p1·g + p2·h}.
[[nodiscard]] inline NewtonPolytope minkowski_sum(const NewtonPolytope &P, const NewtonPolytope &Q)
{
    if (P.ambient_dim() != Q.ambient_dim()) {
        throw InputError("Minkowski sum of polyhedra in different dimensions");
    }
    Integer r = boost::multiprecision::lcm(denominator(P.scale()), denominator(Q.scale()));
    std::int64_t p1 = to_int64(numerator(P.scale() * r));
    std::int64_t p2 = to_int64(numerator(Q.scale() * r));
    std::vector<ExponentVector> points;
    for (const auto &g : P.source_points()) {
        for (const auto &h : Q.source_points()) {
            points.push_back(p1 * g + p2 * h);
        }
    }
    return NewtonPolytope::from_points(P.ambient_dim(), std::move(points)).scaled(Rational(Integer(1), r));
}

/// sup{t : p ∈ t·P} = min over positive-offset facets of <a, p> / (scale·b).
[[nodiscard]] inline ExtendedRational min_ratio(const NewtonPolytope &P, std::span<const Rational> p)
{
    detail::require_dim(P.ambient_dim(), p.size());
    for (const auto &x : p) {
        if (x <= 0) {
            throw InputError("min_ratio requires a strictly positive point");
        }
    }
    if (P.scale() == 0) {
        return ExtendedRational::infinity();
    }
    ExtendedRational best = ExtendedRational::infinity();
    for (const auto &f : P.facets()) {
        if (f.offset == 0) {
            continue;
        }
        ExtendedRational t(detail::dot(f.normal, p) / (P.scale() * f.offset));
        best = std::min(best, t);
    }
    return best;
}

} // namespace mideal
