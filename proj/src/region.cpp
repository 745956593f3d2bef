#include "wreal/region.hpp"

#include "wreal/cfunc.hpp"
#include "wreal/error.hpp"

#include <mutex>

namespace wreal {

struct Region::Node {
    enum class Kind { full, box, slit, ball, cell, inter, prod, uni };
    Kind kind = Kind::full;
    int dim = 1;

    // box: per-coordinate open interval, absent endpoint = unbounded
    std::vector<std::pair<std::optional<CReal>, std::optional<CReal>>> coords;

    // ball / annulus (dim 1: absolute value, dim 2: Euclidean)
    CRealVec center;
    std::optional<CReal> r_in, r_out;

    // cell over a base
    Region base;
    std::shared_ptr<const CFunc> lower, upper;

    // intersection / product
    std::vector<Region> parts;

    // union with glue data
    Region ua, ub;
    std::function<Int(const Int&)> glue_u;

    mutable std::mutex mu;
    mutable std::map<Int, Int> alpha_memo;
};

using Node = Region::Node;
using Kind = Node::Kind;

static Region make(std::shared_ptr<Node> n) { return Region(std::move(n)); }

Region Region::full(int dim) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::full;
    n->dim = dim;
    return make(n);
}

Region Region::interval(std::optional<CReal> lo, std::optional<CReal> hi) {
    return box({{std::move(lo), std::move(hi)}});
}

Region Region::box(std::vector<std::pair<std::optional<CReal>, std::optional<CReal>>> coords) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::box;
    n->dim = static_cast<int>(coords.size());
    n->coords = std::move(coords);
    return make(n);
}

Region Region::half_space(int dim, int coord, bool greater, CReal threshold) {
    std::vector<std::pair<std::optional<CReal>, std::optional<CReal>>> cs(dim);
    if (greater)
        cs[coord].first = std::move(threshold);
    else
        cs[coord].second = std::move(threshold);
    return box(std::move(cs));
}

Region Region::slit_plane() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::slit;
    n->dim = 2;
    return make(n);
}

Region Region::disc(CRealVec center, CReal radius) {
    return annulus(2, std::move(center), std::nullopt, std::move(radius));
}

Region Region::annulus(int dim, CRealVec center, std::optional<CReal> r_in,
                       std::optional<CReal> r_out) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::ball;
    n->dim = dim;
    n->center = std::move(center);
    n->r_in = std::move(r_in);
    n->r_out = std::move(r_out);
    return make(n);
}

Region Region::cell_over(Region base, std::shared_ptr<const CFunc> lower,
                         std::shared_ptr<const CFunc> upper) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::cell;
    n->dim = base.dim() + 1;
    n->base = std::move(base);
    n->lower = std::move(lower);
    n->upper = std::move(upper);
    return make(n);
}

Region Region::intersect(std::vector<Region> parts) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::inter;
    n->dim = parts.at(0).dim();
    n->parts = std::move(parts);
    return make(n);
}

Region Region::product(std::vector<Region> factors) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::prod;
    n->dim = 0;
    for (const Region& r : factors) n->dim += r.dim();
    n->parts = std::move(factors);
    return make(n);
}

Region region_union(Region a, Region b, std::function<Int(const Int&)> glue_u) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::uni;
    n->dim = a.dim();
    n->ua = std::move(a);
    n->ub = std::move(b);
    n->glue_u = std::move(glue_u);
    return make(n);
}

int Region::dim() const { return node_->dim; }

namespace {

Rat max_norm(const RatVec& a) {
    Rat m(0);
    for (const Rat& c : a) m = max(m, abs(c));
    return m;
}

struct SideVotes {
    bool core = true;
    bool hull = true;
    void add(bool core_ok, bool hull_ok) {
        core = core && core_ok;
        hull = hull && hull_ok;
    }
};

// One interval side. Exact endpoints test the true margin; CReal endpoints
// are read at precision 4e and the core zone shrinks by 1/(2e) (alpha = 4e
// absorbs the slack).
void interval_side(SideVotes& v, const Rat& margin_hat, bool exact, const Int& e) {
    if (exact) {
        v.add(margin_hat >= inv(e), margin_hat >= inv(4 * e));
    } else {
        v.add(margin_hat >= Rat(3, 2 * e), margin_hat >= Rat(1, 2 * e));
    }
}

Rat endpoint_value(const CReal& ep, const Int& e, bool& exact) {
    if (const Rat* q = ep.exact()) {
        exact = true;
        return *q;
    }
    exact = false;
    return ep.approx(4 * e);
}

}  // namespace

Member Region::member_margin(const RatVec& a, const Int& e) const {
    if (e < 1) throw std::invalid_argument("member_margin: e must be >= 1");
    const Node& n = *node_;
    if (static_cast<int>(a.size()) != n.dim)
        fail(ErrKind::domain, "member_margin: dimension mismatch");

    // |a| <= e gates everything except unions (handled per part).
    if (n.kind != Kind::uni && max_norm(a) > Rat(e)) return Member::out;

    switch (n.kind) {
        case Kind::full:
            return Member::in_core;

        case Kind::box: {
            SideVotes v;
            for (int i = 0; i < n.dim; ++i) {
                const auto& [lo, hi] = n.coords[i];
                bool exact;
                if (lo) {
                    Rat l = endpoint_value(*lo, e, exact);
                    interval_side(v, a[i] - l, exact, e);
                }
                if (hi) {
                    Rat h = endpoint_value(*hi, e, exact);
                    interval_side(v, h - a[i], exact, e);
                }
            }
            if (!v.hull) return Member::out;
            return v.core ? Member::in_core : Member::in_hull;
        }

        case Kind::slit: {
            // max-norm distance to the ray {(t,0) : t <= 0}
            Rat ai = abs(a[1]);
            Rat dist = a[0].sign() <= 0 ? ai : max(a[0], ai);
            if (dist < inv(4 * e)) return Member::out;
            return dist >= inv(e) ? Member::in_core : Member::in_hull;
        }

        case Kind::ball: {
            const Int p = 16 * e;
            SideVotes v;
            if (n.dim == 1) {
                Rat c = n.center.at(0).approx(p);
                Rat u = abs(a[0] - c);
                if (n.r_in) {
                    Rat ri = n.r_in->approx(p);
                    interval_side(v, u - ri, false, e);
                }
                if (n.r_out) {
                    Rat ro = n.r_out->approx(p);
                    interval_side(v, ro - u, false, e);
                }
            } else {
                // Euclidean margins via squared comparisons; thresholds
                // 2/e (core) and 1/(2e) (hull) absorb the norm gap and the
                // 1/(16e) endpoint slack; alpha = 8e. Derivation: true
                // 2-norm margin >= threshold - 0.16/e and dist_inf >=
                // margin_2 / sqrt(2).
                Rat c0 = n.center.at(0).approx(p), c1 = n.center.at(1).approx(p);
                Rat S = (a[0] - c0) * (a[0] - c0) + (a[1] - c1) * (a[1] - c1);
                auto sq_le = [&](const Rat& bound) {  // sqrt(S) <= bound
                    return bound.sign() >= 0 && S <= bound * bound;
                };
                auto sq_ge = [&](const Rat& bound) {  // sqrt(S) >= bound
                    return bound.sign() <= 0 || S >= bound * bound;
                };
                if (n.r_in) {
                    Rat ri = n.r_in->approx(p);
                    v.add(sq_ge(ri + Rat(2) / Rat(e)), sq_ge(ri + Rat(1, 2 * e)));
                }
                if (n.r_out) {
                    Rat ro = n.r_out->approx(p);
                    v.add(sq_le(ro - Rat(2) / Rat(e)), sq_le(ro - Rat(1, 2 * e)));
                }
            }
            if (!v.hull) return Member::out;
            return v.core ? Member::in_core : Member::in_hull;
        }

        case Kind::cell: {
            RatVec ax(a.begin(), a.end() - 1);
            const Rat& ay = a.back();
            Member mb = n.base.member_margin(ax, e);
            if (mb == Member::out) return Member::out;

            const Int ab = n.base.alpha(e);
            const Int q = std::max(Int(4 * e), ab);
            // hull: vertical clearance 1/(2e) against values read at level
            // q (valid: base hull gives ax in base-O_ab subset base-O_q).
            bool hull = true, core = (mb == Member::in_core) && e >= 2;
            Rat twoe = Rat(1, 2 * e);
            auto side = [&](const CFunc& g, bool is_lower) {
                Rat gv = g.f1(ax, q);
                Rat clear = is_lower ? ay - gv : gv - ay;
                if (clear < twoe) hull = false;
                if (core) {
                    // core: base InCore at floor(e/2) puts the radius-1/e
                    // ball inside base_e; bound the graph move by the
                    // oscillation over that ball.
                    Member mb2 = n.base.member_margin(ax, Int(e / 2));
                    if (mb2 != Member::in_core) {
                        core = false;
                        return;
                    }
                    Rat gv_e = g.f1(ax, e);
                    Rat osc = osc_bound(g, inv(e), e);
                    Rat cl = is_lower ? ay - gv_e : gv_e - ay;
                    if (cl < Rat(2) / Rat(e) + osc) core = false;
                }
            };
            if (n.lower) side(*n.lower, true);
            if (hull && n.upper) side(*n.upper, false);
            if (!hull) return Member::out;
            return core ? Member::in_core : Member::in_hull;
        }

        case Kind::inter: {
            bool core = true;
            for (const Region& r : n.parts) {
                Member m = r.member_margin(a, e);
                if (m == Member::out) return Member::out;
                core = core && m == Member::in_core;
            }
            return core ? Member::in_core : Member::in_hull;
        }

        case Kind::prod: {
            bool core = true;
            std::size_t off = 0;
            for (const Region& r : n.parts) {
                RatVec sub(a.begin() + off, a.begin() + off + r.dim());
                off += r.dim();
                Member m = r.member_margin(sub, e);
                if (m == Member::out) return Member::out;
                core = core && m == Member::in_core;
            }
            return core ? Member::in_core : Member::in_hull;
        }

        case Kind::uni: {
            // core at level e on either part is sound (dist_W >= dist_part);
            // the hull test runs at u(e), where W_e is covered by the parts.
            Member ma = n.ua.member_margin(a, e);
            Member mb = n.ub.member_margin(a, e);
            if (ma == Member::in_core || mb == Member::in_core) return Member::in_core;
            Int ue = n.glue_u(e);
            if (n.ua.member_margin(a, ue) != Member::out ||
                n.ub.member_margin(a, ue) != Member::out)
                return Member::in_hull;
            return Member::out;
        }
    }
    fail(ErrKind::unsupported, "member_margin: unknown shape");
}

Int Region::alpha(const Int& e) const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::full:
            return e;
        case Kind::box:
        case Kind::slit:
            return 4 * e;
        case Kind::ball:
            return 8 * e;
        case Kind::inter:
        case Kind::prod: {
            Int m = 4 * e;
            for (const Region& r : n.parts) m = std::max(m, r.alpha(e));
            return m;
        }
        case Kind::uni: {
            Int ue = n.glue_u(e);
            return std::max(n.ua.alpha(ue), n.ub.alpha(ue));
        }
        case Kind::cell: {
            {
                std::lock_guard<std::mutex> lk(n.mu);
                auto it = n.alpha_memo.find(e);
                if (it != n.alpha_memo.end()) return it->second;
            }
            // Accepted points have base clearance >= 1/ab and vertical
            // clearance > 1/(4e); a ball of radius 1/R fits inside the cell
            // once 1/R + osc(each bound, 1/R) <= 1/(4e). Oscillations are
            // taken over balls whose points stay in base_{2ab}.
            const Int ab = n.base.alpha(e);
            Int R = std::max(Int(8 * e), Int(2 * ab));
            const Rat budget = inv(4 * e);
            for (int iter = 0; iter < 64; ++iter) {
                Rat total = inv(R);
                if (n.lower) total += osc_bound(*n.lower, inv(R), Int(2 * ab));
                if (n.upper) total += osc_bound(*n.upper, inv(R), Int(2 * ab));
                if (total <= budget) break;
                R *= 2;
            }
            Int out = std::max(std::max(ab, Int(4 * e)), R);
            std::lock_guard<std::mutex> lk(n.mu);
            n.alpha_memo.emplace(e, out);
            return out;
        }
    }
    fail(ErrKind::unsupported, "alpha: unknown shape");
}

ApproximableSet Region::approx_set() const {
    Region self = *this;
    ApproximableSet s;
    s.dim = dim();
    s.member = [self](const RatVec& a, const Int& e) {
        return self.member_margin(a, e) != Member::out;
    };
    s.alpha = [self](const Int& e) { return self.alpha(e); };
    return s;
}

std::optional<Int> Region::locate(const CRealVec& x, int effort) const {
    if (static_cast<int>(x.size()) != dim()) fail(ErrKind::domain, "locate: dimension mismatch");
    Int ep = 1;
    for (int j = 0; j <= effort; ++j, ep *= 2) {
        RatVec a = approx_vec(x, 4 * ep);
        if (member_margin(a, 2 * ep) == Member::in_core) {
            // dist(x) >= 1/(2ep) - 1/(4ep) = 1/(4ep), |x| <= 2ep + 1 <= 4ep
            return Int(4 * ep);
        }
    }
    return std::nullopt;
}

Locator Region::locator() const {
    Region self = *this;
    return Locator{[self](const CRealVec& x, int effort) { return self.locate(x, effort); }};
}

std::vector<std::pair<Rat, Rat>> Region::hull_bounds(const Int& e) const {
    const Node& n = *node_;
    const Rat clamp_lo = Rat(-e), clamp_hi = Rat(e);
    std::vector<std::pair<Rat, Rat>> out;
    switch (n.kind) {
        case Kind::full:
        case Kind::slit:
            out.assign(n.dim, {clamp_lo, clamp_hi});
            return out;
        case Kind::box:
            for (const auto& [lo, hi] : n.coords) {
                Rat l = clamp_lo, h = clamp_hi;
                bool exact;
                if (lo) l = max(l, endpoint_value(*lo, e, exact) - inv(4 * e));
                if (hi) h = min(h, endpoint_value(*hi, e, exact) + inv(4 * e));
                out.push_back({l, h});
            }
            return out;
        case Kind::ball: {
            for (int i = 0; i < n.dim; ++i) {
                Rat l = clamp_lo, h = clamp_hi;
                if (n.r_out) {
                    Rat c = n.center.at(i).approx(16 * e);
                    Rat ro = n.r_out->approx(16 * e) + inv(4 * e);
                    l = max(l, c - ro);
                    h = min(h, c + ro);
                }
                out.push_back({l, h});
            }
            return out;
        }
        case Kind::cell: {
            out = n.base.hull_bounds(e);
            out.push_back({clamp_lo, clamp_hi});
            return out;
        }
        case Kind::inter: {
            out = n.parts[0].hull_bounds(e);
            for (std::size_t i = 1; i < n.parts.size(); ++i) {
                auto b = n.parts[i].hull_bounds(e);
                for (int j = 0; j < n.dim; ++j) {
                    out[j].first = max(out[j].first, b[j].first);
                    out[j].second = min(out[j].second, b[j].second);
                }
            }
            return out;
        }
        case Kind::prod: {
            for (const Region& r : n.parts) {
                auto b = r.hull_bounds(e);
                out.insert(out.end(), b.begin(), b.end());
            }
            return out;
        }
        case Kind::uni: {
            Int ue = n.glue_u(e);
            out = n.ua.hull_bounds(ue);
            auto b = n.ub.hull_bounds(ue);
            for (int j = 0; j < n.dim; ++j) {
                out[j].first = min(out[j].first, b[j].first);
                out[j].second = max(out[j].second, b[j].second);
            }
            return out;
        }
    }
    fail(ErrKind::unsupported, "hull_bounds: unknown shape");
}

}  // namespace wreal
