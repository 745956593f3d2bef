#include "wreal/cfunc.hpp"

#include "wreal/error.hpp"

#include <mutex>

namespace wreal {

CFunc::CFunc(Region domain, int cod_dim, DFn d, FFn f, bool uniform) {
    auto impl = std::make_shared<Impl>();
    impl->dom_dim = domain.dim();
    impl->domain = std::move(domain);
    impl->cod_dim = cod_dim;
    impl->d = std::move(d);
    impl->f = std::move(f);
    impl->uniform = uniform;
    impl_ = std::move(impl);
}

CFunc CFunc::with_beta(BoundWitness b) const {
    auto i = clone();
    i->beta = std::move(b);
    return CFunc(std::move(i));
}

CFunc CFunc::with_gamma(CompactnessWitness g) const {
    auto i = clone();
    i->gamma = std::move(g);
    return CFunc(std::move(i));
}

CFunc CFunc::with_compact_domain() const {
    auto i = clone();
    i->compact_domain = true;
    return CFunc(std::move(i));
}

CFunc CFunc::restricted(Region sub) const {
    auto i = clone();
    i->domain = std::move(sub);
    i->dom_dim = i->domain.dim();
    return CFunc(std::move(i));
}

std::pair<Rat, Rat> modulus(const CFunc& F, const Int& e) {
    return {Rat(2, F.d(e)), Rat(2, e)};
}

Rat osc_bound(const CFunc& F, const Rat& r, const Int& m) {
    // Over a max-norm ball of radius r inside O_q (any q >= m works since
    // the ball sits in O_m), ceil(r*d(q)/2) steps of length < 2/d(q) each
    // move F by < 2/q: osc <= (r*d(q) + 2)/q. Scan a doubling schedule.
    Int q = m < 1 ? Int(1) : m;
    Rat best = (r * Rat(F.d(q)) + Rat(2)) / Rat(q);
    for (int j = 0; j < 40; ++j) {
        q *= 2;
        Rat cand = (r * Rat(F.d(q)) + Rat(2)) / Rat(q);
        if (cand < best) best = cand;
    }
    return best;
}

namespace {

/// Shared one-slot evaluation cache behind the CRealVec that eval_at returns.
struct VecEval {
    CFunc F;
    CRealVec x;
    int effort;
    std::mutex mu;
    bool located = false;
    Int e0{1};
    Int cached_k{0};
    RatVec cached;

    RatVec at(const Int& k) {
        std::lock_guard<std::mutex> lk(mu);
        if (cached_k >= k) return cached;
        if (!F.compact_domain() && !located) {
            auto found = F.domain().locate(x, effort);
            if (!found)
                fail(ErrKind::domain, "eval_at: locator could not place the point in the domain");
            e0 = *found;
            located = true;
        }
        Int e = F.compact_domain() ? k : std::max(k, e0);
        Int de = F.d(e);
        RatVec a = approx_vec(x, de);
        RatVec v = F.f(a, e);
        trace("eval_at", e, de, Int(0));
        cached_k = k;
        cached = v;
        return v;
    }
};

}  // namespace

CRealVec eval_at(const CFunc& F, const CRealVec& x, const Int& k_hint, int effort) {
    auto ev = std::make_shared<VecEval>();
    ev->F = F;
    ev->x = x;
    ev->effort = effort;
    if (k_hint > 1) ev->at(k_hint);
    CRealVec out;
    for (int i = 0; i < F.cod_dim(); ++i)
        out.push_back(CReal([ev, i](const Int& k) { return ev->at(k).at(i); }));
    return out;
}

CReal eval_at1(const CFunc& F, const CReal& x, int effort) {
    return eval_at(F, CRealVec{x}, Int(1), effort).at(0);
}

CFunc compose(const CFunc& F, const CFunc& G, ComposeMode mode) {
    std::function<Int(const Int&)> level;  // beta (clamped >= e) or gamma
    bool comp_uniform = false;
    if (mode == ComposeMode::uniform_outer) {
        if (!G.uniform()) fail(ErrKind::missing_witness, "compose: outer function not uniform");
        if (!F.beta()) fail(ErrKind::missing_witness, "compose: inner bound witness missing");
        auto b = F.beta()->beta;
        level = [b](const Int& e) { return std::max(e, ceil_pos(b(e))); };
        comp_uniform = F.uniform() && F.beta()->uniform;
    } else {
        if (!F.gamma()) fail(ErrKind::missing_witness, "compose: compactness witness missing");
        auto g = F.gamma()->gamma;
        level = [g](const Int& e) { return std::max(e, g(e)); };
    }

    CFunc Fc = F, Gc = G;
    auto d_comp = [Fc, Gc, level](const Int& e) { return Fc.d(Gc.d(level(e))); };
    auto f_comp = [Fc, Gc, level](const RatVec& a, const Int& e) {
        Int m = level(e);
        return Gc.f(Fc.f(a, Gc.d(m)), m);
    };
    CFunc out(F.domain(), G.cod_dim(), d_comp, f_comp, comp_uniform);
    if (mode == ComposeMode::compact_inner && G.gamma()) {
        auto gf = F.gamma()->gamma;
        auto gg = G.gamma()->gamma;
        out = out.with_gamma(CompactnessWitness{
            [gf, gg](const Int& e) { return gg(std::max(e, gf(e))); }, G.gamma()->target});
    }
    if (G.beta()) {
        bool ok = mode == ComposeMode::compact_inner ? true : G.beta()->uniform;
        if (ok) {
            auto bg = G.beta()->beta;
            out = out.with_beta(BoundWitness{
                [bg, level](const Int& e) { return bg(level(e)); }, comp_uniform});
        }
    }
    return out;
}

CFunc glue(const CFunc& FU, const CFunc& FV, const GlueWitness& u, const ApproximableSet& AU,
           const ApproximableSet& AV) {
    // Combined witness for F on W = U cup V, given W_e subset U_{u(e)} cup
    // V_{u(e)} (u clamped >= e) and the skeletons A^U, A^V. With s = 2u(e),
    // m_U = 2 alpha_U(s), m_V = 2 alpha_V(s):
    //   f(a,e) = f_U(a, m_U) if a in A^U_s, else f_V(a, m_V) if a in A^V_s,
    //   else 0;
    //   d(e) = max(2s, m_U, m_V, d_U(m_U), d_V(m_V)).
    // Soundness, x in W_e, |x-a| < 1/d(e):
    //  * x in U_{u(e)}: dist(a, U^c) >= 1/u(e) - 1/(2s) = 3/(2s) >= 1/s and
    //    |a| <= u(e) + 1 <= s, so a in U_s cap Q subset A^U_s: branch U fires,
    //    x in U_{u(e)} subset U_{m_U} and |x-a| < 1/d_U(m_U): error < 1/m_U <= 1/e.
    //  * x only in V_{u(e)} but a in A^U_s: a in U_{alpha_U(s)}, so
    //    dist(x, U^c) >= 1/alpha_U(s) - 1/m_U = 1/m_U and |x| <= alpha_U(s) + 1
    //    <= m_U: x in U_{m_U} after all and the U contract applies (F agrees
    //    on the overlap). Otherwise a in A^V_s by the first argument applied
    //    to V, and symmetric reasoning gives error < 1/m_V <= 1/e.
    if (FU.cod_dim() != FV.cod_dim()) fail(ErrKind::domain, "glue: codomain mismatch");
    auto uu = u.u;
    auto uclamped = [uu](const Int& e) { return std::max(e, uu(e)); };
    Region W = region_union(FU.domain(), FV.domain(), uclamped);
    CFunc fu = FU, fv = FV;
    ApproximableSet au = AU, av = AV;
    auto d_glue = [fu, fv, au, av, uclamped](const Int& e) {
        Int s = 2 * uclamped(e);
        Int mU = 2 * au.alpha(s), mV = 2 * av.alpha(s);
        Int d = std::max(Int(2 * s), std::max(mU, mV));
        return std::max(d, std::max(fu.d(mU), fv.d(mV)));
    };
    int cod = FU.cod_dim();
    auto f_glue = [fu, fv, au, av, uclamped, cod](const RatVec& a, const Int& e) {
        Int s = 2 * uclamped(e);
        if (au.member(a, s)) return fu.f(a, Int(2 * au.alpha(s)));
        if (av.member(a, s)) return fv.f(a, Int(2 * av.alpha(s)));
        return RatVec(cod, Rat(0));
    };
    return CFunc(std::move(W), cod, d_glue, f_glue, false);
}

BoundWitness derive_bound(const CFunc& F, const Int& e_max) {
    if (F.dom_dim() > 3)
        fail(ErrKind::unsupported, "derive_bound: grid enumeration limited to dimension <= 3");
    struct Memo {
        std::mutex mu;
        std::map<Int, Rat> vals;
    };
    auto memo = std::make_shared<Memo>();
    CFunc f = F;
    auto beta = [f, memo](const Int& e) -> Rat {
        {
            std::lock_guard<std::mutex> lk(memo->mu);
            auto it = memo->vals.find(e);
            if (it != memo->vals.end()) return it->second;
        }
        // Grid pass of the boundedness lemma: every x in O_e has a
        // truncate-toward-zero neighbor a on (1/D)Z^N with D = max(d(e),4e);
        // that neighbor passes the hull test (margin >= 1/e - 1/D >= 3/(4e))
        // and the clamp (|a_i| <= |x_i|), so beta = 1 + max |f(a,e)| over
        // accepted grid points dominates |F| on O_e.
        const Int D = std::max(f.d(e), Int(4 * e));
        auto bounds = f.domain().hull_bounds(e);
        const int N = f.dom_dim();
        std::vector<Int> lo(N), hi(N);
        Int count = 1;
        for (int i = 0; i < N; ++i) {
            lo[i] = ceil_int(bounds[i].first * Rat(D));
            hi[i] = floor_int(bounds[i].second * Rat(D));
            Int w = hi[i] - lo[i] + 1;
            if (w < 0) w = 0;
            count *= w;
        }
        check_grid(count, "derive_bound");
        trace("derive_bound", e, D, count);

        Rat best(0);
        std::vector<Int> idx = lo;
        bool nonempty = count > 0;
        while (nonempty) {
            RatVec a(N);
            for (int i = 0; i < N; ++i) a[i] = Rat(idx[i], D);
            if (f.domain().member_margin(a, e) != Member::out) {
                RatVec v = f.f(a, e);
                for (const Rat& c : v) best = max(best, abs(c));
            }
            int i = 0;
            for (; i < N; ++i) {
                if (idx[i] < hi[i]) {
                    ++idx[i];
                    break;
                }
                idx[i] = lo[i];
            }
            if (i == N) break;
        }
        Rat out = best + Rat(1);
        std::lock_guard<std::mutex> lk(memo->mu);
        memo->vals.emplace(e, out);
        return out;
    };
    // warm the table up to e_max if small (documented tabulation)
    for (Int e = 1; e <= e_max && e <= 8; ++e) beta(e);
    bool uni = false;  // grid argument covers O_e; O|e has no margin to stand on
    return BoundWitness{beta, uni};
}

// ---------------- primitive catalog ----------------

namespace prim {

namespace {

Rat firewall(const Rat& v, const Int& K) { return Rat(round_num(v, K), K); }

CFunc scalar(Region dom, CFunc::DFn d, std::function<Rat(const RatVec&, const Int&)> f,
             bool uniform) {
    auto ff = [f = std::move(f)](const RatVec& a, const Int& e) { return RatVec{f(a, e)}; };
    return CFunc(std::move(dom), 1, std::move(d), std::move(ff), uniform);
}

}  // namespace

CFunc constant_vec(const CRealVec& value, int dom_dim) {
    CRealVec v = value;
    int m = static_cast<int>(v.size());
    // |c - f| <= 1/(4e) (approx) + 1/(4e) (round at 2e) < 1/e
    return CFunc(
        Region::full(dom_dim), m, [](const Int& e) { return Int(e + 1); },
        [v](const RatVec&, const Int& e) {
            RatVec out;
            for (const CReal& c : v) out.push_back(firewall(c.approx(4 * e), 2 * e));
            return out;
        },
        true);
}

CFunc constant(const CReal& value, int dom_dim) { return constant_vec({value}, dom_dim); }

CFunc coordinate(int dom_dim, int i) {
    return scalar(
        Region::full(dom_dim), [](const Int& e) { return Int(2 * e); },
        [i](const RatVec& a, const Int&) { return a.at(i); }, true);
}

CFunc add() {
    // |x1+x2 - a1-a2| < 2/d(e) = 1/e exactly at d(e)=2e; f exact (no slack)
    return scalar(
        Region::full(2), [](const Int& e) { return Int(2 * e); },
        [](const RatVec& a, const Int&) { return a[0] + a[1]; }, true);
}

CFunc sub() {
    return scalar(
        Region::full(2), [](const Int& e) { return Int(2 * e); },
        [](const RatVec& a, const Int&) { return a[0] - a[1]; }, true);
}

CFunc neg(int dim) {
    return CFunc(
        Region::full(dim), dim, [](const Int& e) { return Int(2 * e); },
        [](const RatVec& a, const Int&) {
            RatVec out;
            for (const Rat& c : a) out.push_back(-c);
            return out;
        },
        true);
}

CFunc min2() {
    return scalar(
        Region::full(2), [](const Int& e) { return Int(2 * e); },
        [](const RatVec& a, const Int&) { return min(a[0], a[1]); }, true);
}

CFunc max2() {
    return scalar(
        Region::full(2), [](const Int& e) { return Int(2 * e); },
        [](const RatVec& a, const Int&) { return max(a[0], a[1]); }, true);
}

CFunc abs1() {
    return scalar(
        Region::full(1), [](const Int& e) { return Int(2 * e); },
        [](const RatVec& a, const Int&) { return abs(a[0]); }, true);
}

CFunc mul() {
    // on |x| <= e, |a| <= e+1: |x1x2 - a1a2| <= |x1||x2-a2| + |a2||x1-a1|
    // < (2e+1)/d(e); rounding at d(e) adds <= 1/(2d(e)): total
    // (2e + 3/2)/(2e(e+2)) < 1/e.
    return scalar(
        Region::full(2), [](const Int& e) { return Int(2 * e * (e + 2)); },
        [](const RatVec& a, const Int& e) { return firewall(a[0] * a[1], Int(2 * e * (e + 2))); },
        true);
}

CFunc cmul() {
    // complex multiplication as R^4 -> R^2; both components are sums of two
    // real products, so doubling mul's modulus covers them.
    return CFunc(
        Region::full(4), 2, [](const Int& e) { return Int(4 * e * (e + 2)); },
        [](const RatVec& a, const Int& e) {
            Int K = 4 * e * (e + 2);
            return RatVec{firewall(a[0] * a[2] - a[1] * a[3], K),
                          firewall(a[0] * a[3] + a[1] * a[2], K)};
        },
        true);
}

CFunc div_xy() {
    // domain R x (R \ {0}); on O_e: |x| <= e, 1/e <= |y| <= e and
    // delta = 1/(8e^4) <= 1/(2e) keeps |a2| >= 1/(2e):
    // |x/y - a1/a2| <= (|x||y-a2| + |y||x-a1|)/(|y||a2|) <= 2e*delta*2e^2
    // = 1/(2e); rounding at 4e adds 1/(8e).
    Region dom = Region::product(
        {Region::full(1), Region::annulus(1, {CReal(Rat(0))}, std::nullopt, std::nullopt)});
    return scalar(
        std::move(dom), [](const Int& e) { return Int(8 * e * e * e * e); },
        [](const RatVec& a, const Int& e) {
            if (abs(a[1]) < Rat(1, 2 * e)) return Rat(0);
            return firewall(a[0] / a[1], Int(4 * e));
        },
        false);
}

CFunc recip_pos() {
    // on O_e = [1/e, e]: delta = 1/(4e^3) keeps a >= 1/(2e);
    // |1/x - 1/a| = |x-a|/(x a) <= 2e^2 delta = 1/(2e); round 1/(8e).
    CFunc f = scalar(
        Region::interval(CReal(Rat(0)), std::nullopt),
        [](const Int& e) { return Int(4 * e * e * e); },
        [](const RatVec& a, const Int& e) {
            if (a[0] < Rat(1, 2 * e)) return Rat(0);
            return firewall(Rat(1) / a[0], Int(4 * e));
        },
        false);
    // 1/[1/e, e] = [1/e, e]: maps O_e into itself
    return f.with_gamma(CompactnessWitness{[](const Int& e) { return e; },
                                           Region::interval(CReal(Rat(0)), std::nullopt)});
}

static Int isqrt_ceil(const Int& n) {
    Int r = sqrt(n);
    return r * r == n ? r : r + 1;
}

CFunc sqrt_pos() {
    // O_1 = {1}; for e >= 2, d(e) = e*ceil(sqrt e) >= 2e keeps a >= 1/(2e):
    // |sqrt x - sqrt a| = |x-a|/(sqrt x + sqrt a) <= delta*sqrt(e)/(1+1/sqrt 2)
    // <= 1/(1.7 e); the floor-sqrt value at denominator 8e adds 1/(8e).
    CFunc f = scalar(
        Region::interval(CReal(Rat(0)), std::nullopt),
        [](const Int& e) { return Int(e * isqrt_ceil(e)); },
        [](const RatVec& a, const Int& e) {
            if (e == 1) return Rat(1);
            if (a[0] <= Rat(1, 2 * e)) return Rat(0);
            Int K = 8 * e;
            Int root = sqrt(Int(a[0].num() * a[0].den() * K * K));
            return Rat(root, a[0].den() * K);
        },
        false);
    // sqrt([1/e, e]) = [1/sqrt e, sqrt e] subset O_e of (0, inf)
    return f.with_gamma(CompactnessWitness{[](const Int& e) { return e; },
                                           Region::interval(CReal(Rat(0)), std::nullopt)});
}

CFunc ipow(unsigned n) {
    if (n == 0) return constant(CReal(Rat(1)), 1);
    if (n == 1) return coordinate(1, 0);
    // |x^n - a^n| <= n max(|x|,|a|)^(n-1) delta <= n(e+1)^(n-1)/d = 1/(2e)
    return scalar(
        Region::full(1),
        [n](const Int& e) {
            Int b;
            mpz_pow_ui(b.get_mpz_t(), Int(e + 1).get_mpz_t(), n - 1);
            return Int(2 * e * n * b);
        },
        [n](const RatVec& a, const Int& e) {
            Rat v(1);
            Rat base = a[0];
            for (unsigned i = 0; i < n; ++i) v *= base;
            return firewall(v, Int(4 * e));
        },
        true);
}

CFunc poly(const CRealVec& coeffs) {
    if (coeffs.empty()) return constant(CReal(Rat(0)), 1);
    const unsigned n = static_cast<unsigned>(coeffs.size() - 1);
    if (n == 0) return constant(coeffs[0], 1);
    std::vector<Int> mag;
    for (const CReal& c : coeffs) mag.push_back(magnitude_bound(c));
    CRealVec cs = coeffs;
    // L(e) = sum_i B_i i (e+1)^(i-1) dominates |p'| on |x| <= e+1;
    // d = 4eL gives |p(x)-p(a)| <= 1/(4e); coefficient reads at
    // K_c = 4e(n+1)(e+1)^n add <= 1/(4e); rounding at 8e adds 1/(16e).
    auto L = [mag](const Int& e) {
        Int pw = 1;  // (e+1)^(i-1)
        Int sum = 0;
        for (std::size_t i = 1; i < mag.size(); ++i) {
            sum += mag[i] * Int(i) * pw;
            pw *= (e + 1);
        }
        return sum < 1 ? Int(1) : sum;
    };
    return scalar(
        Region::full(1), [L](const Int& e) { return Int(4 * e * L(e)); },
        [cs, n](const RatVec& a, const Int& e) {
            Int pw;
            mpz_pow_ui(pw.get_mpz_t(), Int(e + 1).get_mpz_t(), n);
            Int Kc = 4 * e * Int(n + 1) * pw;
            Rat v(0);
            Rat x(1);
            for (std::size_t i = 0; i < cs.size(); ++i) {
                v += cs[i].approx(Kc) * x;
                x *= a[0];
            }
            return firewall(v, Int(8 * e));
        },
        true);
}

}  // namespace prim

}  // namespace wreal
