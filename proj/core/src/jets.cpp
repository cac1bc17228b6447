#include "affdyn/jets.hpp"

#include <stdexcept>

namespace affdyn {

namespace {

void require_same_ctx(const JetRingCtx& a, const JetRingCtx& b) {
    if (!(a == b)) throw std::invalid_argument("jet ring context mismatch");
}

Int residue(const Rat& q, const Int& m) {
    Int num = floor_mod(numerator(q), m);
    const Int& den = denominator(q);
    if (den == 1) return num;
    return num * mod_inverse(den, m) % m;
}

}  // namespace

JetRingCtx::JetRingCtx(const Int& prime, const std::vector<Int>& base_point)
    : p(prime), n(static_cast<int>(base_point.size())) {
    if (!is_prime(prime)) {
        throw std::invalid_argument("jet ring characteristic " + prime.str() + " is not prime");
    }
    base.reserve(base_point.size());
    for (const Int& a : base_point) base.push_back(floor_mod(a, p));
}

JetElement jet_zero(const JetRingCtx& ctx) {
    return {ctx, 0, std::vector<Int>(static_cast<std::size_t>(ctx.n), 0)};
}

JetElement jet_one(const JetRingCtx& ctx) {
    return {ctx, 1, std::vector<Int>(static_cast<std::size_t>(ctx.n), 0)};
}

JetElement jet_constant(const JetRingCtx& ctx, const Rat& c) {
    return {ctx, residue(c, ctx.p_squared()), std::vector<Int>(static_cast<std::size_t>(ctx.n), 0)};
}

JetElement jet_add(const JetElement& u, const JetElement& w) {
    require_same_ctx(u.ctx, w.ctx);
    JetElement out = u;
    out.value = (u.value + w.value) % u.ctx.p_squared();
    for (std::size_t i = 0; i < out.tangent.size(); ++i) {
        out.tangent[i] = (u.tangent[i] + w.tangent[i]) % u.ctx.p;
    }
    return out;
}

JetElement jet_neg(const JetElement& u) {
    JetElement out = u;
    out.value = floor_mod(-u.value, u.ctx.p_squared());
    for (std::size_t i = 0; i < out.tangent.size(); ++i) {
        out.tangent[i] = floor_mod(-u.tangent[i], u.ctx.p);
    }
    return out;
}

JetElement jet_mul(const JetElement& u, const JetElement& w) {
    require_same_ctx(u.ctx, w.ctx);
    const Int& p = u.ctx.p;
    JetElement out = u;
    out.value = u.value * w.value % u.ctx.p_squared();
    const Int ur = u.value % p;
    const Int wr = w.value % p;
    for (std::size_t i = 0; i < out.tangent.size(); ++i) {
        out.tangent[i] = (ur * w.tangent[i] + wr * u.tangent[i]) % p;
    }
    return out;
}

JetElement jet_pow(const JetElement& u, unsigned long e) {
    JetElement acc = jet_one(u.ctx);
    JetElement sq = u;
    while (e > 0) {
        if (e & 1ul) acc = jet_mul(acc, sq);
        e >>= 1ul;
        if (e) sq = jet_mul(sq, sq);
    }
    return acc;
}

JetPoint tautological_point(const JetRingCtx& ctx) {
    JetPoint out{ctx, {}};
    out.coords.reserve(static_cast<std::size_t>(ctx.n));
    for (int i = 0; i < ctx.n; ++i) {
        JetElement e = jet_zero(ctx);
        e.value = ctx.base[static_cast<std::size_t>(i)];
        e.tangent[static_cast<std::size_t>(i)] = 1;
        out.coords.push_back(std::move(e));
    }
    return out;
}

namespace {

JetPoint lift_with_frame(const Point& y, const Int& p, bool identity_frame) {
    std::vector<Int> base;
    base.reserve(y.size());
    for (const Rat& c : y) base.push_back(residue(c, p));
    JetRingCtx ctx(p, base);
    JetPoint out{ctx, {}};
    out.coords.reserve(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        JetElement e = jet_zero(ctx);
        e.value = residue(y[i], ctx.p_squared());
        if (identity_frame) e.tangent[i] = 1;
        out.coords.push_back(std::move(e));
    }
    return out;
}

}  // namespace

JetPoint framed_lift(const Point& y, const Int& p) { return lift_with_frame(y, p, true); }

JetPoint lift_point(const Point& y, const Int& p) { return lift_with_frame(y, p, false); }

JetPoint jet_apply(const std::vector<Polynomial>& maps, const JetPoint& point) {
    const JetRingCtx& ctx = point.ctx;
    if (static_cast<int>(point.coords.size()) != ctx.n) {
        throw std::invalid_argument("jet point has wrong number of coordinates");
    }
    JetPoint out{ctx, {}};
    out.coords.reserve(maps.size());
    for (const Polynomial& f : maps) {
        if (f.dimension() != ctx.n) {
            throw std::invalid_argument("map dimension does not match jet ring");
        }
        JetElement acc = jet_zero(ctx);
        for (const auto& [e, c] : f.terms()) {
            JetElement t = jet_constant(ctx, c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i]) t = jet_mul(t, jet_pow(point.coords[i], e[i]));
            }
            acc = jet_add(acc, t);
        }
        out.coords.push_back(std::move(acc));
    }
    return out;
}

JetPoint jet_apply_linearized(const std::vector<Polynomial>& maps, const JetPoint& point) {
    const JetRingCtx& ctx = point.ctx;
    Point base;
    base.reserve(point.coords.size());
    for (const JetElement& e : point.coords) base.push_back(Rat(e.value));
    const auto jac = jacobian_mod(maps, base, ctx.p);
    JetPoint out{ctx, {}};
    out.coords.reserve(maps.size());
    for (std::size_t j = 0; j < maps.size(); ++j) {
        JetElement e = jet_zero(ctx);
        e.value = maps[j].evaluate_mod(base, ctx.p_squared());
        for (int i = 0; i < ctx.n; ++i) {
            const std::size_t k = static_cast<std::size_t>(i);
            for (std::size_t t = 0; t < e.tangent.size(); ++t) {
                e.tangent[t] = (e.tangent[t] + jac[j][k] * point.coords[k].tangent[t]) % ctx.p;
            }
        }
        out.coords.push_back(std::move(e));
    }
    return out;
}

Int ring_size(const JetRingCtx& ctx) {
    return boost::multiprecision::pow(ctx.p, static_cast<unsigned>(ctx.n) + 2u);
}

Int point_count(const JetRingCtx& ctx) {
    return boost::multiprecision::pow(ring_size(ctx), static_cast<unsigned>(ctx.n));
}

}  // namespace affdyn
