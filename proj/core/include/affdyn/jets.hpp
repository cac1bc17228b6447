#pragma once

#include <vector>

#include "affdyn/numeric.hpp"
#include "affdyn/polynomial.hpp"

namespace affdyn {

// The finite local ring R_a = Z[x1..xn]/(p, x1-a1, ..., xn-an)^2 of
// cardinality p^(n+2). Elements have the normal form c + sum v_i (x_i - a_i)
// with c mod p^2 and v mod p; the relations p^2 = p(x_i - a_i) =
// (x_i - a_i)(x_j - a_j) = 0 give the multiplication rule implemented in
// jet_mul.
struct JetRingCtx {
    Int p;
    int n = 0;
    std::vector<Int> base;  // entries reduced into [0, p)

    JetRingCtx() = default;
    // Validates primality of p and reduces the base point mod p.
    JetRingCtx(const Int& p, const std::vector<Int>& base_point);

    Int p_squared() const { return p * p; }
    bool operator==(const JetRingCtx&) const = default;
};

struct JetElement {
    JetRingCtx ctx;
    Int value;                 // in [0, p^2)
    std::vector<Int> tangent;  // n entries in [0, p)
};

JetElement jet_zero(const JetRingCtx& ctx);
JetElement jet_one(const JetRingCtx& ctx);
// Embeds a scalar with zero tangent; denominators must be invertible mod p^2.
JetElement jet_constant(const JetRingCtx& ctx, const Rat& c);

// All binary operations require identical contexts and throw
// std::invalid_argument on mismatch.
JetElement jet_add(const JetElement& u, const JetElement& w);
JetElement jet_neg(const JetElement& u);
// (c, v)(c', v') = (c c' mod p^2, (c mod p) v' + (c' mod p) v).
JetElement jet_mul(const JetElement& u, const JetElement& w);
JetElement jet_pow(const JetElement& u, unsigned long e);

// An R_a-point of affine n-space: one ring element per coordinate.
struct JetPoint {
    JetRingCtx ctx;
    std::vector<JetElement> coords;
};

// The point whose i-th coordinate is the class of x_i itself:
// (a_i mod p^2, e_i).
JetPoint tautological_point(const JetRingCtx& ctx);

// Jet at the integral point y with the identity tangent frame: coordinates
// (y_i mod p^2, e_i), base context y mod p. Requires denominators of y
// invertible mod p^2.
JetPoint framed_lift(const Point& y, const Int& p);

// Zero-tangent embedding of y: coordinates (y_i mod p^2, 0).
JetPoint lift_point(const Point& y, const Int& p);

// Coordinatewise evaluation of the map F inside the jet ring (direct ring
// arithmetic; the primary path).
JetPoint jet_apply(const std::vector<Polynomial>& maps, const JetPoint& point);

// Independent route kept as a cross-check: base goes to F(base) mod p^2 and
// the tangent through the Jacobian of F at base mod p.
JetPoint jet_apply_linearized(const std::vector<Polynomial>& maps, const JetPoint& point);

// |R_a| = p^(n+2).
Int ring_size(const JetRingCtx& ctx);
// |A^n(R_a)| = |R_a|^n.
Int point_count(const JetRingCtx& ctx);

}  // namespace affdyn
