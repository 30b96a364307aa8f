#pragma once

#include "fliess/series.hpp"

namespace fliess {

// Generating series of a unital operator I + F_c, stored as the body c; the
// fictitious series delta itself is the zero body. The body has one component
// per non-x0 input letter.
struct GroupElement {
    RatSeries body;

    explicit GroupElement(RatSeries b) : body(std::move(b)) {}
    static GroupElement identity(int m) { return GroupElement(RatSeries::zero(m)); }
    int m() const { return body.ell(); }
};

// psi_d(x_i eta)(e) = x0 (d_i sh psi_d(eta)(e)) with d_0 = 1 (the empty-word
// series), so psi_d(x0)(e) = x0 e; psi_d(e) is the identity map.
RatSeries psi_apply(const RatSeries& d, const Word& eta, const RatSeries& e, int degree);

// Composition product: c o d = sum_eta (c,eta) psi_d(eta)(1). Associative,
// left-linear, distributes to the left over the shuffle product.
RatSeries compose(const RatSeries& c, const RatSeries& d, int degree);

// phi_d(x_i eta)(e) = x_i e' + x0 (d_i sh e') with d_0 = 0; the x_i e' term
// carries the direct feed.
RatSeries phi_apply(const RatSeries& d, const Word& eta, const RatSeries& e, int degree);

// Modified composition product: c ~o d = sum_eta (c,eta) phi_d(eta)(1).
// Not associative: (c ~o d) ~o e = c ~o (d ~o e + e).
RatSeries mod_compose(const RatSeries& c, const RatSeries& d, int degree);

// Group product on bodies: (delta + c)(delta + d) has body d + c ~o d.
GroupElement group_product(const GroupElement& c, const GroupElement& d, int degree);

// Right action of the group on series: c o (delta + d) = c ~o d.
RatSeries mixed_compose(const RatSeries& c, const GroupElement& d, int degree);

// Composition-group inverse body: the unique fixed point of e -> (-c) ~o e,
// iterated exactly degree+1 times (the contraction gains one reliable word
// length per pass).
RatSeries comp_inverse(const RatSeries& c, int degree);

// Output feedback product c@d = c ~o (-(d o c))^{-1}.
RatSeries feedback(const RatSeries& c, const RatSeries& d, int degree);

} // namespace fliess
