#include "fliess/composition.hpp"

#include "fliess/shuffle.hpp"

#include <functional>
#include <map>

namespace fliess {

namespace {

// Per-call suffix cache: psi/phi values depend on word suffixes only.
class HomomorphismWalk {
public:
    // direct_feed = false: psi (d_0 = 1); direct_feed = true: phi (d_0 = 0).
    HomomorphismWalk(const RatSeries& d, const RatSeries& seed, int degree, bool direct_feed)
        : degree_(degree), direct_feed_(direct_feed) {
        for (int i = 0; i < d.ell(); ++i)
            components_.push_back(component(d, i));
        cache_.emplace(Word::empty(), seed);
    }

    int m() const { return static_cast<int>(components_.size()); }

    const RatSeries& eval(const Word& eta) {
        auto it = cache_.find(eta);
        if (it != cache_.end())
            return it->second;
        Letter x = eta.front();
        const RatSeries& inner = eval(eta.tail());
        RatSeries value = apply_letter(x, inner);
        return cache_.emplace(eta, std::move(value)).first->second;
    }

private:
    RatSeries apply_letter(Letter x, const RatSeries& e) {
        if (!x.is_base())
            throw alphabet_error("composition is defined over the base alphabet");
        const int i = x.base_index();
        if (i > m())
            throw dimension_mismatch("word letter x" + std::to_string(i) + " has no matching component (m = " +
                                     std::to_string(m()) + ")");
        const Letter x0 = Letter::base(0);
        const int inner = degree_ > 0 ? degree_ - 1 : 0;
        if (!direct_feed_) {
            if (i == 0)
                return detail::prepend_letter(x0, e); // d_0 = 1
            return detail::prepend_letter(x0, shuffle_series(components_[static_cast<size_t>(i - 1)], e, inner));
        }
        RatSeries out = detail::prepend_letter(x, e);
        if (i != 0) // d_0 = 0 kills the shuffle term for x0
            out.add_scaled(
                detail::prepend_letter(x0, shuffle_series(components_[static_cast<size_t>(i - 1)], e, inner)),
                Rat(1));
        return out;
    }

    std::vector<RatSeries> components_;
    std::map<Word, RatSeries, WordLess> cache_;
    int degree_;
    bool direct_feed_;
};

RatSeries sum_over_support(const RatSeries& c, const RatSeries& d, int degree, bool direct_feed) {
    if (degree < 0)
        throw std::invalid_argument("negative degree");
    // Result coefficients at length <= L read c up to L and d up to L-1.
    Truncation t = Truncation::at(degree);
    t = min(t, c.truncation());
    if (!d.truncation().is_exact())
        t = min(t, Truncation::at(d.truncation().length() + 1));
    const int limit = t.length();

    HomomorphismWalk walk(d, RatSeries::one(1), limit, direct_feed);
    bool skipped = false;
    RatSeries out(c.ell(), t);
    for (const auto& [eta, coeff] : c.terms()) {
        // ord(psi/phi(eta)(1)) >= |eta|, so longer words cannot contribute.
        if (eta.length() > static_cast<size_t>(limit)) {
            skipped = true;
            continue;
        }
        const RatSeries& image = walk.eval(eta);
        if (!image.truncation().is_exact())
            skipped = true;
        for (const auto& [w, q] : image.terms()) {
            if (!t.allows(w.length())) {
                skipped = true;
                continue;
            }
            std::vector<Rat> scaled = coeff;
            for (auto& x : scaled)
                x *= q[0];
            out.add_term(w, std::move(scaled));
        }
    }
    if (!skipped && c.truncation().is_exact() && d.truncation().is_exact())
        out.set_truncation(Truncation::exact());
    return out;
}

} // namespace

RatSeries psi_apply(const RatSeries& d, const Word& eta, const RatSeries& e, int degree) {
    HomomorphismWalk walk(d, e, degree, false);
    RatSeries out = walk.eval(eta);
    out.set_truncation(min(out.truncation(), Truncation::at(degree)));
    return out;
}

RatSeries phi_apply(const RatSeries& d, const Word& eta, const RatSeries& e, int degree) {
    HomomorphismWalk walk(d, e, degree, true);
    RatSeries out = walk.eval(eta);
    out.set_truncation(min(out.truncation(), Truncation::at(degree)));
    return out;
}

RatSeries compose(const RatSeries& c, const RatSeries& d, int degree) {
    return sum_over_support(c, d, degree, false);
}

RatSeries mod_compose(const RatSeries& c, const RatSeries& d, int degree) {
    return sum_over_support(c, d, degree, true);
}

GroupElement group_product(const GroupElement& c, const GroupElement& d, int degree) {
    if (c.m() != d.m())
        throw dimension_mismatch("group elements have different m");
    return GroupElement(add(d.body, mod_compose(c.body, d.body, degree)));
}

RatSeries mixed_compose(const RatSeries& c, const GroupElement& d, int degree) {
    return mod_compose(c, d.body, degree);
}

RatSeries comp_inverse(const RatSeries& c, int degree) {
    const RatSeries minus_c = neg(c);
    RatSeries e = minus_c;
    e.set_truncation(min(e.truncation(), Truncation::at(degree)));
    for (int k = 0; k <= degree; ++k)
        e = mod_compose(minus_c, e, degree);
    e.set_truncation(min(e.truncation(), Truncation::at(degree)));
    return e;
}

RatSeries feedback(const RatSeries& c, const RatSeries& d, int degree) {
    if (c.ell() != d.ell())
        throw dimension_mismatch("feedback requires matching dimensions");
    RatSeries loop = neg(compose(d, c, degree));
    RatSeries inv = comp_inverse(loop, degree);
    return mod_compose(c, inv, degree);
}

} // namespace fliess
