#pragma once

#include "fliess/series.hpp"

namespace fliess {

// Shuffle product of two words:
//   (x u) sh (y v) = x(u sh (y v)) + y((x u) sh v),   e sh u = u sh e = u.
// Bracket letters are treated as opaque letters. Results are memoized on
// canonical word pairs (the product is commutative); reads are concurrent,
// writes idempotent.
RatSeries shuffle_words(const Word& a, const Word& b);

namespace detail {
// Prepends x to every word of a polynomial.
template <class R>
Series<R> prepend_letter(Letter x, const Series<R>& p) {
    Series<R> out(p.ell(), p.truncation().is_exact()
                               ? Truncation::exact()
                               : Truncation::at(p.truncation().length() + 1));
    for (const auto& [w, coeff] : p.terms())
        out.add_term(w.prepend(x), coeff);
    return out;
}
} // namespace detail

// Bilinear extension, truncated to word length `degree`. Local finiteness:
// (a sh b, w) = 0 unless |a| + |b| = |w|.
template <class R>
Series<R> shuffle_series(const Series<R>& c, const Series<R>& d, int degree) {
    if (c.ell() != d.ell())
        throw dimension_mismatch("dimension mismatch in shuffle product");
    Truncation t = min(Truncation::at(degree), min(c.truncation(), d.truncation()));
    bool skipped = false;
    Series<R> out(c.ell(), t);
    for (const auto& [u, a] : c.terms()) {
        if (!t.allows(u.length())) {
            skipped = true;
            continue;
        }
        for (const auto& [v, b] : d.terms()) {
            if (!t.allows(u.length() + v.length())) {
                skipped = true;
                continue;
            }
            std::vector<R> coeff(a.size());
            for (size_t i = 0; i < a.size(); ++i)
                coeff[i] = a[i] * b[i];
            for (const auto& [w, q] : shuffle_words(u, v).terms()) {
                std::vector<R> scaled = coeff;
                for (auto& x : scaled)
                    x *= scalar_cast<R>(q[0]);
                out.add_term(w, std::move(scaled));
            }
        }
    }
    if (!skipped && c.truncation().is_exact() && d.truncation().is_exact())
        out.set_truncation(Truncation::exact());
    return out;
}

// k-fold shuffle power; the empty product is 1.
template <class R>
Series<R> shuffle_power(const Series<R>& c, int k, int degree) {
    if (k < 0)
        throw std::invalid_argument("negative shuffle power");
    Series<R> acc = Series<R>::one(c.ell());
    for (int i = 0; i < k; ++i)
        acc = shuffle_series(acc, c, degree);
    return acc;
}

} // namespace fliess
