#pragma once

#include "fliess/errors.hpp"
#include "fliess/rationals.hpp"
#include "fliess/word.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace fliess {

// Maximum word length up to which a series' coefficients are reliable.
// `exact` marks polynomials: every coefficient is trustworthy.
class Truncation {
public:
    static Truncation exact() { return Truncation(-1); }
    static Truncation at(int len) {
        if (len < 0)
            throw std::invalid_argument("negative truncation");
        return Truncation(len);
    }

    bool is_exact() const { return len_ < 0; }
    int length() const {
        if (is_exact())
            throw std::logic_error("exact series has no truncation length");
        return len_;
    }
    bool allows(size_t wordlen) const { return is_exact() || wordlen <= static_cast<size_t>(len_); }

    friend Truncation min(Truncation a, Truncation b) {
        if (a.is_exact())
            return b;
        if (b.is_exact())
            return a;
        return Truncation(std::min(a.len_, b.len_));
    }
    friend bool operator==(Truncation a, Truncation b) { return a.len_ == b.len_; }

private:
    explicit Truncation(int len) : len_(len) {}
    int len_;
};

// Sparse formal power series with coefficients in R^ell, indexed by words.
// No zero coefficient vectors are stored, and every stored word respects the
// truncation. Values are immutable in spirit: all operations are pure.
template <class R>
class Series {
public:
    using Terms = std::map<Word, std::vector<R>, WordLess>;

    explicit Series(int ell = 1, Truncation trunc = Truncation::exact())
        : ell_(ell), trunc_(trunc) {
        if (ell < 1)
            throw dimension_mismatch("output dimension must be >= 1");
    }

    // 1 = 1*emptyword (all components one).
    static Series one(int ell = 1) {
        Series s(ell);
        s.add_term(Word::empty(), std::vector<R>(static_cast<size_t>(ell), R(1)));
        return s;
    }
    static Series zero(int ell = 1) { return Series(ell); }
    static Series monomial(const Word& w, R coeff = R(1)) {
        Series s(1);
        s.add_term(w, {std::move(coeff)});
        return s;
    }
    static Series constant(R value, int ell = 1) {
        Series s(ell);
        s.add_term(Word::empty(), std::vector<R>(static_cast<size_t>(ell), value));
        return s;
    }

    int ell() const { return ell_; }
    Truncation truncation() const { return trunc_; }
    const Terms& terms() const { return terms_; }
    size_t support_size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // Longest stored word (0 for the zero series).
    size_t max_word_length() const {
        return terms_.empty() ? 0 : terms_.rbegin()->first.length();
    }

    std::vector<R> coefficient(const Word& w) const {
        if (!trunc_.allows(w.length()))
            throw truncation_error("coefficient query beyond truncation: |" + fliess::to_string(w) +
                                   "| > " + std::to_string(trunc_.length()));
        auto it = terms_.find(w);
        if (it == terms_.end())
            return std::vector<R>(static_cast<size_t>(ell_), R(0));
        return it->second;
    }

    // Scalar coefficient, ell == 1 convenience.
    R coefficient1(const Word& w) const {
        require_scalar();
        return coefficient(w)[0];
    }

    void add_term(const Word& w, std::vector<R> coeff) {
        if (coeff.size() != static_cast<size_t>(ell_))
            throw dimension_mismatch("coefficient vector has wrong dimension");
        if (!trunc_.allows(w.length()))
            return; // beyond the reliable range, dropped
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            if (!all_zero(coeff))
                terms_.emplace(w, std::move(coeff));
            return;
        }
        for (size_t i = 0; i < coeff.size(); ++i)
            it->second[i] += coeff[i];
        if (all_zero(it->second))
            terms_.erase(it);
    }

    void add_scaled(const Series& other, const R& factor) {
        if (other.ell_ != ell_)
            throw dimension_mismatch("dimension mismatch in add");
        trunc_ = min(trunc_, other.trunc_);
        prune_beyond_truncation();
        if (factor == R(0))
            return;
        for (const auto& [w, coeff] : other.terms_) {
            std::vector<R> scaled = coeff;
            for (auto& x : scaled)
                x *= factor;
            add_term(w, std::move(scaled));
        }
    }

    void set_truncation(Truncation t) {
        trunc_ = t;
        prune_beyond_truncation();
    }

    // Equality of support and coefficients; truncation metadata is not part
    // of the value.
    friend bool operator==(const Series& a, const Series& b) {
        return a.ell_ == b.ell_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    static bool all_zero(const std::vector<R>& v) {
        for (const auto& x : v)
            if (!(x == R(0)))
                return false;
        return true;
    }
    void require_scalar() const {
        if (ell_ != 1)
            throw dimension_mismatch("operation requires a scalar (ell = 1) series");
    }
    void prune_beyond_truncation() {
        if (trunc_.is_exact())
            return;
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (!trunc_.allows(it->first.length()))
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    int ell_;
    Truncation trunc_;
    Terms terms_;
};

template <class R>
Series<R> add(const Series<R>& a, const Series<R>& b) {
    Series<R> out = a;
    out.add_scaled(b, R(1));
    return out;
}

template <class R>
Series<R> sub(const Series<R>& a, const Series<R>& b) {
    Series<R> out = a;
    out.add_scaled(b, R(-1));
    return out;
}

template <class R>
Series<R> scale(const R& alpha, const Series<R>& a) {
    Series<R> out(a.ell(), a.truncation());
    if (alpha == R(0))
        return out;
    for (const auto& [w, coeff] : a.terms()) {
        std::vector<R> scaled = coeff;
        for (auto& x : scaled)
            x *= alpha;
        out.add_term(w, std::move(scaled));
    }
    return out;
}

template <class R>
Series<R> neg(const Series<R>& a) {
    return scale<R>(R(-1), a);
}

template <class R>
bool is_proper(const Series<R>& c) {
    auto v = c.coefficient(Word::empty());
    for (const auto& x : v)
        if (!(x == R(0)))
            return false;
    return true;
}

// Length of the shortest supported word; empty optional encodes ord(0) = oo.
template <class R>
std::optional<size_t> order(const Series<R>& c) {
    if (c.is_zero())
        return std::nullopt;
    return c.terms().begin()->first.length(); // canonical order is length-first
}

// Catenation product: (cd, w) = sum over splittings w = uv of (c,u)(d,v),
// componentwise on R^ell.
template <class R>
Series<R> cat_product(const Series<R>& c, const Series<R>& d) {
    if (c.ell() != d.ell())
        throw dimension_mismatch("dimension mismatch in catenation product");
    Truncation t = min(c.truncation(), d.truncation());
    Series<R> out(c.ell(), t);
    for (const auto& [u, a] : c.terms()) {
        if (!t.allows(u.length()))
            continue;
        for (const auto& [v, b] : d.terms()) {
            if (!t.allows(u.length() + v.length()))
                continue;
            std::vector<R> coeff(a.size());
            for (size_t i = 0; i < a.size(); ++i)
                coeff[i] = a[i] * b[i];
            out.add_term(u.cat(v), std::move(coeff));
        }
    }
    return out;
}

// Kleene star of a proper scalar series, summed through word length `degree`.
template <class R>
Series<R> star(const Series<R>& cprime, int degree) {
    if (cprime.ell() != 1)
        throw dimension_mismatch("star requires ell = 1");
    if (!is_proper(cprime))
        throw not_invertible("star requires a proper series");
    if (cprime.is_zero())
        return Series<R>::one(1);
    Truncation t = min(Truncation::at(degree), cprime.truncation());
    Series<R> acc = Series<R>::one(1);
    acc.set_truncation(t);
    const int limit = t.length();
    // Horner form: after k steps acc = sum_{i<=k} cprime^i, and ord(c'^i) >= i.
    for (int k = 0; k < limit; ++k) {
        acc = cat_product(cprime, acc);
        acc.set_truncation(t);
        acc.add_term(Word::empty(), {R(1)});
    }
    acc.set_truncation(t);
    return acc;
}

// Catenation inverse of a non-proper scalar series, valid through `degree`.
template <class R>
Series<R> cat_inverse(const Series<R>& c, int degree) {
    if (c.ell() != 1)
        throw dimension_mismatch("cat_inverse requires ell = 1");
    R alpha = c.coefficient(Word::empty())[0];
    if (alpha == R(0))
        throw not_invertible("series is proper, hence not invertible");
    // c = alpha(1 - c'), c^{-1} = (1/alpha) (c')^*
    Series<R> cprime = scale<R>(R(-1) / alpha, c);
    cprime.add_term(Word::empty(), {R(1)});
    Series<R> st = star(cprime, degree);
    return scale<R>(R(1) / alpha, st);
}

// (xi^{-1}(c), w) = (c, xi w).
template <class R>
Series<R> shift_series(const Word& xi, const Series<R>& c) {
    if (!c.truncation().allows(xi.length()))
        throw truncation_error("shift exceeds truncation");
    Truncation t = c.truncation().is_exact()
                       ? Truncation::exact()
                       : Truncation::at(c.truncation().length() - static_cast<int>(xi.length()));
    Series<R> out(c.ell(), t);
    for (const auto& [w, coeff] : c.terms()) {
        auto shifted = left_shift(xi, w);
        if (shifted)
            out.add_term(*shifted, coeff);
    }
    return out;
}

// Extract component i (0-based) as a scalar series.
template <class R>
Series<R> component(const Series<R>& c, int i) {
    if (i < 0 || i >= c.ell())
        throw dimension_mismatch("component index out of range");
    Series<R> out(1, c.truncation());
    for (const auto& [w, coeff] : c.terms())
        out.add_term(w, {coeff[static_cast<size_t>(i)]});
    return out;
}

template <class R>
Series<R> from_components(const std::vector<Series<R>>& comps) {
    if (comps.empty())
        throw dimension_mismatch("need at least one component");
    Truncation t = comps[0].truncation();
    for (const auto& s : comps) {
        if (s.ell() != 1)
            throw dimension_mismatch("components must be scalar series");
        t = min(t, s.truncation());
    }
    Series<R> out(static_cast<int>(comps.size()), t);
    for (size_t i = 0; i < comps.size(); ++i) {
        for (const auto& [w, coeff] : comps[i].terms()) {
            std::vector<R> v(comps.size(), R(0));
            v[i] = coeff[0];
            out.add_term(w, std::move(v));
        }
    }
    return out;
}

template <class RTo, class RFrom>
Series<RTo> series_cast(const Series<RFrom>& c) {
    Series<RTo> out(c.ell(), c.truncation());
    for (const auto& [w, coeff] : c.terms()) {
        std::vector<RTo> v;
        v.reserve(coeff.size());
        for (const auto& x : coeff)
            v.push_back(static_cast<RTo>(to_double(x)));
        out.add_term(w, std::move(v));
    }
    return out;
}

template <>
inline Series<Rat> series_cast<Rat, Rat>(const Series<Rat>& c) {
    return c;
}

// Agreement of all coefficients on words of length <= degree.
template <class R>
bool equal_up_to(const Series<R>& a, const Series<R>& b, int degree) {
    if (a.ell() != b.ell())
        return false;
    for (const auto& [w, coeff] : a.terms()) {
        if (w.length() > static_cast<size_t>(degree))
            continue;
        if (b.coefficient(w) != coeff)
            return false;
    }
    for (const auto& [w, coeff] : b.terms()) {
        if (w.length() > static_cast<size_t>(degree))
            continue;
        if (a.coefficient(w) != coeff)
            return false;
    }
    return true;
}

using RatSeries = Series<Rat>;

} // namespace fliess
