#pragma once

#include "fliess/series.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace fliess {

// Coordinate function a^i_w on the group of unital operators: it reads the
// coefficient of the word w in the i-th component series, i in [1, m]. Words
// are over the base alphabet; deg(a^i_w) = 1 + ||w||.
struct CoordinateFunction {
    int out_index;
    Word word;

    int degree() const { return 1 + feedback_degree(word); }
};

bool operator==(const CoordinateFunction& a, const CoordinateFunction& b);
// Canonical factor order: higher degree first, then word, then out index.
bool coordfn_less(const CoordinateFunction& a, const CoordinateFunction& b);

std::string to_string(const CoordinateFunction& a); // "a^1_{x0 x1}", "a^2_e"

// Commutative monomial: sorted multiset of coordinate functions. The empty
// monomial is the algebra unit.
using HopfMonomial = std::vector<CoordinateFunction>;

HopfMonomial monomial_mul(const HopfMonomial& a, const HopfMonomial& b);
int monomial_degree(const HopfMonomial& m);
bool monomial_less(const HopfMonomial& a, const HopfMonomial& b);

struct MonomialLess {
    bool operator()(const HopfMonomial& a, const HopfMonomial& b) const {
        return monomial_less(a, b);
    }
};

// Polynomial in coordinate functions with rational coefficients.
class HopfPolynomial {
public:
    using Terms = std::map<HopfMonomial, Rat, MonomialLess>;

    HopfPolynomial() = default;
    static HopfPolynomial unit() { return from_monomial(HopfMonomial{}); }
    static HopfPolynomial zero() { return HopfPolynomial(); }
    static HopfPolynomial generator(const CoordinateFunction& a) {
        return from_monomial(HopfMonomial{a});
    }
    static HopfPolynomial from_monomial(HopfMonomial m, Rat coeff = Rat(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(HopfMonomial m, const Rat& coeff);
    void add_scaled(const HopfPolynomial& p, const Rat& factor);

    friend bool operator==(const HopfPolynomial& a, const HopfPolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const HopfPolynomial& a, const HopfPolynomial& b) { return !(a == b); }

private:
    Terms terms_;
};

HopfPolynomial operator*(const HopfPolynomial& a, const HopfPolynomial& b);
HopfPolynomial operator+(const HopfPolynomial& a, const HopfPolynomial& b);
HopfPolynomial operator-(const HopfPolynomial& a);

std::string to_string(const HopfPolynomial& p);

// Is p homogeneous? Returns the common degree, or -1 for mixed, 0 for zero.
int polynomial_degree(const HopfPolynomial& p);

// Element of H tensor H in bilinear normal form.
class TensorPolynomial {
public:
    using Key = std::pair<HopfMonomial, HopfMonomial>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            if (monomial_less(a.first, b.first))
                return true;
            if (monomial_less(b.first, a.first))
                return false;
            return monomial_less(a.second, b.second);
        }
    };
    using Terms = std::map<Key, Rat, KeyLess>;

    TensorPolynomial() = default;
    static TensorPolynomial tensor(const HopfPolynomial& left, const HopfPolynomial& right);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(Key k, const Rat& coeff);
    void add_scaled(const TensorPolynomial& t, const Rat& factor);

    friend bool operator==(const TensorPolynomial& a, const TensorPolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorPolynomial& a, const TensorPolynomial& b) { return !(a == b); }

private:
    Terms terms_;
};

// Slotwise product (a tensor b)(c tensor d) = ac tensor bd.
TensorPolynomial operator*(const TensorPolynomial& a, const TensorPolynomial& b);

std::string to_string(const TensorPolynomial& t); // "p (x) q + ..."

enum class AntipodeAlgo { left, right, cancellation_free };

// The Hopf algebra of coordinate functions for the output feedback group over
// the alphabet {x_0,...,x_m}. The coproduct is built letter-by-letter with
// right-shift intertwining; all three antipode algorithms share the coproduct
// cache. Operations are pure; caches are internally synchronized.
class FeedbackHopf {
public:
    explicit FeedbackHopf(int m);

    int m() const { return m_; }

    // Right shift acting as a derivation; theta_j(1) = 0.
    HopfPolynomial theta_right(int j, const HopfPolynomial& p) const;

    // Coproduct of a generator, Delta a = Theta_w(a_e tensor 1) + 1 tensor a.
    const TensorPolynomial& coproduct(const CoordinateFunction& a) const;
    // Multiplicative extension, Delta(1) = 1 tensor 1.
    TensorPolynomial coproduct_poly(const HopfPolynomial& p) const;
    // Delta'(p) = Delta(p) - p tensor 1 - 1 tensor p on the augmentation
    // ideal; throws domain_error if p has a constant term.
    TensorPolynomial reduced_coproduct(const HopfPolynomial& p) const;

    // The tensor-lift Theta_i = theta_i (x) id + id (x) theta_i
    //                          + [i = 0] sum_j theta_j (x) (. a^j_e).
    TensorPolynomial theta_tensor(int i, const TensorPolynomial& t) const;

    const HopfPolynomial& antipode_left(const CoordinateFunction& a) const;
    const HopfPolynomial& antipode_right(const CoordinateFunction& a) const;
    const HopfPolynomial& antipode_cancellation_free(const CoordinateFunction& a) const;
    HopfPolynomial antipode(const CoordinateFunction& a, AntipodeAlgo algo) const;
    // Algebra-morphism extension of the antipode to polynomials.
    HopfPolynomial antipode_poly(const HopfPolynomial& p, AntipodeAlgo algo) const;

    struct CancellationStats {
        Rat raw_abs_sum{0};       // sum of |coeff| over the raw expansion
        Rat collected_abs_sum{0}; // after collecting like monomials
        size_t raw_terms = 0;
    };
    HopfPolynomial antipode_cancellation_free_stats(const CoordinateFunction& a,
                                                    CancellationStats& stats) const;

    // Accumulated convolution-term counts, a rough cost diagnostic for the
    // two recursive algorithms.
    struct WorkCounters {
        size_t left_terms = 0;
        size_t right_terms = 0;
    };
    WorkCounters work() const;
    void reset_work() const;

    // Counit: the coefficient of the empty monomial.
    static Rat counit(const HopfPolynomial& p);

    // Character of the series c: a^i_w -> (c_i, w), extended multiplicatively.
    static Rat character_eval(const Series<Rat>& c, const HopfPolynomial& p);

    // Composition-group inverse through the antipode:
    // (c^{o-1})_i coefficient at w equals Phi_c(S a^i_w).
    Series<Rat> group_inverse_via_antipode(const Series<Rat>& c, int degree) const;

    // Convolution (Phi_c * Phi_d)(a^i_w) of two series characters.
    Rat convolve_characters(const Series<Rat>& c, const Series<Rat>& d,
                            const CoordinateFunction& a) const;

private:
    struct GenKeyLess {
        bool operator()(const std::pair<int, Word>& a, const std::pair<int, Word>& b) const {
            if (a.first != b.first)
                return a.first < b.first;
            return word_less(a.second, b.second);
        }
    };
    template <class V>
    using GenCache = std::map<std::pair<int, Word>, V, GenKeyLess>;

    HopfPolynomial antipode_recursive(const CoordinateFunction& a, bool left_algo) const;
    HopfPolynomial cancellation_free_raw(const CoordinateFunction& a,
                                         CancellationStats* stats) const;

    int m_;
    mutable std::mutex mu_;
    mutable GenCache<TensorPolynomial> coproduct_cache_;
    mutable GenCache<HopfPolynomial> left_cache_;
    mutable GenCache<HopfPolynomial> right_cache_;
    mutable GenCache<HopfPolynomial> cfree_cache_;
    mutable WorkCounters work_;
};

} // namespace fliess
