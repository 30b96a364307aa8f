#pragma once

#include "fliess/series.hpp"
#include "fliess/shuffle.hpp"

#include <utility>
#include <vector>

namespace fliess {

// Weighted quasi-shuffle of words over the bracket-extended alphabet:
//   u qsh v = u1(u' qsh v) + v1(u qsh v') + theta [u1 v1](u' qsh v'),
// with the empty word as unit. theta = +1 gives the Hoffman product,
// theta = -1 the product law of inclusive iterated sums, theta = 0 degenerates
// to the plain shuffle. The weight is always an explicit argument.
RatSeries qsh_words(const Word& a, const Word& b, const Rat& theta);

// Bilinear extension truncated at `degree`. Local finiteness comes from
// |u| + |v| - min(|u|,|v|) <= |w| <= |u| + |v|.
RatSeries qsh_series(const RatSeries& c, const RatSeries& d, const Rat& theta, int degree);

// All |w|+1 deconcatenations w = (left)(right), trivial splits included.
std::vector<std::pair<Word, Word>> deconcat_coproduct(const Word& w);

// Antipode of the quasi-shuffle Hopf algebra (deconcatenation coproduct):
//   S(a_1...a_n) = -a_1...a_n - sum_{l=1}^{n-1} S(a_1...a_l) qsh a_{l+1}...a_n,
// S(e) = 1. The result is an exact polynomial.
RatSeries qsh_antipode(const Word& w, const Rat& theta);

// Closed form for x1^i qsh x1^j:
//   sum_{k=0}^{min(i,j)} theta^k binom(i+j-2k, min(i,j)-k) x11^k sh x1^{i+j-2k},
// each bracket creation contributing one factor of theta.
RatSeries qsh_power_closed_form(int i, int j, const Rat& theta);

} // namespace fliess
