#pragma once

#include "fliess/series.hpp"

#include <iosfwd>
#include <string>

namespace fliess {

// Human-readable polynomial text, e.g. "x1 x2 + x2 x1", "3/2 e - 2 x0 x1".
// Multi-component series print one line per component, "y1 = ...".
std::string to_string(const Series<Rat>& s);

// JSON schema:
//   {"ell": 1, "truncation": "exact" | n,
//    "terms": [{"word": "x0 x1", "coeff": ["3/2", ...]}, ...]}
// Coefficients are rational strings; the round trip is exact.
std::string series_to_json(const Series<Rat>& s);
Series<Rat> series_from_json(const std::string& text);

Series<Rat> load_series(const std::string& path);
void save_series(const Series<Rat>& s, const std::string& path);

// CSV rows: word,coeff1[,coeff2,...] with a "word,c1,..." header.
std::string series_to_csv(const Series<Rat>& s);

} // namespace fliess
