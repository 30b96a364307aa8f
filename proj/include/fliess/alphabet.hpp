#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fliess {

// A letter of the bracket-extended alphabet. Base letters x_i carry one
// index; bracket letters x_{i,j,...} carry a sorted multiset of two or more
// base indices and arise from the commutative semigroup product [x_i x_j].
// Bracket letters are interned so equality is a plain code comparison;
// singleton brackets normalize back to base letters, so x_i and x_{i} can
// never coexist.
class Letter {
public:
    Letter() : code_(0) {}

    static Letter base(int index);
    // Sorts the indices; size 1 collapses to a base letter.
    static Letter from_indices(std::vector<int> indices);

    bool is_base() const { return code_ < kBracketBase; }
    bool is_bracket() const { return !is_base(); }
    int base_index() const; // throws unless is_base()
    int arity() const;      // number of indices carried
    std::vector<int> indices() const;

    std::uint32_t code() const { return code_; }

    friend bool operator==(Letter a, Letter b) { return a.code_ == b.code_; }
    friend bool operator!=(Letter a, Letter b) { return a.code_ != b.code_; }

private:
    static constexpr std::uint32_t kBracketBase = 1u << 20;
    explicit Letter(std::uint32_t code) : code_(code) {}
    std::uint32_t code_;
};

// Content order: base letters by index, all base letters before brackets,
// brackets by (arity, indices lexicographically). Independent of intern
// order, so printing and map iteration are deterministic across runs.
bool letter_less(Letter a, Letter b);

// Commutative associative semigroup product: multiset union of indices.
Letter bracket(Letter a, Letter b);

std::string to_string(Letter x);      // "x0", "x[1,2]"
Letter parse_letter(const std::string& token);

// The control alphabet X = {x_0,...,x_m}; `extended` admits bracket letters.
struct Alphabet {
    int m = 1;
    bool extended = false;

    std::vector<Letter> base_letters() const; // x_0 .. x_m
    bool contains(Letter x) const;
};

} // namespace fliess
