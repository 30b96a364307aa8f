#include "fliess/alphabet.hpp"

#include "fliess/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace fliess {

namespace {

// Intern table for bracket letters. Codes are an implementation detail;
// ordering always goes through the index content.
struct BracketTable {
    std::shared_mutex mu;
    std::map<std::vector<int>, std::uint32_t> by_indices;
    std::vector<std::vector<int>> by_code;

    static BracketTable& instance() {
        static BracketTable t;
        return t;
    }

    std::uint32_t intern(std::vector<int> idx) {
        {
            std::shared_lock lock(mu);
            auto it = by_indices.find(idx);
            if (it != by_indices.end())
                return it->second;
        }
        std::unique_lock lock(mu);
        auto it = by_indices.find(idx);
        if (it != by_indices.end())
            return it->second;
        auto code = static_cast<std::uint32_t>(by_code.size());
        by_code.push_back(idx);
        by_indices.emplace(std::move(idx), code);
        return code;
    }

    std::vector<int> lookup(std::uint32_t code) {
        std::shared_lock lock(mu);
        return by_code.at(code);
    }
};

constexpr std::uint32_t kBracketBase = 1u << 20;

} // namespace

Letter Letter::base(int index) {
    if (index < 0 || static_cast<std::uint32_t>(index) >= kBracketBase)
        throw alphabet_error("base letter index out of range");
    return Letter(static_cast<std::uint32_t>(index));
}

Letter Letter::from_indices(std::vector<int> indices) {
    if (indices.empty())
        throw alphabet_error("letter needs at least one index");
    std::sort(indices.begin(), indices.end());
    if (indices.front() < 0)
        throw alphabet_error("negative letter index");
    if (indices.size() == 1)
        return base(indices.front());
    return Letter(kBracketBase + BracketTable::instance().intern(std::move(indices)));
}

int Letter::base_index() const {
    if (!is_base())
        throw alphabet_error("bracket letter has no single base index");
    return static_cast<int>(code_);
}

int Letter::arity() const {
    if (is_base())
        return 1;
    return static_cast<int>(BracketTable::instance().lookup(code_ - kBracketBase).size());
}

std::vector<int> Letter::indices() const {
    if (is_base())
        return {static_cast<int>(code_)};
    return BracketTable::instance().lookup(code_ - kBracketBase);
}

bool letter_less(Letter a, Letter b) {
    if (a == b)
        return false;
    const bool ab = a.is_base(), bb = b.is_base();
    if (ab && bb)
        return a.code() < b.code();
    if (ab != bb)
        return ab; // base letters sort before brackets
    const auto ia = a.indices(), ib = b.indices();
    if (ia.size() != ib.size())
        return ia.size() < ib.size();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

Letter bracket(Letter a, Letter b) {
    auto idx = a.indices();
    auto more = b.indices();
    idx.insert(idx.end(), more.begin(), more.end());
    return Letter::from_indices(std::move(idx));
}

std::string to_string(Letter x) {
    if (x.is_base())
        return "x" + std::to_string(x.base_index());
    std::string s = "x[";
    const auto idx = x.indices();
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(idx[i]);
    }
    s += ']';
    return s;
}

Letter parse_letter(const std::string& token) {
    if (token.size() < 2 || token[0] != 'x')
        throw parse_error("bad letter token: '" + token + "'");
    if (token[1] != '[') {
        size_t pos = 0;
        int idx;
        try {
            idx = std::stoi(token.substr(1), &pos);
        } catch (const std::exception&) {
            throw parse_error("bad letter token: '" + token + "'");
        }
        if (pos + 1 != token.size() || idx < 0)
            throw parse_error("bad letter token: '" + token + "'");
        return Letter::base(idx);
    }
    if (token.back() != ']')
        throw parse_error("unterminated bracket letter: '" + token + "'");
    std::vector<int> indices;
    std::string body = token.substr(2, token.size() - 3);
    size_t start = 0;
    while (start <= body.size()) {
        size_t comma = body.find(',', start);
        std::string piece = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (piece.empty())
            throw parse_error("bad bracket letter: '" + token + "'");
        try {
            size_t pos = 0;
            int idx = std::stoi(piece, &pos);
            if (pos != piece.size() || idx < 0)
                throw parse_error("bad bracket letter: '" + token + "'");
            indices.push_back(idx);
        } catch (const parse_error&) {
            throw;
        } catch (const std::exception&) {
            throw parse_error("bad bracket letter: '" + token + "'");
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (indices.size() < 2)
        throw parse_error("bracket letter needs at least two indices: '" + token + "'");
    return Letter::from_indices(std::move(indices));
}

std::vector<Letter> Alphabet::base_letters() const {
    std::vector<Letter> out;
    out.reserve(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i)
        out.push_back(Letter::base(i));
    return out;
}

bool Alphabet::contains(Letter x) const {
    if (x.is_base())
        return x.base_index() <= m;
    if (!extended)
        return false;
    for (int i : x.indices())
        if (i > m)
            return false;
    return true;
}

} // namespace fliess
