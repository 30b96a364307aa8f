#include "fliess/shuffle.hpp"

#include <map>
#include <shared_mutex>
#include <utility>

namespace fliess {

namespace {

using Key = std::pair<Word, Word>;

struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
        if (a.first != b.first)
            return word_less(a.first, b.first);
        return word_less(a.second, b.second);
    }
};

struct ShuffleCache {
    std::shared_mutex mu;
    std::map<Key, RatSeries, KeyLess> table;

    static ShuffleCache& instance() {
        static ShuffleCache c;
        return c;
    }
};

RatSeries compute(const Word& a, const Word& b);

RatSeries lookup(const Word& a, const Word& b) {
    // Commutativity halves the table.
    Key key = word_less(b, a) ? Key(b, a) : Key(a, b);
    auto& cache = ShuffleCache::instance();
    {
        std::shared_lock lock(cache.mu);
        auto it = cache.table.find(key);
        if (it != cache.table.end())
            return it->second;
    }
    RatSeries value = compute(key.first, key.second);
    {
        std::unique_lock lock(cache.mu);
        cache.table.emplace(key, value);
    }
    return value;
}

RatSeries compute(const Word& a, const Word& b) {
    if (a.is_empty())
        return RatSeries::monomial(b);
    if (b.is_empty())
        return RatSeries::monomial(a);
    RatSeries left = detail::prepend_letter(a.front(), lookup(a.tail(), b));
    RatSeries right = detail::prepend_letter(b.front(), lookup(a, b.tail()));
    return add(left, right);
}

} // namespace

RatSeries shuffle_words(const Word& a, const Word& b) { return lookup(a, b); }

} // namespace fliess
