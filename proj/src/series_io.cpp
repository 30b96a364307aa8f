#include "fliess/series_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace fliess {

namespace {

using nlohmann::json;

std::string scalar_terms_to_string(const Series<Rat>& s, int comp) {
    std::ostringstream out;
    bool leading = true;
    for (const auto& [w, coeff] : s.terms()) {
        const Rat& q = coeff[static_cast<size_t>(comp)];
        if (q == 0)
            continue;
        if (!leading)
            out << ' ';
        out << coeff_prefix(q, leading) << to_string(w);
        leading = false;
    }
    if (leading)
        return "0";
    return out.str();
}

} // namespace

std::string to_string(const Series<Rat>& s) {
    if (s.ell() == 1)
        return scalar_terms_to_string(s, 0);
    std::ostringstream out;
    for (int i = 0; i < s.ell(); ++i) {
        if (i)
            out << '\n';
        out << 'y' << (i + 1) << " = " << scalar_terms_to_string(s, i);
    }
    return out.str();
}

std::string series_to_json(const Series<Rat>& s) {
    json j;
    j["ell"] = s.ell();
    if (s.truncation().is_exact())
        j["truncation"] = "exact";
    else
        j["truncation"] = s.truncation().length();
    json terms = json::array();
    for (const auto& [w, coeff] : s.terms()) {
        json entry;
        entry["word"] = to_string(w);
        json cs = json::array();
        for (const auto& q : coeff)
            cs.push_back(rat_to_string(q));
        entry["coeff"] = cs;
        terms.push_back(entry);
    }
    j["terms"] = terms;
    return j.dump(2);
}

Series<Rat> series_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad series JSON: ") + e.what());
    }
    if (!j.contains("ell") || !j.contains("truncation") || !j.contains("terms"))
        throw parse_error("series JSON needs ell, truncation and terms fields");
    int ell = j["ell"].get<int>();
    Truncation t = Truncation::exact();
    if (!j["truncation"].is_string())
        t = Truncation::at(j["truncation"].get<int>());
    else if (j["truncation"].get<std::string>() != "exact")
        throw parse_error("truncation must be an integer or \"exact\"");
    Series<Rat> s(ell, t);
    for (const auto& entry : j["terms"]) {
        Word w = parse_word(entry["word"].get<std::string>());
        std::vector<Rat> coeff;
        for (const auto& c : entry["coeff"])
            coeff.push_back(parse_rational(c.get<std::string>()));
        if (!t.allows(w.length()))
            throw parse_error("series term '" + to_string(w) + "' exceeds the declared truncation");
        s.add_term(w, std::move(coeff));
    }
    return s;
}

Series<Rat> load_series(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open series file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return series_from_json(buf.str());
}

void save_series(const Series<Rat>& s, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write series file: " + path);
    out << series_to_json(s) << '\n';
}

std::string series_to_csv(const Series<Rat>& s) {
    std::ostringstream out;
    out << "word";
    for (int i = 1; i <= s.ell(); ++i)
        out << ",c" << i;
    out << '\n';
    for (const auto& [w, coeff] : s.terms()) {
        out << to_string(w);
        for (const auto& q : coeff)
            out << ',' << rat_to_string(q);
        out << '\n';
    }
    return out.str();
}

} // namespace fliess
