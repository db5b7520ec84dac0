#pragma once
// Catalog persistence: one JSON object per structure, gaining fields stage
// by stage (enumeration, realizability verdicts, cubic classification).
// Witness coordinates round-trip exactly as strings.

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ennea/canonical.hpp"
#include "ennea/classify_cubic.hpp"
#include "ennea/realize.hpp"

namespace ennea {

using Json = nlohmann::json;

struct CatalogRecord {
    // enumeration stage
    int level = 0;
    IncidenceStructure s;
    std::string key;
    long aut = 0;
    // realizability stage ("" = stage not run yet)
    std::string verdict;  // "Q", "QuadExt", "Forces", "None", "Inconclusive"
    long field_d = 0;
    std::vector<Triple> forced;
    std::optional<Witness> witness;
    uint64_t seed = 0;
    // cubic stage ("" = stage not run, or not applicable)
    std::string cubic_class;  // "A", "B", "C", "Inconclusive"
    std::string target_key;
    std::vector<Triple> extra;
    std::optional<CubicForm> cubic;
    std::vector<int> hilbert;
};

// "3", "-13/18", "1/2+3/4*sqrt(-3)", "-sqrt(5)", "2*sqrt(-1)" ...
inline QuadExt parse_quadext(const std::string& s, long d) {
    auto pos = s.find("sqrt(");
    if (pos == std::string::npos) return QuadExt(Rat::from_string(s));
    auto close = s.find(')', pos);
    if (close == std::string::npos || close + 1 != s.size())
        throw IoError("parse_quadext: malformed '" + s + "'");
    long root_d = std::stol(s.substr(pos + 5, close - pos - 5));
    if (d != 0 && root_d != d)
        throw IoError("parse_quadext: field mismatch in '" + s + "'");
    std::size_t coeff_end = pos;
    if (coeff_end > 0 && s[coeff_end - 1] == '*') --coeff_end;
    std::size_t coeff_start = coeff_end;
    while (coeff_start > 0 && (std::isdigit(s[coeff_start - 1]) || s[coeff_start - 1] == '/'))
        --coeff_start;
    Rat b = coeff_start == coeff_end ? Rat(1)
                                     : Rat::from_string(s.substr(coeff_start, coeff_end - coeff_start));
    std::string a = "0";
    if (coeff_start > 0) {
        char sign = s[coeff_start - 1];
        if (sign != '+' && sign != '-')
            throw IoError("parse_quadext: malformed '" + s + "'");
        if (sign == '-') b = -b;
        if (coeff_start > 1) a = s.substr(0, coeff_start - 1);
    }
    return QuadExt(Rat::from_string(a), b, root_d);
}

namespace detail {

inline Json triples_json(const std::vector<Triple>& ts) {
    Json arr = Json::array();
    for (const auto& t : ts) arr.push_back(Json::array({t.a, t.b, t.c}));
    return arr;
}

inline std::vector<Triple> triples_from_json(const Json& arr) {
    std::vector<Triple> out;
    for (const auto& t : arr) out.push_back(make_triple(t.at(0), t.at(1), t.at(2)));
    return out;
}

}  // namespace detail

inline Json record_to_json(const CatalogRecord& r) {
    Json j;
    j["level"] = r.level;
    j["blocks"] = detail::triples_json(r.s.blocks);
    j["key"] = r.key;
    j["aut"] = r.aut;
    if (!r.verdict.empty()) {
        j["verdict"] = r.verdict;
        j["seed"] = r.seed;
        if (r.field_d != 0) j["field_d"] = r.field_d;
        if (!r.forced.empty()) j["forced"] = detail::triples_json(r.forced);
        if (r.witness) {
            Json w = Json::array();
            for (const auto& p : r.witness->pts)
                w.push_back(Json::array({p[0].str(), p[1].str(), p[2].str()}));
            j["witness"] = w;
        }
    }
    if (!r.cubic_class.empty()) {
        j["cubic_class"] = r.cubic_class;
        if (!r.target_key.empty()) j["target_key"] = r.target_key;
        if (!r.extra.empty()) j["extra"] = detail::triples_json(r.extra);
        if (r.cubic) {
            Json c = Json::array();
            for (const auto& x : r.cubic->coeff) c.push_back(x.str());
            j["cubic"] = c;
        }
    }
    if (!r.hilbert.empty()) j["hilbert"] = r.hilbert;
    return j;
}

inline CatalogRecord record_from_json(const Json& j) {
    CatalogRecord r;
    r.level = j.at("level");
    r.s = make_structure(detail::triples_from_json(j.at("blocks")));
    r.key = j.at("key");
    r.aut = j.at("aut");
    if (j.contains("verdict")) {
        r.verdict = j.at("verdict");
        r.seed = j.value("seed", uint64_t(0));
        r.field_d = j.value("field_d", long(0));
        if (j.contains("forced")) r.forced = detail::triples_from_json(j.at("forced"));
        if (j.contains("witness")) {
            Witness w;
            w.d = r.field_d;
            int p = 0;
            for (const auto& row : j.at("witness")) {
                for (int c = 0; c < 3; ++c)
                    w.pts[std::size_t(p)][std::size_t(c)] =
                        parse_quadext(row.at(std::size_t(c)).get<std::string>(), r.field_d);
                ++p;
            }
            r.witness = w;
        }
    }
    if (j.contains("cubic_class")) {
        r.cubic_class = j.at("cubic_class");
        r.target_key = j.value("target_key", std::string());
        if (j.contains("extra")) r.extra = detail::triples_from_json(j.at("extra"));
        if (j.contains("cubic")) {
            CubicForm f;
            int m = 0;
            for (const auto& c : j.at("cubic"))
                f.coeff[std::size_t(m++)] = parse_quadext(c.get<std::string>(), 0);
            r.cubic = f;
        }
    }
    if (j.contains("hilbert")) r.hilbert = j.at("hilbert").get<std::vector<int>>();
    return r;
}

inline void write_text_atomic(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(target.parent_path(), ec);
        if (ec) throw IoError("cannot create directory " + target.parent_path().string());
    }
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out << text;
        if (!out) throw IoError("write failed on " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) throw IoError("cannot rename " + tmp.string() + " to " + path);
}

inline void write_catalog(const std::string& path, const std::vector<CatalogRecord>& recs) {
    Json arr = Json::array();
    for (const auto& r : recs) arr.push_back(record_to_json(r));
    write_text_atomic(path, arr.dump(1) + "\n");
}

inline std::vector<CatalogRecord> read_catalog(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open catalog " + path);
    Json arr;
    try {
        in >> arr;
    } catch (const std::exception& e) {
        throw IoError("cannot parse catalog " + path + ": " + e.what());
    }
    std::vector<CatalogRecord> out;
    for (const auto& j : arr) out.push_back(record_from_json(j));
    return out;
}

}  // namespace ennea
