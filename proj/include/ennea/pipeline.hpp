#pragma once
// Pipeline stages over one shared catalog file: enumerate -> realize ->
// cubic -> hilbert, plus the summary table and the certificate re-checker.
// Every stage is deterministic for a fixed RunConfig.

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ennea/catalog.hpp"
#include "ennea/classify_cubic.hpp"
#include "ennea/enumerate.hpp"

namespace ennea {

struct RunConfig {
    uint64_t seed = 0;
    std::vector<int> heights;  // empty: keep the default schedule
    std::string out_dir = "out";
    int level_lo = 1;
    int level_hi = 12;
    bool quad_ext = true;  // false caps the witness search at rational points
};

inline std::string catalog_path(const RunConfig& cfg) { return cfg.out_dir + "/catalog.json"; }
inline std::string table_csv_path(const RunConfig& cfg) { return cfg.out_dir + "/table.csv"; }
inline std::string table_txt_path(const RunConfig& cfg) { return cfg.out_dir + "/table.txt"; }

inline RealizeOptions realize_options(const RunConfig& cfg) {
    RealizeOptions opt;
    opt.seed = cfg.seed;
    if (!cfg.heights.empty()) opt.heights = cfg.heights;
    if (!cfg.quad_ext) opt.extension_trials = 0;
    return opt;
}

inline std::vector<CatalogRecord> run_enumerate(const RunConfig& cfg) {
    LevelCatalog cat = enumerate_all(cfg.level_hi);
    std::vector<CatalogRecord> recs;
    for (int l = cfg.level_lo; l <= cfg.level_hi; ++l) {
        for (const auto& s : cat.per_level[std::size_t(l - 1)]) {
            CatalogRecord r;
            auto ck = canonical_key(s);
            r.level = l;
            r.s = ck.representative;
            r.key = ck.key;
            r.aut = automorphism_count(r.s);
            recs.push_back(std::move(r));
        }
    }
    std::sort(recs.begin(), recs.end(), [](const CatalogRecord& a, const CatalogRecord& b) {
        return a.level != b.level ? a.level < b.level : a.key < b.key;
    });
    return recs;
}

// Returns the number of records left inconclusive.
inline int run_realize(const RunConfig& cfg, std::vector<CatalogRecord>& recs) {
    RealizeOptions opt = realize_options(cfg);
    int inconclusive = 0;
    for (auto& r : recs) {
        try {
            RealizabilityVerdict v = classify_realizability(r.s, opt);
            r.verdict = verdict_name(v.kind);
            r.seed = v.seed;
            r.field_d = v.d;
            r.forced = v.forced;
            r.witness = v.witness;
        } catch (const InconclusiveError&) {
            r.verdict = "Inconclusive";
            r.seed = mix_seed(opt.seed, r.key);
            ++inconclusive;
        }
    }
    return inconclusive;
}

// Returns the number of records left inconclusive.
inline int run_cubic(const RunConfig& cfg, std::vector<CatalogRecord>& recs) {
    RealizeOptions opt = realize_options(cfg);
    int inconclusive = 0;
    for (auto& r : recs) {
        if (r.verdict != "Q" && r.verdict != "QuadExt") continue;
        RealizabilityVerdict v;
        v.kind = r.verdict == "Q" ? VerdictKind::OverQ : VerdictKind::OverQuadExt;
        v.key = r.key;
        v.witness = r.witness;
        v.d = r.field_d;
        v.seed = r.seed;
        try {
            CubicClass c = classify_on_cubic(r.s, v, opt);
            r.cubic_class = cubic_kind_name(c.kind);
            r.target_key = c.target_key;
            r.extra = c.extra;
            r.cubic = c.cubic;
            r.hilbert = c.hilbert;
            if (c.witness) {
                // Type A replaces the witness with the one on the cubic.
                r.witness = c.witness;
                r.field_d = c.witness->d;
            }
        } catch (const InconclusiveError&) {
            r.cubic_class = "Inconclusive";
            ++inconclusive;
        }
    }
    return inconclusive;
}

// Recompute Hilbert profiles from the stored witnesses (idempotent).
// Returns the number of records whose profile could not be computed.
inline int run_hilbert(std::vector<CatalogRecord>& recs) {
    int failures = 0;
    for (auto& r : recs) {
        if (!r.witness) continue;
        try {
            r.hilbert = hilbert_profile(r.witness->pts);
        } catch (const DegenerateInputError&) {
            ++failures;
        }
    }
    return failures;
}

struct ReportTable {
    std::array<int, 12> structures{};
    std::array<int, 12> realizable{};
    std::array<int, 12> on_cubic{};
    std::array<std::string, 12> field_note{};
};

inline ReportTable build_table(const std::vector<CatalogRecord>& recs) {
    ReportTable t;
    std::array<std::set<long>, 12> fields;
    for (const auto& r : recs) {
        if (r.level < 1 || r.level > 12) continue;
        std::size_t l = std::size_t(r.level - 1);
        ++t.structures[l];
        if (r.verdict == "Q" || r.verdict == "QuadExt") ++t.realizable[l];
        if (r.verdict == "QuadExt") fields[l].insert(r.field_d);
        if (r.cubic_class == "A") ++t.on_cubic[l];
    }
    for (std::size_t l = 0; l < 12; ++l) {
        std::string note;
        for (long d : fields[l]) {
            if (!note.empty()) note += ", ";
            note += "needs sqrt(" + std::to_string(d) + ")";
        }
        t.field_note[l] = note;
        if (t.structures[l] < t.realizable[l] || t.realizable[l] < t.on_cubic[l])
            throw std::runtime_error("table rows are not monotone at level " +
                                     std::to_string(l + 1));
    }
    return t;
}

inline std::string table_csv(const ReportTable& t) {
    std::ostringstream out;
    out << "level,structures,realizable,on_cubic,field_note\n";
    for (int l = 0; l < 12; ++l)
        out << (l + 1) << ',' << t.structures[std::size_t(l)] << ','
            << t.realizable[std::size_t(l)] << ',' << t.on_cubic[std::size_t(l)] << ','
            << t.field_note[std::size_t(l)] << '\n';
    return out.str();
}

inline std::string table_text(const ReportTable& t) {
    auto row = [](const std::string& label, auto get) {
        std::ostringstream out;
        out << std::left;
        out.width(22);
        out << label;
        for (int l = 0; l < 12; ++l) {
            out.width(5);
            out << get(l);
        }
        return out.str();
    };
    std::ostringstream out;
    out << row("level", [](int l) { return l + 1; }) << '\n';
    out << row("structures", [&](int l) { return t.structures[std::size_t(l)]; }) << '\n';
    out << row("realizable", [&](int l) { return t.realizable[std::size_t(l)]; }) << '\n';
    out << row("on a cubic", [&](int l) { return t.on_cubic[std::size_t(l)]; }) << '\n';
    for (int l = 0; l < 12; ++l)
        if (!t.field_note[std::size_t(l)].empty())
            out << "level " << (l + 1) << ": " << t.field_note[std::size_t(l)] << '\n';
    return out.str();
}

inline void emit_table(const RunConfig& cfg, const std::vector<CatalogRecord>& recs) {
    ReportTable t = build_table(recs);
    write_text_atomic(table_csv_path(cfg), table_csv(t));
    write_text_atomic(table_txt_path(cfg), table_text(t));
}

struct ExpectedCounts {
    std::array<int, 12> structures{};
    std::array<int, 12> realizable{};
    std::array<int, 12> on_cubic{};
};

inline ExpectedCounts read_expected(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open expected-counts file " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw IoError("cannot parse " + path + ": " + e.what());
    }
    ExpectedCounts e;
    try {
        for (int l = 0; l < 12; ++l) {
            e.structures[std::size_t(l)] = j.at("structures").at(std::size_t(l));
            e.realizable[std::size_t(l)] = j.at("realizable").at(std::size_t(l));
            e.on_cubic[std::size_t(l)] = j.at("on_cubic").at(std::size_t(l));
        }
    } catch (const std::exception& ex) {
        throw IoError(path + " must hold three 12-entry rows: " + ex.what());
    }
    return e;
}

struct VerifyReport {
    int failures = 0;
    int inconclusive = 0;
    std::vector<std::string> messages;

    void fail(const std::string& key, const std::string& what) {
        ++failures;
        messages.push_back(key + ": " + what);
    }
};

// Re-check every shipped certificate and compare counts with the goldens.
inline VerifyReport verify_all(const std::vector<CatalogRecord>& recs,
                               const ExpectedCounts& expected) {
    VerifyReport rep;
    std::set<std::string> keys;
    int max_level = 0;
    for (const auto& r : recs) {
        keys.insert(r.key);
        max_level = std::max(max_level, r.level);
    }
    for (const auto& r : recs) {
        if (int(r.s.blocks.size()) != r.level) rep.fail(r.key, "level does not match blocks");
        auto ck = canonical_key(r.s);
        if (ck.key != r.key) rep.fail(r.key, "key is not canonical");
        if (automorphism_count(r.s) != r.aut) rep.fail(r.key, "automorphism count mismatch");
        if (r.verdict.empty()) {
            rep.fail(r.key, "missing realizability verdict");
            continue;
        }
        if (r.verdict == "Inconclusive" || r.cubic_class == "Inconclusive") ++rep.inconclusive;
        if (r.verdict == "Q" || r.verdict == "QuadExt") {
            if (!r.witness) {
                rep.fail(r.key, "realizable verdict without witness");
            } else {
                if (r.witness->d != r.field_d) rep.fail(r.key, "witness field mismatch");
                if (!verify_witness(*r.witness, r.s)) rep.fail(r.key, "witness fails re-check");
            }
        }
        if (r.verdict == "Forces" || !r.forced.empty()) {
            if (r.forced.empty()) {
                rep.fail(r.key, "Forces verdict without forced blocks");
            } else {
                auto blocks = r.s.blocks;
                for (const auto& t : r.forced) blocks.push_back(t);
                try {
                    make_structure(blocks);
                } catch (const std::exception&) {
                    rep.fail(r.key, "forced blocks do not extend the structure");
                }
            }
        }
        if (r.cubic_class == "A") {
            if (!r.witness || !r.cubic || r.hilbert.empty()) {
                rep.fail(r.key, "type A record missing witness, cubic or profile");
                continue;
            }
            bool on = true;
            for (const auto& p : r.witness->pts)
                if (!evaluate_cubic(*r.cubic, p).is_zero()) on = false;
            if (!on) rep.fail(r.key, "witness does not lie on the stored cubic");
            if (!is_irreducible(*r.cubic)) rep.fail(r.key, "stored cubic is reducible");
            try {
                if (hilbert_profile(r.witness->pts) != r.hilbert)
                    rep.fail(r.key, "Hilbert profile does not recompute");
            } catch (const DegenerateInputError&) {
                rep.fail(r.key, "Hilbert profile degenerates on re-check");
            }
        }
        if (r.cubic_class == "B") {
            if (r.extra.empty() || r.target_key.empty()) {
                rep.fail(r.key, "type B record missing the forced enlargement");
            } else {
                auto blocks = r.s.blocks;
                for (const auto& t : r.extra) blocks.push_back(t);
                try {
                    auto target = canonical_key(make_structure(blocks));
                    if (target.key != r.target_key)
                        rep.fail(r.key, "enlarged structure does not match target key");
                    else if (int(blocks.size()) <= max_level && !keys.count(r.target_key))
                        rep.fail(r.key, "target key missing from catalog");
                } catch (const std::exception&) {
                    rep.fail(r.key, "forced enlargement is not a valid structure");
                }
            }
        }
    }
    ReportTable t;
    try {
        t = build_table(recs);
    } catch (const std::exception& e) {
        rep.fail("table", e.what());
        return rep;
    }
    for (int l = 0; l < 12; ++l) {
        auto want = [&](const char* row, int got, int exp) {
            if (got != exp)
                rep.fail("level " + std::to_string(l + 1),
                         std::string(row) + " count " + std::to_string(got) + " != expected " +
                             std::to_string(exp));
        };
        want("structure", t.structures[std::size_t(l)], expected.structures[std::size_t(l)]);
        want("realizable", t.realizable[std::size_t(l)], expected.realizable[std::size_t(l)]);
        want("on-cubic", t.on_cubic[std::size_t(l)], expected.on_cubic[std::size_t(l)]);
    }
    // The extension-field footnotes are part of the contract (checked on the
    // levels the catalog actually covers; absent levels already fail above).
    std::set<int> present;
    for (const auto& r : recs) present.insert(r.level);
    std::map<int, std::set<long>> ext;
    for (const auto& r : recs)
        if (r.verdict == "QuadExt") ext[r.level].insert(r.field_d);
    std::map<int, std::set<long>> expected_ext;
    for (auto& [l, ds] : std::map<int, std::set<long>>{{8, {-3}}, {9, {-3}}, {10, {-1}}, {12, {-3}}})
        if (present.count(l)) expected_ext[l] = ds;
    if (ext != expected_ext) rep.fail("table", "extension-field footnotes mismatch");
    return rep;
}

}  // namespace ennea
