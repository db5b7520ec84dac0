// Command line front end for the nine-point pipeline. Stages share one
// catalog file under --out, so each subcommand can be run (and re-run)
// independently: enumerate -> realize -> cubic -> hilbert -> table/render,
// with verify re-checking every shipped certificate.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ennea/pipeline.hpp"
#include "ennea/svg.hpp"

namespace {

struct CliArgs {
    ennea::RunConfig cfg;
    std::string levels;   // "A..B" or "A"
    std::string heights;  // comma-separated
    std::string record;   // key filter for render
    std::string expected = "data/expected_counts.json";
};

void parse_levels(const std::string& text, ennea::RunConfig& cfg) {
    if (text.empty()) return;
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        cfg.level_lo = cfg.level_hi = std::stoi(text);
    } else {
        cfg.level_lo = std::stoi(text.substr(0, dots));
        cfg.level_hi = std::stoi(text.substr(dots + 2));
    }
    if (cfg.level_lo < 1 || cfg.level_hi > 12 || cfg.level_lo > cfg.level_hi)
        throw CLI::ValidationError("--levels", "expected A..B with 1 <= A <= B <= 12");
}

void parse_heights(const std::string& text, ennea::RunConfig& cfg) {
    if (text.empty()) return;
    std::vector<int> hs;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        hs.push_back(std::stoi(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    for (std::size_t i = 0; i + 1 < hs.size(); ++i)
        if (hs[i] >= hs[i + 1])
            throw CLI::ValidationError("--heights", "schedule must be strictly increasing");
    if (hs.empty() || hs.front() < 1)
        throw CLI::ValidationError("--heights", "schedule must be nonempty and positive");
    cfg.heights = hs;
}

std::vector<ennea::CatalogRecord> load(const ennea::RunConfig& cfg) {
    return ennea::read_catalog(ennea::catalog_path(cfg));
}

void save(const ennea::RunConfig& cfg, const std::vector<ennea::CatalogRecord>& recs) {
    ennea::write_catalog(ennea::catalog_path(cfg), recs);
}

int cmd_enumerate(const CliArgs& a) {
    auto recs = ennea::run_enumerate(a.cfg);
    save(a.cfg, recs);
    std::map<int, int> per_level;
    for (const auto& r : recs) ++per_level[r.level];
    for (const auto& [l, n] : per_level) std::printf("level %2d: %3d classes\n", l, n);
    std::printf("%zu records -> %s\n", recs.size(), ennea::catalog_path(a.cfg).c_str());
    return 0;
}

int cmd_realize(const CliArgs& a) {
    auto recs = load(a.cfg);
    int inconclusive = ennea::run_realize(a.cfg, recs);
    save(a.cfg, recs);
    std::map<std::string, int> tally;
    for (const auto& r : recs) ++tally[r.verdict];
    for (const auto& [v, n] : tally) std::printf("%-12s %3d\n", v.c_str(), n);
    if (inconclusive > 0) {
        std::fprintf(stderr, "%d records inconclusive\n", inconclusive);
        return 2;
    }
    return 0;
}

int cmd_cubic(const CliArgs& a) {
    auto recs = load(a.cfg);
    int inconclusive = ennea::run_cubic(a.cfg, recs);
    save(a.cfg, recs);
    std::map<std::string, int> tally;
    for (const auto& r : recs)
        if (!r.cubic_class.empty()) ++tally[r.cubic_class];
    for (const auto& [c, n] : tally) std::printf("type %-12s %3d\n", c.c_str(), n);
    if (inconclusive > 0) {
        std::fprintf(stderr, "%d records inconclusive\n", inconclusive);
        return 2;
    }
    return 0;
}

int cmd_hilbert(const CliArgs& a) {
    auto recs = load(a.cfg);
    int failures = ennea::run_hilbert(recs);
    save(a.cfg, recs);
    std::map<std::string, int> tally;
    for (const auto& r : recs) {
        if (r.hilbert.empty()) continue;
        std::string p;
        for (int v : r.hilbert) p += (p.empty() ? "" : ",") + std::to_string(v);
        ++tally["(" + p + ")"];
    }
    for (const auto& [p, n] : tally) std::printf("%-16s %3d\n", p.c_str(), n);
    if (failures > 0) {
        std::fprintf(stderr, "%d profiles failed to compute\n", failures);
        return 1;
    }
    return 0;
}

int cmd_table(const CliArgs& a) {
    auto recs = load(a.cfg);
    ennea::emit_table(a.cfg, recs);
    std::printf("%s", ennea::table_text(ennea::build_table(recs)).c_str());
    return 0;
}

int cmd_render(const CliArgs& a) {
    auto recs = load(a.cfg);
    int drawn = 0;
    for (const auto& r : recs) {
        if (!a.record.empty() && r.key != a.record) continue;
        if (!r.witness) continue;
        ennea::render_svg_file(r, a.cfg.out_dir + "/svg/" + r.key + ".svg");
        ++drawn;
    }
    if (!a.record.empty() && drawn == 0) {
        std::fprintf(stderr, "no drawable record with key %s\n", a.record.c_str());
        return 1;
    }
    std::printf("%d figures -> %s/svg/\n", drawn, a.cfg.out_dir.c_str());
    return 0;
}

int cmd_verify(const CliArgs& a) {
    auto recs = load(a.cfg);
    auto expected = ennea::read_expected(a.expected);
    ennea::VerifyReport rep = ennea::verify_all(recs, expected);
    for (const auto& m : rep.messages) std::fprintf(stderr, "FAIL %s\n", m.c_str());
    if (rep.failures > 0) {
        std::fprintf(stderr, "%d checks failed\n", rep.failures);
        return 1;
    }
    if (rep.inconclusive > 0) {
        std::fprintf(stderr, "%d records inconclusive\n", rep.inconclusive);
        return 2;
    }
    std::printf("all certificates verified, counts match\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nine points on a cubic: enumeration, realizability, classification"};
    app.require_subcommand(1);
    app.fallthrough();

    CliArgs a;
    app.add_option("--out", a.cfg.out_dir, "output directory (default: out)");
    app.add_option("--seed", a.cfg.seed, "base seed for witness searches");
    app.add_option("--heights", a.heights, "height schedule, e.g. 1,2,3,5,8,13");
    app.add_option("--levels", a.levels, "level range A..B (default 1..12)");
    app.add_option("--record", a.record, "restrict render to one canonical key");
    app.add_option("--expected", a.expected, "expected-counts file for verify");

    auto* c_enum = app.add_subcommand("enumerate", "build the catalog of classes");
    auto* c_real = app.add_subcommand("realize", "decide realizability, attach witnesses");
    auto* c_cub = app.add_subcommand("cubic", "classify configurations on irreducible cubics");
    auto* c_hil = app.add_subcommand("hilbert", "recompute Hilbert profiles from witnesses");
    auto* c_tab = app.add_subcommand("table", "emit the summary table (CSV and text)");
    auto* c_ren = app.add_subcommand("render", "draw witnesses as SVG figures");
    auto* c_ver = app.add_subcommand("verify", "re-check certificates and counts");

    CLI11_PARSE(app, argc, argv);

    try {
        parse_levels(a.levels, a.cfg);
        parse_heights(a.heights, a.cfg);
        if (c_enum->parsed()) return cmd_enumerate(a);
        if (c_real->parsed()) return cmd_realize(a);
        if (c_cub->parsed()) return cmd_cubic(a);
        if (c_hil->parsed()) return cmd_hilbert(a);
        if (c_tab->parsed()) return cmd_table(a);
        if (c_ren->parsed()) return cmd_render(a);
        if (c_ver->parsed()) return cmd_verify(a);
    } catch (const ennea::IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
