#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "ennea/pipeline.hpp"
#include "ennea/svg.hpp"

using namespace ennea;
namespace fs = std::filesystem;

namespace {

IncidenceStructure S(const std::vector<std::string>& blocks) { return parse_structure(blocks); }

std::string fresh_dir(const std::string& name) {
    fs::path d = fs::temp_directory_path() / name;
    fs::remove_all(d);
    fs::create_directories(d);
    return d.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

// All four stages over a fresh config; files land under cfg.out_dir.
std::vector<CatalogRecord> run_stages(const RunConfig& cfg) {
    auto recs = run_enumerate(cfg);
    REQUIRE(run_realize(cfg, recs) == 0);
    REQUIRE(run_cubic(cfg, recs) == 0);
    REQUIRE(run_hilbert(recs) == 0);
    write_catalog(catalog_path(cfg), recs);
    emit_table(cfg, recs);
    return recs;
}

ExpectedCounts expected_up_to(int level_hi) {
    const std::array<int, 12> structures = {1, 2, 5, 11, 19, 34, 41, 31, 12, 4, 1, 1};
    const std::array<int, 12> realizable = {1, 2, 5, 11, 19, 34, 40, 29, 11, 2, 0, 1};
    const std::array<int, 12> on_cubic = {1, 2, 5, 11, 18, 32, 34, 22, 6, 1, 0, 1};
    ExpectedCounts e;
    for (int l = 0; l < level_hi; ++l) {
        e.structures[std::size_t(l)] = structures[std::size_t(l)];
        e.realizable[std::size_t(l)] = realizable[std::size_t(l)];
        e.on_cubic[std::size_t(l)] = on_cubic[std::size_t(l)];
    }
    return e;
}

int run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + ENNEA_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -2;
}

}  // namespace

TEST_CASE("extension coordinates round-trip as strings") {
    CHECK(parse_quadext("3", 0) == QuadExt(Rat(3)));
    CHECK(parse_quadext("-13/18", 0) == QuadExt(Rat(-13, 18)));
    CHECK(parse_quadext("1+2*sqrt(-3)", -3) == QuadExt(Rat(1), Rat(2), -3));
    CHECK(parse_quadext("1/2-3/4*sqrt(-1)", -1) == QuadExt(Rat(1, 2), Rat(-3, 4), -1));
    CHECK(parse_quadext("-sqrt(2)", 2) == QuadExt(Rat(0), Rat(-1), 2));
    CHECK(parse_quadext("sqrt(5)", 5) == QuadExt(Rat(0), Rat(1), 5));
    CHECK(parse_quadext("-2/3*sqrt(5)", 5) == QuadExt(Rat(0), Rat(-2, 3), 5));
    // d = 0 accepts any root; a stated field must match
    CHECK(parse_quadext("7*sqrt(-3)", 0) == QuadExt(Rat(0), Rat(7), -3));
    CHECK_THROWS_AS(parse_quadext("sqrt(5)", -3), IoError);
    CHECK_THROWS_AS(parse_quadext("sqrt(", 0), IoError);
    CHECK_THROWS_AS(parse_quadext("sqrt(-3)+1", -3), IoError);
    CHECK_THROWS_AS(parse_quadext("bogus", 0), IoError);

    // printer and parser are mutually inverse on a spread of values
    for (const QuadExt& q :
         {QuadExt(Rat(0)), QuadExt(Rat(-7, 2)), QuadExt(Rat(1, 3), Rat(-5, 8), -3),
          QuadExt(Rat(-2), Rat(1), 5), QuadExt(Rat(0), Rat(-9, 4), -1)}) {
        CHECK(parse_quadext(q.str(), 0) == q);
    }
}

TEST_CASE("catalog records survive the JSON round trip") {
    // a rational type A record, built the same way the pipeline builds it
    auto seven = S({"012", "034", "056", "135", "146", "367", "458"});
    CatalogRecord r;
    auto ck = canonical_key(seven);
    r.level = 7;
    r.s = ck.representative;
    r.key = ck.key;
    r.aut = automorphism_count(r.s);
    RealizabilityVerdict v = classify_realizability(r.s);
    REQUIRE(v.kind == VerdictKind::OverQ);
    r.verdict = verdict_name(v.kind);
    r.seed = v.seed;
    CubicClass c = classify_on_cubic(r.s, v);
    REQUIRE(c.kind == CubicKind::TypeA);
    r.cubic_class = cubic_kind_name(c.kind);
    r.witness = c.witness;
    r.field_d = c.witness->d;
    r.cubic = c.cubic;
    r.hilbert = c.hilbert;

    Json j = record_to_json(r);
    CatalogRecord r2 = record_from_json(j);
    CHECK(record_to_json(r2) == j);
    CHECK(r2.key == r.key);
    CHECK(r2.s.str() == r.s.str());
    CHECK(r2.seed == r.seed);
    REQUIRE(r2.witness.has_value());
    CHECK(r2.witness->pts == r.witness->pts);
    CHECK(verify_witness(*r2.witness, r2.s));
    REQUIRE(r2.cubic.has_value());
    CHECK(*r2.cubic == *r.cubic);
    CHECK(r2.hilbert == r.hilbert);

    // an extension-field record keeps its sqrt(-3) coordinates exactly
    auto mk = S({"012", "034", "056", "135", "147", "246", "257", "367"});
    CatalogRecord m;
    auto mk_ck = canonical_key(mk);
    m.level = 8;
    m.s = mk_ck.representative;
    m.key = mk_ck.key;
    m.aut = automorphism_count(m.s);
    RealizabilityVerdict vm = classify_realizability(m.s);
    REQUIRE(vm.kind == VerdictKind::OverQuadExt);
    m.verdict = verdict_name(vm.kind);
    m.field_d = vm.d;
    m.witness = vm.witness;
    m.seed = vm.seed;
    Json jm = record_to_json(m);
    CHECK(jm.at("field_d") == -3);
    CatalogRecord m2 = record_from_json(jm);
    CHECK(record_to_json(m2) == jm);
    REQUIRE(m2.witness.has_value());
    CHECK(m2.witness->d == -3);
    CHECK(m2.witness->pts == m.witness->pts);
    CHECK(verify_witness(*m2.witness, m2.s));

    // a forcing record carries its forced blocks, no witness
    auto b1 = S({"012", "034", "056", "078", "135", "147", "168", "238", "246"});
    CatalogRecord f;
    auto b1_ck = canonical_key(b1);
    f.level = 9;
    f.s = b1_ck.representative;
    f.key = b1_ck.key;
    f.aut = automorphism_count(f.s);
    RealizabilityVerdict vf = classify_realizability(f.s);
    REQUIRE(vf.kind == VerdictKind::Forces);
    f.verdict = verdict_name(vf.kind);
    f.forced = vf.forced;
    f.seed = vf.seed;
    Json jf = record_to_json(f);
    CHECK(!jf.contains("witness"));
    CatalogRecord f2 = record_from_json(jf);
    CHECK(record_to_json(f2) == jf);
    CHECK(f2.forced == f.forced);
    CHECK(!f2.witness.has_value());
}

TEST_CASE("catalog files are written atomically and read back verbatim") {
    RunConfig cfg;
    cfg.out_dir = fresh_dir("ennea_pipe_io");
    cfg.level_hi = 3;
    auto recs = run_stages(cfg);
    REQUIRE(recs.size() == 8);

    auto back = read_catalog(catalog_path(cfg));
    REQUIRE(back.size() == recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i)
        CHECK(record_to_json(back[i]) == record_to_json(recs[i]));

    // no leftover temp files from the atomic writes
    for (const auto& entry : fs::directory_iterator(cfg.out_dir))
        CHECK(entry.path().extension() != ".tmp");

    CHECK_THROWS_AS(read_catalog(cfg.out_dir + "/no_such.json"), IoError);
    write_text_atomic(cfg.out_dir + "/garbage.json", "not json");
    CHECK_THROWS_AS(read_catalog(cfg.out_dir + "/garbage.json"), IoError);
}

TEST_CASE("the staged pipeline reproduces the low levels") {
    RunConfig cfg;
    cfg.out_dir = fresh_dir("ennea_pipe_small");
    cfg.level_hi = 6;
    auto recs = run_stages(cfg);

    std::map<int, int> structures, realizable, type_a;
    std::map<int, std::set<std::string>> type_b, type_c;
    for (const auto& r : recs) {
        ++structures[r.level];
        CHECK(!r.verdict.empty());
        if (r.verdict == "Q" || r.verdict == "QuadExt") {
            ++realizable[r.level];
            REQUIRE(r.witness.has_value());
            CHECK(verify_witness(*r.witness, r.s));
            CHECK(!r.hilbert.empty());
            CHECK(r.hilbert.back() == 9);
        }
        if (r.cubic_class == "A") ++type_a[r.level];
        if (r.cubic_class == "B") type_b[r.level].insert(r.key);
        if (r.cubic_class == "C") type_c[r.level].insert(r.key);
    }
    CHECK(structures == std::map<int, int>{{1, 1}, {2, 2}, {3, 5}, {4, 11}, {5, 19}, {6, 34}});
    CHECK(realizable == structures);  // every class through level 6 is realizable
    CHECK(type_a == std::map<int, int>{{1, 1}, {2, 2}, {3, 5}, {4, 11}, {5, 18}, {6, 32}});
    CHECK(type_b[5] == std::set<std::string>{
                           canonical_key(S({"012", "034", "156", "278", "357"})).key});
    CHECK(type_b[6] == std::set<std::string>{
                           canonical_key(S({"012", "034", "056", "137", "158", "248"})).key});
    CHECK(type_c[5].empty());
    CHECK(type_c[6] == std::set<std::string>{
                           canonical_key(S({"012", "034", "056", "137", "248", "578"})).key});

    // the emitted table matches the counts
    std::string csv = slurp(table_csv_path(cfg));
    CHECK(csv.find("level,structures,realizable,on_cubic,field_note\n") == 0);
    CHECK(csv.find("5,19,19,18,\n") != std::string::npos);
    CHECK(csv.find("6,34,34,32,\n") != std::string::npos);
    CHECK(csv.find("7,0,0,0,\n") != std::string::npos);

    // verify passes on pristine output ...
    VerifyReport rep = verify_all(recs, expected_up_to(6));
    CHECK(rep.failures == 0);
    CHECK(rep.inconclusive == 0);

    // ... and a corrupted witness coordinate is caught and named
    auto bad = recs;
    for (auto& r : bad) {
        if (r.witness) {
            r.witness->pts[8][0] = r.witness->pts[8][0] + QuadExt(Rat(1));
            VerifyReport broken = verify_all(bad, expected_up_to(6));
            CHECK(broken.failures > 0);
            bool named = false;
            for (const auto& m : broken.messages)
                named = named || m.find(r.key) != std::string::npos;
            CHECK(named);
            break;
        }
    }

    // count mismatches are caught as well
    ExpectedCounts wrong = expected_up_to(6);
    wrong.on_cubic[5] = 31;
    CHECK(verify_all(recs, wrong).failures > 0);
}

TEST_CASE("reruns of the same configuration are byte-identical") {
    RunConfig a, b;
    a.out_dir = fresh_dir("ennea_pipe_rerun_a");
    b.out_dir = fresh_dir("ennea_pipe_rerun_b");
    a.level_hi = b.level_hi = 4;
    run_stages(a);
    run_stages(b);
    CHECK(slurp(catalog_path(a)) == slurp(catalog_path(b)));
    CHECK(slurp(table_csv_path(a)) == slurp(table_csv_path(b)));
    CHECK(slurp(table_txt_path(a)) == slurp(table_txt_path(b)));
}

TEST_CASE("summary table formatting and monotonicity guard") {
    std::vector<CatalogRecord> recs;
    CatalogRecord r;
    r.level = 8;
    r.s = S({"012"});
    r.key = "012";
    r.aut = 1;
    r.verdict = "QuadExt";
    r.field_d = -3;
    r.cubic_class = "A";
    recs.push_back(r);
    ReportTable t = build_table(recs);
    CHECK(t.structures[7] == 1);
    CHECK(t.realizable[7] == 1);
    CHECK(t.on_cubic[7] == 1);
    CHECK(t.field_note[7] == "needs sqrt(-3)");
    CHECK(table_csv(t).find("8,1,1,1,needs sqrt(-3)\n") != std::string::npos);
    std::string txt = table_text(t);
    CHECK(txt.find("level 8: needs sqrt(-3)") != std::string::npos);
    CHECK(txt.find("structures") != std::string::npos);

    // a type A verdict on a non-realizable record breaks monotonicity
    CatalogRecord nonsense = r;
    nonsense.level = 3;
    nonsense.verdict = "None";
    recs.push_back(nonsense);
    CHECK_THROWS_AS(build_table(recs), std::runtime_error);
}

TEST_CASE("expected-count files are validated") {
    std::string dir = fresh_dir("ennea_pipe_expected");
    CHECK_THROWS_AS(read_expected(dir + "/missing.json"), IoError);
    write_text_atomic(dir + "/bad.json", "[1,2");
    CHECK_THROWS_AS(read_expected(dir + "/bad.json"), IoError);
    write_text_atomic(dir + "/short.json",
                      "{\"structures\":[1],\"realizable\":[1],\"on_cubic\":[1]}");
    CHECK_THROWS_AS(read_expected(dir + "/short.json"), IoError);
    write_text_atomic(dir + "/ok.json",
                      "{\"structures\":[1,2,5,11,19,34,41,31,12,4,1,1],"
                      "\"realizable\":[1,2,5,11,19,34,40,29,11,2,0,1],"
                      "\"on_cubic\":[1,2,5,11,18,32,34,22,6,1,0,1]}");
    ExpectedCounts e = read_expected(dir + "/ok.json");
    CHECK(e.structures[0] == 1);
    CHECK(e.realizable[6] == 40);
    CHECK(e.on_cubic[11] == 1);
}

TEST_CASE("rendered figures are deterministic and well-formed") {
    RunConfig cfg;
    cfg.out_dir = fresh_dir("ennea_pipe_svg");
    cfg.level_hi = 2;
    auto recs = run_stages(cfg);
    REQUIRE(recs.size() == 3);

    for (const auto& r : recs) {
        REQUIRE(r.witness.has_value());
        std::string svg = render_svg(r);
        CHECK(svg.rfind("<svg ", 0) == 0);
        CHECK(svg.find("viewBox=\"0 0 600 600\"") != std::string::npos);
        CHECK(count_of(svg, "<circle ") == 9);
        CHECK(count_of(svg, "<line ") == r.s.blocks.size());
        CHECK(count_of(svg, "stroke-width=\"2\"") == r.s.blocks.size());
        CHECK(count_of(svg, "r=\"5\"") == 9);
        CHECK(svg.find(">" + r.key + "<") != std::string::npos);
        CHECK(svg.find("schematic") == std::string::npos);
        CHECK(render_svg(r) == svg);  // deterministic

        std::string path = cfg.out_dir + "/svg/" + r.key + ".svg";
        render_svg_file(r, path);
        CHECK(slurp(path) == svg);
    }

    // negative-field witnesses are flagged as schematic projections
    CatalogRecord schematic = recs[0];
    schematic.witness->d = -3;
    CHECK(render_svg(schematic).find("schematic") != std::string::npos);

    CatalogRecord no_witness = recs[0];
    no_witness.witness.reset();
    CHECK_THROWS_AS(render_svg(no_witness), IoError);
}

TEST_CASE("the command line drives the pipeline end to end") {
    std::string dir = fresh_dir("ennea_pipe_cli");
    std::string out = " --out \"" + dir + "\"";

    CHECK(run_cli("enumerate --levels 1..4" + out) == 0);
    CHECK(run_cli("realize" + out) == 0);
    CHECK(run_cli("cubic" + out) == 0);
    CHECK(run_cli("hilbert" + out) == 0);
    CHECK(run_cli("table" + out) == 0);
    CHECK(fs::exists(dir + "/catalog.json"));
    CHECK(fs::exists(dir + "/table.csv"));
    CHECK(fs::exists(dir + "/table.txt"));
    CHECK(slurp(dir + "/table.csv").find("4,11,11,11,\n") != std::string::npos);

    CHECK(run_cli("render --record 012" + out) == 0);
    CHECK(fs::exists(dir + "/svg/012.svg"));
    CHECK(run_cli("render --record 999" + out) == 1);

    Json exp = {{"structures", Json::array()},
                {"realizable", Json::array()},
                {"on_cubic", Json::array()}};
    const std::array<int, 12> counts = {1, 2, 5, 11, 0, 0, 0, 0, 0, 0, 0, 0};
    for (int n : counts)
        for (const char* row : {"structures", "realizable", "on_cubic"}) exp[row].push_back(n);
    write_text_atomic(dir + "/expected.json", exp.dump());
    std::string verify = "verify --expected \"" + dir + "/expected.json\"" + out;
    CHECK(run_cli(verify) == 0);

    // corrupting one stored coordinate flips verify to failure
    Json catalog;
    {
        std::ifstream in(dir + "/catalog.json");
        in >> catalog;
    }
    bool corrupted = false;
    for (auto& rec : catalog) {
        if (rec.contains("witness")) {
            rec["witness"][8][0] = "271828";
            corrupted = true;
            break;
        }
    }
    REQUIRE(corrupted);
    write_text_atomic(dir + "/catalog.json", catalog.dump(1) + "\n");
    CHECK(run_cli(verify) == 1);

    // argument validation and I/O failures use their own exit codes
    CHECK(run_cli("enumerate --levels 0..13" + out) == 3);
    CHECK(run_cli("realize --heights 3,2" + out) == 3);
    CHECK(run_cli("table --out \"" + dir + "/does_not_exist\"") == 3);
    CHECK(run_cli("frobnicate" + out) != 0);
}
