#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tcc/io.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fixtures.hpp"

using namespace tcc;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
    fs::path p = fs::temp_directory_path() / ("tcc-io-" + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

LinearCode fixture() { return fixtures::unique_10_5_5(); }

}  // namespace

TEST_CASE("codes archive round trip") {
    std::mt19937 rng(7);
    std::vector<LinearCode> codes{fixture()};
    for (int i = 0; i < 20; ++i) {
        std::vector<gf3::Vec> rows;
        size_t n = 4 + rng() % 9;
        size_t k = 1 + rng() % 3;
        for (size_t r = 0; r < k; ++r) {
            gf3::Vec v(n);
            for (size_t j = 0; j < n; ++j) v.set(j, rng() % 3);
            rows.push_back(v);
        }
        try {
            codes.push_back(LinearCode::from_generators(rows));
        } catch (const std::invalid_argument&) {
            --i;  // rank-deficient draw; try again
        }
    }

    std::string text = io::codes_text(codes, "round trip\nsecond header line");
    CHECK(text.substr(0, 2) == "# ");
    std::istringstream in(text);
    auto back = io::read_codes(in, "<mem>");
    REQUIRE(back.size() == codes.size());
    for (size_t i = 0; i < codes.size(); ++i) {
        CHECK(back[i].n() == codes[i].n());
        CHECK(back[i].same_code_as(codes[i]));
        CHECK(back[i].row_strings() == codes[i].row_strings());
    }
    CHECK(io::codes_text(codes, "round trip\nsecond header line") == text);  // byte stable

    auto dir = fresh_dir("roundtrip");
    io::write_codes_file(dir / "a.codes", codes);
    auto from_file = io::read_codes_file(dir / "a.codes");
    CHECK(from_file.size() == codes.size());
}

TEST_CASE("codes archive tolerates comments, blanks, crlf, trailing separator") {
    std::istringstream in(
        "# header\n\n012\r\n120\n%\r\n\n# mid comment\n21\n# tail\n%\n");
    auto codes = io::read_codes(in, "<mem>");
    REQUIRE(codes.size() == 2);
    CHECK(codes[0].n() == 3);
    CHECK(codes[0].k() == 2);
    CHECK(codes[1].n() == 2);
    CHECK(codes[1].k() == 1);
}

TEST_CASE("codes archive parse errors name the source and line") {
    auto expect_fail = [](const std::string& text, const std::string& want) {
        std::istringstream in(text);
        try {
            io::read_codes(in, "f.codes");
            FAIL_CHECK("no error for: " << text);
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find(want) != std::string::npos);
        }
    };
    expect_fail("01\n3x\n", "f.codes:2");
    expect_fail("012\n01\n", "f.codes:2");
    expect_fail("%\n", "f.codes:1");
    expect_fail("01\n%\n%\n", "f.codes:3");

    // dependent rows are reduced to a basis, matching generator semantics
    std::istringstream dep("12\n12\n");
    auto codes = io::read_codes(dep, "f.codes");
    REQUIRE(codes.size() == 1);
    CHECK(codes[0].k() == 1);
}

TEST_CASE("sha256 and timestamps") {
    CHECK(io::sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(io::sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");

    auto dir = fresh_dir("sha");
    std::ofstream(dir / "x.bin") << "abc";
    CHECK(io::sha256_file(dir / "x.bin") == io::sha256_hex("abc"));
    CHECK_THROWS_AS(io::sha256_file(dir / "missing.bin"), std::runtime_error);

    std::string ts = io::utc_timestamp();
    REQUIRE(ts.size() == 20);
    CHECK(ts[4] == '-');
    CHECK(ts[10] == 'T');
    CHECK(ts.back() == 'Z');
}

TEST_CASE("classification outputs round trip through the archive") {
    ClassificationResult r = classify_codes({fixture()});
    r.target_d = 5;
    r.matrix_count = 1;
    REQUIRE(r.classes.size() == 1);

    auto dir = fresh_dir("cls");
    io::write_classification_outputs(dir, r);
    CHECK(fs::exists(dir / "reps-10-5-5.codes"));
    CHECK(fs::exists(dir / "summary-10-5-5.json"));

    auto summary = io::read_json_file(dir / "summary-10-5-5.json");
    CHECK(summary.at("kind") == "classification");
    CHECK(summary.at("class_count") == 1);
    CHECK(summary.at("matrix_count") == 1);
    CHECK(summary.at("formally_self_dual_count") == 1);
    CHECK(summary.at("design_strength_counts").at("3") == 1);
    CHECK(summary.at("classes")[0].at("design").at("lambda") ==
          nlohmann::ordered_json::array({18, 8, 3}));

    ClassificationResult back = io::load_classification(dir, 5);
    CHECK(back.target_d == 5);
    CHECK(back.matrix_count == 1);
    CHECK(back.we_class_count == 1);
    REQUIRE(back.classes.size() == 1);
    CHECK(back.classes[0].rep.same_code_as(r.classes[0].rep));
    CHECK(back.classes[0].cert == r.classes[0].cert);
    CHECK(back.classes[0].aut_order == r.classes[0].aut_order);
    CHECK(back.classes[0].design.max_t == 3);

    SUBCASE("tampered rep file is rejected") {
        // flip one digit: the code is no longer the stored class
        auto p = dir / "reps-10-5-5.codes";
        std::ifstream in(p);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        auto pos = text.find("12210");
        REQUIRE(pos != std::string::npos);
        text[pos] = '2';
        std::ofstream(p) << text;
        CHECK_THROWS_AS(io::load_classification(dir, 5), std::runtime_error);
    }
    SUBCASE("summary count mismatch is rejected") {
        auto s = io::read_json_file(dir / "summary-10-5-5.json");
        s["class_count"] = 2;
        io::write_json_file(dir / "summary-10-5-5.json", s);
        CHECK_THROWS_AS(io::load_classification(dir, 5), std::runtime_error);
    }
    SUBCASE("missing files are reported") {
        CHECK_THROWS_AS(io::load_classification(dir, 4), std::runtime_error);
    }
}

TEST_CASE("extension outputs") {
    Extend12Result r = extend_fixture_only();
    auto dir = fresh_dir("ext");
    io::write_extension_outputs(dir, r);

    auto codes = io::read_codes_file(dir / "survivors-12-5.codes");
    REQUIRE(codes.size() == 1);
    CHECK(codes[0].min_weight() == 6);

    auto summary = io::read_json_file(dir / "summary-12-5.json");
    CHECK(summary.at("survivor_count") == 1);
    CHECK(summary.at("source_classes_with_c1_extensions").at("from_min_weight_5") == 1);
    const auto& e = summary.at("codes")[0];
    CHECK(e.at("min_weight") == 6);
    CHECK(e.at("source_min_weight") == 5);
    CHECK(e.at("sz_class_size") == 1);
    CHECK(e.at("refined_weight_enumerator").at("text") == r.survivors[0].refined.str());
    CHECK(e.at("refined_weight_enumerator").at("terms").size() ==
          r.survivors[0].refined.terms().size());
    CHECK(e.at("punctured_class_sha256").get<std::string>().size() == 64);
}

TEST_CASE("analysis summary") {
    LinearCode ten = fixture();
    Extend12Result ext = extend_fixture_only();
    auto doc = io::analysis_summary({ten, ext.survivors[0].code});
    CHECK(doc.at("code_count") == 2);
    CHECK(doc.at("formally_self_dual_count") == 1);
    const auto& rows = doc.at("codes");
    CHECK(rows[0].at("min_weight") == 5);
    CHECK(rows[0].at("design").at("max_t") == 3);
    CHECK_FALSE(rows[0].contains("refined_weight_enumerator"));
    CHECK(rows[1].at("length") == 12);
    CHECK(rows[1].contains("refined_weight_enumerator"));
}

TEST_CASE("run manifest") {
    auto dir = fresh_dir("manifest");
    std::ofstream(dir / "out.txt") << "payload";
    io::RunManifest m;
    m.command = "tcc demo";
    m.started = io::utc_timestamp();
    m.config["threads"] = 1;
    m.counts["codes"] = 1;
    m.add_output(dir, "out.txt");
    m.finished = io::utc_timestamp();

    auto j = m.to_json();
    CHECK(j.at("command") == "tcc demo");
    CHECK(j.at("version") == io::kToolVersion);
    CHECK(j.at("outputs")[0].at("path") == "out.txt");
    CHECK(j.at("outputs")[0].at("sha256") == io::sha256_hex("payload"));
    // stable key order
    std::string dumped = j.dump();
    CHECK(dumped.find("\"command\"") < dumped.find("\"version\""));
    CHECK(dumped.find("\"version\"") < dumped.find("\"started\""));
    CHECK(dumped.find("\"config\"") < dumped.find("\"counts\""));
}
