#include <CLI11.hpp>

#include <tcc/io.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace tcc;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

// --out wins; TCC_OUT is the fallback output root.
fs::path resolve_out(const std::string& flag, bool required) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("TCC_OUT"); env && *env) return env;
    if (required)
        throw std::invalid_argument("no output directory: pass --out or set TCC_OUT");
    return {};
}

size_t count_fsd(const ClassificationResult& r) {
    size_t n = 0;
    for (const auto& c : r.classes) n += c.formally_self_dual;
    return n;
}

size_t count_design_at_least(const ClassificationResult& r, int t) {
    size_t n = 0;
    for (const auto& c : r.classes) n += c.design.max_t >= t;
    return n;
}

struct ClassifyFlags {
    int min_weight = 0;
    std::string out;
    unsigned threads = 0;
    bool resume = false;
};

int cmd_classify10(const ClassifyFlags& f, const std::string& command) {
    SearchConfig cfg = SearchConfig::for_min_weight(f.min_weight);
    fs::path out = resolve_out(f.out, true);
    fs::create_directories(out);
    fs::path ck = out / ("checkpoints-10-5-" + std::to_string(f.min_weight));
    if (!f.resume) fs::remove_all(ck);

    io::RunManifest m;
    m.command = command;
    m.started = io::utc_timestamp();
    m.config["min_weight"] = f.min_weight;
    m.config["threads"] = f.threads;
    m.config["resume"] = f.resume;
    m.config["out"] = out.string();

    size_t branch_total = build_x_sets(cfg).x2.size();
    ClassifyOptions opts;
    opts.threads = f.threads;
    opts.checkpoint_dir = ck.string();
    opts.on_branch_done = [&](size_t branch, uint64_t matrices) {
        std::fprintf(stderr, "branch %zu/%zu done (%llu matrices)\n", branch + 1,
                     branch_total, static_cast<unsigned long long>(matrices));
    };
    ClassificationResult r = classify10(cfg, opts);
    io::write_classification_outputs(out, r);

    m.counts["matrix_count"] = r.matrix_count;
    m.counts["weight_enumerator_class_count"] = r.we_class_count;
    m.counts["class_count"] = r.class_count();
    m.counts["formally_self_dual_count"] = count_fsd(r);
    m.add_output(out, io::reps_file_name(f.min_weight));
    m.add_output(out, io::classification_summary_name(f.min_weight));
    m.finished = io::utc_timestamp();
    io::write_json_file(out / ("manifest-10-5-" + std::to_string(f.min_weight) + ".json"),
                        m.to_json());

    std::printf("[10,5,%d]: %llu matrices -> %zu weight enumerator classes -> %zu classes\n",
                f.min_weight, static_cast<unsigned long long>(r.matrix_count),
                r.we_class_count, r.class_count());
    std::printf("outputs written to %s\n", out.string().c_str());
    return kExitOk;
}

struct ExtendFlags {
    std::string reps;
    bool fixtures_only = false;
    std::string out;
};

int cmd_extend(const ExtendFlags& f, const std::string& command) {
    if (f.fixtures_only == !f.reps.empty())
        throw std::invalid_argument("pass exactly one of --reps DIR or --fixtures-only");
    fs::path out = resolve_out(f.out, true);

    io::RunManifest m;
    m.command = command;
    m.started = io::utc_timestamp();
    m.config["fixtures_only"] = f.fixtures_only;
    m.config["reps"] = f.reps;
    m.config["out"] = out.string();

    Extend12Result r;
    if (f.fixtures_only) {
        r = extend_fixture_only();
    } else {
        fs::path reps(f.reps);
        for (int d : {3, 4}) {
            for (const std::string& name :
                 {io::reps_file_name(d), io::classification_summary_name(d)})
                if (!fs::exists(reps / name))
                    throw std::invalid_argument("missing input " + (reps / name).string());
        }
        std::fprintf(stderr, "loading [10,5,3] and [10,5,4] representatives...\n");
        ClassificationResult d3 = io::load_classification(reps, 3);
        ClassificationResult d4 = io::load_classification(reps, 4);
        std::fprintf(stderr, "scanning extensions of %zu + %zu classes...\n",
                     d3.class_count(), d4.class_count());
        r = classify_12_5(d3, d4);
    }

    fs::create_directories(out);
    io::write_extension_outputs(out, r);

    size_t w6 = 0, w4 = 0;
    for (const auto& s : r.survivors) {
        w6 += s.min_weight == 6;
        w4 += s.min_weight == 4;
    }
    m.counts["survivor_count"] = r.survivors.size();
    m.counts["min_weight_6_count"] = w6;
    m.counts["min_weight_4_count"] = w4;
    auto c1 = nlohmann::ordered_json::object();
    c1["from_min_weight_5"] = r.d5_c1_classes;
    c1["from_min_weight_4"] = r.d4_c1_classes;
    c1["from_min_weight_3"] = r.d3_c1_classes;
    m.counts["source_classes_with_c1_extensions"] = c1;
    auto c13 = nlohmann::ordered_json::object();
    c13["from_min_weight_5"] = r.d5_c1_classes;
    c13["from_min_weight_4"] = r.d4_c1c3_classes;
    c13["from_min_weight_3"] = r.d3_c1c3_classes;
    m.counts["source_classes_with_c1_c3_extensions"] = c13;
    m.add_output(out, "survivors-12-5.codes");
    m.add_output(out, "summary-12-5.json");
    m.finished = io::utc_timestamp();
    io::write_json_file(out / "manifest-12-5.json", m.to_json());

    std::printf("[12,5] classes: %zu (%zu of minimum weight 6, %zu of minimum weight 4)\n",
                r.survivors.size(), w6, w4);
    std::printf("outputs written to %s\n", out.string().c_str());
    return kExitOk;
}

struct AnalyzeFlags {
    std::string codes;
    std::string out;
};

int cmd_analyze(const AnalyzeFlags& f, const std::string& command) {
    std::vector<LinearCode> codes = io::read_codes_file(f.codes);
    nlohmann::ordered_json doc = io::analysis_summary(codes);

    fs::path out = resolve_out(f.out, false);
    if (out.empty()) {
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }

    io::RunManifest m;
    m.command = command;
    m.started = io::utc_timestamp();
    m.config["codes"] = f.codes;
    m.config["out"] = out.string();

    fs::create_directories(out);
    std::string stem = fs::path(f.codes).stem().string();
    std::string report = "analysis-" + stem + ".json";
    io::write_json_file(out / report, doc);

    m.counts["code_count"] = codes.size();
    m.counts["formally_self_dual_count"] = doc.at("formally_self_dual_count");
    m.add_output(out, report);
    m.finished = io::utc_timestamp();
    io::write_json_file(out / ("manifest-analysis-" + stem + ".json"), m.to_json());

    std::printf("analyzed %zu codes; report written to %s\n", codes.size(),
                (out / report).string().c_str());
    return kExitOk;
}

struct VerifyFlags {
    bool quick = false;
    bool full = false;
    std::string reps;
    unsigned threads = 0;
};

struct VerifyRow {
    std::string name;
    std::string expected;
    std::string computed;
    bool ok;
};

int cmd_verify(const VerifyFlags& f) {
    std::vector<VerifyRow> rows;
    auto add = [&](const std::string& name, uint64_t expected, uint64_t computed) {
        rows.push_back({name, std::to_string(expected), std::to_string(computed),
                        expected == computed});
    };
    auto add_text = [&](const std::string& name, const std::string& expected,
                        const std::string& computed) {
        rows.push_back({name, expected, computed, expected == computed});
    };

    ClassifyOptions opts;
    opts.threads = f.threads;
    opts.on_branch_done = [](size_t branch, uint64_t) {
        std::fprintf(stderr, "  branch %zu done\n", branch + 1);
    };

    auto archive_check = [&](const ClassificationResult& r) {
        // regenerate the archive and compare bytes against the stored copy
        fs::path tmp = fs::temp_directory_path() /
                       ("tcc-verify-" + std::to_string(r.target_d));
        fs::remove_all(tmp);
        fs::create_directories(tmp);
        io::write_classification_outputs(tmp, r);
        std::string name = io::reps_file_name(r.target_d);
        std::string fresh = io::sha256_file(tmp / name);
        fs::path stored = fs::path(f.reps) / name;
        std::string have =
            fs::exists(stored) ? io::sha256_file(stored) : std::string("missing file");
        add_text("stored " + name + " matches a recomputation (sha256)",
                 fresh.substr(0, 12), have.substr(0, 12));
        fs::remove_all(tmp);
    };

    std::fprintf(stderr, "classifying [10,5,4] codes...\n");
    {
        XSets xs = build_x_sets(SearchConfig::for_min_weight(4));
        add("[10,5,4] row pool for rows 3-5", 88, xs.x1.size());
        add("[10,5,4] row pool for row 2", 14, xs.x2.size());
    }
    ClassificationResult r4 = classify10(SearchConfig::for_min_weight(4), opts);
    add("[10,5,4] candidate matrices", 650051, r4.matrix_count);
    add("[10,5,4] weight enumerator classes", 64, r4.we_class_count);
    add("[10,5,4] equivalence classes", 135, r4.class_count());
    add("[10,5,4] formally self-dual classes", 38, count_fsd(r4));
    add("[10,5,4] classes whose min-weight supports form a 1-design", 5,
        count_design_at_least(r4, 1));
    add("[10,5,4] classes whose min-weight supports form a 2-design", 1,
        count_design_at_least(r4, 2));

    {
        Extend12Result fix = extend_fixture_only();
        add("[10,5,5] extension classes", 1, fix.survivors.size());
        std::string refined =
            fix.survivors.empty() ? std::string("none") : fix.survivors[0].refined.str();
        add_text("[10,5,5] extension refined weight enumerator",
                 "1 + 72 x^5 y z + 60 x^6 + 90 x^8 y z + 20 x^9", refined);
    }

    if (f.full) {
        std::fprintf(stderr, "classifying [10,5,3] codes (this takes a while)...\n");
        {
            XSets xs = build_x_sets(SearchConfig::for_min_weight(3));
            add("[10,5,3] row pool for rows 3-5", 115, xs.x1.size());
            add("[10,5,3] row pool for row 2", 18, xs.x2.size());
        }
        ClassificationResult r3 = classify10(SearchConfig::for_min_weight(3), opts);
        add("[10,5,3] candidate matrices", 4328352, r3.matrix_count);
        add("[10,5,3] weight enumerator classes", 527, r3.we_class_count);
        add("[10,5,3] equivalence classes", 1303, r3.class_count());
        add("[10,5,3] formally self-dual classes", 242, count_fsd(r3));

        std::fprintf(stderr, "scanning [12,5] extensions...\n");
        Extend12Result ext = classify_12_5(r3, r4);
        add("[10,5,4] classes with condition-passing extensions", 2, ext.d4_c1_classes);
        add("[10,5,4] classes surviving the weight-3 tail condition", 2,
            ext.d4_c1c3_classes);
        add("[10,5,3] classes with condition-passing extensions", 19, ext.d3_c1_classes);
        add("[10,5,3] classes surviving the weight-3 tail condition", 4,
            ext.d3_c1c3_classes);
        size_t w6 = 0, w4 = 0;
        for (const auto& s : ext.survivors) {
            w6 += s.min_weight == 6;
            w4 += s.min_weight == 4;
        }
        add("[12,5] classes", 7, ext.survivors.size());
        add("[12,5] classes of minimum weight 6", 3, w6);
        add("[12,5] classes of minimum weight 4", 4, w4);

        if (!f.reps.empty()) archive_check(r3);
    }
    if (!f.reps.empty()) archive_check(r4);

    size_t name_w = 0, exp_w = 8, got_w = 8;
    for (const auto& r : rows) {
        name_w = std::max(name_w, r.name.size());
        exp_w = std::max(exp_w, r.expected.size());
        got_w = std::max(got_w, r.computed.size());
    }
    std::printf("%-*s  %*s  %*s\n", int(name_w), "check", int(exp_w), "expected",
                int(got_w), "computed");
    size_t failures = 0;
    for (const auto& r : rows) {
        std::printf("%-*s  %*s  %*s  %s\n", int(name_w), r.name.c_str(), int(exp_w),
                    r.expected.c_str(), int(got_w), r.computed.c_str(),
                    r.ok ? "ok" : "MISMATCH");
        failures += !r.ok;
    }
    if (failures) {
        std::printf("\n%zu check(s) failed:\n", failures);
        for (const auto& r : rows)
            if (!r.ok)
                std::printf("  %s: expected %s, computed %s\n", r.name.c_str(),
                            r.expected.c_str(), r.computed.c_str());
        return kExitMismatch;
    }
    std::printf("\nall %zu checks passed\n", rows.size());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ternary linear code classification toolkit"};
    app.require_subcommand(1);

    ClassifyFlags cf;
    auto* c10 = app.add_subcommand(
        "classify10", "enumerate and classify [10,5,3] or [10,5,4] codes");
    c10->add_option("--min-weight", cf.min_weight, "target minimum weight (3 or 4)")
        ->required();
    c10->add_option("--out", cf.out, "output directory (default: $TCC_OUT)");
    c10->add_option("--threads", cf.threads, "worker threads (0 = all cores)");
    c10->add_flag("--resume", cf.resume, "reuse existing branch checkpoints");

    ExtendFlags ef;
    auto* ext = app.add_subcommand(
        "extend", "extend [10,5] representatives by two columns and classify the "
                  "[12,5] codes that satisfy the tail conditions");
    ext->add_option("--reps", ef.reps,
                    "directory holding the [10,5,3] and [10,5,4] outputs");
    ext->add_flag("--fixtures-only", ef.fixtures_only,
                  "extend only the built-in [10,5,5] code");
    ext->add_option("--out", ef.out, "output directory (default: $TCC_OUT)");

    AnalyzeFlags af;
    auto* ana = app.add_subcommand(
        "analyze", "report weight enumerators, self-duality, and design strength "
                   "for codes in an archive");
    ana->add_option("codes,--codes", af.codes, "generator-matrix archive to read")->required();
    ana->add_option("--out", af.out,
                    "output directory (default: $TCC_OUT; otherwise prints to stdout)");

    VerifyFlags vf;
    auto* ver = app.add_subcommand(
        "verify", "recompute the classification and compare against its reference counts");
    auto* q = ver->add_flag("--quick", vf.quick,
                            "verify the [10,5,4] pipeline and the built-in extension");
    ver->add_flag("--full", vf.full, "also verify the [10,5,3] pipeline and the [12,5] classification")
        ->excludes(q);
    ver->add_option("--reps", vf.reps,
                    "compare stored representative archives against the recomputation");
    ver->add_option("--threads", vf.threads, "worker threads (0 = all cores)");

    std::string command = join_args(argc, argv);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (c10->parsed()) return cmd_classify10(cf, command);
        if (ext->parsed()) return cmd_extend(ef, command);
        if (ana->parsed()) return cmd_analyze(af, command);
        if (ver->parsed()) {
            if (!vf.quick && !vf.full)
                throw std::invalid_argument("pass --quick or --full");
            return cmd_verify(vf);
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    }
    return kExitUsage;
}
