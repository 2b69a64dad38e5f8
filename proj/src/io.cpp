#include "tcc/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tcc/equivalence.hpp"

namespace tcc::io {

namespace {

std::string trimmed(const std::string& line) {
    size_t b = line.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = line.find_last_not_of(" \t\r\n");
    return line.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(const std::string& name, size_t line, const std::string& msg) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + msg);
}

nlohmann::ordered_json design_json(const DesignReport& d) {
    nlohmann::ordered_json j;
    j["block_count"] = d.blocks.size();
    j["block_size"] = d.block_size;
    j["max_t"] = d.max_t;
    auto lam = nlohmann::ordered_json::array();
    for (int t = 1; t <= d.max_t; ++t) lam.push_back(d.lambda[size_t(t)]);
    j["lambda"] = lam;  // lambda_t for t = 1..max_t
    return j;
}

nlohmann::ordered_json refined_json(const RefinedWeightEnumerator& r) {
    nlohmann::ordered_json j;
    j["text"] = r.str();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& t : r.terms())
        terms.push_back({t[0], t[1], t[2], t[3]});  // [w, n1, n2, coefficient]
    j["terms"] = terms;
    return j;
}

}  // namespace

std::vector<LinearCode> read_codes(std::istream& in, const std::string& name) {
    std::vector<LinearCode> out;
    std::vector<std::string> rows;
    size_t record_line = 0;  // line of the first row in the current record

    auto flush = [&](size_t line) {
        try {
            out.push_back(LinearCode::parse(rows));
        } catch (const std::exception& e) {
            parse_fail(name, line, e.what());
        }
        rows.clear();
    };

    std::string raw;
    size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trimmed(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line == "%") {
            if (rows.empty()) parse_fail(name, lineno, "separator with no preceding code");
            flush(record_line);
            continue;
        }
        if (line.find_first_not_of("012") != std::string::npos)
            parse_fail(name, lineno, "expected a row of digits 0/1/2, got \"" + line + "\"");
        if (rows.empty())
            record_line = lineno;
        else if (line.size() != rows.front().size())
            parse_fail(name, lineno,
                       "row length " + std::to_string(line.size()) + " differs from " +
                           std::to_string(rows.front().size()));
        rows.push_back(line);
    }
    if (in.bad()) throw std::runtime_error(name + ": read failure");
    if (!rows.empty()) flush(record_line);
    return out;
}

std::vector<LinearCode> read_codes_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_codes(in, path.string());
}

std::string codes_text(const std::vector<LinearCode>& codes, const std::string& header) {
    std::ostringstream out;
    if (!header.empty()) {
        std::istringstream hs(header);
        std::string hline;
        while (std::getline(hs, hline)) out << "# " << hline << "\n";
    }
    for (size_t i = 0; i < codes.size(); ++i) {
        if (i) out << "%\n";
        for (const auto& row : codes[i].row_strings()) out << row << "\n";
    }
    return out.str();
}

void write_codes_file(const std::filesystem::path& path,
                      const std::vector<LinearCode>& codes, const std::string& header) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << codes_text(codes, header);
    if (!out.flush()) throw std::runtime_error("write failure on " + path.string());
}

std::string reps_file_name(int target_d) {
    return "reps-10-5-" + std::to_string(target_d) + ".codes";
}

std::string classification_summary_name(int target_d) {
    return "summary-10-5-" + std::to_string(target_d) + ".json";
}

nlohmann::ordered_json classification_summary(const ClassificationResult& r) {
    nlohmann::ordered_json j;
    j["kind"] = "classification";
    j["length"] = 10;
    j["dimension"] = 5;
    j["min_weight"] = r.target_d;
    j["matrix_count"] = r.matrix_count;
    j["weight_enumerator_class_count"] = r.we_class_count;
    j["class_count"] = r.class_count();

    size_t fsd = 0;
    std::map<int, size_t> strength;
    for (const auto& c : r.classes) {
        fsd += c.formally_self_dual;
        ++strength[c.design.max_t];
    }
    j["formally_self_dual_count"] = fsd;
    auto hist = nlohmann::ordered_json::object();
    for (const auto& [t, count] : strength) hist[std::to_string(t)] = count;
    j["design_strength_counts"] = hist;

    auto classes = nlohmann::ordered_json::array();
    for (size_t i = 0; i < r.classes.size(); ++i) {
        const auto& c = r.classes[i];
        nlohmann::ordered_json e;
        e["index"] = i;
        e["a"] = c.a_string();
        e["weight_enumerator"] = c.we.str();
        e["automorphism_order"] = c.aut_order;
        e["formally_self_dual"] = c.formally_self_dual;
        e["design"] = design_json(c.design);
        e["cert_sha256"] = sha256_hex(
            {reinterpret_cast<const char*>(c.cert.bytes.data()), c.cert.bytes.size()});
        classes.push_back(std::move(e));
    }
    j["classes"] = classes;
    return j;
}

nlohmann::ordered_json extension_summary(const Extend12Result& r) {
    nlohmann::ordered_json j;
    j["kind"] = "extension";
    j["length"] = 12;
    j["dimension"] = 5;
    j["survivor_count"] = r.survivors.size();
    auto c1 = nlohmann::ordered_json::object();
    c1["from_min_weight_5"] = r.d5_c1_classes;
    c1["from_min_weight_4"] = r.d4_c1_classes;
    c1["from_min_weight_3"] = r.d3_c1_classes;
    j["source_classes_with_c1_extensions"] = c1;
    auto c13 = nlohmann::ordered_json::object();
    c13["from_min_weight_5"] = r.d5_c1_classes;  // c3 is vacuous at min weight 6
    c13["from_min_weight_4"] = r.d4_c1c3_classes;
    c13["from_min_weight_3"] = r.d3_c1c3_classes;
    j["source_classes_with_c1_c3_extensions"] = c13;

    auto codes = nlohmann::ordered_json::array();
    for (size_t i = 0; i < r.survivors.size(); ++i) {
        const auto& s = r.survivors[i];
        nlohmann::ordered_json e;
        e["index"] = i;
        e["generator"] = s.code.row_strings();
        e["min_weight"] = s.min_weight;
        e["source_min_weight"] = s.source_d;
        e["punctured_class_sha256"] =
            sha256_hex({reinterpret_cast<const char*>(s.punctured_cert.bytes.data()),
                        s.punctured_cert.bytes.size()});
        e["refined_weight_enumerator"] = refined_json(s.refined);
        e["sz_class_size"] = s.sz_class_size;
        codes.push_back(std::move(e));
    }
    j["codes"] = codes;
    return j;
}

nlohmann::ordered_json analysis_summary(const std::vector<LinearCode>& codes) {
    nlohmann::ordered_json j;
    j["kind"] = "analysis";
    j["code_count"] = codes.size();

    PropertyTally tally = tally_properties(codes);
    j["formally_self_dual_count"] = tally.formally_self_dual;
    auto hist = nlohmann::ordered_json::object();
    for (const auto& [t, count] : tally.design_strength_histogram)
        hist[std::to_string(t)] = count;
    j["design_strength_counts"] = hist;

    auto rows = nlohmann::ordered_json::array();
    for (size_t i = 0; i < codes.size(); ++i) {
        const auto& c = codes[i];
        nlohmann::ordered_json e;
        e["index"] = i;
        e["length"] = c.n();
        e["dimension"] = c.k();
        e["generator"] = c.row_strings();
        e["min_weight"] = c.min_weight();
        e["weight_enumerator"] = c.hamming_we().str();
        e["formally_self_dual"] = c.is_formally_self_dual();
        e["design"] = design_json(design_strength(c));
        if (c.n() == 12 && c.k() == 5) e["refined_weight_enumerator"] = refined_json(refined_we(c));
        rows.push_back(std::move(e));
    }
    j["codes"] = rows;
    return j;
}

void write_json_file(const std::filesystem::path& path, const nlohmann::ordered_json& doc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << doc.dump(2) << "\n";
    if (!out.flush()) throw std::runtime_error("write failure on " + path.string());
}

nlohmann::ordered_json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    try {
        return nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void write_classification_outputs(const std::filesystem::path& dir,
                                  const ClassificationResult& r) {
    std::vector<LinearCode> reps;
    reps.reserve(r.classes.size());
    for (const auto& c : r.classes) reps.push_back(c.rep);
    write_codes_file(dir / reps_file_name(r.target_d), reps,
                     "[10,5," + std::to_string(r.target_d) +
                         "] representatives, one per monomial-equivalence class");
    write_json_file(dir / classification_summary_name(r.target_d), classification_summary(r));
}

void write_extension_outputs(const std::filesystem::path& dir, const Extend12Result& r) {
    std::vector<LinearCode> codes;
    codes.reserve(r.survivors.size());
    for (const auto& s : r.survivors) codes.push_back(s.code);
    write_codes_file(dir / "survivors-12-5.codes", codes,
                     "[12,5] representatives, one per SZ-equivalence class");
    write_json_file(dir / "summary-12-5.json", extension_summary(r));
}

ClassificationResult load_classification(const std::filesystem::path& dir, int target_d) {
    auto reps_path = dir / reps_file_name(target_d);
    auto summary_path = dir / classification_summary_name(target_d);
    std::vector<LinearCode> reps = read_codes_file(reps_path);
    nlohmann::ordered_json summary = read_json_file(summary_path);

    ClassificationResult r;
    r.target_d = target_d;
    try {
        if (summary.at("min_weight").get<int>() != target_d)
            throw std::runtime_error(summary_path.string() + ": min_weight is not " +
                                     std::to_string(target_d));
        r.matrix_count = summary.at("matrix_count").get<uint64_t>();
        r.we_class_count = summary.at("weight_enumerator_class_count").get<size_t>();
        if (summary.at("class_count").get<size_t>() != reps.size())
            throw std::runtime_error("class_count " +
                                     summary.at("class_count").dump() + " but " +
                                     std::to_string(reps.size()) + " codes in " +
                                     reps_path.string());
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(summary_path.string() + ": " + e.what());
    }

    std::set<std::string> wes;
    std::set<std::vector<uint8_t>> certs;
    for (const auto& rep : reps) {
        CodeClass c;
        c.rep = rep;
        if (rep.min_weight() != target_d)
            throw std::runtime_error(reps_path.string() + ": stored code has minimum weight " +
                                     std::to_string(rep.min_weight()) + ", expected " +
                                     std::to_string(target_d));
        c.we = rep.hamming_we();
        CanonicalResult canon = canonicalize(gamma(rep));
        c.cert = canon.cert;
        c.aut_order = canon.group_order;
        c.formally_self_dual = rep.is_formally_self_dual();
        c.design = design_strength(rep);
        wes.insert(c.we.str());
        if (!certs.insert(c.cert.bytes).second)
            throw std::runtime_error(reps_path.string() + ": two stored codes are equivalent");
        r.classes.push_back(std::move(c));
    }
    if (wes.size() != r.we_class_count)
        throw std::runtime_error(reps_path.string() + ": " + std::to_string(wes.size()) +
                                 " distinct weight enumerators but summary says " +
                                 std::to_string(r.we_class_count));
    return r;
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("sha256 failure");
    std::string hex;
    hex.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        char buf[3];
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return hex;
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw std::runtime_error("read failure on " + path.string());
    return sha256_hex(buf.str());
}

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void RunManifest::add_output(const std::filesystem::path& dir, const std::string& rel) {
    outputs.emplace_back(rel, sha256_file(dir / rel));
}

nlohmann::ordered_json RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["version"] = version;
    j["started"] = started;
    j["finished"] = finished;
    j["config"] = config;
    j["counts"] = counts;
    auto outs = nlohmann::ordered_json::array();
    for (const auto& [rel, sha] : outputs) {
        nlohmann::ordered_json e;
        e["path"] = rel;
        e["sha256"] = sha;
        outs.push_back(std::move(e));
    }
    j["outputs"] = outs;
    return j;
}

}  // namespace tcc::io
