#include "tcc/classify10.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace tcc {

namespace {

using json = nlohmann::json;

// (e_s | r) packed over 10 columns: unit digit at column s, r at columns 6..10.
gf3::Packed pack_search_row(size_t s, const gf3::Vec& r) {
    gf3::Packed p{0, 0};
    p.lo = static_cast<uint16_t>(1u << (s - 1));
    for (size_t j = 0; j < 5; ++j) {
        int digit = r[j];
        if (digit == 1) p.lo |= static_cast<uint16_t>(1u << (5 + j));
        else if (digit == 2) p.hi |= static_cast<uint16_t>(1u << (5 + j));
    }
    return p;
}

int two_row_min_weight(gf3::Packed u, gf3::Packed v) {
    int m = 99;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == 0 && b == 0) continue;
            m = std::min(m, (u.scaled(a) + v.scaled(b)).weight());
        }
    return m;
}

// out = prev ++ (prev+v) ++ (prev-v); false as soon as a new word has weight < d.
// hist, when given, accumulates the new words' weights.
bool extend_words(const std::vector<gf3::Packed>& prev, gf3::Packed v, int d,
                  std::vector<gf3::Packed>& out, uint32_t* hist) {
    const size_t m = prev.size();
    out.resize(3 * m);
    std::copy(prev.begin(), prev.end(), out.begin());
    const gf3::Packed nv = v.negated();
    for (size_t i = 0; i < m; ++i) {
        const gf3::Packed a = prev[i] + v;
        const int wa = a.weight();
        if (wa < d) return false;
        const gf3::Packed b = prev[i] + nv;
        const int wb = b.weight();
        if (wb < d) return false;
        out[m + i] = a;
        out[2 * m + i] = b;
        if (hist) {
            ++hist[wa];
            ++hist[wb];
        }
    }
    return true;
}

// 10 low bits of v spread to even positions.
std::array<uint32_t, 1024> make_spread_table() {
    std::array<uint32_t, 1024> t{};
    for (uint32_t v = 0; v < 1024; ++v) {
        uint32_t r = 0;
        for (int j = 0; j < 10; ++j)
            if (v >> j & 1) r |= 1u << (2 * j);
        t[v] = r;
    }
    return t;
}

const std::array<uint32_t, 1024> kSpread = make_spread_table();

// visit(i3, i4, i5, words, hist): one call per accepted matrix, with the full
// 243-word table of the resulting code and its weight histogram.
template <class Visit>
void scan_branch(const SearchConfig& cfg, const XSets& xs, size_t branch, Visit&& visit) {
    const int d = cfg.target_d;
    const size_t n1 = xs.x1.size();

    std::vector<gf3::Packed> p3(n1), p4(n1), p5(n1);
    for (size_t i = 0; i < n1; ++i) {
        p3[i] = pack_search_row(3, xs.x1[i]);
        p4[i] = pack_search_row(4, xs.x1[i]);
        p5[i] = pack_search_row(5, xs.x1[i]);
    }

    const gf3::Packed v1 = pack_search_row(1, cfg.r1);
    const std::vector<gf3::Packed> c1{gf3::Packed{0, 0}, v1, v1.negated()};
    std::array<uint32_t, 11> h1{};
    h1[0] = 1;
    h1[v1.weight()] += 2;

    std::vector<gf3::Packed> c2, c3, c4, c5;
    c2.reserve(9);
    c3.reserve(27);
    c4.reserve(81);
    c5.reserve(243);
    std::array<uint32_t, 11> h2, h3, h4, h5;

    h2 = h1;
    if (!extend_words(c1, pack_search_row(2, xs.x2[branch]), d, c2, h2.data()))
        return;  // unreachable: X2 rows already satisfy the two-row condition

    for (size_t i3 = 0; i3 < n1; ++i3) {
        h3 = h2;
        if (!extend_words(c2, p3[i3], d, c3, h3.data())) continue;
        for (size_t i4 = i3 + 1; i4 < n1; ++i4) {
            h4 = h3;
            if (!extend_words(c3, p4[i4], d, c4, h4.data())) continue;
            for (size_t i5 = i4 + 1; i5 < n1; ++i5) {
                h5 = h4;
                if (!extend_words(c4, p5[i5], d, c5, h5.data())) continue;
                visit(i3, i4, i5, c5, h5);
            }
        }
    }
}

CodeDigraph digraph_from_words(const std::vector<gf3::Packed>& words) {
    CodeDigraph g;
    g.n = 10;
    g.k = 5;
    g.codeword_arcs.reserve(words.size() - 1);
    g.codeword_weight.reserve(words.size() - 1);
    for (const auto& w : words) {
        if (w.is_zero()) continue;
        g.codeword_arcs.push_back(kSpread[w.lo] | (kSpread[w.hi] << 1));
        g.codeword_weight.push_back(w.weight());
    }
    return g;
}

std::string we_string(const std::array<uint32_t, 11>& h) {
    WeightEnumerator we;
    we.coeffs.assign(h.begin(), h.end());
    return we.str();
}

// one branch's classes: weight-enumerator text -> certificate -> lex-min matrix text
struct BranchResult {
    uint64_t matrix_count = 0;
    std::map<std::string, std::map<std::string, std::string>> classes;

    // flat (we, a) rows in deterministic order, certificates dropped
    std::vector<std::pair<std::string, std::string>> rows() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [we, bucket] : classes)
            for (const auto& [cert, a] : bucket) out.emplace_back(we, a);
        return out;
    }
};

BranchResult run_branch(const SearchConfig& cfg, const XSets& xs, size_t branch) {
    BranchResult res;
    std::string a_prefix = cfg.r1.str() + xs.x2[branch].str();
    std::vector<std::string> x1s(xs.x1.size());
    for (size_t i = 0; i < xs.x1.size(); ++i) x1s[i] = xs.x1[i].str();

    scan_branch(cfg, xs, branch,
                [&](size_t i3, size_t i4, size_t i5, const std::vector<gf3::Packed>& words,
                    const std::array<uint32_t, 11>& hist) {
                    ++res.matrix_count;
                    CanonicalCert cert = canonical_cert(digraph_from_words(words));
                    std::string cert_key(cert.bytes.begin(), cert.bytes.end());
                    std::string a = a_prefix + x1s[i3] + x1s[i4] + x1s[i5];
                    auto& bucket = res.classes[we_string(hist)];
                    auto [it, inserted] = bucket.try_emplace(std::move(cert_key), a);
                    if (!inserted && a < it->second) it->second = std::move(a);
                });
    return res;
}

std::filesystem::path checkpoint_path(const std::string& dir, int d, size_t branch) {
    char name[48];
    std::snprintf(name, sizeof name, "branch-d%d-%02zu.json", d, branch);
    return std::filesystem::path(dir) / name;
}

void write_checkpoint(const std::string& dir, const SearchConfig& cfg, const XSets& xs,
                      size_t branch, const BranchResult& res) {
    json rows = json::array();
    for (const auto& [we, a] : res.rows()) rows.push_back({{"we", we}, {"a", a}});
    json doc = {{"format", 1},
                {"target_d", cfg.target_d},
                {"branch", branch},
                {"r2", xs.x2[branch].str()},
                {"matrix_count", res.matrix_count},
                {"classes", std::move(rows)}};

    std::filesystem::path path = checkpoint_path(dir, cfg.target_d, branch);
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
        out << doc.dump(1) << '\n';
        if (!out.flush()) throw std::runtime_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

// (we, a) rows restored from a completed branch checkpoint, or nullopt
std::optional<std::pair<uint64_t, std::vector<std::pair<std::string, std::string>>>>
load_checkpoint(const std::string& dir, const SearchConfig& cfg, const XSets& xs, size_t branch) {
    std::filesystem::path path = checkpoint_path(dir, cfg.target_d, branch);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    json doc;
    try {
        in >> doc;
        if (doc.at("format") != 1 || doc.at("target_d") != cfg.target_d ||
            doc.at("branch") != branch || doc.at("r2") != xs.x2[branch].str())
            return std::nullopt;
        std::vector<std::pair<std::string, std::string>> rows;
        for (const auto& row : doc.at("classes"))
            rows.emplace_back(row.at("we").get<std::string>(), row.at("a").get<std::string>());
        return std::make_pair(doc.at("matrix_count").get<uint64_t>(), std::move(rows));
    } catch (const json::exception&) {
        return std::nullopt;  // partial or corrupt file: recompute the branch
    }
}

LinearCode code_from_a_string(const std::string& a) {
    if (a.size() != 25) throw std::invalid_argument("matrix text must have 25 digits");
    std::vector<std::string> rows;
    for (size_t i = 0; i < 5; ++i) {
        std::string row(10, '0');
        row[i] = '1';
        row.replace(5, 5, a.substr(5 * i, 5));
        rows.push_back(row);
    }
    return LinearCode::parse(rows);
}

CodeClass make_class(LinearCode rep, WeightEnumerator we, CanonicalCert cert,
                     uint64_t aut_order) {
    CodeClass cls{std::move(rep), std::move(we), std::move(cert), aut_order, false, {}};
    cls.formally_self_dual = cls.rep.is_formally_self_dual();
    cls.design = design_strength(cls.rep);
    return cls;
}

std::string generator_text(const LinearCode& c) {
    std::string s;
    for (const auto& row : c.row_strings()) s += row;
    return s;
}

}  // namespace

SearchConfig SearchConfig::for_min_weight(int d) {
    SearchConfig cfg;
    cfg.target_d = d;
    if (d == 3) cfg.r1 = gf3::Vec{0, 0, 0, 1, 1};
    else if (d == 4) cfg.r1 = gf3::Vec{0, 0, 1, 1, 1};
    else throw std::invalid_argument("search supports minimum weight 3 or 4 only");
    return cfg;
}

XSets build_x_sets(const SearchConfig& cfg) {
    if (cfg.target_d != 3 && cfg.target_d != 4)
        throw std::invalid_argument("search supports minimum weight 3 or 4 only");
    const int min_row_weight = cfg.target_d - 1;
    const gf3::Packed v1 = pack_search_row(1, cfg.r1);

    XSets xs;
    for (int v = 1; v < 243; ++v) {
        gf3::Vec x(5);
        int first = -1, weight = 0;
        for (int j = 0, q = v; j < 5; ++j) {
            int digit = q / 81;
            q = q % 81 * 3;
            x.set(j, digit);
            if (digit != 0) {
                if (first < 0) first = digit;
                ++weight;
            }
        }
        if (first != 1 || weight < min_row_weight) continue;
        if (two_row_min_weight(v1, pack_search_row(2, x)) != cfg.target_d) continue;
        xs.x1.push_back(x);

        bool ordered = cfg.target_d == 3
                           ? x[0] <= x[1] && x[1] <= x[2] && x[2] <= 1 && x[3] <= x[4]
                           : x[0] <= x[1] && x[1] <= 1 && x[2] <= x[3] && x[3] <= x[4];
        if (ordered) xs.x2.push_back(x);
    }
    return xs;
}

void enumerate_matrices(const SearchConfig& cfg,
                        const std::function<void(const gf3::Mat&)>& fn) {
    XSets xs = build_x_sets(cfg);
    for (size_t branch = 0; branch < xs.x2.size(); ++branch) {
        scan_branch(cfg, xs, branch,
                    [&](size_t i3, size_t i4, size_t i5, const std::vector<gf3::Packed>&,
                        const std::array<uint32_t, 11>&) {
                        fn(gf3::Mat(std::vector<gf3::Vec>{cfg.r1, xs.x2[branch], xs.x1[i3],
                                                          xs.x1[i4], xs.x1[i5]}));
                    });
    }
}

gf3::Mat CodeClass::a_matrix() const {
    const gf3::Mat& g = rep.generator();
    if (g.row_count() != 5 || g.col_count() != 10)
        throw std::logic_error("representative is not in (I5 | A) form");
    std::vector<gf3::Vec> rows;
    for (size_t i = 0; i < 5; ++i) {
        gf3::Vec r(5);
        for (size_t j = 0; j < 5; ++j) {
            if (g.at(i, j) != (i == j ? 1 : 0))
                throw std::logic_error("representative is not in (I5 | A) form");
            r.set(j, g.at(i, 5 + j));
        }
        rows.push_back(r);
    }
    return gf3::Mat(rows);
}

std::string CodeClass::a_string() const {
    gf3::Mat a = a_matrix();
    std::string s;
    for (size_t i = 0; i < 5; ++i) s += a.row(i).str();
    return s;
}

ClassificationResult classify10(const SearchConfig& cfg, const ClassifyOptions& opts) {
    XSets xs = build_x_sets(cfg);
    const size_t branches = xs.x2.size();
    if (!opts.checkpoint_dir.empty()) std::filesystem::create_directories(opts.checkpoint_dir);

    // (we, a) per branch; certificates are recomputed at merge time
    std::vector<uint64_t> counts(branches, 0);
    std::vector<std::vector<std::pair<std::string, std::string>>> rows(branches);

    unsigned nthreads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    nthreads = std::max(1u, std::min<unsigned>(nthreads, branches));

    std::atomic<size_t> next{0};
    std::mutex mu;
    std::exception_ptr failure;

    auto worker = [&]() {
        while (true) {
            size_t b = next.fetch_add(1);
            if (b >= branches) return;
            try {
                if (!opts.checkpoint_dir.empty()) {
                    if (auto saved = load_checkpoint(opts.checkpoint_dir, cfg, xs, b)) {
                        counts[b] = saved->first;
                        rows[b] = std::move(saved->second);
                        if (opts.on_branch_done) {
                            std::lock_guard<std::mutex> lk(mu);
                            opts.on_branch_done(b, counts[b]);
                        }
                        continue;
                    }
                }
                BranchResult res = run_branch(cfg, xs, b);
                if (!opts.checkpoint_dir.empty())
                    write_checkpoint(opts.checkpoint_dir, cfg, xs, b, res);
                counts[b] = res.matrix_count;
                rows[b] = res.rows();
                if (opts.on_branch_done) {
                    std::lock_guard<std::mutex> lk(mu);
                    opts.on_branch_done(b, counts[b]);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lk(mu);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    // merge: recompute certificates of branch representatives, keep lex-min matrix
    struct Entry {
        std::string a;
        CanonicalCert cert;
        WeightEnumerator we;
    };
    std::map<std::vector<uint32_t>, std::map<std::string, Entry>> global;

    ClassificationResult result;
    result.target_d = cfg.target_d;
    for (size_t b = 0; b < branches; ++b) {
        result.matrix_count += counts[b];
        for (auto& [we_text, a] : rows[b]) {
            LinearCode code = code_from_a_string(a);
            WeightEnumerator we = code.hamming_we();
            if (we.str() != we_text)
                throw std::runtime_error("checkpoint weight enumerator mismatch for " + a);
            CanonicalCert cert = canonical_cert(gamma(code));
            std::string cert_key(cert.bytes.begin(), cert.bytes.end());
            auto& bucket = global[we.coeffs];
            auto it = bucket.find(cert_key);
            if (it == bucket.end())
                bucket.emplace(std::move(cert_key), Entry{a, std::move(cert), std::move(we)});
            else if (a < it->second.a)
                it->second.a = a;
        }
    }

    result.we_class_count = global.size();
    for (auto& [coeffs, bucket] : global) {
        for (auto& [key, entry] : bucket) {
            LinearCode rep = code_from_a_string(entry.a);
            uint64_t aut = canonicalize(gamma(rep)).group_order;
            result.classes.push_back(
                make_class(std::move(rep), std::move(entry.we), std::move(entry.cert), aut));
        }
    }
    std::sort(result.classes.begin(), result.classes.end(),
              [](const CodeClass& x, const CodeClass& y) {
                  if (x.we.coeffs != y.we.coeffs) return x.we.coeffs < y.we.coeffs;
                  return generator_text(x.rep) < generator_text(y.rep);
              });
    return result;
}

ClassificationResult classify_codes(const std::vector<LinearCode>& codes) {
    if (codes.empty()) throw std::invalid_argument("nothing to classify");
    for (const auto& c : codes)
        if (c.n() != codes[0].n() || c.k() != codes[0].k())
            throw std::invalid_argument("codes must share length and dimension");

    struct Entry {
        size_t index;
        std::string text;
        CanonicalCert cert;
    };
    std::map<std::vector<uint32_t>, std::map<std::string, Entry>> global;
    for (size_t i = 0; i < codes.size(); ++i) {
        WeightEnumerator we = codes[i].hamming_we();
        CanonicalCert cert = canonical_cert(gamma(codes[i]));
        std::string cert_key(cert.bytes.begin(), cert.bytes.end());
        std::string text = generator_text(codes[i]);
        auto& bucket = global[we.coeffs];
        auto it = bucket.find(cert_key);
        if (it == bucket.end())
            bucket.emplace(std::move(cert_key), Entry{i, std::move(text), std::move(cert)});
        else if (text < it->second.text) {
            it->second.index = i;
            it->second.text = std::move(text);
        }
    }

    ClassificationResult result;
    result.matrix_count = codes.size();
    result.we_class_count = global.size();
    for (auto& [coeffs, bucket] : global) {
        for (auto& [key, entry] : bucket) {
            const LinearCode& rep = codes[entry.index];
            uint64_t aut = canonicalize(gamma(rep)).group_order;
            result.classes.push_back(
                make_class(rep, rep.hamming_we(), std::move(entry.cert), aut));
        }
    }
    std::sort(result.classes.begin(), result.classes.end(),
              [](const CodeClass& x, const CodeClass& y) {
                  if (x.we.coeffs != y.we.coeffs) return x.we.coeffs < y.we.coeffs;
                  return generator_text(x.rep) < generator_text(y.rep);
              });
    return result;
}

}  // namespace tcc
