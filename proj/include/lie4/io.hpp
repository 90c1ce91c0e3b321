#pragma once

#include <openssl/evp.h>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

#include "complex_product.hpp"
#include "dictionaries.hpp"
#include "forms.hpp"
#include "replay.hpp"
#include "json.hpp"

namespace lie4 {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kFormatVersion = 1;

// ---------------------------------------------------------------------------
// Documents

namespace detail {

inline const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object() || !j.contains(key)) throw Error(Errc::Parse, path + ": missing field '" + key + "'");
    return j.at(key);
}

inline size_t index_field(const Json& j, const char* key, const std::string& path, size_t n) {
    const Json& v = field(j, key, path);
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<size_t>() >= n)
        throw Error(Errc::Parse, path + "." + key + ": expected an index below " + std::to_string(n));
    return v.get<size_t>();
}

inline Q rational_field(const Json& v, const std::string& path) {
    if (!v.is_string()) throw Error(Errc::Parse, path + ": rationals are strings like \"-3/4\"");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
        throw Error(Errc::Parse, path + ": " + e.what());
    }
}

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(Errc::Parse, std::string("invalid JSON: ") + e.what());
    }
}

inline void check_version(const Json& j) {
    const Json& v = field(j, "format_version", "document");
    if (!v.is_number_integer() || v.get<int>() != kFormatVersion)
        throw Error(Errc::Parse, "document.format_version: expected " + std::to_string(kFormatVersion));
}

}  // namespace detail

inline LieAlgebra algebra_from_json(const Json& j) {
    detail::check_version(j);
    const Json& d = detail::field(j, "dim", "document");
    if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 4)
        throw Error(Errc::Parse, "document.dim: expected 1..4");
    size_t n = d.get<size_t>();
    std::vector<std::string> labels;
    if (j.contains("basis")) {
        const Json& b = j.at("basis");
        if (!b.is_array() || b.size() != n) throw Error(Errc::Parse, "document.basis: expected " + std::to_string(n) + " labels");
        for (auto& l : b) {
            if (!l.is_string()) throw Error(Errc::Parse, "document.basis: labels are strings");
            labels.push_back(l.get<std::string>());
        }
    }
    const Json& br = detail::field(j, "brackets", "document");
    if (!br.is_array()) throw Error(Errc::Parse, "document.brackets: expected an array");
    std::vector<BracketEntry> entries;
    std::set<std::pair<size_t, size_t>> seen;
    for (size_t k = 0; k < br.size(); ++k) {
        std::string path = "brackets[" + std::to_string(k) + "]";
        size_t i = detail::index_field(br[k], "i", path, n);
        size_t jj = detail::index_field(br[k], "j", path, n);
        if (i >= jj) throw Error(Errc::Parse, path + ": need i < j");
        if (!seen.insert({i, jj}).second) throw Error(Errc::Parse, path + ": duplicate pair");
        const Json& c = detail::field(br[k], "coeffs", path);
        if (!c.is_object()) throw Error(Errc::Parse, path + ".coeffs: expected an object index -> rational");
        Vec v = zeros(n);
        for (auto& [key, val] : c.items()) {
            std::string p = path + ".coeffs." + key;
            if (!detail::is_digits(key) || (key.size() > 1 && key[0] == '0') || std::stoul(key) >= n)
                throw Error(Errc::Parse, p + ": key must be an index below " + std::to_string(n));
            v[std::stoul(key)] = detail::rational_field(val, p);
        }
        entries.push_back({i, jj, v});
    }
    return LieAlgebra(n, entries, labels);
}

inline LieAlgebra parse_algebra(const std::string& text) { return algebra_from_json(detail::parse_json(text)); }

inline Json algebra_to_json(const LieAlgebra& g) {
    size_t n = g.dim();
    Json j;
    j["format_version"] = kFormatVersion;
    j["dim"] = n;
    j["basis"] = g.labels();
    Json br = Json::array();
    for (size_t i = 0; i < n; ++i)
        for (size_t k = i + 1; k < n; ++k) {
            Vec c = g.basis_bracket(i, k);
            if (is_zero(c)) continue;
            Json co = Json::object();
            for (size_t m = 0; m < n; ++m)
                if (c[m] != 0) co[std::to_string(m)] = to_string(c[m]);
            br.push_back({{"i", i}, {"j", k}, {"coeffs", co}});
        }
    j["brackets"] = br;
    return j;
}

inline std::string emit_algebra(const LieAlgebra& g) { return algebra_to_json(g).dump(2) + "\n"; }

// {"format_version": 1, "matrices": [[["1", "0"], ["0", "0"]], ...]}
inline std::vector<Mat> parse_matrices(const std::string& text) {
    Json j = detail::parse_json(text);
    detail::check_version(j);
    const Json& ms = detail::field(j, "matrices", "document");
    if (!ms.is_array() || ms.empty()) throw Error(Errc::Parse, "document.matrices: expected a nonempty array");
    std::vector<Mat> out;
    for (size_t k = 0; k < ms.size(); ++k) {
        std::string path = "matrices[" + std::to_string(k) + "]";
        const Json& rows = ms[k];
        if (!rows.is_array() || rows.empty()) throw Error(Errc::Parse, path + ": expected rows");
        size_t m = rows.size();
        Mat a(m, m);
        for (size_t r = 0; r < m; ++r) {
            if (!rows[r].is_array() || rows[r].size() != m) throw Error(Errc::Parse, path + ": matrix must be square");
            for (size_t c = 0; c < m; ++c)
                a(r, c) = detail::rational_field(rows[r][c], path + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
        }
        out.push_back(a);
    }
    return out;
}

inline Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

inline Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (auto& q : v) a.push_back(to_string(q));
    return a;
}

inline Json vecs_to_json(const std::vector<Vec>& vs) {
    Json a = Json::array();
    for (auto& v : vs) a.push_back(vec_to_json(v));
    return a;
}

// ---------------------------------------------------------------------------
// Digest and parallel map

inline std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw Error(Errc::InternalMismatch, "SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

// LIE4_THREADS caps parallelism; default is the hardware count.
inline size_t thread_count() {
    if (const char* s = std::getenv("LIE4_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && *end == 0 && v > 0) return static_cast<size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Results land in input order whatever the scheduling.
template <class T, class Fn>
std::vector<T> parallel_map(size_t n, Fn fn, size_t threads) {
    std::vector<std::optional<T>> slots(n);
    std::vector<std::exception_ptr> errs(n);
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i; (i = next++) < n;) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
    };
    threads = std::max<size_t>(1, std::min(threads, n));
    std::vector<std::thread> pool;
    for (size_t t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    std::vector<T> out;
    for (size_t i = 0; i < n; ++i) {
        if (errs[i]) std::rethrow_exception(errs[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Table registry and reports

inline const std::vector<std::string>& table_names() {
    static const std::vector<std::string> t = {"comm", "pc", "13", "manin", "cps", "appendix1", "appendix2",
                                               "semidirect"};
    return t;
}

inline TableReport run_table(const std::string& name, bool recheck = false) {
    if (name == "comm") return verify_table_comm();
    if (name == "pc") return verify_table_pc(recheck);
    if (name == "13") return verify_table_13();
    if (name == "manin") return verify_table_manin();
    if (name == "cps") return verify_table_cps();
    if (name == "appendix1") return verify_table_appendix1();
    if (name == "appendix2") return verify_table_appendix2();
    if (name == "semidirect") return verify_semidirect_props();
    throw Error(Errc::UnknownName, "unknown table '" + name + "'");
}

inline std::vector<TableReport> run_tables(const std::vector<std::string>& names, size_t threads, bool recheck = false) {
    return parallel_map<TableReport>(names.size(), [&](size_t i) { return run_table(names[i], recheck); }, threads);
}

inline Json report_to_json(const std::vector<TableReport>& reps, const std::string& command, const std::string& input_digest,
                           std::optional<uint64_t> seed = std::nullopt) {
    Json j;
    j["tool"] = "lie4";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["input_sha256"] = input_digest;
    if (seed) j["seed"] = *seed;
    Json tables = Json::array();
    size_t pass = 0, fail = 0, errata = 0;
    for (auto& r : reps) {
        Json t;
        t["table"] = r.table;
        Json items = Json::array();
        for (auto& i : r.items) {
            Json it;
            it["name"] = i.id;
            it["status"] = i.ok ? "pass" : "fail";
            it["subject"] = i.subject;
            it["claim"] = i.claim;
            it["certificate"] = i.detail;
            if (!i.erratum.empty()) it["erratum"] = i.erratum;
            items.push_back(it);
        }
        t["counts"] = {{"pass", r.items.size() - r.failures()}, {"fail", r.failures()}, {"errata", r.errata()}};
        t["items"] = items;
        pass += r.items.size() - r.failures();
        fail += r.failures();
        errata += r.errata();
        tables.push_back(t);
    }
    j["tables"] = tables;
    j["counts"] = {{"pass", pass}, {"fail", fail}, {"errata", errata}};
    return j;
}

inline std::string report_to_text(const std::vector<TableReport>& reps) {
    std::string out;
    for (auto& r : reps) {
        out += "== " + r.table + "\n";
        for (auto& i : r.items) {
            out += std::string(i.ok ? "pass " : "FAIL ") + i.id + ": " + i.claim + " [" + i.detail + "]";
            if (!i.erratum.empty()) out += " erratum: " + i.erratum;
            out += "\n";
        }
        out += r.table + ": " + std::to_string(r.items.size() - r.failures()) + " pass, " +
               std::to_string(r.failures()) + " fail, " + std::to_string(r.errata()) + " errata\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Result payloads

inline Json classification_to_json(const ClassificationResult& r) {
    Json j;
    j["family"] = info(r.instance.family).tag;
    j["name"] = instance_name(r.instance);
    j["params"] = vec_to_json(r.instance.params);
    j["witness"] = mat_to_json(r.witness);
    j["verified"] = r.verified;
    if (!r.ideal.empty()) j["unimodular_ideal"] = r.ideal;
    return j;
}

inline Json certificate_to_json(const Certificate& c) {
    Json j;
    j["kind"] = cert_name(c.kind);
    j["scope"] = c.scope;
    if (c.kind == CertKind::ForcedVector) j["vector"] = vec_to_json(c.vector);
    if (c.kind == CertKind::Confinement) j["W"] = vecs_to_json(c.W);
    if (c.decomposition) {
        j["E"] = mat_to_json(c.decomposition->E);
        j["plus"] = vecs_to_json(c.decomposition->plus.vectors());
        j["minus"] = vecs_to_json(c.decomposition->minus.vectors());
        j["glyph"] = glyph(*c.decomposition);
    }
    Json cells = Json::array();
    for (auto& t : c.cells) {
        Json cj;
        cj["cell"] = t.cell;
        cj["status"] = status_name(t.status);
        cj["trace"] = t.trace;
        cells.push_back(cj);
    }
    if (!cells.empty()) j["cells"] = cells;
    return j;
}

inline Json search_to_json(const SearchResult& r) {
    Json j;
    j["type"] = kind_name(r.kind);
    j["status"] = search_status_name(r.status);
    j["certificate"] = certificate_to_json(r.cert);
    return j;
}

// ---------------------------------------------------------------------------
// Catalog export

namespace detail {

inline std::vector<std::string> param_names(Family f) {
    switch (info(f).arity) {
    case 0: return {};
    case 1: return {"lambda"};
    default: return {"mu", "lambda"};
    }
}

// Every structure constant is affine in the parameters, so three evaluations recover it.
inline std::string affine_coeff(const std::vector<Q>& at_units, const Q& at_zero, const std::vector<std::string>& names) {
    std::string s;
    auto term = [&](const Q& c, const std::string& x) {
        if (c == 0) return;
        std::string mag = abs(c) == 1 && !x.empty() ? x : to_string(abs(c)) + (x.empty() ? "" : "*" + x);
        if (s.empty()) s = (c < 0 ? "-" : "") + mag;
        else s += (c < 0 ? " - " : " + ") + mag;
    };
    term(at_zero, "");
    for (size_t k = 0; k < names.size(); ++k) term(at_units[k] - at_zero, names[k]);
    return s.empty() ? "0" : s;
}

}  // namespace detail

inline Json family_brackets_json(Family f) {
    size_t n = info(f).dim, a = info(f).arity;
    auto names = detail::param_names(f);
    auto g0 = make_raw(f, Vec(a, Q(0)));
    std::vector<LieAlgebra> gu;
    Vec ones(a, Q(1));
    for (size_t k = 0; k < a; ++k) gu.push_back(make_raw(f, unit(a, k)));
    // affinity check at (1, ..., 1)
    auto g1 = make_raw(f, ones);
    Json br = Json::array();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Json co = Json::object();
            for (size_t m = 0; m < n; ++m) {
                Q z = g0.basis_bracket(i, j)[m], sum = z;
                std::vector<Q> us;
                for (size_t k = 0; k < a; ++k) {
                    us.push_back(gu[k].basis_bracket(i, j)[m]);
                    sum += us.back() - z;
                }
                if (sum != g1.basis_bracket(i, j)[m])
                    throw Error(Errc::InternalMismatch, std::string(info(f).name) + " is not affine in its parameters");
                std::string c = detail::affine_coeff(us, z, names);
                if (c != "0") co[std::to_string(m)] = c;
            }
            if (!co.empty()) br.push_back({{"i", i}, {"j", j}, {"coeffs", co}});
        }
    return br;
}

inline Json catalog_to_json(std::optional<Family> only = std::nullopt) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["tool_version"] = kToolVersion;
    Json fams = Json::array();
    for (auto& fi : family_table()) {
        if (only && *only != fi.id) continue;
        Json f;
        f["id"] = fi.tag;
        f["name"] = fi.name;
        f["dim"] = fi.dim;
        f["params"] = detail::param_names(fi.id);
        f["constraint"] = fi.constraint;
        f["indecomposable"] = fi.indecomposable;
        if (fi.dim == 4) {
            Vec p(fi.arity, Q(1, 2));
            if (fi.id == Family::R4_mu_lambda) p = {Q(1, 3), Q(1, 2)};
            f["commutator_generic"] = comm_class_name(commutator_class(fi.id, p));
        }
        f["brackets"] = family_brackets_json(fi.id);
        Json ext = Json::array();
        for (auto& r : dictionary_rows())
            for (auto t : r.families)
                if (t == fi.id) ext.push_back(std::string(source_name(r.source)) + " " + r.series);
        f["external_names"] = ext;
        fams.push_back(f);
    }
    j["families"] = fams;
    if (!only) {
        Json d = Json::array();
        for (auto& r : dictionary_rows()) {
            Json row;
            row["source"] = source_name(r.source);
            row["series"] = r.series;
            row["arity"] = r.arity;
            if (*r.condition) row["condition"] = r.condition;
            row["target"] = r.target;
            Json fs = Json::array();
            for (auto t : r.families) fs.push_back(info(t).tag);
            row["families"] = fs;
            row["brackets_embedded"] = r.brackets;
            d.push_back(row);
        }
        j["dictionaries"] = d;
    }
    return j;
}

}  // namespace lie4
