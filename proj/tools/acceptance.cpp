// Acceptance run: one pass/fail line per criterion.
// Exit 0 iff every criterion passes, apart from the pinned known-unattainable set failing exactly as recorded.

#include <chrono>
#include <iostream>
#include <random>
#include <set>

#include "lie4/io.hpp"

using namespace lie4;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned thresholds.
constexpr size_t kMinGridInstances = 60;
constexpr double kCatalogSeconds = 1.0;
constexpr size_t kBasisChanges = 20;
constexpr double kRoundTripSeconds = 30.0;
constexpr double kSuiteSeconds = 120.0;
const std::vector<size_t> kThreadCounts = {1, 2, 8};

// Criteria that cannot pass, with the exact failing items expected.
const std::map<int, std::set<std::string>> kKnownUnattainable = {
    {11,
     {"cps/9/r'4,mu,lambda (1, 0)", "cps/9/r'4,mu,lambda (2, 1)", "cps/10/r'4,mu,lambda (1, 0)",
      "cps/10/r'4,mu,lambda (2, 1)"}},
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

struct Outcome {
    bool ok;
    std::string detail;
    std::set<std::string> failing;  // failing item ids for table criteria
};

Outcome from_table(const TableReport& r, const std::string& extra = "") {
    Outcome o{r.passed(), std::to_string(r.items.size()) + " items, " + std::to_string(r.failures()) + " fail, " +
                              std::to_string(r.errata()) + " errata" + extra,
              {}};
    for (auto& i : r.items)
        if (!i.ok) o.failing.insert(i.id);
    return o;
}

Mat random_invertible(std::mt19937_64& rng, size_t n) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
    for (;;) {
        Mat P(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) P(i, j) = make_q(num(rng), den(rng));
        if (det(P) != 0) return P;
    }
}

std::vector<Instance> all_grid() {
    auto g = grid3();
    auto g4 = grid();
    g.insert(g.end(), g4.begin(), g4.end());
    return g;
}

Outcome criterion1() {
    auto t = Clock::now();
    size_t n = 0, bad = 0;
    for (auto& in : all_grid()) {
        ++n;
        bad += !validate(make_raw(in.family, in.params)).empty() || !in_region(in.family, in.params);
    }
    double s = seconds_since(t);
    return {n >= kMinGridInstances && bad == 0 && s < kCatalogSeconds,
            std::to_string(n) + " instances, " + std::to_string(bad) + " invalid, " + fmt(s) + " (limit " +
                fmt(kCatalogSeconds) + ")",
            {}};
}

Outcome criterion2() {
    struct Case {
        const char* name;
        Instance in;
        size_t want;
    };
    std::vector<Case> cs = {{"e(2)", {Family::R3p_lambda, {0}}, 4},
                            {"e(1,1)", {Family::R3_lambda, {-1}}, 4},
                            {"h3", {Family::H3, {}}, 6}};
    bool ok = true;
    std::string d;
    for (auto& c : cs) {
        auto g = make(c.in);
        auto ds = derivations(g);
        bool leibniz = true;
        for (auto& D : ds) leibniz &= is_derivation(g, D);
        ok &= ds.size() == c.want && leibniz;
        d += std::string(d.empty() ? "" : ", ") + c.name + " " + std::to_string(ds.size()) + (leibniz ? "" : " (Leibniz fails)");
    }
    return {ok, d, {}};
}

Outcome criterion3(uint64_t seed, size_t threads) {
    auto t = Clock::now();
    auto inst = all_grid();
    struct Res {
        size_t checks = 0, bad = 0, mismatch = 0;
        std::string first;
    };
    auto rs = parallel_map<Res>(
        inst.size(),
        [&](size_t k) {
            Res r;
            const auto& in = inst[k];
            std::mt19937_64 rng(seed + 7919 * k);
            auto g = make(in);
            for (size_t round = 0; round <= kBasisChanges; ++round) {
                LieAlgebra h = round == 0 ? g : change_basis(g, random_invertible(rng, g.dim()));
                ++r.checks;
                try {
                    auto c = identify(h);
                    if (!(c.instance == in) || !c.verified || !verify_isomorphism(h, make(c.instance), c.witness)) {
                        ++r.bad;
                        if (r.first.empty()) r.first = instance_name(in) + " -> " + instance_name(c.instance);
                    }
                } catch (const Error& e) {
                    ++r.bad;
                    r.mismatch += e.code == Errc::InternalMismatch;
                    if (r.first.empty()) r.first = instance_name(in) + ": " + e.what();
                }
            }
            return r;
        },
        threads);
    Res tot;
    for (auto& r : rs) {
        tot.checks += r.checks;
        tot.bad += r.bad;
        tot.mismatch += r.mismatch;
        if (tot.first.empty()) tot.first = r.first;
    }
    double s = seconds_since(t);
    std::string d = std::to_string(inst.size()) + " instances x " + std::to_string(kBasisChanges) + " basis changes, " +
                    std::to_string(tot.bad) + " wrong, " + std::to_string(tot.mismatch) + " InternalMismatch, " + fmt(s) +
                    " (limit " + fmt(kRoundTripSeconds) + ")";
    if (!tot.first.empty()) d += "; first: " + tot.first;
    return {tot.bad == 0 && tot.mismatch == 0 && s < kRoundTripSeconds, d, {}};
}

Outcome criterion4() {
    auto inst = all_grid();
    std::map<std::pair<size_t, Instance>, Instance> seen;
    size_t clashes = 0;
    for (auto& in : inst) {
        auto r = identify(make(in));
        auto key = std::make_pair(info(in.family).dim, r.instance);
        if (seen.count(key) && !(seen[key] == in)) ++clashes;
        seen[key] = in;
    }
    // Named pairs, including fingerprints where they suffice.
    auto id = [](Family f, Vec p) { return identify(make(f, p)).instance; };
    bool named = !(id(Family::N4, {}) == id(Family::R4_lambda, {0})) &&
                 !(fingerprint(make(Family::N4, {})) == fingerprint(make(Family::R4_lambda, {0})));
    std::set<Instance> three = {id(Family::AffC, {}), id(Family::AffRxAffR, {}), id(Family::D4_lambda, {1})};
    named &= three.size() == 3;
    std::set<Instance> mus = {id(Family::R4_mu_lambda, {-1, -1}), id(Family::R4_mu_lambda, {-1, Q(-1, 2)}),
                              id(Family::R4_mu_lambda, {Q(-1, 2), Q(-1, 2)}), id(Family::R4_mu_lambda, {Q(-1, 2), 1})};
    named &= mus.size() == 4;
    return {clashes == 0 && named && seen.size() == inst.size(),
            std::to_string(seen.size()) + " distinct identifications for " + std::to_string(inst.size()) +
                " instances, named pairs " + (named ? "separated" : "NOT separated"),
            {}};
}

Outcome criterion6(const TableReport& pc) {
    size_t undecided = 0;
    for (auto& i : pc.items) undecided += i.detail.find("ndecided") != std::string::npos;
    auto o = from_table(pc, ", " + std::to_string(undecided) + " undecided");
    o.ok &= undecided == 0;
    return o;
}

// Every R2 >< R2 structure found on the grid lives on a 2-step solvable algebra, and
// every algebra with g'' != 0 has a decided-empty R2 >< R2 search.
Outcome criterion7(size_t threads) {
    auto inst = grid();
    struct Res {
        int found = 0, empty = 0, undecided = 0, bad = 0;
    };
    auto rs = parallel_map<Res>(
        inst.size(),
        [&](size_t k) {
            Res r;
            auto g = make(inst[k]);
            bool two_step = derived(restrict_to(g, derived(g))).dim() == 0;
            auto s = paracomplex_search(g, DecompKind::R2R2).front();
            if (s.status == SearchStatus::Found) {
                ++r.found;
                r.bad += !two_step || !abelian_pair_two_step(g, *s.cert.decomposition);
            } else if (s.status == SearchStatus::DecidedEmpty) {
                ++r.empty;
            } else {
                ++r.undecided;
                r.bad += !two_step;
            }
            return r;
        },
        threads);
    Res t;
    for (auto& r : rs) {
        t.found += r.found;
        t.empty += r.empty;
        t.undecided += r.undecided;
        t.bad += r.bad;
    }
    return {t.bad == 0, std::to_string(t.found) + " found (all 2-step), " + std::to_string(t.empty) + " decided-empty, " +
                            std::to_string(t.undecided) + " undecided on 2-step algebras, " + std::to_string(t.bad) +
                            " violations",
            {}};
}

Outcome criterion14(size_t& bytes) {
    std::string first;
    bool same = true;
    std::string d;
    for (size_t th : kThreadCounts) {
        auto t = Clock::now();
        auto reps = run_tables(table_names(), th);
        std::string dump = report_to_json(reps, "verify --table all", sha256_hex("verify --table all")).dump(2);
        if (first.empty()) first = dump;
        same &= dump == first;
        d += std::string(d.empty() ? "" : ", ") + std::to_string(th) + " threads " + fmt(seconds_since(t));
    }
    bytes = first.size();
    return {same, std::string(same ? "byte-identical" : "DIFFERENT") + " reports (" + std::to_string(bytes) +
                      " bytes, sha256 " + sha256_hex(first).substr(0, 16) + "); " + d,
            {}};
}

}  // namespace

int main(int argc, char** argv) {
    uint64_t seed = 20240611;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--seed") seed = std::stoull(argv[i + 1]);
    size_t threads = thread_count();
    auto t0 = Clock::now();
    std::cout << "lie4 acceptance (seed " << seed << ", " << threads << " threads)\n";

    std::map<int, Outcome> res;
    std::map<int, std::string> title = {
        {1, "catalog soundness"},   {2, "derivation dimensions"}, {3, "classification round trip"},
        {4, "separation"},          {5, "commutator table"},      {6, "paracomplex table"},
        {7, "R2><R2 implies 2-step"}, {8, "3-dim subalgebra table"}, {9, "semidirect propositions"},
        {10, "Manin triples"},      {11, "complex product table"}, {12, "matrix realizations"},
        {13, "external dictionaries"}, {14, "determinism and wall time"},
    };
    auto run = [&](int k, auto fn) {
        try {
            res[k] = fn();
        } catch (const std::exception& e) {
            res[k] = {false, std::string("threw: ") + e.what(), {}};
        }
        const auto& o = res[k];
        bool known = kKnownUnattainable.count(k) && !o.ok && o.failing == kKnownUnattainable.at(k);
        std::cout << "criterion " << k << " " << (o.ok ? "PASS" : "FAIL") << " " << title[k] << ": " << o.detail;
        if (known) std::cout << " [known unattainable: r'4 admits no complex product structure]";
        std::cout << "\n";
        std::cout.flush();
    };
    run(1, [] { return criterion1(); });
    run(2, [] { return criterion2(); });
    run(3, [&] { return criterion3(seed, threads); });
    run(4, [] { return criterion4(); });
    run(5, [] { return from_table(verify_table_comm()); });
    run(6, [] { return criterion6(verify_table_pc(true)); });
    run(7, [&] { return criterion7(threads); });
    run(8, [] { return from_table(verify_table_13()); });
    run(9, [] { return from_table(verify_semidirect_props()); });
    run(10, [] { return from_table(verify_table_manin()); });
    run(11, [] { return from_table(verify_table_cps()); });
    run(12, [] { return from_table(verify_table_appendix1()); });
    run(13, [] { return from_table(verify_table_appendix2()); });
    size_t bytes = 0;
    run(14, [&] {
        auto o = criterion14(bytes);
        double s = seconds_since(t0);
        o.ok &= s < kSuiteSeconds;
        o.detail += "; acceptance wall " + fmt(s) + " (limit " + fmt(kSuiteSeconds) + ")";
        return o;
    });

    bool ok = true;
    for (auto& [k, o] : res) {
        if (o.ok) {
            if (kKnownUnattainable.count(k)) {
                std::cout << "criterion " << k << " passed but is pinned as unattainable; update the pin\n";
                ok = false;
            }
            continue;
        }
        bool known = kKnownUnattainable.count(k) && o.failing == kKnownUnattainable.at(k);
        ok &= known;
    }
    size_t passed = 0;
    for (auto& [k, o] : res) passed += o.ok;
    std::cout << passed << "/" << res.size() << " criteria pass; " << (ok ? "only pinned failures" : "UNEXPECTED failures")
              << "\n";
    return ok ? 0 : 1;
}
