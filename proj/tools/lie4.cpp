// lie4: command-line front end for the exact-rational solvable Lie algebra library.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lie4/io.hpp"

using namespace lie4;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUnsupported = 2, kUndecided = 3, kUsage = 64, kData = 65, kInternal = 70 };

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::Parse, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int exit_for(const Error& e) {
    switch (e.code) {
    case Errc::NotSolvable:
    case Errc::IrreducibleCubicOrWorse:
    case Errc::IrrationalParameterPath: return kUnsupported;
    case Errc::InternalMismatch: return kInternal;
    case Errc::UnknownName:
    case Errc::ConstraintViolation:
    case Errc::PreconditionViolated: return kUsage;
    default: return kData;
    }
}

void print(const Json& j, bool json, const std::string& text) {
    if (json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string identification_text(const ClassificationResult& r) {
    std::string s = instance_name(r.instance) + "\n";
    s += std::string("witness ") + (r.verified ? "verified" : "NOT verified") + ":\n";
    for (size_t i = 0; i < r.witness.rows(); ++i) s += "  " + to_string(r.witness.row(i)) + "\n";
    if (!r.ideal.empty()) s += "unimodular ideal: " + r.ideal + "\n";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact identification and structure search for real solvable Lie algebras of dimension <= 4"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    std::string input;
    auto* identify_cmd = app.add_subcommand("identify", "identify an algebra document");
    identify_cmd->add_option("--input", input, "algebra document")->required();

    std::string table;
    bool recheck = false;
    uint64_t seed = 0;
    size_t threads = 0;
    auto* verify_cmd = app.add_subcommand("verify", "replay a table");
    verify_cmd->add_option("--table", table, "table name or 'all'")
        ->required()
        ->check(CLI::IsMember([] {
            auto t = table_names();
            t.push_back("all");
            return t;
        }()));
    verify_cmd->add_flag("--recheck", recheck, "re-verify certificates with the brute-force oracle");
    verify_cmd->add_option("--seed", seed, "recorded in the report");
    verify_cmd->add_option("--threads", threads, "worker count (default LIE4_THREADS or hardware)");

    bool paracomplex = false;
    std::string type;
    size_t budget = 20000;
    auto* search_cmd = app.add_subcommand("search", "search for structures");
    search_cmd->add_flag("--paracomplex", paracomplex, "paracomplex decompositions")->required();
    search_cmd->add_option("--type", type, "decomposition type")->check(CLI::IsMember({"r2r2", "affr2", "affaff"}));
    search_cmd->add_option("--input", input, "algebra document")->required();
    search_cmd->add_option("--budget", budget, "solver step budget per cell");

    auto* der_cmd = app.add_subcommand("derivations", "basis of Der(g)");
    der_cmd->add_option("--input", input, "algebra document")->required();

    auto* mat_cmd = app.add_subcommand("from-matrices", "algebra spanned by matrices");
    mat_cmd->add_option("--input", input, "matrix document")->required();

    bool list = false;
    std::string family;
    auto* cat_cmd = app.add_subcommand("catalog", "families, constraints and external names");
    cat_cmd->add_flag("--list", list, "list families")->required();
    cat_cmd->add_option("--family", family, "restrict to one family tag");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*identify_cmd) {
            auto g = parse_algebra(slurp(input));
            auto r = identify(g);
            print(classification_to_json(r), json, identification_text(r));
            return r.verified ? kOk : kInternal;
        }
        if (*verify_cmd) {
            std::vector<std::string> names = table == "all" ? table_names() : std::vector<std::string>{table};
            auto reps = run_tables(names, threads ? threads : thread_count(), recheck);
            std::string cmd = "verify --table " + table + (recheck ? " --recheck" : "");
            std::string digest = sha256_hex(cmd);
            auto j = report_to_json(reps, cmd, digest, seed);
            print(j, json, report_to_text(reps));
            return j["counts"]["fail"].get<size_t>() == 0 ? kOk : kNegative;
        }
        if (*search_cmd) {
            std::string text = slurp(input);
            auto g = parse_algebra(text);
            std::optional<DecompKind> filter;
            if (!type.empty()) filter = kind_from_name(type);
            auto rs = paracomplex_search(g, filter, budget);
            Json j;
            j["input_sha256"] = sha256_hex(text);
            j["results"] = Json::array();
            std::string out;
            bool found = false, undecided = false;
            for (auto& r : rs) {
                j["results"].push_back(search_to_json(r));
                found |= r.status == SearchStatus::Found;
                undecided |= r.status == SearchStatus::Undecided;
                out += std::string(kind_name(r.kind)) + ": " + search_status_name(r.status) + " " + r.cert.summary() + "\n";
                if (r.cert.decomposition) {
                    out += "  g+ = span" + to_string(r.cert.decomposition->plus.vectors()[0]) + ", " +
                           to_string(r.cert.decomposition->plus.vectors()[1]) + "\n";
                    out += "  g- = span" + to_string(r.cert.decomposition->minus.vectors()[0]) + ", " +
                           to_string(r.cert.decomposition->minus.vectors()[1]) + "\n";
                }
            }
            print(j, json, out);
            return found ? kOk : undecided ? kUndecided : kNegative;
        }
        if (*der_cmd) {
            auto g = parse_algebra(slurp(input));
            auto ds = derivations(g);
            Json j;
            j["dim"] = ds.size();
            j["basis"] = Json::array();
            std::string out = "dim Der = " + std::to_string(ds.size()) + "\n";
            for (auto& d : ds) {
                j["basis"].push_back(mat_to_json(d));
                out += "---\n";
                for (size_t i = 0; i < d.rows(); ++i) out += "  " + to_string(d.row(i)) + "\n";
            }
            print(j, json, out);
            return kOk;
        }
        if (*mat_cmd) {
            auto g = from_matrices(parse_matrices(slurp(input)));
            Json j;
            j["algebra"] = algebra_to_json(g);
            std::string out = emit_algebra(g);
            try {
                auto r = identify(g);
                j["identification"] = classification_to_json(r);
                out += identification_text(r);
            } catch (const Error& e) {
                if (exit_for(e) != kUnsupported) throw;
                j["identification"] = {{"error", errc_name(e.code)}, {"message", e.what()}};
                out += std::string("not identified: ") + e.what() + "\n";
            }
            print(j, json, out);
            return kOk;
        }
        if (*cat_cmd) {
            std::optional<Family> only;
            if (!family.empty()) {
                only = family_from_tag(family);
                if (!only) throw Error(Errc::UnknownName, "unknown family tag '" + family + "'");
            }
            auto j = catalog_to_json(only);
            std::string out;
            for (auto& f : j["families"]) {
                out += f["id"].get<std::string>() + "  " + f["name"].get<std::string>();
                if (!f["constraint"].get<std::string>().empty()) out += "  [" + f["constraint"].get<std::string>() + "]";
                if (!f["external_names"].empty()) {
                    out += "  ~";
                    for (auto& e : f["external_names"]) out += " " + e.get<std::string>() + ";";
                }
                out += "\n";
            }
            print(j, json, out);
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "lie4: " << e.what() << "\n";
        return exit_for(e);
    } catch (const std::exception& e) {
        std::cerr << "lie4: internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
