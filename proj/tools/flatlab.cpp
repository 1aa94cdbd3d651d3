#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flatlab/corpus.hpp"
#include "flatlab/report.hpp"
#include "flatlab/version.hpp"

namespace {

int fail_input(const std::string& msg) {
    std::cerr << msg << "\n";
    return flatlab::kExitInputError;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool parse_window(const std::string& text, flatlab::DegreeWindow& out) {
    auto dots = text.find("..");
    if (dots == std::string::npos) return false;
    try {
        out.lo = std::stol(text.substr(0, dots));
        out.hi = std::stol(text.substr(dots + 2));
    } catch (...) {
        return false;
    }
    return out.hi >= out.lo;
}

int run_on_file(flatlab::Command cmd, const std::string& path,
                const flatlab::CommandOptions& opts, const std::string& json_out) {
    auto text = read_file(path);
    if (!text) return fail_input("cannot read input file: " + path);
    flatlab::ParseResult parsed = flatlab::parse_problem(*text);
    if (!parsed.ok()) return fail_input(parsed.diagnostic->render());

    flatlab::RunResult res = flatlab::run_command(cmd, *parsed.problem, opts);
    if (!res.human.empty()) std::cout << res.human;
    if (!json_out.empty()) {
        std::string dumped = res.json.dump(2) + "\n";
        if (json_out == "-") {
            std::cout << dumped;
        } else {
            std::ofstream out(json_out, std::ios::binary);
            if (!out) return fail_input("cannot write JSON report: " + json_out);
            out << dumped;
        }
    }
    return res.exit_code;
}

int gen_corpus(uint64_t seed, size_t count, const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) return fail_input("cannot create output directory: " + dir);

    auto corpus = flatlab::make_corpus(seed, count);
    nlohmann::ordered_json manifest;
    manifest["version"] = flatlab::kVersion;
    manifest["seed"] = seed;
    manifest["count"] = count;
    nlohmann::ordered_json files = nlohmann::ordered_json::array();
    for (const auto& c : corpus) {
        std::string name = c.name + ".flt";
        std::ofstream out(fs::path(dir) / name, std::ios::binary);
        if (!out) return fail_input("cannot write " + name);
        out << c.dsl_text;
        files.push_back(name);
    }
    manifest["files"] = files;
    std::ofstream mf(fs::path(dir) / "manifest.json", std::ios::binary);
    mf << manifest.dump(2) << "\n";
    std::cout << "wrote " << corpus.size() << " cases to " << dir << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"flatlab — flatness of modules over local Artinian bases"};
    app.set_version_flag("--version", flatlab::kVersion);
    app.require_subcommand(1);

    std::string path, json_out, ideal_text, window_text, dialect, target = "auto", out_dir;
    long long order_n = -1;
    long long colength = -1;
    uint64_t seed = 0;
    size_t count = 10;

    auto add_common = [&](CLI::App* sub, bool with_json = true) {
        sub->add_option("file", path, "problem file")->required();
        if (with_json)
            sub->add_option("--json", json_out, "write the JSON report to this path ('-' = stdout)");
    };

    auto* analyze = app.add_subcommand("analyze", "flatness verdict with cross-checks");
    add_common(analyze);
    analyze->add_option("--target", target, "module|graded|auto")
        ->check(CLI::IsMember({"module", "graded", "auto"}));

    auto* varpi = app.add_subcommand("varpi", "normalized fiber lengths over neighborhoods");
    add_common(varpi);
    varpi->add_option("--n", order_n, "single neighborhood order");

    auto* tor = app.add_subcommand("tor", "Tor_1 dimension against an ideal (default m)");
    add_common(tor);
    tor->add_option("--ideal", ideal_text, "comma-separated ideal generators");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert table of a graded module");
    add_common(hilbert);
    hilbert->add_option("--n", order_n, "neighborhood order")->required();
    hilbert->add_option("--window", window_text, "degree window a..b");

    auto* enumi = app.add_subcommand("enum-ideals", "monomial ideals of a given colength");
    add_common(enumi);
    enumi->add_option("--colength", colength, "target colength")->required();

    auto* exp = app.add_subcommand("export", "emit a cross-check script for an external CAS");
    add_common(exp);
    exp->add_option("--dialect", dialect, "m2|singular")->required();

    auto* gen = app.add_subcommand("gen-corpus", "write a seeded random fixture corpus");
    gen->add_option("--seed", seed, "RNG seed (recorded in the manifest)");
    gen->add_option("--count", count, "number of cases");
    gen->add_option("--out", out_dir, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        flatlab::CommandOptions opts;
        opts.target = target;
        if (order_n >= 0) opts.order_n = static_cast<size_t>(order_n);
        if (!ideal_text.empty()) opts.ideal_text = ideal_text;
        if (colength >= 0) opts.colength = static_cast<size_t>(colength);
        opts.dialect = dialect;
        if (!window_text.empty()) {
            flatlab::DegreeWindow w;
            if (!parse_window(window_text, w)) return fail_input("bad --window (want a..b)");
            opts.window = w;
        }

        if (analyze->parsed()) return run_on_file(flatlab::Command::Analyze, path, opts, json_out);
        if (varpi->parsed()) return run_on_file(flatlab::Command::Varpi, path, opts, json_out);
        if (tor->parsed()) return run_on_file(flatlab::Command::Tor, path, opts, json_out);
        if (hilbert->parsed()) return run_on_file(flatlab::Command::Hilbert, path, opts, json_out);
        if (enumi->parsed())
            return run_on_file(flatlab::Command::EnumIdeals, path, opts, json_out);
        if (exp->parsed()) return run_on_file(flatlab::Command::Export, path, opts, json_out);
        if (gen->parsed()) return gen_corpus(seed, count, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return flatlab::kExitDisagreement;
    }
    return 0;
}
