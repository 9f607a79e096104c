#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sfperm/constructions.hpp"
#include "sfperm/crucial.hpp"
#include "sfperm/json.hpp"
#include "sfperm/permutation.hpp"
#include "sfperm/search.hpp"
#include "sfperm/verify.hpp"

using nlohmann::json;
using namespace sfperm;

namespace {

struct Output {
    std::string command;
    json input = json::object();
    json result = json::object();
    std::vector<std::string> lines;        // text rendering
    std::optional<bool> asserted;          // property checked under --assert
};

struct Options {
    std::string format = "text";
    bool do_assert = false;
};

void emit(const Output& out, const Options& opt, const std::string& status) {
    if (opt.format == "json") {
        json record = {{"command", out.command},
                       {"input", out.input},
                       {"result", out.result},
                       {"status", status}};
        std::cout << record.dump(2) << '\n';
    } else {
        for (const auto& line : out.lines) std::cout << line << '\n';
    }
}

int finish(const Output& out, const Options& opt) {
    bool failed = opt.do_assert && out.asserted.has_value() && !*out.asserted;
    emit(out, opt, failed ? "property_failed" : "ok");
    return failed ? 1 : 0;
}

std::vector<Permutation> input_perms(const std::vector<int>& inline_symbols,
                                     const std::string& file) {
    std::vector<Permutation> perms;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open file: " + file);
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t,") == std::string::npos) continue;
            perms.push_back(parse_permutation(line));
        }
        if (perms.empty()) throw std::invalid_argument("no permutations in file: " + file);
    }
    if (!inline_symbols.empty()) perms.push_back(Permutation(inline_symbols));
    if (perms.empty()) throw std::invalid_argument("no permutation given (inline or --file)");
    return perms;
}

Permutation one_perm(const std::vector<int>& inline_symbols, const std::string& file) {
    auto perms = input_perms(inline_symbols, file);
    if (perms.size() != 1)
        throw std::invalid_argument("exactly one permutation expected, got " +
                                    std::to_string(perms.size()));
    return perms.front();
}

std::string level_string(const LevelDecomposition& d) {
    std::string s;
    for (Level l : d.level_of)
        s += l == Level::lower ? 'l' : (l == Level::upper ? 'u' : 'm');
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"square-free permutation toolkit: constructions, cruciality checks and search"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--assert", opt.do_assert, "exit 1 when the checked property fails");

    Output out;

    // ---- check -----------------------------------------------------------
    auto* check_cmd = app.add_subcommand("check", "square-freeness of one or more permutations");
    std::vector<int> check_symbols;
    std::string check_file;
    check_cmd->add_option("symbols", check_symbols, "permutation symbols");
    check_cmd->add_option("--file", check_file, "file with one permutation per line");
    check_cmd->callback([&] {
        out.command = "check";
        bool all_free = true;
        json results = json::array();
        for (const Permutation& p : input_perms(check_symbols, check_file)) {
            auto witness = find_square(p);
            bool free = !witness.has_value();
            all_free = all_free && free;
            json r = {{"permutation", p}, {"square_free", free}};
            std::string line = "square_free=" + std::string(free ? "true" : "false");
            if (witness) {
                r["witness"] = *witness;
                line += " witness_start=" + std::to_string(witness->start) +
                        " witness_half=" + std::to_string(witness->half_len);
            }
            results.push_back(std::move(r));
            out.lines.push_back(std::move(line));
        }
        out.result = results.size() == 1 ? results.front() : json{{"results", results}};
        out.asserted = all_free;
    });

    // ---- iso -------------------------------------------------------------
    auto* iso_cmd = app.add_subcommand("iso", "order-isomorphism of two permutations");
    std::string iso_a, iso_b;
    iso_cmd->add_option("--a", iso_a, "first permutation")->required();
    iso_cmd->add_option("--b", iso_b, "second permutation")->required();
    iso_cmd->callback([&] {
        out.command = "iso";
        Permutation a = parse_permutation(iso_a), b = parse_permutation(iso_b);
        bool iso = order_isomorphic(a, b);
        out.input = {{"a", a}, {"b", b}};
        out.result = {{"order_isomorphic", iso}};
        out.lines.push_back("order_isomorphic=" + std::string(iso ? "true" : "false"));
        out.asserted = iso;
    });

    // ---- extend ----------------------------------------------------------
    auto* extend_cmd = app.add_subcommand("extend", "extensions in a position");
    std::vector<int> extend_symbols;
    std::string extend_file;
    int extend_pos = 0, extend_rank = 0;
    extend_cmd->add_option("symbols", extend_symbols, "permutation symbols");
    extend_cmd->add_option("--file", extend_file, "file with the permutation");
    extend_cmd->add_option("--pos", extend_pos, "insertion position in {0..n}")->required();
    extend_cmd->add_option("--rank", extend_rank, "insertion rank in {1..n+1}; omit for all");
    extend_cmd->callback([&] {
        out.command = "extend";
        Permutation p = one_perm(extend_symbols, extend_file);
        out.input = {{"permutation", p}, {"pos", extend_pos}};
        if (extend_cmd->count("--rank")) {
            out.input["rank"] = extend_rank;
            Permutation q = extension_at(p, extend_pos, extend_rank);
            out.result = {{"extension", q}};
            out.lines.push_back(q.str());
        } else {
            auto exts = extensions(p, extend_pos);
            out.result = {{"extensions", exts}};
            for (const auto& q : exts) out.lines.push_back(q.str());
        }
    });

    // ---- levels ----------------------------------------------------------
    auto* levels_cmd = app.add_subcommand("levels", "level decomposition");
    std::vector<int> levels_symbols;
    std::string levels_file;
    levels_cmd->add_option("symbols", levels_symbols, "permutation symbols");
    levels_cmd->add_option("--file", levels_file, "file with the permutation");
    levels_cmd->callback([&] {
        out.command = "levels";
        Permutation p = one_perm(levels_symbols, levels_file);
        out.input = {{"permutation", p}};
        auto d = level_decomposition(p);
        if (d) {
            out.result = {{"offset", d->offset}, {"levels", level_string(*d)}};
            out.lines.push_back("offset=" + std::to_string(d->offset) +
                                " levels=" + level_string(*d));
        } else {
            out.result = {{"offset", nullptr}};
            out.lines.push_back("offset=none");
        }
        out.asserted = d.has_value();
    });

    // ---- hml -------------------------------------------------------------
    auto* hml_cmd = app.add_subcommand("hml", "high-medium-low conditions (S1)-(S3)");
    std::vector<int> hml_symbols;
    std::string hml_file;
    hml_cmd->add_option("symbols", hml_symbols, "permutation symbols");
    hml_cmd->add_option("--file", hml_file, "file with the permutation");
    hml_cmd->callback([&] {
        out.command = "hml";
        Permutation p = one_perm(hml_symbols, hml_file);
        bool ok = is_hml(p);
        out.input = {{"permutation", p}};
        out.result = {{"hml", ok}};
        out.lines.push_back("hml=" + std::string(ok ? "true" : "false"));
        out.asserted = ok;
    });

    // ---- c1 / c2 ---------------------------------------------------------
    std::string c_a, c_b, c_c;
    auto add_construction = [&](const char* name, const char* help, bool first) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("--a", c_a, first ? "low block A" : "high block U")->required();
        cmd->add_option("--b", c_b, first ? "medium block B" : "medium block V")->required();
        cmd->add_option("--c", c_c, first ? "high block C" : "low block W")->required();
        cmd->callback([&, name, first] {
            out.command = name;
            Permutation a = parse_permutation(c_a), b = parse_permutation(c_b),
                        c = parse_permutation(c_c);
            out.input = {{"a", a}, {"b", b}, {"c", c}};
            HmlPermutation h = first ? construction1(a, b, c) : construction2(a, b, c);
            out.result = {{"permutation", h.perm}};
            out.lines.push_back(h.perm.str());
        });
        return cmd;
    };
    add_construction("c1", "Construction 1: low/medium/high interleaving", true);
    add_construction("c2", "Construction 2: high/medium/low interleaving", false);

    // ---- wrap1 / wrap2 ---------------------------------------------------
    std::vector<int> wrap_symbols;
    std::string wrap_file;
    int wrap_lo = 0, wrap_hi = 0;
    auto add_wrap = [&](const char* name, const char* help, bool first) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("symbols", wrap_symbols, "construction output to wrap");
        cmd->add_option("--file", wrap_file, "file with the permutation");
        if (first) {
            cmd->add_option("--x", wrap_hi, "symbol above the whole permutation")->required();
            cmd->add_option("--y", wrap_lo, "symbol below the whole permutation")->required();
        } else {
            cmd->add_option("--z", wrap_lo, "symbol below the whole permutation")->required();
            cmd->add_option("--t", wrap_hi, "symbol above the whole permutation")->required();
        }
        cmd->callback([&, name, first] {
            out.command = name;
            Permutation p = one_perm(wrap_symbols, wrap_file);
            auto h = first ? as_construction1(p) : as_construction2(p);
            if (!h)
                throw std::invalid_argument(std::string("input is not a construction") +
                                            (first ? "1" : "2") + " permutation");
            Permutation w = first ? wrap1(wrap_hi, *h, wrap_lo) : wrap2(wrap_lo, *h, wrap_hi);
            out.input = {{"permutation", p},
                         {first ? "x" : "t", wrap_hi},
                         {first ? "y" : "z", wrap_lo}};
            out.result = {{"permutation", w}};
            out.lines.push_back(w.str());
        });
        return cmd;
    };
    add_wrap("wrap1", "wrap a construction1 permutation as x P y", true);
    add_wrap("wrap2", "wrap a construction2 permutation as z P t", false);

    // ---- sfperm ----------------------------------------------------------
    auto* sf_cmd = app.add_subcommand("sfperm", "special square-free permutation of length 2m-1");
    int sf_m = 0;
    sf_cmd->add_option("m", sf_m, "parameter m >= 2")->required();
    sf_cmd->callback([&] {
        out.command = "sfperm";
        Permutation r = special_square_free(sf_m);
        out.input = {{"m", sf_m}};
        out.result = {{"permutation", r}};
        out.lines.push_back(r.str());
    });

    // ---- build-em --------------------------------------------------------
    auto* em_cmd = app.add_subcommand("build-em", "the crucial permutation of length 8m+5");
    int em_m = 0;
    em_cmd->add_option("m", em_m, "parameter m >= 2")->required();
    em_cmd->callback([&] {
        out.command = "build-em";
        EmParts parts = build_em(em_m);
        out.input = {{"m", em_m}};
        out.result = parts;
        for (const auto& [key, value] :
             std::initializer_list<std::pair<const char*, const Permutation*>>{
                 {"r", &parts.r}, {"y", &parts.y}, {"x", &parts.x}, {"z", &parts.z},
                 {"h_prime", &parts.h_prime}, {"h", &parts.h}, {"s", &parts.s},
                 {"t", &parts.t}, {"e_prime", &parts.e_prime}, {"e", &parts.e}})
            out.lines.push_back(std::string(key) + ": " + value->str());
    });

    // ---- crucial ---------------------------------------------------------
    auto* crucial_cmd = app.add_subcommand("crucial", "P-cruciality check");
    std::vector<int> crucial_symbols;
    std::string crucial_file, crucial_positions, crucial_kind;
    crucial_cmd->add_option("symbols", crucial_symbols, "permutation symbols");
    crucial_cmd->add_option("--file", crucial_file, "file with the permutation");
    crucial_cmd->add_option("--positions", crucial_positions,
                            "position set, e.g. 0,1,16,17 or 0,1,n-1,n");
    crucial_cmd->add_option("--kind", crucial_kind, "named set")
        ->check(CLI::IsMember({"left", "right", "bi", "s"}));
    crucial_cmd->callback([&] {
        out.command = "crucial";
        if (crucial_positions.empty() == crucial_kind.empty())
            throw std::invalid_argument("exactly one of --positions / --kind is required");
        Permutation p = one_perm(crucial_symbols, crucial_file);
        PositionPattern pattern =
            PositionPattern::parse(crucial_positions.empty() ? crucial_kind : crucial_positions);
        PositionSet set = pattern.resolve(p.size());
        bool crucial = is_p_crucial(p, set);
        out.input = {{"permutation", p}, {"positions", set}};
        out.result = {{"crucial", crucial}};
        out.lines.push_back("crucial=" + std::string(crucial ? "true" : "false"));
        out.asserted = crucial;
    });

    // ---- blocked ---------------------------------------------------------
    auto* blocked_cmd = app.add_subcommand("blocked", "all blocked positions");
    std::vector<int> blocked_symbols;
    std::string blocked_file;
    blocked_cmd->add_option("symbols", blocked_symbols, "permutation symbols");
    blocked_cmd->add_option("--file", blocked_file, "file with the permutation");
    blocked_cmd->callback([&] {
        out.command = "blocked";
        Permutation p = one_perm(blocked_symbols, blocked_file);
        PositionSet set = blocked_positions(p);
        out.input = {{"permutation", p}};
        out.result = {{"blocked", set}};
        out.lines.push_back("blocked=" + (set.members.empty() ? "none" : set.str()));
    });

    // ---- witness ---------------------------------------------------------
    auto* witness_cmd = app.add_subcommand("witness", "square-free extension at a position");
    std::vector<int> witness_symbols;
    std::string witness_file;
    int witness_pos = 0;
    witness_cmd->add_option("symbols", witness_symbols, "permutation symbols");
    witness_cmd->add_option("--file", witness_file, "file with the permutation");
    witness_cmd->add_option("--pos", witness_pos, "position in {0..n}")->required();
    witness_cmd->callback([&] {
        out.command = "witness";
        Permutation p = one_perm(witness_symbols, witness_file);
        auto w = square_free_extension_witness(p, witness_pos);
        out.input = {{"permutation", p}, {"pos", witness_pos}};
        if (w) {
            out.result = {{"witness", *w}};
            out.lines.push_back(w->str());
        } else {
            out.result = {{"witness", nullptr}};
            out.lines.push_back("none (position blocked)");
        }
        out.asserted = w.has_value();
    });

    // ---- count-squarefree ------------------------------------------------
    auto* count_cmd = app.add_subcommand("count-squarefree", "count square-free permutations");
    int count_n = 0;
    count_cmd->add_option("n", count_n, "length")->required()->check(CLI::PositiveNumber);
    count_cmd->callback([&] {
        out.command = "count-squarefree";
        std::uint64_t count = count_square_free(count_n);
        out.input = {{"n", count_n}};
        out.result = {{"count", count}};
        out.lines.push_back("count=" + std::to_string(count));
    });

    // ---- search ----------------------------------------------------------
    auto* search_cmd = app.add_subcommand("search", "exhaustive P-crucial search");
    int search_n = 0, search_jobs = 1;
    std::string search_positions, search_output;
    bool search_count_only = false, search_force = false;
    search_cmd->add_option("n", search_n, "length")->required()->check(CLI::PositiveNumber);
    search_cmd->add_option("--positions", search_positions, "position set pattern");
    search_cmd->add_option("--jobs", search_jobs, "worker threads")->check(CLI::PositiveNumber);
    search_cmd->add_option("--output", search_output, "write hits to this file, one per line");
    search_cmd->add_flag("--count-only", search_count_only, "only count square-free permutations");
    search_cmd->add_flag("--force", search_force, "allow n beyond the desk-scale ceiling");
    search_cmd->callback([&] {
        out.command = "search";
        SearchSpec spec;
        spec.n = search_n;
        spec.force = search_force;
        spec.mode = search_count_only ? SearchMode::count_square_free : SearchMode::find_crucial;
        if (!search_count_only) {
            if (search_positions.empty())
                throw std::invalid_argument("--positions required unless --count-only");
            spec.positions = PositionPattern::parse(search_positions);
        } else {
            spec.positions = PositionPattern::parse("0");
        }
        SearchResult result = search_jobs > 1
                                  ? run_sharded(spec, static_cast<std::uint64_t>(search_jobs),
                                                search_jobs)
                                  : find_p_crucial(spec);
        if (!search_output.empty()) {
            std::ofstream os(search_output);
            if (!os) throw std::invalid_argument("cannot open output file: " + search_output);
            for (const auto& hit : result.hits) os << hit.str() << '\n';
        }
        out.input = {{"n", search_n},
                     {"positions", search_count_only ? "-" : spec.positions.str()},
                     {"jobs", search_jobs}};
        out.result = result;
        std::ostringstream line;
        line << "n=" << result.n;
        if (!search_count_only) line << " positions=" << spec.positions.str();
        line << " total_enumerated=" << result.total_enumerated;
        if (!search_count_only) line << " hits=" << result.hits.size();
        line << " elapsed=" << result.elapsed_seconds << "s";
        out.lines.push_back(line.str());
        if (!search_count_only)
            for (const auto& hit : result.hits) out.lines.push_back(hit.str());
    });

    // ---- verify-paper ----------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify-paper", "replay all fixtures and properties");
    int verify_max_m = 5, verify_max_n = 9;
    std::uint64_t verify_seed = 20240817;
    verify_cmd->add_option("--max-m", verify_max_m, "largest m for the constructive checks")
        ->capture_default_str();
    verify_cmd->add_option("--max-n", verify_max_n, "largest n for the exhaustive sweeps")
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify_seed, "seed for the randomized suites")
        ->capture_default_str();
    verify_cmd->callback([&] {
        out.command = "verify-paper";
        VerifyReport report = verify_paper(verify_max_m, verify_max_n, verify_seed);
        out.input = {{"max_m", verify_max_m}, {"max_n", verify_max_n}, {"seed", verify_seed}};
        out.result = report;
        out.lines.push_back("seed=" + std::to_string(report.seed));
        for (const auto& c : report.checks)
            out.lines.push_back(std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.name +
                                (c.detail.empty() ? "" : " (" + c.detail + ")"));
        out.lines.push_back(report.all_pass() ? "all checks passed" : "SOME CHECKS FAILED");
        out.asserted = report.all_pass();
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    // verify-paper fails the run on any red check even without --assert
    if (out.command == "verify-paper" && out.asserted.has_value() && !*out.asserted) {
        emit(out, opt, "property_failed");
        return 1;
    }
    return finish(out, opt);
}
