// Copyright 2026 The recurrence-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "reclab/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "cli_internal.hpp"
#include "reclab/errors.hpp"
#include "reclab/generators.hpp"
#include "reclab/parallel.hpp"

namespace reclab {

namespace cli {

int run_verify(const std::string& path, std::ostream& out, std::ostream& err);

const std::vector<CommandSpec>& command_specs() {
    static const std::vector<CommandSpec> specs = {
        {"sieve",
         "Enumerate a set family on a window with its counting profile",
         {},
         "",
         {{"family", "primes", "set family (primes, chen, poly:1,0,0, digit-balanced, ...)"},
          {"lo", "1", "window start"},
          {"window", "1000000", "window end"},
          {"shifts", "", "shifts m for E_m(x) counts, comma separated"},
          {"x-values", "", "x values for the profile (default powers of ten)"}}},
        {"thmB",
         "Sparse difference construction: build | selberg | cm-scan",
         {"build", "selberg", "cm-scan"},
         "build",
         {{"family", "primes", "set family E"},
          {"f", "pow:2", "growth function f"},
          {"g", "auto", "growth function g, or auto for the tuning ladder"},
          {"k-max", "64", "number of thick intervals"},
          {"window", "10000000", "window end"},
          {"x", "100000", "x for selberg and cm-scan"},
          {"m-max", "100", "largest shift m"},
          {"eta", "1/10", "level for the c_m scan"},
          {"thick-T", "", "restrict the sieved shifts to this set (epsilon variant)"}}},
        {"digit",
         "Digit-balanced counterexample battery",
         {},
         "",
         {{"a-max", "50", "largest difference a"},
          {"window-exp", "24", "E is taken inside [1, 2^window-exp]"},
          {"banach-length", "1024", "window length for the headline Banach ratio"}}},
        {"tuples",
         "Admissible tuples: admissible | extract | translates | delta-star | cover | pigeonhole",
         {"admissible", "extract", "translates", "delta-star", "cover", "pigeonhole"},
         "admissible",
         {{"tuple", "0,2,6,8,12,18,20,26", "offsets"},
          {"set", "range:1..20", "input set for extract and cover"},
          {"k", "3", "tuple size for extract"},
          {"r", "2", "prime count (translates) or |S| (delta-star)"},
          {"n-max", "100", "largest translate n"},
          {"diffs", "odds", "difference set for delta-star"},
          {"lo", "1", "set window start"},
          {"hi", "1000", "set window end"},
          {"span", "10", "probe span for delta-star"},
          {"trials", "1000", "random draws when exhaustive search is too large"},
          {"r-bound", "16", "largest allowed index for cover"},
          {"family", "primes", "family for pigeonhole"},
          {"coloring", "index-parity", "coloring file (n color) or index-parity"}}},
        {"color-gaps",
         "Two-colouring of a set with growing gaps against a thick R",
         {},
         "",
         {{"family", "poly:1,0,0", "set family E"},
          {"f-indices", "16,10000,100000000", "members f_2 < f_3 < ... of E"},
          {"window", "1000000", "window end"},
          {"order", "asc", "greedy pass order: asc or desc"}}},
        {"kriz",
         "Chromatic lab: kneser | witness | chromatic | assemble | htilde | certificate",
         {"kneser", "witness", "chromatic", "assemble", "htilde", "certificate"},
         "kneser",
         {{"d", "5", "Hamming dimension"},
          {"k", "", "Kneser k, htilde k or certificate k"},
          {"nodes", "2000000", "branch-and-bound node budget"},
          {"S", "1", "integer set S"},
          {"m", "10", "witness modulus"},
          {"delta", "", "density delta"},
          {"frame-lo", "1", "witness frame start (0 or 1)"},
          {"radius", "3", "Hamming ball radius for chromatic on F_2^d"},
          {"f2", "0", "1: chromatic on F_2^d, 0: on a family window"},
          {"family", "naturals", "set family E"},
          {"lo", "1", "window or n range start"},
          {"hi", "10", "window or n range end"},
          {"alpha", "1/2", "torus point, comma separated rationals"},
          {"eps", "1/8", "epsilon for htilde"},
          {"rounds", "2", "assembly rounds"},
          {"s-cap", "12", "candidate S' drawn from [1, s-cap]"},
          {"max-size", "3", "largest |S'|"},
          {"l-max", "64", "largest concatenation length"}}},
        {"bohr",
         "Bohr closure product bound: pipeline",
         {"pipeline"},
         "pipeline",
         {{"family", "primes", "primes, poly:..., qform:a,b,c or norm:cubic2"}, {"bound", "100", "prime bound"}}},
        {"chen",
         "Chen weights: theta | sum | gowers | recurrence",
         {"theta", "sum", "gowers", "recurrence"},
         "sum",
         {{"n", "2,3,4,43", "arguments for theta"},
          {"N", "1000000", "range for the Chen sum"},
          {"fn", "constant:1", "function on Z_N: constant:c, indicator:primes, theta:w, or a file"},
          {"zn", "5", "modulus N of Z_N"},
          {"k", "2", "Gowers k or recurrence length"},
          {"lo", "1", "prime window start"},
          {"hi", "100", "prime window end"},
          {"density", "1", "keep each prime with this probability (seeded)"}}},
        {"verify", "Recompute every check of a report", {}, "", {{"report", "", "report JSON path"}}},
    };
    return specs;
}

const CommandSpec* find_spec(const std::string& name) {
    for (const auto& s : command_specs())
        if (s.name == name) return &s;
    return nullptr;
}

namespace {

// Flags whose default depends on the mode.
std::string mode_default(const std::string& command, const std::string& mode, const std::string& flag) {
    static const std::map<std::string, std::string> table = {
        {"kriz/witness/delta", "7/20"},   {"kriz/assemble/delta", "1/4"}, {"kriz/kneser/k", "1"},
        {"kriz/htilde/k", "0"},           {"kriz/certificate/k", "1"},    {"chen/recurrence/k", "1"},
    };
    const auto it = table.find(command + "/" + mode + "/" + flag);
    return it == table.end() ? "" : it->second;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> out;
    std::istringstream in(read_file(path));
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError("config line " + std::to_string(lineno) + " is not key=value");
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

void write_csv(const Json& result, const std::string& fields_text, std::ostream& os) {
    std::vector<std::string> fields;
    std::stringstream ss(fields_text);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(trim(f));
    std::size_t rows = 1;
    for (const auto& name : fields) {
        if (!result.contains(name)) throw DomainError("csv field '" + name + "' is not in the result");
        if (result[name].is_array()) rows = std::max(rows, result[name].size());
    }
    for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << fields[i];
    os << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            const Json& v = result[fields[i]];
            const Json& cell = v.is_array() ? (r < v.size() ? v[r] : Json()) : v;
            os << (i ? "," : "");
            if (cell.is_string())
                os << cell.get<std::string>();
            else if (!cell.is_null())
                os << cell.dump();
        }
        os << '\n';
    }
}

int resolve_threads(const std::string& flag, const std::map<std::string, std::string>& file_cfg) {
    std::string v = flag;
    if (v.empty() && file_cfg.count("threads")) v = file_cfg.at("threads");
    if (v.empty())
        if (const char* env = std::getenv("RECURRENCE_LAB_THREADS")) v = env;
    if (v.empty()) return 1;
    const long t = std::stol(v);
    if (t < 1 || t > 1024) throw DomainError("threads must lie in [1, 1024]");
    return static_cast<int>(t);
}

}  // namespace

std::string Params::str(const std::string& key) const {
    if (!cfg_.contains(key)) throw DomainError("no parameter '" + key + "'");
    const Json& v = cfg_.at(key);
    return v.is_string() ? v.get<std::string>() : v.dump();
}

u64 Params::count(const std::string& key) const {
    try {
        return parse_count(str(key));
    } catch (const std::exception& e) {
        throw DomainError("--" + key + ": " + e.what());
    }
}

i64 Params::integer(const std::string& key) const {
    const std::string s = str(key);
    try {
        std::size_t used = 0;
        const i64 v = std::stoll(s, &used);
        if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw DomainError("--" + key + ": '" + s + "' is not an integer");
}

double Params::real(const std::string& key) const {
    const std::string s = str(key);
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    return to_double(rational(key));
}

Rational Params::rational(const std::string& key) const {
    try {
        return parse_rational(str(key));
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw DomainError("--" + key + ": " + e.what());
    }
}

std::vector<u64> Params::u64_list(const std::string& key) const { return parse_u64_list(str(key)); }
std::vector<i64> Params::i64_list(const std::string& key) const { return parse_i64_list(str(key)); }

std::vector<u64> parse_u64_list(const std::string& text) {
    std::vector<u64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_count(item));
    }
    return out;
}

std::vector<i64> parse_i64_list(const std::string& text) {
    std::vector<i64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw DomainError("bad integer '" + item + "'");
        } catch (const std::logic_error&) {
            throw DomainError("bad integer '" + item + "'");
        }
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json window_json(const Window& w) {
    return Json{{"lo", w.lo()}, {"hi", w.hi()}, {"count", w.count()}, {"rle_base64", base64_encode(to_rle_binary(w))}};
}

Window window_from_json(const Json& j) {
    Window w = from_rle_binary(base64_decode(j.at("rle_base64").get<std::string>()));
    if (w.lo() != j.at("lo").get<u64>() || w.hi() != j.at("hi").get<u64>())
        throw VerificationError("embedded window range disagrees with its header");
    return w;
}

Json rational_json(const Rational& r) { return to_string(r); }
Rational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

Window parse_set_expr(const std::string& expr, u64 lo, u64 hi) {
    if (hi < lo) throw RangeError("empty set window");
    Window w(lo, hi);
    auto fill_step = [&](u64 start, u64 step) {
        for (u64 x = start; x <= hi; x += step)
            if (x >= lo) w.insert(x);
    };
    if (expr == "all") return Window::full(lo, hi);
    if (expr == "evens") {
        fill_step(2, 2);
    } else if (expr == "odds") {
        fill_step(1, 2);
    } else if (expr.rfind("multiples:", 0) == 0) {
        const u64 c = parse_count(expr.substr(10));
        if (c == 0) throw DomainError("multiples of 0");
        fill_step(c, c);
    } else if (expr.rfind("family:", 0) == 0) {
        return family_window(SetFamily::parse(expr.substr(7)), lo, hi);
    } else if (expr.rfind("range:", 0) == 0) {
        const std::string body = expr.substr(6);
        const auto dots = body.find("..");
        if (dots == std::string::npos) throw DomainError("range needs a..b");
        const u64 a = parse_count(body.substr(0, dots)), b = parse_count(body.substr(dots + 2));
        for (u64 x = std::max(a, lo); x <= std::min(b, hi); ++x) w.insert(x);
    } else {
        for (u64 x : parse_u64_list(expr))
            if (x >= lo && x <= hi) w.insert(x);
    }
    return w;
}

namespace {

int execute(const std::string& command, std::string mode, const std::map<std::string, std::string>& flags,
            const std::string& config_path, const std::string& threads_flag, const std::string& seed_flag,
            const std::string& out_path, const std::string& csv, std::ostream& out, std::ostream& err) {
    const CommandSpec& spec = *find_spec(command);
    std::map<std::string, std::string> file_cfg;
    if (!config_path.empty()) file_cfg = read_config(config_path);
    for (const auto& [key, value] : file_cfg) {
        if (key == "command") {
            if (value != command) throw DomainError("config is for command '" + value + "'");
            continue;
        }
        if (key == "mode" || key == "threads" || key == "seed") continue;
        bool known = false;
        for (const Flag& f : spec.flags) known = known || f.name == key;
        if (!known) throw DomainError("unknown config key '" + key + "'");
    }
    if (mode.empty() && file_cfg.count("mode")) mode = file_cfg.at("mode");
    if (mode.empty()) mode = spec.default_mode;

    Json cfg = Json::object();
    cfg["command"] = command;
    cfg["mode"] = mode;
    for (const Flag& f : spec.flags) {
        std::string v = f.def;
        if (file_cfg.count(f.name)) v = file_cfg.at(f.name);
        if (flags.count(f.name)) v = flags.at(f.name);
        if (v.empty()) v = mode_default(command, mode, f.name);
        cfg[f.name] = v;
    }
    const int threads = resolve_threads(threads_flag, file_cfg);
    std::string seed_text = seed_flag.empty() ? (file_cfg.count("seed") ? file_cfg.at("seed") : "0") : seed_flag;
    const u64 seed = parse_count(seed_text);
    cfg["threads"] = std::to_string(threads);
    cfg["seed"] = std::to_string(seed);
    const Params params(cfg);

    ThreadCapScope scope(threads);
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome = compute(command, mode, params);
    const Json checks = check(command, mode, params, outcome.result);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool all_passed = true;
    for (const Json& c : checks) all_passed = all_passed && c.at("passed").get<bool>();

    Json report = Json::object();
    report["schema"] = kReportSchema;
    report["tool_version"] = kToolVersion;
    report["command"] = command;
    report["mode"] = mode;
    report["full_config"] = cfg;
    report["seed"] = seed;
    report["complete"] = outcome.complete;
    report["result"] = std::move(outcome.result);
    report["checks"] = checks;
    report["all_checks_passed"] = all_passed;
    report["timing"] = {{"wall_seconds", seconds}};

    const std::string text = report.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw DomainError("cannot write '" + out_path + "'");
        f << text;
    } else if (csv.empty()) {
        out << text;
    }
    if (!csv.empty()) write_csv(report["result"], csv, out);
    if (!all_passed) {
        for (const Json& c : checks)
            if (!c.at("passed").get<bool>()) err << "check failed: " << c.at("name").get<std::string>() << "\n";
        return 2;
    }
    return report["complete"].get<bool>() ? 0 : 1;
}

}  // namespace

}  // namespace cli

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
    using namespace cli;
    std::vector<std::string> args = args_in;
    try {
        // "reclab --config file": command and mode come from the file
        if (args.size() >= 2 && args[0] == "--config") {
            std::map<std::string, std::string> cfg;
            std::istringstream in(read_file(args[1]));
            std::string line;
            while (std::getline(in, line)) {
                const auto eq = line.find('=');
                if (eq != std::string::npos) cfg[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
            }
            if (!cfg.count("command")) throw DomainError("config has no command key");
            std::vector<std::string> rebuilt{cfg["command"]};
            if (cfg.count("mode") && !cfg["mode"].empty()) rebuilt.push_back(cfg["mode"]);
            rebuilt.insert(rebuilt.end(), args.begin(), args.end());
            args = rebuilt;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    CLI::App app{"reclab: recurrence and intersectivity workbench"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);
    std::map<std::string, std::map<std::string, std::string>> values;
    std::map<std::string, std::string> modes, config_path, threads, seed, out_path, csv;
    std::map<std::string, CLI::App*> subs;
    for (const CommandSpec& spec : command_specs()) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        subs[spec.name] = sub;
        if (!spec.modes.empty())
            sub->add_option("mode", modes[spec.name], "mode")->check(CLI::IsMember(spec.modes));
        for (const Flag& f : spec.flags) {
            std::string help = f.help;
            if (!f.def.empty()) help += " [default: " + f.def + "]";
            sub->add_option("--" + f.name, values[spec.name][f.name], help);
        }
        if (spec.name != "verify") {
            sub->add_option("--config", config_path[spec.name], "flat key=value config file");
            sub->add_option("--threads", threads[spec.name], "thread cap (else RECURRENCE_LAB_THREADS, else 1)");
            sub->add_option("--seed", seed[spec.name], "seed for randomized searches [default: 0]");
            sub->add_option("--out", out_path[spec.name], "write the JSON report here instead of stdout");
            sub->add_option("--csv", csv[spec.name], "print these result fields as CSV");
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        for (const auto& [name, sub] : subs)
            if (sub->parsed()) {
                err << sub->help();
                return 1;
            }
        err << app.help();
        return 1;
    }

    std::string command;
    for (const auto& [name, sub] : subs)
        if (sub->parsed()) command = name;
    if (subs[command]->get_subcommands().size() > 0) return 1;

    try {
        if (command == "verify") {
            const std::string path = values["verify"]["report"];
            if (path.empty()) throw DomainError("verify needs --report");
            return run_verify(path, out, err);
        }
        std::map<std::string, std::string> given;
        for (const Flag& f : find_spec(command)->flags)
            if (subs[command]->get_option("--" + f.name)->count() > 0) given[f.name] = values[command][f.name];
        return execute(command, modes[command], given, config_path[command], threads[command], seed[command],
                       out_path[command], csv[command], out, err);
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << " (largest feasible: " << e.largest_feasible() << ")\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed report: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace reclab
