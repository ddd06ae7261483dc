// charsum: exact double character sums over finite fields, additive energy,
// subset selection, trace products and sum-product counting, from flags or
// JSON experiment configs.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "charsum/config.hpp"
#include "charsum/field.hpp"
#include "charsum/subset_io.hpp"
#include "charsum/tasks.hpp"

namespace {

using charsum::ExperimentConfig;

struct CommonFlags {
    std::uint64_t p = 0;
    unsigned r = 1;
    std::string modulus;
    std::string config_path;
    std::string output_path;
    std::string format = "csv";
    double lambda = 1.0;
    double kappa = 1.0;
    std::uint64_t seed = 0;
    std::uint64_t budget = 20000;
    std::string strategy = "local-search";
    bool assume_nonlinearity = false;
    std::string map;
    std::string construction;
    std::int64_t twist = -1;
    std::string algorithm;
    std::map<std::string, std::string> sets;
};

void add_field_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--p", f.p, "field characteristic (prime)");
    cmd->add_option("--r", f.r, "extension degree");
    cmd->add_option("--modulus", f.modulus,
                    "modulus coefficients c0,...,cr (constant term first, monic)");
    cmd->add_option("--config", f.config_path, "JSON experiment config; overrides flags");
    cmd->add_option("--output", f.output_path, "report path (stdout when omitted)");
    cmd->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--lambda", f.lambda, "implied constant lambda");
    cmd->add_option("--kappa", f.kappa, "implied constant kappa");
    cmd->add_option("--seed", f.seed, "seed for every random choice");
}

void add_set_flag(CLI::App* cmd, CommonFlags& f, const std::string& role) {
    cmd->add_option("--" + role, f.sets[role],
                    "set " + role + ": comma-separated encodings or a subset file");
}

bool looks_inline(const std::string& text) {
    if (text.empty()) return false;
    for (char c : text) {
        if (!(c >= '0' && c <= '9') && c != ',' && c != ' ') return false;
    }
    return true;
}

nlohmann::json flags_to_json(const CommonFlags& f, const std::string& task) {
    nlohmann::json j;
    j["task"] = task;
    j["field"]["p"] = f.p;
    j["field"]["r"] = f.r;
    if (!f.modulus.empty()) {
        std::vector<std::uint64_t> mod;
        std::string token;
        std::istringstream is(f.modulus);
        while (std::getline(is, token, ',')) mod.push_back(std::stoull(token));
        j["field"]["modulus"] = mod;
    }
    nlohmann::json sets = nlohmann::json::object();
    for (const auto& [role, text] : f.sets) {
        if (text.empty()) continue;
        if (looks_inline(text)) {
            std::vector<std::uint64_t> vals;
            std::string token;
            std::istringstream is(text);
            while (std::getline(is, token, ',')) vals.push_back(std::stoull(token));
            sets[role] = vals;
        } else {
            sets[role] = text;
        }
    }
    if (!sets.empty()) j["sets"] = std::move(sets);
    if (!f.map.empty()) j["map"] = f.map;
    if (!f.construction.empty()) j["construction"] = f.construction;
    if (f.twist >= 0) j["twist"] = static_cast<std::uint64_t>(f.twist);
    if (!f.algorithm.empty()) j["algorithm"] = f.algorithm;
    j["params"] = {{"lambda", f.lambda},       {"kappa", f.kappa},
                   {"seed", f.seed},           {"budget", f.budget},
                   {"strategy", f.strategy},   {"assume_nonlinearity", f.assume_nonlinearity}};
    j["output"] = {{"path", f.output_path}, {"format", f.format}};
    return j;
}

int run_task(const CommonFlags& f, const std::string& task) {
    try {
        nlohmann::json j = flags_to_json(f, task);
        if (!f.config_path.empty()) {
            std::ifstream in(f.config_path);
            if (!in) {
                std::cerr << "error: cannot open config '" << f.config_path << "'\n";
                return 2;
            }
            nlohmann::json file_cfg;
            try {
                in >> file_cfg;
            } catch (const nlohmann::json::exception& e) {
                std::cerr << "error: config is not valid JSON: " << e.what() << "\n";
                return 2;
            }
            // config wins over flags, key by key
            j.merge_patch(file_cfg);
        }
        const ExperimentConfig cfg = ExperimentConfig::from_json(j);
        return charsum::run_experiment(cfg, std::cout, std::cerr);
    } catch (const charsum::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    }
}

int run_field_info(const CommonFlags& f) {
    try {
        const charsum::FieldCtx ctx = f.modulus.empty()
            ? charsum::FieldCtx::make(f.p, f.r)
            : charsum::FieldCtx::make(f.p, f.r, [&] {
                  std::vector<std::uint64_t> mod;
                  std::string token;
                  std::istringstream is(f.modulus);
                  while (std::getline(is, token, ',')) mod.push_back(std::stoull(token));
                  return mod;
              }());
        nlohmann::json j;
        j["p"] = ctx.p();
        j["r"] = ctx.r();
        j["q"] = ctx.q();
        j["modulus"] = ctx.modulus();
        j["generator_x"] = ctx.gen_x();
        j["trace_fiber_size"] = ctx.q() / ctx.p();
        std::cout << j.dump(2) << "\n";
        return 0;
    } catch (const charsum::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact additive character sums over finite fields"};
    app.require_subcommand(1);

    CommonFlags f;

    CLI::App* info = app.add_subcommand("field-info", "describe a field context");
    add_field_flags(info, f);

    CLI::App* energy = app.add_subcommand("energy", "additive energy of a set");
    add_field_flags(energy, f);
    add_set_flag(energy, f, "S");

    CLI::App* dsum = app.add_subcommand("double-sum", "exact double character sum over C x D");
    add_field_flags(dsum, f);
    add_set_flag(dsum, f, "C");
    add_set_flag(dsum, f, "D");
    dsum->add_option("--twist", f.twist, "character index a (default 1)");

    CLI::App* find = app.add_subcommand("find-subset", "select a low-energy subset of D");
    add_field_flags(find, f);
    add_set_flag(find, f, "D");
    add_set_flag(find, f, "S");
    add_set_flag(find, f, "T");
    find->add_option("--map", f.map, "rational self-map of D, 'num / den'");
    find->add_option("--strategy", f.strategy, "exhaustive, local-search or proof-rule")
        ->check(CLI::IsMember({"exhaustive", "local-search", "proof-rule"}));
    find->add_option("--budget", f.budget, "local-search evaluation budget");
    find->add_flag("--assume-nonlinearity", f.assume_nonlinearity,
                   "proceed when the nonlinearity status is Unknown");

    CLI::App* tprod = app.add_subcommand("trace-product", "trace products Tr(cd) over C x D");
    add_field_flags(tprod, f);
    add_set_flag(tprod, f, "C");
    add_set_flag(tprod, f, "D");

    CLI::App* sprod = app.add_subcommand("sum-product", "count solutions of a + b = cd");
    add_field_flags(sprod, f);
    add_set_flag(sprod, f, "A");
    add_set_flag(sprod, f, "B");
    add_set_flag(sprod, f, "C");
    add_set_flag(sprod, f, "D");
    sprod->add_option("--algorithm", f.algorithm, "brute or convolution")
        ->check(CLI::IsMember({"brute", "convolution"}));

    CLI::App* cons = app.add_subcommand("construct", "build a named example family");
    add_field_flags(cons, f);
    cons->add_option("name", f.construction, "one of the registered construction names");

    CLI::App* verify = app.add_subcommand("verify", "run the identity self-checks");
    add_field_flags(verify, f);

    CLI::App* report = app.add_subcommand("report", "bound-tightness report over C x D");
    add_field_flags(report, f);
    add_set_flag(report, f, "C");
    add_set_flag(report, f, "D");
    report->add_option("--twist", f.twist, "character index a (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    // constructions are set-valued: JSON unless the user asked otherwise
    if (cons->parsed() && cons->count("--format") == 0) f.format = "json";

    if (info->parsed()) return run_field_info(f);
    if (energy->parsed()) return run_task(f, "energy");
    if (dsum->parsed()) return run_task(f, "double-sum");
    if (find->parsed()) return run_task(f, "select-subset");
    if (tprod->parsed()) return run_task(f, "trace-product");
    if (sprod->parsed()) return run_task(f, "sum-product");
    if (cons->parsed()) return run_task(f, "construct");
    if (verify->parsed()) return run_task(f, "verify-identities");
    if (report->parsed()) return run_task(f, "bounds-report");
    return 2;
}
