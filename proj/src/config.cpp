#include "charsum/config.hpp"

#include <algorithm>

#include "charsum/subset_io.hpp"

namespace charsum {
namespace {

class Violations {
public:
    void add(const std::string& path, const std::string& what) {
        items_.push_back(path + ": " + what);
    }
    bool empty() const { return items_.empty(); }
    [[noreturn]] void raise() const {
        std::string msg = "config validation failed";
        for (const auto& item : items_) msg += "\n  " + item;
        throw ValidationError(msg);
    }
    std::vector<std::string> items_;
};

bool get_u64(const nlohmann::json& j, std::uint64_t& out) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        return false;
    out = j.get<std::uint64_t>();
    return true;
}

}  // namespace

const std::vector<std::string>& known_tasks() {
    static const std::vector<std::string> tasks = {
        "verify-identities", "double-sum",  "energy",    "select-subset",
        "trace-product",     "sum-product", "construct", "bounds-report",
    };
    return tasks;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    Violations bad;

    if (!j.is_object()) {
        bad.add("/", "config must be a JSON object");
        bad.raise();
    }

    // field
    if (!j.contains("field") || !j.at("field").is_object()) {
        bad.add("/field", "required object with p and r");
    } else {
        const auto& f = j.at("field");
        if (!f.contains("p") || !get_u64(f.at("p"), cfg.field.p))
            bad.add("/field/p", "required nonnegative integer");
        std::uint64_t r = 1;
        if (f.contains("r")) {
            if (!get_u64(f.at("r"), r)) bad.add("/field/r", "must be a positive integer");
        }
        cfg.field.r = static_cast<unsigned>(r);
        if (f.contains("modulus")) {
            if (!f.at("modulus").is_array()) {
                bad.add("/field/modulus", "must be an integer array");
            } else {
                std::vector<std::uint64_t> mod;
                bool ok = true;
                for (const auto& c : f.at("modulus")) {
                    std::uint64_t v;
                    if (!get_u64(c, v)) { ok = false; break; }
                    mod.push_back(v);
                }
                if (!ok) bad.add("/field/modulus", "entries must be nonnegative integers");
                else cfg.field.modulus = std::move(mod);
            }
        }
    }

    // task
    if (!j.contains("task") || !j.at("task").is_string()) {
        bad.add("/task", "required string");
    } else {
        cfg.task = j.at("task").get<std::string>();
        const auto& tasks = known_tasks();
        if (std::find(tasks.begin(), tasks.end(), cfg.task) == tasks.end())
            bad.add("/task", "unknown task '" + cfg.task + "'");
    }

    // sets
    if (j.contains("sets")) {
        if (!j.at("sets").is_object()) {
            bad.add("/sets", "must be an object mapping roles to arrays or file paths");
        } else {
            for (const auto& [role, spec] : j.at("sets").items()) {
                if (spec.is_string()) {
                    cfg.sets[role] = spec.get<std::string>();
                } else if (spec.is_array()) {
                    std::vector<std::uint64_t> vals;
                    bool ok = true;
                    for (const auto& v : spec) {
                        std::uint64_t x;
                        if (!get_u64(v, x)) { ok = false; break; }
                        vals.push_back(x);
                    }
                    if (!ok) bad.add("/sets/" + role, "entries must be nonnegative integers");
                    else cfg.sets[role] = std::move(vals);
                } else {
                    bad.add("/sets/" + role, "must be an array or a file path string");
                }
            }
        }
    }

    if (j.contains("map")) {
        if (!j.at("map").is_string()) bad.add("/map", "must be a string 'num / den'");
        else cfg.map = j.at("map").get<std::string>();
    }
    if (j.contains("construction")) {
        if (!j.at("construction").is_string()) bad.add("/construction", "must be a string");
        else cfg.construction = j.at("construction").get<std::string>();
    }
    if (j.contains("twist")) {
        std::uint64_t t;
        if (!get_u64(j.at("twist"), t)) bad.add("/twist", "must be a nonnegative integer");
        else cfg.twist = t;
    }
    if (j.contains("algorithm")) {
        if (!j.at("algorithm").is_string()) {
            bad.add("/algorithm", "must be 'brute' or 'convolution'");
        } else {
            cfg.algorithm = j.at("algorithm").get<std::string>();
            if (*cfg.algorithm != "brute" && *cfg.algorithm != "convolution")
                bad.add("/algorithm", "must be 'brute' or 'convolution'");
        }
    }

    if (j.contains("params")) {
        const auto& p = j.at("params");
        if (!p.is_object()) {
            bad.add("/params", "must be an object");
        } else {
            if (p.contains("lambda")) {
                if (!p.at("lambda").is_number()) bad.add("/params/lambda", "must be a number");
                else cfg.params.lambda = p.at("lambda").get<double>();
            }
            if (p.contains("kappa")) {
                if (!p.at("kappa").is_number()) bad.add("/params/kappa", "must be a number");
                else cfg.params.kappa = p.at("kappa").get<double>();
            }
            if (p.contains("seed") && !get_u64(p.at("seed"), cfg.params.seed))
                bad.add("/params/seed", "must be a nonnegative integer");
            if (p.contains("budget") && !get_u64(p.at("budget"), cfg.params.budget))
                bad.add("/params/budget", "must be a nonnegative integer");
            if (p.contains("strategy")) {
                if (!p.at("strategy").is_string()) {
                    bad.add("/params/strategy", "must be a string");
                } else {
                    cfg.params.strategy = p.at("strategy").get<std::string>();
                    if (cfg.params.strategy != "exhaustive" && cfg.params.strategy != "local-search" &&
                        cfg.params.strategy != "proof-rule")
                        bad.add("/params/strategy", "must be exhaustive, local-search or proof-rule");
                }
            }
            if (p.contains("assume_nonlinearity")) {
                if (!p.at("assume_nonlinearity").is_boolean())
                    bad.add("/params/assume_nonlinearity", "must be a boolean");
                else cfg.params.assume_nonlinearity = p.at("assume_nonlinearity").get<bool>();
            }
        }
    }

    if (j.contains("output")) {
        const auto& o = j.at("output");
        if (!o.is_object()) {
            bad.add("/output", "must be an object");
        } else {
            if (o.contains("path")) {
                if (!o.at("path").is_string()) bad.add("/output/path", "must be a string");
                else cfg.output.path = o.at("path").get<std::string>();
            }
            if (o.contains("format")) {
                if (!o.at("format").is_string()) {
                    bad.add("/output/format", "must be 'csv' or 'json'");
                } else {
                    cfg.output.format = o.at("format").get<std::string>();
                    if (cfg.output.format != "csv" && cfg.output.format != "json")
                        bad.add("/output/format", "must be 'csv' or 'json'");
                }
            }
        }
    }

    // task-specific requirements
    const auto need_set = [&](const char* role) {
        if (!cfg.sets.count(role))
            bad.add(std::string("/sets/") + role, "required for task '" + cfg.task + "'");
    };
    if (cfg.task == "double-sum" || cfg.task == "trace-product" || cfg.task == "bounds-report") {
        need_set("C");
        need_set("D");
    } else if (cfg.task == "energy") {
        need_set("S");
    } else if (cfg.task == "select-subset") {
        need_set("D");
        if (!cfg.map) bad.add("/map", "required for task 'select-subset'");
        if (cfg.params.strategy == "proof-rule") {
            need_set("S");
            need_set("T");
        }
    } else if (cfg.task == "sum-product") {
        need_set("A");
        need_set("B");
        need_set("C");
        need_set("D");
    } else if (cfg.task == "construct") {
        if (!cfg.construction) bad.add("/construction", "required for task 'construct'");
    }

    if (!bad.empty()) bad.raise();
    return cfg;
}

nlohmann::json ExperimentConfig::to_json() const {
    nlohmann::json j;
    j["field"]["p"] = field.p;
    j["field"]["r"] = field.r;
    if (field.modulus) j["field"]["modulus"] = *field.modulus;
    j["task"] = task;
    if (!sets.empty()) {
        nlohmann::json s = nlohmann::json::object();
        for (const auto& [role, spec] : sets) {
            if (std::holds_alternative<std::string>(spec)) s[role] = std::get<std::string>(spec);
            else s[role] = std::get<std::vector<std::uint64_t>>(spec);
        }
        j["sets"] = std::move(s);
    }
    if (map) j["map"] = *map;
    if (construction) j["construction"] = *construction;
    if (twist) j["twist"] = *twist;
    if (algorithm) j["algorithm"] = *algorithm;
    j["params"] = {{"lambda", params.lambda},
                   {"kappa", params.kappa},
                   {"seed", params.seed},
                   {"budget", params.budget},
                   {"strategy", params.strategy},
                   {"assume_nonlinearity", params.assume_nonlinearity}};
    if (!output.path.empty() || output.format != "csv")
        j["output"] = {{"path", output.path}, {"format", output.format}};
    return j;
}

FieldCtx make_field_from_config(const ExperimentConfig::Field& field) {
    if (field.modulus) return FieldCtx::make(field.p, field.r, *field.modulus);
    return FieldCtx::make(field.p, field.r);
}

Subset resolve_set(const FieldCtx& ctx, const ExperimentConfig::SetSpec& spec) {
    if (std::holds_alternative<std::string>(spec))
        return load_subset(ctx, std::get<std::string>(spec));
    return Subset::of(ctx, std::get<std::vector<std::uint64_t>>(spec));
}

}  // namespace charsum
