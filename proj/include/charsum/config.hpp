#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "charsum/field.hpp"

namespace charsum {

// Experiment description, normally loaded from a JSON config.  The schema
// ships in docs/experiment-config.schema.json; from_json validates against
// it and reports every violation with its JSON path.
struct ExperimentConfig {
    struct Field {
        std::uint64_t p = 0;
        unsigned r = 1;
        std::optional<std::vector<std::uint64_t>> modulus;
    };
    struct Params {
        double lambda = 1.0;
        double kappa = 1.0;
        std::uint64_t seed = 0;
        std::uint64_t budget = 20000;
        std::string strategy = "local-search";
        bool assume_nonlinearity = false;
    };
    struct Output {
        std::string path;          // empty = stdout
        std::string format = "csv";  // csv | json
    };
    // inline element list or a file path
    using SetSpec = std::variant<std::vector<std::uint64_t>, std::string>;

    Field field;
    std::string task;  // verify-identities | double-sum | energy | select-subset |
                       // trace-product | sum-product | construct | bounds-report
    std::map<std::string, SetSpec> sets;  // roles A, B, C, D, S, T
    std::optional<std::string> map;       // rational map, "num / den"
    std::optional<std::string> construction;
    std::optional<std::uint64_t> twist;
    std::optional<std::string> algorithm;  // brute | convolution
    Params params;
    Output output;

    static ExperimentConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

FieldCtx make_field_from_config(const ExperimentConfig::Field& field);
Subset resolve_set(const FieldCtx& ctx, const ExperimentConfig::SetSpec& spec);

const std::vector<std::string>& known_tasks();

}  // namespace charsum
