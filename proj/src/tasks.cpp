#include "charsum/tasks.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "charsum/applications.hpp"
#include "charsum/constructions.hpp"
#include "charsum/energy.hpp"
#include "charsum/select.hpp"
#include "charsum/subset_io.hpp"
#include "charsum/verify.hpp"

namespace charsum {
namespace {

void echo_common(ReportRow& row, const FieldCtx& ctx, const ExperimentConfig& cfg) {
    row.set("task", cfg.task);
    row.set("p", ctx.p());
    row.set("r", ctx.r());
    row.set("q", ctx.q());
    row.set("lambda", cfg.params.lambda);
    row.set("kappa", cfg.params.kappa);
    row.set("seed", cfg.params.seed);
    if (cfg.map) row.set("map", *cfg.map);
    if (cfg.construction) row.set("construction", *cfg.construction);
}

std::string join(const std::vector<std::uint64_t>& values, char sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << sep;
        os << values[i];
    }
    return os.str();
}

nlohmann::json selection_json(const FieldCtx& ctx, const SelectionResult& sel,
                              std::uint64_t d_size) {
    nlohmann::json j;
    j["strategy"] = to_string(sel.strategy);
    j["sizeD"] = d_size;
    j["sizeU"] = sel.u.size();
    j["energyU"] = to_string(sel.energy);
    j["floor"] = sel.size_floor;
    const double d3 = static_cast<double>(d_size);
    j["ratio"] = d_size >= 2
                     ? static_cast<double>(sel.energy) * gain_factor(ctx.q(), d_size) / (d3 * d3 * d3)
                     : 0.0;
    j["lambda"] = sel.lambda;
    j["kappa"] = sel.kappa;
    j["assumed_nonlinearity"] = sel.assumed_nonlinearity;
    return j;
}

}  // namespace

ReportRow tightness_report(const FieldCtx& ctx, const Subset& C, const Subset& D, CharId id,
                           const BoundParams& params) {
    ReportRow row;
    row.set("sizeC", static_cast<std::uint64_t>(C.size()));
    row.set("sizeD", static_cast<std::uint64_t>(D.size()));
    row.set("twist", id.a);
    const double observed = C.empty() || D.empty()
                                ? 0.0
                                : magnitude(double_char_sum(ctx, id, C, D));
    const double classical = classical_bound(C.size(), D.size(), ctx.q());
    const EnergyValue energy_d = additive_energy(ctx, D);
    const double via_energy = D.empty() ? 0.0 : energy_bound(C.size(), energy_d, ctx.q());
    row.set("observed", observed);
    row.set("classical_bound", classical);
    row.set("energy_D", energy_d);
    row.set("energy_bound", via_energy);
    if (D.size() >= 2) {
        row.set("refined_bound", refined_bound(C.size(), D.size(), ctx.q(), params));
    } else {
        row.set("refined_bound", "");
    }
    const auto ratio = [](double num, double den) { return den > 0 ? num / den : 0.0; };
    row.set("ratio_classical", ratio(observed, classical));
    row.set("ratio_energy", ratio(observed, via_energy));
    if (D.size() >= 2) {
        row.set("ratio_refined",
                ratio(observed, refined_bound(C.size(), D.size(), ctx.q(), params)));
    } else {
        row.set("ratio_refined", "");
    }
    return row;
}

int run_experiment(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto started = std::chrono::steady_clock::now();
    int exit_code = 0;
    try {
        const FieldCtx ctx = make_field_from_config(cfg.field);
        const BoundParams params{cfg.params.lambda, cfg.params.kappa};
        Report report;
        nlohmann::json extra;  // task-specific payload for JSON output

        if (cfg.task == "verify-identities") {
            const auto checks = run_identity_checks(ctx, cfg.params.seed, 100);
            bool all = true;
            for (const auto& c : checks) {
                ReportRow row;
                echo_common(row, ctx, cfg);
                row.set("check", c.name);
                row.set("pass", c.pass);
                if (!c.detail.empty()) row.set("detail", c.detail);
                report.add(std::move(row));
                all = all && c.pass;
            }
            if (!all) exit_code = 1;
        } else if (cfg.task == "double-sum") {
            const Subset c = resolve_set(ctx, cfg.sets.at("C"));
            const Subset d = resolve_set(ctx, cfg.sets.at("D"));
            const CharId id{cfg.twist.value_or(1)};
            const CycloSum sum = double_char_sum(ctx, id, c, d);
            ReportRow row;
            echo_common(row, ctx, cfg);
            row.set("twist", id.a);
            row.set("sizeC", static_cast<std::uint64_t>(c.size()));
            row.set("sizeD", static_cast<std::uint64_t>(d.size()));
            row.set("observed", magnitude(sum));
            row.set("classical_bound", classical_bound(c.size(), d.size(), ctx.q()));
            if (const auto exact = sum.as_integer()) row.set("exact_integer", exact->str());
            report.add(std::move(row));
            extra["value"] = cyclo_to_json(sum);
        } else if (cfg.task == "energy") {
            const Subset s = resolve_set(ctx, cfg.sets.at("S"));
            ReportRow row;
            echo_common(row, ctx, cfg);
            row.set("sizeS", static_cast<std::uint64_t>(s.size()));
            const EnergyValue fast = additive_energy(ctx, s);
            row.set("energy", fast);
            if (s.size() <= 20) {
                const EnergyValue brute = additive_energy_bruteforce(ctx, s);
                row.set("energy_brute", brute);
                row.set("agree", fast == brute);
                if (fast != brute) exit_code = 1;
            }
            report.add(std::move(row));
        } else if (cfg.task == "select-subset") {
            const Subset d = resolve_set(ctx, cfg.sets.at("D"));
            const RationalMap f = parse_rational_map(ctx, *cfg.map);
            SelectionOptions opts;
            opts.strategy = strategy_from_string(cfg.params.strategy);
            opts.seed = cfg.params.seed;
            opts.budget = cfg.params.budget;
            opts.assume_nonlinearity = cfg.params.assume_nonlinearity;
            opts.params = params;
            if (opts.strategy == Strategy::ProofRule) {
                opts.split = std::make_pair(resolve_set(ctx, cfg.sets.at("S")),
                                            resolve_set(ctx, cfg.sets.at("T")));
            }
            const SelectionResult sel = select_low_energy_subset(ctx, d, f, opts);
            const nlohmann::json sj = selection_json(ctx, sel, d.size());
            ReportRow row;
            echo_common(row, ctx, cfg);
            row.set("strategy", to_string(sel.strategy));
            row.set("sizeD", static_cast<std::uint64_t>(d.size()));
            row.set("sizeU", static_cast<std::uint64_t>(sel.u.size()));
            row.set("energyU", sel.energy);
            row.set("floor", sel.size_floor);
            row.set("ratio", sj.at("ratio").get<double>());
            row.set("assumed_nonlinearity", sel.assumed_nonlinearity);
            report.add(std::move(row));
            extra["selection"] = sj;
            extra["U"] = subset_to_json(ctx, sel.u);
        } else if (cfg.task == "trace-product") {
            const Subset c = resolve_set(ctx, cfg.sets.at("C"));
            const Subset d = resolve_set(ctx, cfg.sets.at("D"));
            const TraceProfile profile = trace_profile(ctx, c, d);
            const TraceCover cover = trace_product_covers(ctx, c, d);
            ReportRow row;
            echo_common(row, ctx, cfg);
            row.set("sizeC", static_cast<std::uint64_t>(c.size()));
            row.set("sizeD", static_cast<std::uint64_t>(d.size()));
            row.set("covers", cover.covers);
            row.set("missing", join(cover.missing, ';'));
            row.set("pairs", profile.total());
            const auto baseline = baseline_trace_conditions(c.size(), d.size(), ctx.p(), ctx.q());
            row.set("baseline_full_cover", baseline.full_cover);
            row.set("baseline_nonzero_cover", baseline.nonzero_cover);
            if (d.size() >= 2) {
                row.set("refined_condition",
                        trace_cover_condition(c.size(), d.size(), ctx.p(), ctx.q(), params));
            }
            report.add(std::move(row));
            nlohmann::json counts = nlohmann::json::array();
            for (const u128& n : profile.counts) counts.push_back(to_string(n));
            extra["trace_counts"] = std::move(counts);
        } else if (cfg.task == "sum-product") {
            const Subset a = resolve_set(ctx, cfg.sets.at("A"));
            const Subset b = resolve_set(ctx, cfg.sets.at("B"));
            const Subset c = resolve_set(ctx, cfg.sets.at("C"));
            const Subset d = resolve_set(ctx, cfg.sets.at("D"));
            const CountAlgorithm algo = cfg.algorithm.value_or("convolution") == "brute"
                                            ? CountAlgorithm::Brute
                                            : CountAlgorithm::Convolution;
            const SumProductCount n = count_sum_product(ctx, a, b, c, d, algo);
            ReportRow row;
            echo_common(row, ctx, cfg);
            row.set("sizeA", static_cast<std::uint64_t>(a.size()));
            row.set("sizeB", static_cast<std::uint64_t>(b.size()));
            row.set("sizeC", static_cast<std::uint64_t>(c.size()));
            row.set("sizeD", static_cast<std::uint64_t>(d.size()));
            row.set("algorithm", algo == CountAlgorithm::Brute ? "brute" : "convolution");
            row.set("solutions", n.n);
            if (d.size() >= 2) {
                row.set("condition",
                        sum_product_condition(a.size(), b.size(), c.size(), d.size(), ctx.q(),
                                              params));
            }
            report.add(std::move(row));
        } else if (cfg.task == "construct") {
            const NamedConstruction nc = build_construction(ctx, *cfg.construction);
            const ConstructionCheck check = verify_construction(ctx, nc, cfg.params.seed);
            ReportRow row;
            echo_common(row, ctx, cfg);
            row.set("construction", nc.name);
            for (const auto& [role, subset] : nc.sets)
                row.set("size" + role, static_cast<std::uint64_t>(subset.size()));
            if (nc.twist) row.set("twist", *nc.twist);
            for (const auto& [k, v] : check.facts) row.set(k, v);
            row.set("verified", check.ok);
            report.add(std::move(row));
            if (!check.ok) exit_code = 1;
            nlohmann::json sets = nlohmann::json::object();
            for (const auto& [role, subset] : nc.sets) sets[role] = subset_to_json(ctx, subset);
            extra["sets"] = std::move(sets);
            if (nc.twist) extra["twist"] = *nc.twist;
            nlohmann::json cparams = nlohmann::json::object();
            for (const auto& [k, v] : nc.params) cparams[k] = v;
            extra["params"] = std::move(cparams);
        } else if (cfg.task == "bounds-report") {
            const Subset c = resolve_set(ctx, cfg.sets.at("C"));
            const Subset d = resolve_set(ctx, cfg.sets.at("D"));
            const CharId id{cfg.twist.value_or(1)};
            ReportRow row = tightness_report(ctx, c, d, id, params);
            ReportRow full;
            echo_common(full, ctx, cfg);
            for (const auto& [k, v] : row.entries()) full.set(k, v);
            report.add(std::move(full));
        } else {
            throw ValidationError("unknown task '" + cfg.task + "'");
        }

        // serialize
        std::string payload;
        if (cfg.output.format == "json") {
            nlohmann::json j = report.to_json();
            j["config"] = cfg.to_json();
            for (auto& [k, v] : extra.items()) j[k] = std::move(v);
            payload = j.dump(2) + "\n";
        } else {
            payload = report.to_csv();
        }
        if (cfg.output.path.empty()) {
            out << payload;
        } else {
            write_atomic(cfg.output.path, payload);
        }
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
        err << "task " << cfg.task << " finished in " << elapsed << " ms\n";
        return exit_code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.exit_code();
    }
}

}  // namespace charsum
