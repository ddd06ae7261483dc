#include "doctest.h"

#include <sstream>

#include "charsum/config.hpp"
#include "charsum/report.hpp"
#include "charsum/rng.hpp"
#include "charsum/subset_io.hpp"
#include "charsum/tasks.hpp"

using namespace charsum;

TEST_CASE("subset text round-trip with header checking") {
    const FieldCtx ctx = FieldCtx::make(3, 4);
    Rng rng(1);
    const Subset s = Subset::of(ctx, sample_distinct(rng, ctx.q(), 10));

    std::stringstream buf;
    write_subset_text(buf, ctx, s);
    CHECK(read_subset_text(buf, ctx) == s);

    // a different field rejects the header
    const FieldCtx other = FieldCtx::make(5, 2);
    std::stringstream buf2;
    write_subset_text(buf2, ctx, s);
    CHECK_THROWS_AS(read_subset_text(buf2, other), ValidationError);

    // missing header is rejected
    std::stringstream bare("1\n2\n");
    CHECK_THROWS_AS(read_subset_text(bare, ctx), ValidationError);
}

TEST_CASE("subset json round-trip") {
    const FieldCtx ctx = FieldCtx::make(2, 5);
    Rng rng(2);
    const Subset s = Subset::of(ctx, sample_distinct(rng, ctx.q(), 7));
    const nlohmann::json j = subset_to_json(ctx, s);
    CHECK(j.at("p") == 2);
    CHECK(subset_from_json(ctx, j) == s);
    CHECK_THROWS_AS(subset_from_json(ctx, nlohmann::json::array()), ValidationError);
}

TEST_CASE("cyclo json uses canonical coefficients") {
    const CycloSum s = CycloSum::from_coeffs(3, {BigInt(5), BigInt(2), BigInt(2)});
    const nlohmann::json j = cyclo_to_json(s);
    CHECK(j.at("p") == 3);
    CHECK(j.at("coeffs") == nlohmann::json::array({3, 0, 0}));
}

TEST_CASE("config validation reports json paths") {
    CHECK_THROWS_AS(ExperimentConfig::from_json(nlohmann::json::object()), ValidationError);
    try {
        ExperimentConfig::from_json({{"task", "energy"}});
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("/field") != std::string::npos);
        CHECK(msg.find("/sets/S") != std::string::npos);
    }
    try {
        ExperimentConfig::from_json(
            {{"task", "no-such-task"}, {"field", {{"p", 3}, {"r", 4}}}});
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("/task") != std::string::npos);
    }
}

TEST_CASE("config round-trip preserves the fields that matter") {
    nlohmann::json j = {
        {"task", "double-sum"},
        {"field", {{"p", 3}, {"r", 4}}},
        {"sets", {{"C", {0, 1, 2}}, {"D", {3, 4}}}},
        {"twist", 5},
        {"params", {{"lambda", 2.0}, {"seed", 9}}},
    };
    const ExperimentConfig cfg = ExperimentConfig::from_json(j);
    CHECK(cfg.field.p == 3);
    CHECK(cfg.params.lambda == 2.0);
    CHECK(cfg.params.seed == 9);
    CHECK(cfg.twist.value() == 5);
    const ExperimentConfig again = ExperimentConfig::from_json(cfg.to_json());
    CHECK(again.task == cfg.task);
    CHECK(again.params.lambda == cfg.params.lambda);
}

TEST_CASE("reports serialize deterministically") {
    const auto build = [] {
        Report report;
        ReportRow row;
        row.set("p", std::uint64_t{3});
        row.set("value", 0.1 + 0.2);
        row.set("note", "a,b \"quoted\"");
        report.add(row);
        ReportRow second;
        second.set("p", std::uint64_t{3});
        second.set("extra", std::uint64_t{7});
        report.add(second);
        return report;
    };
    CHECK(build().to_csv() == build().to_csv());
    CHECK(build().to_json() == build().to_json());
    // union of columns in first-seen order, missing cells empty
    const std::string csv = build().to_csv();
    CHECK(csv.find("p,value,note,extra") == 0);
}

TEST_CASE("tightness report columns") {
    const FieldCtx ctx = FieldCtx::make(11, 2);
    Rng rng(3);
    const Subset c = Subset::of(ctx, sample_distinct(rng, ctx.q(), 12));
    const Subset d = Subset::of(ctx, sample_distinct(rng, ctx.q(), 9));
    const ReportRow row = tightness_report(ctx, c, d, CharId{1}, BoundParams{});
    const auto get = [&](const char* k) {
        const std::string* v = row.find(k);
        REQUIRE(v != nullptr);
        return std::stod(*v);
    };
    CHECK(get("observed") <= get("classical_bound") * (1 + 1e-9));
    CHECK(get("observed") <= get("energy_bound") * (1 + 1e-9));
    CHECK(get("ratio_classical") <= 1.0 + 1e-9);
    CHECK(get("ratio_energy") <= 1.0 + 1e-9);

    // empty C: observed 0 and all ratios 0
    const ReportRow empty_row = tightness_report(ctx, Subset(), d, CharId{1}, BoundParams{});
    CHECK(*empty_row.find("observed") == format_double(0.0));
    CHECK(*empty_row.find("ratio_classical") == format_double(0.0));
    CHECK(*empty_row.find("ratio_refined") == format_double(0.0));
}

TEST_CASE("experiment runner is byte-deterministic for a fixed seed") {
    nlohmann::json j = {
        {"task", "verify-identities"},
        {"field", {{"p", 3}, {"r", 2}}},
        {"params", {{"seed", 5}}},
    };
    const ExperimentConfig cfg = ExperimentConfig::from_json(j);
    std::ostringstream out1, err1, out2, err2;
    const int rc1 = run_experiment(cfg, out1, err1);
    const int rc2 = run_experiment(cfg, out2, err2);
    CHECK(rc1 == 0);
    CHECK(rc2 == 0);
    CHECK(out1.str() == out2.str());
    CHECK(!out1.str().empty());
}
