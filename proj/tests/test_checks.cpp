#include <doctest.h>

#include "modcubic/checks.hpp"

using namespace modcubic::checks;

namespace {

Options test_options() {
    Options opt;
    opt.data_dir = MODCUBIC_DATA_DIR;
    return opt;
}

}  // namespace

TEST_CASE("glob matching") {
    CHECK(glob_match("all", "anything.x"));
    CHECK(glob_match("*", "ledger.k_obg_4"));
    CHECK(glob_match("ledger.*", "ledger.k_obg_4"));
    CHECK_FALSE(glob_match("ledger.*", "wps.k_bbg_4"));
    CHECK(glob_match("luna.transversality", "luna.transversality"));
    CHECK(glob_match("*.k_*", "ledger.k_obg_4"));
    CHECK_FALSE(glob_match("kernel.?", "kernel.ab"));
}

TEST_CASE("fixtures parse and pin the built-in data") {
    auto toric = modcubic::fixtures::load_toric(MODCUBIC_DATA_DIR);
    CHECK(toric.gamma == modcubic::toric::gamma_matrix());
    CHECK(toric.kernel_basis == modcubic::toric::reference_kernel_basis());
    CHECK(toric.tau == modcubic::toric::tau_matrix());
    CHECK(toric.sigma == modcubic::toric::sigma_matrix());
    CHECK(toric.character == modcubic::toric::character_offsets());
    CHECK(toric.vertices.size() == 8);

    auto constants = modcubic::fixtures::load_constants(MODCUBIC_DATA_DIR);
    CHECK(constants.at("weyl_e6_order").as_int() == 51840);
    CHECK(constants.at("marked_cusps").as_int() == 40);
    CHECK(constants.at("restriction_nodal_marked").as_triple() ==
          std::array<long long, 3>{3, 3, 3});
    for (const auto& [name, c] : constants.by_name) {
        CHECK_FALSE(c.paper_ref.empty());
        CHECK_FALSE(c.quote.empty());
    }

    auto table2 = modcubic::fixtures::load_table2(MODCUBIC_DATA_DIR);
    CHECK(table2.rows.size() == 10);
    for (const auto& row : table2.rows) {
        CHECK(row.pattern.size() == 6);
        // orbit-family dimension: projectivize and quotient by the 2-torus
        long long stars = std::count(row.pattern.begin(), row.pattern.end(), '*');
        CHECK(stars - 3 == row.torus_dim);
    }
}

TEST_CASE("full registry passes") {
    auto registry = build_registry(test_options());
    CHECK(registry.size() >= 45);
    auto results = run_checks(registry, "all", 4, 30000);
    REQUIRE(results.size() == registry.size());
    for (const auto& r : results) {
        INFO(r.check_id, ": expected [", r.expected, "] computed [", r.computed, "]");
        CHECK(r.status == "pass");
    }
    CHECK(exit_code(results) == 0);
}

TEST_CASE("filters select subsets deterministically") {
    auto registry = build_registry(test_options());
    auto ledger = run_checks(registry, "ledger.*");
    CHECK(ledger.size() >= 10);
    for (const auto& r : ledger) CHECK(r.check_id.rfind("ledger.", 0) == 0);

    auto single = run_checks(registry, "luna.transversality");
    REQUIRE(single.size() == 1);
    CHECK(single[0].status == "pass");
    CHECK(single[0].computed.find("tangential order 2") != std::string::npos);

    auto none = run_checks(registry, "nonexistent.*");
    CHECK(none.empty());
}

TEST_CASE("reports are deterministic and carry the quotes") {
    auto registry = build_registry(test_options());
    auto results = run_checks(registry, "wps.*");
    std::string json1 = emit_json(results);
    auto results2 = run_checks(registry, "wps.*", 3);
    std::string json2 = emit_json(results2);
    CHECK(json1 == json2);
    CHECK(json1.back() == '\n');
    CHECK(json1.find("\"runtime_ms\"") == std::string::npos);  // byte-identical across runs

    auto doc = nlohmann::json::parse(json1);
    CHECK(doc.at("version") == 1);
    CHECK(doc.at("results").size() == results.size());

    std::string md = emit_markdown(results);
    CHECK(md.find("## wps") != std::string::npos);
    CHECK(md.find("has canonical singularities") != std::string::npos);
    // status counts: all pass
    CHECK(md.find("| fail |") == std::string::npos);
}

TEST_CASE("failing and inconclusive checks are reported") {
    std::vector<Check> fake = {
        {"demo.bad", "ref", "quote", "1", [] { return std::string("2"); }},
        {"demo.inconclusive", "ref", "quote", "x",
         [] { return std::string("inconclusive: cannot separate"); }},
        {"demo.throws", "ref", "quote", "ok",
         []() -> std::string { throw std::runtime_error("boom"); }},
    };
    auto results = run_checks(fake, "all");
    REQUIRE(results.size() == 3);
    CHECK(results[0].status == "fail");
    CHECK(results[1].status == "inconclusive");
    CHECK(results[2].status == "fail");
    CHECK(results[2].computed == "error: boom");
    CHECK(exit_code(results) == 1);
}

TEST_CASE("timeouts mark the check failed") {
    std::vector<Check> slow = {{"demo.slow", "ref", "quote", "done", [] {
                                    std::this_thread::sleep_for(std::chrono::milliseconds(300));
                                    return std::string("done");
                                }}};
    auto results = run_checks(slow, "all", 1, 50);
    REQUIRE(results.size() == 1);
    CHECK(results[0].status == "fail");
    CHECK(results[0].computed == "timeout");
}
