#include "weylverify/batch.hpp"

#include <doctest.h>

#include <algorithm>

using namespace wv;

namespace {

RunConfig small(std::set<int> families, int max_size) {
    RunConfig c;
    c.families = std::move(families);
    c.max_size = max_size;
    return c;
}

}  // namespace

TEST_CASE("JSON round trip") {
    auto rs = run_batch(small({1, 5, 6, 7, 8}, 5));
    REQUIRE(!rs.empty());
    CHECK(parse_json(emit_json(rs)) == rs);
    for (const auto& r : rs) CHECK(parse_json(emit_json(r)).front() == r);
}

TEST_CASE("family 1 m = n = 3 final weights in the omega basis") {
    ReportRecord r = run_one({1, 3, 3, TorusChoice::full()}, 2);
    std::string j = emit_json(r);
    CHECK(r.status == Status::Pass);
    CHECK(r.final_set.size() == static_cast<std::size_t>(r.d_w));
    CHECK(std::find(r.final_set.begin(), r.final_set.end(), make_vec({2, -1, 0, 2, -1, 0})) != r.final_set.end());
    CHECK(std::find(r.final_set.begin(), r.final_set.end(), make_vec({-1, 2, -1, -1, 2, -1})) != r.final_set.end());
    CHECK(j.find("\"status\": \"PASS\"") != std::string::npos);
}

TEST_CASE("CSV has a header naming every column") {
    auto rs = run_batch(small({2}, 4));
    std::string csv = emit_csv(rs);
    const std::string header = csv_header();
    CHECK(csv.rfind(header + "\n", 0) == 0);
    auto header_cols = std::count(header.begin(), header.end(), ',');
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(rs.size()) + 1);
    std::string first_row = csv.substr(csv.find('\n') + 1);
    first_row = first_row.substr(0, first_row.find('\n'));
    // the final column holds ';'-separated weights and has no comma
    CHECK(std::count(first_row.begin(), first_row.end(), ',') == header_cols);
}

TEST_CASE("output is deterministic and independent of the worker count") {
    RunConfig c = small({1, 2, 3, 4, 5, 6, 7, 8}, 5);
    c.jobs = 1;
    std::string a = emit(run_batch(c), Format::Json);
    c.jobs = 4;
    std::string b = emit(run_batch(c), Format::Json);
    std::string again = emit(run_batch(c), Format::Json);
    CHECK(a == b);
    CHECK(b == again);
    CHECK(emit(run_batch(c), Format::Table) == emit(run_batch(c), Format::Table));
}

TEST_CASE("families 1 to 3 up to size 6 report no failure") {
    auto rs = run_batch(small({1, 2, 3}, 6));
    CHECK(exit_code(rs) == 0);
    for (const auto& r : rs) {
        CHECK(r.status != Status::Fail);
        // the only surplus is the family 1 derived-group option
        if (r.status == Status::Surplus) CHECK((r.instance.family == 1 && r.instance.torus.kind == TorusKind::Derived));
    }
}

TEST_CASE("family 5 n = 5 across a in -2..2") {
    RunConfig c = small({5}, 5);
    c.torus_lo = -2;
    c.torus_hi = 2;
    auto rs = run_batch(c);
    std::vector<ReportRecord> params;
    for (const auto& r : rs)
        if (r.instance.n == 5 && r.instance.torus.kind == TorusKind::Param) params.push_back(r);
    CHECK(params.size() == 5);
    for (const auto& r : params) {
        CHECK(r.status != Status::Fail);
        CHECK(r.final_set.size() == 3);
        REQUIRE(r.exclusions.size() == 1);
        CHECK(r.exclusions[0].es == std::array<bool, 4>{true, true, true, true});
    }
    CHECK(exit_code(rs) == 0);
}

TEST_CASE("exit code follows FAIL statuses") {
    ReportRecord ok, bad;
    ok.status = Status::Surplus;
    bad.status = Status::Fail;
    CHECK(exit_code({ok}) == 0);
    CHECK(exit_code({ok, bad}) == 1);
    CHECK(exit_code({}) == 0);
}

TEST_CASE("config validation") {
    RunConfig c;
    c.max_size = 1;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = RunConfig{};
    c.box = 0;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = RunConfig{};
    c.families = {9};
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c = RunConfig{};
    c.torus_lo = 2;
    c.torus_hi = 1;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    CHECK_NOTHROW(validate(RunConfig{}));
}

TEST_CASE("instance enumeration is sorted and respects the size cap") {
    auto insts = enumerate_instances(small({1, 4, 6}, 5));
    for (const auto& i : insts) {
        CHECK(i.m <= 5);
        CHECK(i.n <= 5);
    }
    auto rs = run_batch(small({1, 4, 6}, 5));
    REQUIRE(rs.size() == insts.size());
    for (std::size_t k = 0; k < rs.size(); ++k) CHECK(rs[k].instance == insts[k]);
}

TEST_CASE("torus labels and formats parse") {
    CHECK(parse_torus_label("full") == TorusChoice::full());
    CHECK(parse_torus_label("derived") == TorusChoice::derived());
    CHECK(parse_torus_label("a=-2") == TorusChoice::with_param(-2));
    CHECK(parse_torus_label("b=3") == TorusChoice::with_param(3));
    CHECK_THROWS(parse_torus_label("c=1"));
    CHECK_THROWS(parse_torus_label("a=1x"));
    CHECK(parse_format("csv") == Format::Csv);
    CHECK_FALSE(parse_format("xml").has_value());
}
