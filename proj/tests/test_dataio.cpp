#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "taucov/dataio.hpp"
#include "test_support.hpp"

using namespace taucov;

namespace {

const TimeSeries& by_label(const std::vector<TimeSeries>& data, const std::string& label) {
    for (const TimeSeries& ts : data)
        if (ts.label == label) return ts;
    throw std::runtime_error("missing " + label);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::size_t index_of(const ReferenceMatrix& m, const std::string& prefix) {
    for (std::size_t i = 0; i < m.labels.size(); ++i)
        if (m.labels[i].rfind(prefix, 0) == 0) return i;
    throw std::runtime_error("missing label " + prefix);
}

} // namespace

TEST_CASE("parse bundled table1: shape and pinned cells") {
    auto data = parse_wide_csv(fixture_csv_text(FixtureName::table1), {.decimal_comma = true});
    REQUIRE(data.size() == 8);
    for (const TimeSeries& ts : data) {
        CHECK(ts.years.size() == 16);
        CHECK(ts.years.front() == 2000);
        CHECK(ts.years.back() == 2015);
    }
    CHECK(by_label(data, "Forest area (sq. km)").values[0] == 26372.9);
    CHECK(by_label(data, "GDP (current US$)").values[4] == 1.19814e11);
    CHECK(by_label(data, "GDP (current US$)").values[3] == 1.0009e11);
    CHECK(by_label(data, "GDP (current US$)").values[0] == 61828166496.0);
    CHECK(by_label(data, "CO2 emissions (metric tons per capita)").values[15] == 9.400668002);
    CHECK(by_label(data, "Imports of goods and services (% of GDP)").values[15] == 74.61688537);
}

TEST_CASE("header-only input gives an empty dataset") {
    CHECK(parse_wide_csv("Series Name,2000,2001\n").empty());
}

TEST_CASE("parser errors carry coordinates") {
    using Catcher = data_error;

    // ragged row
    try {
        parse_wide_csv("Series Name,2000,2001\nx,1\n");
        FAIL("expected data_error");
    } catch (const Catcher& e) {
        CHECK(e.row() == 2);
    }

    // unparseable number
    try {
        parse_wide_csv("Series Name,2000,2001\nx,1,zzz\n");
        FAIL("expected data_error");
    } catch (const Catcher& e) {
        CHECK(e.row() == 2);
        CHECK(e.col() == 3);
    }

    // duplicate labels
    CHECK_THROWS_AS(parse_wide_csv("Series Name,2000,2001\nx,1,2\nx,3,4\n"), data_error);

    // non-monotone years
    CHECK_THROWS_AS(parse_wide_csv("Series Name,2001,2000\nx,1,2\n"), data_error);
    CHECK_THROWS_AS(parse_wide_csv("Series Name,2000,2000\nx,1,2\n"), data_error);

    // wrong corner cell
    CHECK_THROWS_AS(parse_wide_csv("Name,2000,2001\nx,1,2\n"), data_error);

    // bad year header
    CHECK_THROWS_AS(parse_wide_csv("Series Name,2000,abc\nx,1,2\n"), data_error);

    // unterminated quote
    CHECK_THROWS_AS(parse_wide_csv("Series Name,2000,2001\n\"x,1,2\n"), data_error);

    // empty input
    CHECK_THROWS_AS(parse_wide_csv(""), data_error);

    // non-finite once parsed
    CHECK_THROWS_AS(parse_wide_csv("Series Name,2000,2001\nx,1e400,2\n"), data_error);
}

TEST_CASE("round trip: serialize then reparse is value-exact") {
    auto data = load_table1();
    std::string text = serialize_wide_csv(data);
    auto again = parse_wide_csv(text);
    REQUIRE(again.size() == data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        CHECK(again[i].label == data[i].label);
        CHECK(again[i].years == data[i].years);
        for (std::size_t j = 0; j < data[i].values.size(); ++j)
            CHECK(again[i].values[j] == data[i].values[j]);
    }
    // a second round trip is byte-identical
    CHECK(serialize_wide_csv(again) == text);
}

TEST_CASE("locale safety: comma and dot dialects parse to identical values") {
    auto commas = parse_wide_csv(fixture_csv_text(FixtureName::table1), {.decimal_comma = true});
    auto dots = parse_wide_csv(serialize_wide_csv(commas));
    REQUIRE(dots.size() == commas.size());
    for (std::size_t i = 0; i < dots.size(); ++i)
        for (std::size_t j = 0; j < dots[i].values.size(); ++j)
            CHECK(dots[i].values[j] == commas[i].values[j]);
}

TEST_CASE("quoted labels survive the dot-dialect round trip") {
    TimeSeries ts;
    ts.label = "weird, \"quoted\" label";
    ts.years = {2000, 2001};
    ts.values = {1.5, -2.25};
    std::string text = serialize_wide_csv({ts});
    auto back = parse_wide_csv(text);
    REQUIRE(back.size() == 1);
    CHECK(back[0].label == ts.label);
    CHECK(back[0].values == ts.values);
}

TEST_CASE("fixture integrity: checksums and pinned literals") {
    CHECK(testsupport::fnv1a64(fixture_csv_text(FixtureName::table1)) == 0x7fce21301fedb003ULL);
    CHECK(testsupport::fnv1a64(fixture_csv_text(FixtureName::table2)) == 0xb22e50e8835fbfa7ULL);
    CHECK(testsupport::fnv1a64(fixture_csv_text(FixtureName::table3)) == 0x3be29c7355223329ULL);

    ReferenceMatrix t3 = load_table3();
    std::size_t forest = index_of(t3, "Forest area");
    std::size_t co2 = index_of(t3, "CO2 emissions");
    std::size_t electric = index_of(t3, "Electric power");
    CHECK(t3.entries(forest, co2) == 0.553868219);
    CHECK(t3.entries(co2, forest) == 0.553868219);
    CHECK(t3.entries(forest, electric) == -0.998710332);
    CHECK(t3.source == ReferenceSource::table3);

    ReferenceMatrix t2 = load_table2();
    std::size_t gdp = index_of(t2, "GDP");
    CHECK(t2.entries(index_of(t2, "Electric power"), gdp) == 0.452129202);
    CHECK(t2.entries(gdp, index_of(t2, "Electric power")) == 0.973262207);  // asymmetry preserved
    CHECK(t2.entries(index_of(t2, "Forest area"), index_of(t2, "CO2 emissions")) == 0.804915995);
    CHECK(t2.source == ReferenceSource::table2);

    auto t1 = load_table1();
    CHECK(t1.size() == 8);
}

TEST_CASE("bundled data files match the embedded fixtures byte for byte") {
    CHECK(read_file(std::string(TAUCOV_DATA_DIR) + "/table1.csv") ==
          std::string(fixture_csv_text(FixtureName::table1)));
    CHECK(read_file(std::string(TAUCOV_DATA_DIR) + "/table2.csv") ==
          std::string(fixture_csv_text(FixtureName::table2)));
    CHECK(read_file(std::string(TAUCOV_DATA_DIR) + "/table3.csv") ==
          std::string(fixture_csv_text(FixtureName::table3)));
}

TEST_CASE("TAUCOV_FIXTURE_DIR overrides the embedded fixtures") {
    setenv("TAUCOV_FIXTURE_DIR", TAUCOV_DATA_DIR, 1);
    auto data = load_table1();
    unsetenv("TAUCOV_FIXTURE_DIR");
    CHECK(data.size() == 8);
    CHECK(by_label(data, "Forest area (sq. km)").values[0] == 26372.9);

    setenv("TAUCOV_FIXTURE_DIR", "/nonexistent-dir-for-test", 1);
    CHECK_THROWS_AS(load_table1(), data_error);
    unsetenv("TAUCOV_FIXTURE_DIR");
}

TEST_CASE("matrix csv: parse and serialize") {
    ReferenceMatrix t2 = load_table2();
    std::string text = serialize_matrix_csv(t2);
    ReferenceMatrix back = parse_matrix_csv(text);
    CHECK(back.labels == t2.labels);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) CHECK(back.entries(i, j) == t2.entries(i, j));

    CHECK_THROWS_AS(parse_matrix_csv("A,x,y\nx,1,2\n"), data_error);        // missing row
    CHECK_THROWS_AS(parse_matrix_csv("A,x,y\ny,1,2\nx,3,4\n"), data_error); // row order
    CHECK_THROWS_AS(parse_matrix_csv("A,x,y\nx,1,2\ny,3,4\nz,5,6\n"), data_error);
}

TEST_CASE("time series validation") {
    TimeSeries ts;
    ts.label = "t";
    ts.years = {2000, 2001};
    ts.values = {1.0};
    CHECK_THROWS_AS(validate(ts), domain_error);
    ts.values = {1.0, std::numeric_limits<double>::infinity()};
    CHECK_THROWS_AS(validate(ts), domain_error);
    ts.years = {2001, 2000};
    ts.values = {1.0, 2.0};
    CHECK_THROWS_AS(validate(ts), domain_error);
}
