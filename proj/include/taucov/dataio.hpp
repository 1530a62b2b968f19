#ifndef TAUCOV_DATAIO_HPP
#define TAUCOV_DATAIO_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "taucov/errors.hpp"
#include "taucov/linalg.hpp"

namespace taucov {

/// One labeled, year-indexed series of observations (one wide-CSV row).
struct TimeSeries {
    std::string label;
    std::vector<int> years;
    std::vector<double> values;
};

void validate(const TimeSeries& ts);

enum class ReferenceSource { table2, table3, user_file };

/// A published square matrix kept verbatim; not required to be symmetric.
struct ReferenceMatrix {
    std::vector<std::string> labels;
    Matrix entries;
    ReferenceSource source = ReferenceSource::user_file;
};

struct CsvOptions {
    /// Treat "," as the decimal separator ("26372,9", "1,19814E+11");
    /// the field separator is auto-detected as ";" when the header uses it.
    bool decimal_comma = false;
};

/// Wide-format indicator CSV: header "Series Name",<year>...; one series
/// per row. Quoted fields carry embedded separators. Errors report
/// 1-based row/column coordinates.
std::vector<TimeSeries> parse_wide_csv(std::string_view text, const CsvOptions& options = {});

/// Same dialect with "," separators and dot decimals; numeric cells use
/// shortest round-trip rendering, so reparse is value-exact.
std::string serialize_wide_csv(const std::vector<TimeSeries>& dataset);

/// Square labeled matrix CSV: header <corner>,<label>...; one row per label.
ReferenceMatrix parse_matrix_csv(std::string_view text, const CsvOptions& options = {},
                                 ReferenceSource source = ReferenceSource::user_file);

std::string serialize_matrix_csv(const ReferenceMatrix& m);

enum class FixtureName { table1, table2, table3 };

using Fixture = std::variant<std::vector<TimeSeries>, ReferenceMatrix>;

/// Embedded reference data, digit-for-digit as published. TAUCOV_FIXTURE_DIR
/// in the environment redirects to <dir>/table{1,2,3}.csv (fixture dialect).
Fixture load_fixture(FixtureName name);

std::vector<TimeSeries> load_table1();
ReferenceMatrix load_table2();
ReferenceMatrix load_table3();

/// Raw embedded fixture text (decimal-comma, ";" separated).
std::string_view fixture_csv_text(FixtureName name);

/// Shortest decimal rendering that reparses to the identical double.
std::string render_number(double v);

} // namespace taucov

#endif
