#include "taucov/dataio.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace taucov {

void validate(const TimeSeries& ts) {
    if (ts.years.size() != ts.values.size())
        throw domain_error("series '" + ts.label + "': years/values length mismatch");
    if (ts.years.size() < 2)
        throw domain_error("series '" + ts.label + "': needs at least 2 observations");
    for (std::size_t i = 1; i < ts.years.size(); ++i)
        if (ts.years[i] <= ts.years[i - 1])
            throw domain_error("series '" + ts.label + "': years must increase strictly");
    for (double v : ts.values)
        if (!std::isfinite(v))
            throw domain_error("series '" + ts.label + "': non-finite value");
}

namespace {

std::vector<std::string> split_line(std::string_view line, char sep, std::size_t row) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            if (!cur.empty())
                throw data_error("unexpected quote inside unquoted field", row, fields.size() + 1);
            quoted = true;
        } else if (c == sep) {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw data_error("unterminated quoted field", row, fields.size() + 1);
    fields.push_back(std::move(cur));
    return fields;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.emplace_back(line);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

double parse_number(const std::string& raw, bool decimal_comma, std::size_t row, std::size_t col) {
    std::string s = trim(raw);
    if (s.empty()) throw data_error("empty numeric cell", row, col);
    if (decimal_comma) {
        for (char& c : s)
            if (c == ',') c = '.';
    }
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
        throw data_error("cannot parse number '" + trim(raw) + "'", row, col);
    return v;
}

int parse_year(const std::string& raw, std::size_t row, std::size_t col) {
    std::string s = trim(raw);
    int y = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), y);
    if (ec != std::errc() || p != s.data() + s.size())
        throw data_error("year header '" + s + "' is not an integer", row, col);
    return y;
}

char detect_separator(std::string_view header, const CsvOptions& options) {
    if (options.decimal_comma && header.find(';') != std::string_view::npos) return ';';
    return ',';
}

std::string csv_escape(const std::string& field, char sep) {
    if (field.find(sep) == std::string::npos && field.find('"') == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string render_number(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::vector<TimeSeries> parse_wide_csv(std::string_view text, const CsvOptions& options) {
    std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) throw data_error("empty input", 1, 1);

    const char sep = detect_separator(lines[0], options);
    std::vector<std::string> header = split_line(lines[0], sep, 1);
    if (header.empty() || trim(header[0]) != "Series Name")
        throw data_error("first header cell must be 'Series Name'", 1, 1);

    std::vector<int> years;
    for (std::size_t c = 1; c < header.size(); ++c)
        years.push_back(parse_year(header[c], 1, c + 1));
    for (std::size_t i = 1; i < years.size(); ++i)
        if (years[i] <= years[i - 1])
            throw data_error("year headers must increase strictly", 1, i + 2);

    std::vector<TimeSeries> out;
    std::set<std::string> seen;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        if (lines[r].empty()) continue;
        std::vector<std::string> fields = split_line(lines[r], sep, r + 1);
        if (fields.size() != header.size())
            throw data_error("row has " + std::to_string(fields.size()) + " fields, expected " +
                                 std::to_string(header.size()),
                             r + 1, fields.size());
        TimeSeries ts;
        ts.label = trim(fields[0]);
        if (ts.label.empty()) throw data_error("empty series label", r + 1, 1);
        if (!seen.insert(ts.label).second)
            throw data_error("duplicate series label '" + ts.label + "'", r + 1, 1);
        if (years.size() < 2)
            throw data_error("series '" + ts.label + "' has fewer than 2 observations", r + 1, 1);
        ts.years = years;
        for (std::size_t c = 1; c < fields.size(); ++c)
            ts.values.push_back(parse_number(fields[c], options.decimal_comma, r + 1, c + 1));
        out.push_back(std::move(ts));
    }
    return out;
}

std::string serialize_wide_csv(const std::vector<TimeSeries>& dataset) {
    std::ostringstream os;
    os << "Series Name";
    if (!dataset.empty())
        for (int y : dataset[0].years) os << ',' << y;
    os << '\n';
    for (const TimeSeries& ts : dataset) {
        if (!dataset.empty() && ts.years != dataset[0].years)
            throw domain_error("serialize_wide_csv: series '" + ts.label + "' is on a different year grid");
        os << csv_escape(ts.label, ',');
        for (double v : ts.values) os << ',' << render_number(v);
        os << '\n';
    }
    return os.str();
}

ReferenceMatrix parse_matrix_csv(std::string_view text, const CsvOptions& options,
                                 ReferenceSource source) {
    std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) throw data_error("empty input", 1, 1);

    const char sep = detect_separator(lines[0], options);
    std::vector<std::string> header = split_line(lines[0], sep, 1);
    if (header.size() < 2) throw data_error("matrix header needs at least one label", 1, 1);

    ReferenceMatrix m;
    m.source = source;
    for (std::size_t c = 1; c < header.size(); ++c) m.labels.push_back(trim(header[c]));
    const std::size_t n = m.labels.size();
    m.entries = Matrix(n, n);

    std::size_t filled = 0;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        if (lines[r].empty()) continue;
        std::vector<std::string> fields = split_line(lines[r], sep, r + 1);
        if (fields.size() != header.size())
            throw data_error("matrix row has " + std::to_string(fields.size()) +
                                 " fields, expected " + std::to_string(header.size()),
                             r + 1, fields.size());
        if (filled >= n) throw data_error("more matrix rows than labels", r + 1, 1);
        if (trim(fields[0]) != m.labels[filled])
            throw data_error("row label '" + trim(fields[0]) + "' does not match header order", r + 1, 1);
        for (std::size_t c = 1; c < fields.size(); ++c)
            m.entries(filled, c - 1) = parse_number(fields[c], options.decimal_comma, r + 1, c + 1);
        ++filled;
    }
    if (filled != n)
        throw data_error("matrix has " + std::to_string(filled) + " rows for " +
                             std::to_string(n) + " labels",
                         lines.size(), 1);
    return m;
}

std::string serialize_matrix_csv(const ReferenceMatrix& m) {
    std::ostringstream os;
    os << "Label";
    for (const std::string& l : m.labels) os << ',' << csv_escape(l, ',');
    os << '\n';
    for (std::size_t i = 0; i < m.labels.size(); ++i) {
        os << csv_escape(m.labels[i], ',');
        for (std::size_t j = 0; j < m.labels.size(); ++j) os << ',' << render_number(m.entries(i, j));
        os << '\n';
    }
    return os.str();
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const char* fixture_file_name(FixtureName name) {
    switch (name) {
        case FixtureName::table1: return "table1.csv";
        case FixtureName::table2: return "table2.csv";
        case FixtureName::table3: return "table3.csv";
    }
    return "";
}

} // namespace

Fixture load_fixture(FixtureName name) {
    std::string text;
    const char* dir = std::getenv("TAUCOV_FIXTURE_DIR");
    if (dir != nullptr && *dir != '\0') {
        text = read_file(std::string(dir) + "/" + fixture_file_name(name));
    } else {
        text = std::string(fixture_csv_text(name));
    }
    CsvOptions opts{.decimal_comma = true};
    if (name == FixtureName::table1) return parse_wide_csv(text, opts);
    ReferenceSource src = (name == FixtureName::table2) ? ReferenceSource::table2
                                                        : ReferenceSource::table3;
    return parse_matrix_csv(text, opts, src);
}

std::vector<TimeSeries> load_table1() {
    return std::get<std::vector<TimeSeries>>(load_fixture(FixtureName::table1));
}

ReferenceMatrix load_table2() {
    return std::get<ReferenceMatrix>(load_fixture(FixtureName::table2));
}

ReferenceMatrix load_table3() {
    return std::get<ReferenceMatrix>(load_fixture(FixtureName::table3));
}

} // namespace taucov
