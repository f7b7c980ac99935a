#include "heronq/tables.hpp"

#include <sstream>

#include "heronq/errors.hpp"

namespace heronq {

namespace detail {
extern const char* const table1_txt;
extern const char* const table2_txt;
}  // namespace detail

const std::string& table1_text() {
    static const std::string text(detail::table1_txt);
    return text;
}

const std::string& table2_text() {
    static const std::string text(detail::table2_txt);
    return text;
}

namespace {

// Strip comments, split into whitespace-separated fields, one row per line.
std::vector<std::vector<std::string>> rows_of(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> row;
        std::string field;
        while (fields >> field) row.push_back(field);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::vector<Table1Row> parse_table1(const std::string& text) {
    std::vector<Table1Row> out;
    for (const auto& row : rows_of(text)) {
        if (row.size() != 3)
            throw InvalidInput("table1 row needs 3 fields (u w rank), got " +
                               std::to_string(row.size()));
        out.push_back({Rational::parse_or_throw(row[0]), Rational::parse_or_throw(row[1]), std::stoi(row[2])});
    }
    return out;
}

std::vector<Table2Row> parse_table2(const std::string& text) {
    std::vector<Table2Row> out;
    for (const auto& row : rows_of(text)) {
        if (row.size() != 7)
            throw InvalidInput("table2 row needs 7 fields (n alpha rank a b c d), got " +
                               std::to_string(row.size()));
        out.push_back({std::stol(row[0]), Rational::parse_or_throw(row[1]), std::stoi(row[2]),
                       Quadrilateral::make(Rational::parse_or_throw(row[3]), Rational::parse_or_throw(row[4]),
                                           Rational::parse_or_throw(row[5]), Rational::parse_or_throw(row[6]))});
    }
    return out;
}

const std::vector<Table1Row>& table1() {
    static const std::vector<Table1Row> rows = parse_table1(table1_text());
    return rows;
}

const std::vector<Table2Row>& table2() {
    static const std::vector<Table2Row> rows = parse_table2(table2_text());
    return rows;
}

}  // namespace heronq
