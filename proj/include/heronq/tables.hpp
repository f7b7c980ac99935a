#pragma once

#include <string>
#include <vector>

#include "heronq/quad.hpp"
#include "heronq/rational.hpp"

namespace heronq {

// One row of data/table1.txt: parameters (u,w) of the two-angle family,
// plus the externally computed rank recorded alongside them.
struct Table1Row {
    Rational u, w;
    int claimed_rank;
};

// One row of data/table2.txt: area n, printed coefficient alpha of
// E_{alpha,-n^2}, externally computed rank, and the printed sides.
struct Table2Row {
    long n;
    Rational alpha;
    int claimed_rank;
    Quadrilateral sides;
};

// The verbatim text of data/table1.txt and data/table2.txt, embedded at
// build time so the binaries are self-contained.  A test checks these stay
// byte-identical with the files in data/.
const std::string& table1_text();
const std::string& table2_text();

// Parse the documented plain-text format: '#' starts a comment, blank lines
// ignored, fields whitespace-separated, rationals as "p/q".
std::vector<Table1Row> parse_table1(const std::string& text);
std::vector<Table2Row> parse_table2(const std::string& text);

// Parsed embedded tables (10 and 50 rows).
const std::vector<Table1Row>& table1();
const std::vector<Table2Row>& table2();

}  // namespace heronq
