#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "heronq/errors.hpp"
#include "heronq/tables.hpp"
#include "heronq/verify.hpp"

using namespace heronq;

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}
} // namespace

TEST_CASE("embedded tables match the data files byte for byte") {
    CHECK(table1_text() == slurp(std::string(HERONQ_DATA_DIR) + "/table1.txt"));
    CHECK(table2_text() == slurp(std::string(HERONQ_DATA_DIR) + "/table2.txt"));
}

TEST_CASE("parsed rows") {
    const auto& t1 = table1();
    REQUIRE(t1.size() == 10);
    CHECK(t1[0].u == Rational(-84, 11));
    CHECK(t1[0].w == Rational(29, 14));
    CHECK(t1[0].claimed_rank == 10);
    CHECK(t1[9].u == Rational(63, 85));
    CHECK(t1[9].w == Rational(5, 97));
    for (const auto& r : t1) CHECK(r.claimed_rank == 10);

    const auto& t2 = table2();
    REQUIRE(t2.size() == 50);
    CHECK(t2[0].n == 1);
    CHECK(t2[0].alpha == Rational(5, 2));
    CHECK(t2[0].claimed_rank == 2);
    CHECK(t2[0].sides == Quadrilateral::make(Rational(5, 6), 1, Rational(5, 6), 2));
    CHECK(t2[49].n == 50);
    long prev = 0;
    int rank3 = 0;
    for (const auto& r : t2) {
        CHECK(r.n == prev + 1); // areas 1..50, each once
        prev = r.n;
        CHECK((r.claimed_rank == 2 || r.claimed_rank == 3));
        if (r.claimed_rank == 3) ++rank3;
    }
    CHECK(rank3 == 7);
}

TEST_CASE("table text parser") {
    auto rows = parse_table1("# comment\n\n1/2 3 4\n");
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].u == Rational(1, 2));
    CHECK(rows[0].claimed_rank == 4);
    CHECK(parse_table1("").empty());
    CHECK_THROWS_AS(parse_table1("1 2\n"), InvalidInput);           // missing field
    CHECK_THROWS_AS(parse_table1("1 2 3 4\n"), InvalidInput);       // extra field
    CHECK_THROWS_AS(parse_table1("x 2 3\n"), InvalidInput);         // not a rational
    CHECK_THROWS_AS(parse_table2("1 1 2 1 2 3\n"), InvalidInput);   // seven fields needed
    auto r2 = parse_table2("7 -1/2 2 1 2 2 3 # trailing comment\n");
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].alpha == Rational(-1, 2));
    CHECK(r2[0].sides == Quadrilateral::make(1, 2, 2, 3));
}

TEST_CASE("dihedral labelings") {
    auto labs = dihedral_labelings(Quadrilateral::make(1, 6, 3, 8));
    CHECK(labs.size() == 8);
    std::set<std::string> seen;
    for (const auto& l : labs) seen.insert(l.str());
    CHECK(seen.size() == 8); // all distinct for generic sides
    // every labeling keeps the multiset of sides
    for (const auto& l : labs) {
        std::multiset<std::string> s{l.a().str(), l.b().str(), l.c().str(), l.d().str()};
        CHECK(s == std::multiset<std::string>{"1", "6", "3", "8"});
    }
}

TEST_CASE("area-table verification") {
    auto rep = verify_table2();
    REQUIRE(rep.rows.size() == 50);
    CHECK(rep.areas_all_ok);
    CHECK(rep.discrepancies == 3);

    std::set<long> bad;
    for (const auto& r : rep.rows) {
        CHECK(r.area_ok);
        CHECK(r.points_ok);
        CHECK(r.independent_ok); // every row certifies rank >= 2
        if (!r.passed) {
            CHECK(r.labeling_discrepancy());
            bad.insert(r.n);
        }
    }
    CHECK(bad == std::set<long>{3, 15, 49});

    // the printed alpha of a discrepant row matches no labeling; the report
    // carries every labeling value so the mismatch is auditable
    for (const auto& r : rep.rows) {
        if (r.n == 3) {
            CHECK(r.labeling_alphas ==
                  std::vector<Rational>{Rational(-9, 4), Rational(19, 4), Rational(23, 2),
                                        Rational(27, 2)});
        }
        if (r.n == 15) {
            CHECK(r.labeling_alphas ==
                  std::vector<Rational>{Rational(-13, 2), Rational(99, 4), Rational(135, 4),
                                        Rational(95, 2)});
        }
        if (r.n == 49) {
            CHECK(r.labeling_alphas ==
                  std::vector<Rational>{Rational(-1421, 36), Rational(3871, 36), Rational(245, 2)});
        }
    }
}

TEST_CASE("high-rank-table verification") {
    auto rep = verify_table1();
    REQUIRE(rep.rows.size() == 11); // 10 rows + control
    CHECK(rep.rows.back().control);
    CHECK(rep.rows.back().passed); // control gates only point membership

    int four = 0;
    for (const auto& r : rep.rows) {
        CHECK(r.points_on_curve == r.points_produced);
        if (!r.control) {
            CHECK(r.claimed_rank == 10);
            CHECK(r.independent_ok);
            if (r.points_produced == 4) ++four;
        }
    }
    // the displayed fourth point is rational on exactly two of the ten rows
    CHECK(four == 2);
    CHECK(rep.rows[7].points_produced == 4);
    CHECK(rep.rows[8].points_produced == 4);

    // rows 2 and 10 are the same curve under (u, w) -> (u/(u-1), 1/w):
    // identical sums, bitwise
    CHECK(rep.rows[1].sieve.s1 == rep.rows[9].sieve.s1);

    // the lone sieve failure: S(523) of row 8 misses the threshold because
    // the sum excludes its unusually rich set of bad primes
    CHECK(rep.discrepancies == 1);
    CHECK(!rep.rows[7].passed);
    CHECK(!rep.rows[7].sieve.passed);
    CHECK(rep.rows[7].sieve.s1 == doctest::Approx(18.095097145746468).epsilon(1e-9));
    for (int i : {0, 1, 2, 3, 4, 5, 6, 8, 9}) {
        CHECK(rep.rows[i].sieve.passed);
        REQUIRE(rep.rows[i].sieve.s2);
        CHECK(rep.rows[i].sieve.s1 > 20.0);
        CHECK(*rep.rows[i].sieve.s2 > 28.0);
    }

    auto no_control = verify_table1({}, 1e-4, false);
    CHECK(no_control.rows.size() == 10);
    CHECK(no_control.discrepancies == 1);
}
