// Times the OpenMP Mestre-Nagao sum against the serial reference on the
// high-rank table curves and checks the two agree bit for bit (the parallel
// version reduces in a fixed ascending order, so they must).
#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstring>
#include <iostream>
#include <vector>

#include "heronq/analytic.hpp"
#include "heronq/families.hpp"
#include "heronq/tables.hpp"

using namespace heronq;

namespace {
double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}
}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"benchmark: serial vs OpenMP Mestre-Nagao sums"};
    std::uint64_t bound = 20011;
    int repeat = 1;
    app.add_option("--n", bound, "prime bound for S(N, E) (default 20011)");
    app.add_option("--repeat", repeat, "repetitions per curve (default 1)");
    CLI11_PARSE(app, argc, argv);

    std::vector<EllipticCurve> curves;
    for (const auto& row : table1()) curves.push_back(family_6_1(row.u, row.w).curve);

    std::cout << "curves: " << curves.size() << "   N = " << bound
              << "   threads: " << effective_threads() << "\n";

    double total_serial = 0.0, total_parallel = 0.0;
    bool all_equal = true;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        double s = 0.0, p = 0.0;
        auto t0 = std::chrono::steady_clock::now();
        for (int r = 0; r < repeat; ++r) s = mestre_nagao_sum_serial(curves[i], bound);
        double ts = seconds_since(t0) / repeat;
        t0 = std::chrono::steady_clock::now();
        for (int r = 0; r < repeat; ++r) p = mestre_nagao_sum(curves[i], bound);
        double tp = seconds_since(t0) / repeat;
        bool equal = std::memcmp(&s, &p, sizeof s) == 0;
        all_equal = all_equal && equal;
        total_serial += ts;
        total_parallel += tp;
        std::cout << "curve " << i + 1 << ":  S = " << s << "   serial " << ts << " s   parallel "
                  << tp << " s   bitwise " << (equal ? "equal" : "DIFFERENT") << "\n";
    }
    std::cout << "total serial " << total_serial << " s   total parallel " << total_parallel
              << " s   speedup " << (total_parallel > 0 ? total_serial / total_parallel : 0.0)
              << "x\n";
    if (!all_equal) {
        std::cerr << "FAIL: parallel result differs from serial reference\n";
        return 1;
    }
    return 0;
}
