// Timing harness for the OpenMP kernels against their serial references.
// Prints one line per kernel and asserts bitwise equality of the results.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "hexcover/elliptic.hpp"
#include "hexcover/sl3.hpp"

using namespace hexcover;

namespace {

double time_of(const std::function<cplx()>& f, cplx& out) {
    auto start = std::chrono::steady_clock::now();
    out = f();
    std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
    return d.count();
}

int mismatches = 0;

void report(const char* name, const std::function<cplx()>& serial,
            const std::function<cplx()>& parallel) {
    cplx s, p;
    double ts = time_of(serial, s);
    double tp = time_of(parallel, p);
    bool same = s.real() == p.real() && s.imag() == p.imag();
    if (!same) ++mismatches;
    std::printf("%-22s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n",
                name, ts, tp, ts / tp, same ? "bitwise equal" : "MISMATCH");
}

}  // namespace

int main() {
    CartanElt H = cartan_from_periods(EXCISED_W1, EXCISED_W2);
    cplx z{0.3, 0.2};

    report("direct wp sum (600)",
           [&] { return wp_direct_oracle_serial(EXCISED_W1, EXCISED_W2, z, 600); },
           [&] { return wp_direct_oracle(EXCISED_W1, EXCISED_W2, z, 600); });

    report("weight trace (800)",
           [&] { return wp_trace_sum_serial(H, z, 800); },
           [&] { return wp_trace_sum(H, z, 800); });

    report("shift difference (800)",
           [&] { return killing_diff_serial(ShiftTag::W1, ShiftTag::W2, H, 800); },
           [&] { return killing_diff(ShiftTag::W1, ShiftTag::W2, H, 800); });

    report("symmetric trace (400)",
           [&] { return sym_trace_partial_serial(400, H, z, false); },
           [&] { return sym_trace_partial(400, H, z, false); });

    return mismatches == 0 ? 0 : 1;
}
