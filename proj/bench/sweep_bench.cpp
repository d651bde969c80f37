// Serial reference vs OpenMP sweep kernels on the same inputs.

#include "lmhs/sweep.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

using lmhs::Execution;
using lmhs::SweepBounds;
using lmhs::SweepResult;

namespace {

double time_ms(const std::function<SweepResult()>& f, bool& passed)
{
    const auto start = std::chrono::steady_clock::now();
    passed = f().passed();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void compare(const char* name, const std::function<SweepResult(Execution)>& kernel)
{
    bool ok_serial = false, ok_parallel = false;
    // Warm the shared invariant cache so both runs see the same state.
    kernel(Execution::serial);
    const double serial = time_ms([&] { return kernel(Execution::serial); }, ok_serial);
    const double parallel = time_ms([&] { return kernel(Execution::parallel); }, ok_parallel);
    std::printf("%-20s serial %9.1f ms   parallel(%d) %9.1f ms   speedup %5.2fx   %s\n", name, serial,
                omp_get_max_threads(), parallel, serial / parallel, ok_serial && ok_parallel ? "ok" : "FAILED");
}

}  // namespace

int main()
{
    const SweepBounds wide{2, 8, 2, 8, 1, 4};
    const SweepBounds narrow{2, 6, 2, 6, 1, 3};
    compare("identity_04", [&](Execution e) { return lmhs::sweep_identity_04(wide, e); });
    compare("limit_mhs", [&](Execution e) { return lmhs::sweep_limit_mhs(wide, false, e); });
    compare("e1_purity", [&](Execution e) { return lmhs::sweep_e1_purity(narrow, e); });
    compare("e1_euler", [&](Execution e) { return lmhs::sweep_e1_euler(narrow, e); });
    compare("truncated_homology", [](Execution e) { return lmhs::sweep_truncated_homology(8, e); });
    compare("pencil", [](Execution e) { return lmhs::sweep_pencil(2, 9, 4, e); });
    return 0;
}
