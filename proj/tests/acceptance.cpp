// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "lmhs/limit_mhs.hpp"
#include "lmhs/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace lmhs;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

Outcome from_sweeps(std::initializer_list<SweepResult> results)
{
    std::ostringstream os;
    bool ok = true;
    std::size_t cases = 0;
    for (const auto& r : results) {
        cases += r.cases;
        if (!r.passed()) {
            ok = false;
            os << r.suite << ": " << r.failures.size() << " failures, first [" << r.failures[0].input
               << "] " << r.failures[0].detail << "; ";
        }
    }
    os << cases << " cases";
    return {ok, os.str()};
}

Outcome named_cases()
{
    std::ostringstream why;
    bool ok = true;
    auto expect = [&](bool cond, const char* what) {
        if (!cond) {
            ok = false;
            why << what << "; ";
        }
    };

    const DegenerationInput triangle(2, {1, 1, 1});
    const auto t = limit_mhs(triangle);
    GradedObject want;
    want.add(0, FormalSum(Summand::tate(0)));
    want.add(2, FormalSum(Summand::tate(1)));
    expect(t.full_graded == want, "n=2 (1,1,1) graded pieces");
    expect(jordan_profile(triangle).blocks == std::map<int, BigInt>{{2, 1}}, "n=2 (1,1,1) Jordan profile");

    const auto conic = limit_mhs(DegenerationInput(2, {1, 1}));
    expect(conic.primitive.primitives.empty() && conic.full_graded.empty(), "n=2 (1,1) zero object");

    const DegenerationInput quintic(4, {1, 1, 1, 1, 1});
    const auto q = limit_mhs(quintic);
    const auto& grades = q.full_graded.grades();
    expect(!grades.empty() && grades.rbegin()->first == 6 && grades.rbegin()->second == FormalSum(Summand::tate(3)),
           "n=4 (1,1,1,1,1) top weight Q(-3)");
    const auto jq = jordan_profile(quintic);
    expect(jq.blocks.count(4) && jq.blocks.at(4) == 1, "n=4 (1,1,1,1,1) N^3 != 0 with one block");
    expect(q.full_graded.total_dim() == 204, "n=4 (1,1,1,1,1) total dimension 204");
    return {ok, ok ? "3 cases" : why.str()};
}

}  // namespace

int main()
{
    const SweepBounds wide{2, 8, 2, 8, 1, 4};
    const SweepBounds narrow{2, 6, 2, 6, 1, 3};

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"subset dimension identity, n,r in [2,8], d in [1,4]", [&] { return from_sweeps({sweep_identity_04(wide)}); }},
        {"all-ones identity, n in [2,8], d in [2,10]",
         [] { return from_sweeps({sweep_all_ones_identity(2, 8, 2, 10)}); }},
        {"Euler numbers: closed form, recurrence, complete intersection, n,d in [1,20]",
         [] { return from_sweeps({sweep_euler_numbers(20, 20)}); }},
        {"Griffiths coefficients, n in [1,8], d in [2,8]", [] { return from_sweeps({sweep_griffiths(8, 8)}); }},
        {"Koszul truncations r in [1,8]; diagonal Euler characteristic n in [2,6], r in [2,8]",
         [] { return from_sweeps({sweep_truncated_homology(8), sweep_eprime_euler(2, 6, 2, 8)}); }},
        {"E1 weight purity, n,r in [2,6], d in [1,3]", [&] { return from_sweeps({sweep_e1_purity(narrow)}); }},
        {"E1 Euler characteristic conservation, n,r in [2,6], d in [1,3]",
         [&] { return from_sweeps({sweep_e1_euler(narrow)}); }},
        {"limit MHS conservation, symmetry and E1 embedding, n,r in [2,8], d in [1,4]",
         [&] { return from_sweeps({sweep_limit_mhs(wide, true)}); }},
        {"named cases: triangle, conic, quintic", named_cases},
        {"N^(n-1) != 0 for r >= n+1, n in [2,5], r <= 8", [] { return from_sweeps({sweep_nilpotency(2, 5, 8)}); }},
        {"level bound for all-ones degrees, n in [3,8]", [] { return from_sweeps({sweep_level_bound(3, 8, 2, 8)}); }},
        {"pencil inequality and three-column page, n in [2,9], d in [1,4]",
         [] { return from_sweeps({sweep_pencil(2, 9, 4)}); }},
    };

    int failed = 0;
    for (std::size_t c = 0; c < criteria.size(); ++c) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[c].second();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.ok;
        std::printf("[%s] %2zu %s (%s, %.2fs)\n", o.ok ? "PASS" : "FAIL", c + 1, criteria[c].first.c_str(),
                    o.detail.c_str(), secs);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
