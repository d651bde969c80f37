#include "lmhs/sweep.hpp"

#include "lmhs/koszul.hpp"
#include "lmhs/limit_mhs.hpp"
#include "lmhs/pencil.hpp"

#include <sstream>

namespace lmhs {

SweepResult run_sweep(std::string suite, const std::vector<SweepCase>& cases, Execution execution)
{
    std::vector<std::optional<std::string>> outcome(cases.size());
    const auto count = static_cast<long>(cases.size());

#pragma omp parallel for schedule(dynamic) if (execution == Execution::parallel)
    for (long c = 0; c < count; ++c) {
        const auto idx = static_cast<std::size_t>(c);
        try {
            outcome[idx] = cases[idx].check();
        } catch (const std::exception& ex) {
            outcome[idx] = std::string("exception: ") + ex.what();
        }
    }

    SweepResult result;
    result.suite = std::move(suite);
    result.cases = cases.size();
    for (std::size_t i = 0; i < cases.size(); ++i)
        if (outcome[i])
            result.failures.push_back({cases[i].label, *outcome[i]});
    return result;
}

namespace {

void nondecreasing_tuples(int r, int lo, int hi, std::vector<int>& prefix, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(prefix.size()) == r) {
        out.push_back(prefix);
        return;
    }
    const int start = prefix.empty() ? lo : prefix.back();
    for (int d = start; d <= hi; ++d) {
        prefix.push_back(d);
        nondecreasing_tuples(r, lo, hi, prefix, out);
        prefix.pop_back();
    }
}

std::string mismatch(const char* what, const BigInt& lhs, const BigInt& rhs)
{
    std::ostringstream os;
    os << what << ": " << lhs << " != " << rhs;
    return os.str();
}

template <class Check>
std::vector<SweepCase> cases_for(const std::vector<DegenerationInput>& inputs, Check check)
{
    std::vector<SweepCase> cases;
    cases.reserve(inputs.size());
    for (const auto& input : inputs)
        cases.push_back({input.to_string(), [input, check]() { return check(input); }});
    return cases;
}

std::vector<DegenerationInput> bounded(const SweepBounds& b)
{
    return enumerate_degenerations(b.n_lo, b.n_hi, b.r_lo, b.r_hi, b.d_lo, b.d_hi);
}

}  // namespace

std::vector<DegenerationInput> enumerate_degenerations(int n_lo, int n_hi, int r_lo, int r_hi, int d_lo, int d_hi)
{
    std::vector<DegenerationInput> out;
    for (int n = n_lo; n <= n_hi; ++n) {
        for (int r = r_lo; r <= r_hi; ++r) {
            std::vector<std::vector<int>> tuples;
            std::vector<int> prefix;
            nondecreasing_tuples(r, d_lo, d_hi, prefix, tuples);
            for (auto& t : tuples)
                out.emplace_back(n, std::move(t));
        }
    }
    return out;
}

SweepResult sweep_identity_04(const SweepBounds& b, Execution e)
{
    auto check = [](const DegenerationInput& in) -> std::optional<std::string> {
        const auto c = verify_identity_04(in);
        if (!c.equal)
            return mismatch("P_n(d0) vs subset sum", c.lhs, c.rhs);
        return std::nullopt;
    };
    return run_sweep("identity_04", cases_for(bounded(b), check), e);
}

SweepResult sweep_all_ones_identity(int n_lo, int n_hi, int d_lo, int d_hi, Execution e)
{
    std::vector<SweepCase> cases;
    for (int n = n_lo; n <= n_hi; ++n)
        for (int d = d_lo; d <= d_hi; ++d)
            cases.push_back({"n=" + std::to_string(n) + " d=" + std::to_string(d),
                             [n, d]() -> std::optional<std::string> {
                                 const auto special = verify_all_ones_identity(n, d);
                                 if (!special.equal)
                                     return mismatch("all-ones identity", special.lhs, special.rhs);
                                 const auto general = verify_identity_04(DegenerationInput(n, std::vector<int>(d, 1)));
                                 if (general.rhs != special.rhs)
                                     return mismatch("all-ones identity vs subset sum", special.rhs, general.rhs);
                                 return std::nullopt;
                             }});
    return run_sweep("all_ones_identity", cases, e);
}

SweepResult sweep_e1_purity(const SweepBounds& b, Execution e)
{
    auto check = [](const DegenerationInput& in) -> std::optional<std::string> {
        const E1Options serial{false, Execution::serial};
        for (const auto& page : {build_e1_nearby(in, serial), build_e1_vanishing(in, serial)}) {
            const char* kind = page.kind == E1Kind::nearby ? "nearby" : "vanishing";
            if (auto cell = first_impure_cell(page))
                return std::string(kind) + " cell (" + std::to_string(cell->first) + "," + std::to_string(cell->second)
                     + ") is not pure of weight j+n-1+i";
            for (const auto& [key, cell] : page.cells)
                if (std::abs(key.first) > in.n() - 1 || std::abs(key.second) > in.n() - 1)
                    return std::string(kind) + " cell outside |i|,|j| <= n-1";
        }
        return std::nullopt;
    };
    return run_sweep("e1_purity", cases_for(bounded(b), check), e);
}

SweepResult sweep_e1_euler(const SweepBounds& b, Execution e)
{
    auto check = [](const DegenerationInput& in) -> std::optional<std::string> {
        const auto c = euler_characteristic_check(build_e1_nearby(in, {false, Execution::serial}), in);
        if (!c.equal())
            return mismatch("signed E_1 total vs (-1)^{n-1} e_n(d0)", c.lhs, c.rhs);
        return std::nullopt;
    };
    return run_sweep("e1_euler", cases_for(bounded(b), check), e);
}

SweepResult sweep_limit_mhs(const SweepBounds& b, bool with_e1_embedding, Execution e)
{
    auto check = [with_e1_embedding](const DegenerationInput& in) -> std::optional<std::string> {
        const int n = in.n();
        const LimitMHS mhs = limit_mhs(in);
        const BigInt expected = prim_middle_dim(CompleteIntersection(n, Multidegree{in.d0()}));
        if (mhs.full_graded.total_dim() != expected)
            return mismatch("sum_w dim Gr_w vs P_n(d0)", mhs.full_graded.total_dim(), expected);
        for (int k = 1; k <= n - 1; ++k)
            if (mhs.full_graded.dim(n - 1 + k) != mhs.full_graded.dim(n - 1 - k))
                return mismatch(("dim Gr_{n-1+k} vs dim Gr_{n-1-k}, k=" + std::to_string(k)).c_str(),
                                mhs.full_graded.dim(n - 1 + k), mhs.full_graded.dim(n - 1 - k));
        for (const auto& [k, piece] : mhs.primitive.primitives) {
            if (k >= n)
                return "primitives[" + std::to_string(k) + "] nonempty for k >= n";
            if (!piece.is_pure(n - 1 + k))
                return "primitives[" + std::to_string(k) + "] not pure of weight n-1+k";
        }
        const auto jordan = jordan_profile(in);
        if (jordan.total_dim() != expected)
            return mismatch("Jordan profile total vs P_n(d0)", jordan.total_dim(), expected);
        if (with_e1_embedding) {
            const E1Page page = build_e1_nearby(in, {false, Execution::serial});
            for (const auto& [k, piece] : mhs.primitive.primitives)
                if (piece.total_dim() > page.dim(k, 0))
                    return mismatch(("dim primitives[k] <= dim E_1^{-k,k}, k=" + std::to_string(k)).c_str(),
                                    piece.total_dim(), page.dim(k, 0));
        }
        return std::nullopt;
    };
    return run_sweep("limit_mhs", cases_for(bounded(b), check), e);
}

SweepResult sweep_euler_numbers(int n_max, int d_max, Execution e)
{
    std::vector<SweepCase> cases;
    for (int n = 1; n <= n_max; ++n)
        for (int d = 1; d <= d_max; ++d)
            cases.push_back({"n=" + std::to_string(n) + " d=" + std::to_string(d),
                             [n, d]() -> std::optional<std::string> {
                                 const BigInt closed = euler_hypersurface(n, d);
                                 if (closed != euler_hypersurface_recurrence(n, d))
                                     return mismatch("closed form vs recurrence", closed,
                                                     euler_hypersurface_recurrence(n, d));
                                 if (closed != euler_hypersurface_sum(n, d))
                                     return mismatch("closed form vs binomial sum", closed, euler_hypersurface_sum(n, d));
                                 const BigInt ci = euler_complete_intersection(CompleteIntersection(n, {d}));
                                 if (closed != ci)
                                     return mismatch("closed form vs complete-intersection series", closed, ci);
                                 return std::nullopt;
                             }});
    return run_sweep("euler_numbers", cases, e);
}

SweepResult sweep_griffiths(int n_max, int d_max, Execution e)
{
    std::vector<SweepCase> cases;
    for (int n = 1; n <= n_max; ++n)
        for (int d = 2; d <= d_max; ++d)
            cases.push_back({"n=" + std::to_string(n) + " d=" + std::to_string(d),
                             [n, d]() -> std::optional<std::string> {
                                 const IntPolynomial poly = poly_power_coeffs(d, n + 1);
                                 const int top = (n + 1) * (d - 1);
                                 BigInt total = 0;
                                 for (int j = 0; j <= top + d; ++j) {
                                     const BigInt c = griffiths_coeff(n, d, j);
                                     if (c != poly.coeff(static_cast<unsigned>(j)))
                                         return mismatch(("alternating sum vs expansion at j=" + std::to_string(j)).c_str(),
                                                         c, poly.coeff(static_cast<unsigned>(j)));
                                     total += c;
                                 }
                                 for (int j = 0; j <= (n + 1) * d; ++j)
                                     if (griffiths_coeff(n, d, j) != griffiths_coeff(n, d, (n + 1) * d - j))
                                         return "palindromy fails at j=" + std::to_string(j);
                                 if (total != ipow(BigInt(d - 1), n + 1))
                                     return mismatch("sum_j C vs (d-1)^{n+1}", total, ipow(BigInt(d - 1), n + 1));
                                 BigInt hodge = 0;
                                 for (const auto& h : hypersurface_hodge_numbers(n, d))
                                     hodge += h;
                                 if (hodge != prim_hypersurface_closed_form(n, d))
                                     return mismatch("sum_i C(n+1,d,di) vs P_n(d)", hodge, prim_hypersurface_closed_form(n, d));
                                 return std::nullopt;
                             }});
    return run_sweep("griffiths", cases, e);
}

SweepResult sweep_truncated_homology(int r_max, Execution e)
{
    std::vector<SweepCase> cases;
    for (int r = 1; r <= r_max; ++r) {
        cases.push_back({"r=" + std::to_string(r) + " d^2",
                         [r]() -> std::optional<std::string> {
                             const ChainComplex k = koszul_identity(r);
                             if (!k.is_complex())
                                 return std::string("d o d != 0");
                             if (!k.homology().empty())
                                 return std::string("Koszul complex not acyclic");
                             return std::nullopt;
                         }});
        for (int p = 0; p <= r; ++p)
            for (int q = p + 1; q <= r; ++q)
                cases.push_back({"r=" + std::to_string(r) + " p=" + std::to_string(p) + " q=" + std::to_string(q),
                                 [r, p, q]() -> std::optional<std::string> {
                                     const auto h = truncated_homology(r, p, q);
                                     for (int i = 0; i <= r; ++i) {
                                         BigInt expected = i == p ? binomial(r - 1, p - 1)
                                                         : i == q ? binomial(r - 1, q)
                                                                  : BigInt(0);
                                         auto it = h.find(i);
                                         BigInt got = it == h.end() ? 0UL : static_cast<unsigned long>(it->second);
                                         if (got != expected)
                                             return mismatch(("H_" + std::to_string(i)).c_str(), got, expected);
                                     }
                                     return std::nullopt;
                                 }});
    }
    return run_sweep("truncated_homology", cases, e);
}

SweepResult sweep_eprime_euler(int n_lo, int n_hi, int r_lo, int r_hi, Execution e)
{
    std::vector<SweepCase> cases;
    for (int n = n_lo; n <= n_hi; ++n)
        for (int r = r_lo; r <= r_hi; ++r)
            for (int k = 0; k <= n - 1; ++k) {
                if ((k + n - 1) % 2 != 0)
                    continue;
                cases.push_back({"n=" + std::to_string(n) + " r=" + std::to_string(r) + " k=" + std::to_string(k),
                                 [n, r, k]() -> std::optional<std::string> {
                                     const auto res = eprime_euler(n, r, k);
                                     if (res.euler != res.expected)
                                         return mismatch("'E_1 Euler characteristic vs survivors", res.euler,
                                                         res.expected);
                                     return std::nullopt;
                                 }});
            }
    return run_sweep("eprime_euler", cases, e);
}

SweepResult sweep_nilpotency(int n_lo, int n_hi, int r_max, Execution e)
{
    std::vector<DegenerationInput> inputs;
    for (int n = n_lo; n <= n_hi; ++n)
        for (auto& in : enumerate_degenerations(n, n, n + 1, r_max, 1, 2))
            inputs.push_back(std::move(in));
    auto check = [](const DegenerationInput& in) -> std::optional<std::string> {
        const auto profile = jordan_profile(in);
        auto it = profile.blocks.find(in.n());
        if (it == profile.blocks.end() || it->second < 1)
            return std::string("no Jordan block of size n, so N^{n-1} = 0");
        if (profile.blocks.rbegin()->first > in.n())
            return std::string("Jordan block larger than n");
        return std::nullopt;
    };
    return run_sweep("nilpotency", cases_for(inputs, check), e);
}

SweepResult sweep_level_bound(int n_lo, int n_hi, int r_lo, int r_hi, Execution e)
{
    std::vector<DegenerationInput> inputs;
    for (int n = n_lo; n <= n_hi; ++n)
        for (int r = r_lo; r <= r_hi; ++r)
            inputs.emplace_back(n, std::vector<int>(static_cast<std::size_t>(r), 1));
    auto check = [](const DegenerationInput& in) -> std::optional<std::string> {
        const int n = in.n();
        const LimitMHS mhs = limit_mhs(in);
        for (const auto& [k, lvl] : level_report(in)) {
            if (std::abs(k) == n - 1)
                continue;
            if (!lvl)
                return "level undefined at k=" + std::to_string(k);
            if (*lvl >= n - 1 - std::abs(k))
                return "level " + std::to_string(*lvl) + " >= n-1-|k| at k=" + std::to_string(k);
            // Grades whose primitive pieces are literal hypersurfaces (or absent) are Tate-like, level 0.
            auto it = mhs.full_graded.grades().find(n - 1 + k);
            if (it == mhs.full_graded.grades().end())
                continue;
            bool literal = true;
            for (const auto& [s, mult] : it->second.terms())
                if (s.kind() == Summand::Kind::prim && s.variety().codim() >= 2)
                    literal = false;
            if (literal && *lvl != 0)
                return "literal-hypersurface grade has nonzero level at k=" + std::to_string(k);
        }
        return std::nullopt;
    };
    return run_sweep("level_bound", cases_for(inputs, check), e);
}

SweepResult sweep_pencil(int n_lo, int n_hi, int d_max, Execution e)
{
    std::vector<SweepCase> cases;
    for (int n = n_lo; n <= n_hi; ++n)
        for (int d1 = 1; d1 <= d_max; ++d1)
            for (int d2 = 1; d2 <= d_max; ++d2)
                cases.push_back({"n=" + std::to_string(n) + " d1=" + std::to_string(d1) + " d2=" + std::to_string(d2),
                                 [n, d1, d2]() -> std::optional<std::string> {
                                     const PencilInput in(n, d1, d2);
                                     const auto t6 = theorem6_inequality(in);
                                     const bool exception = n % 2 == 0 && in.d0() == 2;
                                     if (t6.holds == exception)
                                         return mismatch(exception ? "quadric exception should fail"
                                                                   : "gamma^0(Y0) > gamma^-1(Y) should hold",
                                                         t6.gamma0_y0, t6.gamma_minus1_y);
                                     const E1Page table = e1_table(in);
                                     const E1Page page = build_e1_nearby(in.as_degeneration(), {false, Execution::serial});
                                     if (table.cells.size() != page.cells.size())
                                         return std::string("e1_table differs from build_e1_nearby in support");
                                     for (const auto& [key, cell] : table.cells) {
                                         const E1Cell* other = page.find(key.first, key.second);
                                         if (!other || other->summands != cell.summands)
                                             return "e1_table differs from build_e1_nearby at (" + std::to_string(key.first)
                                                  + "," + std::to_string(key.second) + ")";
                                     }
                                     for (const auto& line : weak_lefschetz_inequalities(in))
                                         if (!line.holds)
                                             return mismatch(line.statement.c_str(), line.lhs, line.rhs);
                                     const GammaTable g(in);
                                     for (auto v : {PencilVariety::Y, PencilVariety::Y0, PencilVariety::Y1,
                                                    PencilVariety::Y2, PencilVariety::Z, PencilVariety::Sigma})
                                         for (int j = 1; j <= n + 1; ++j)
                                             if (g.gamma(v, j) != g.gamma(v, -j))
                                                 return "gamma symmetry fails for " + to_string(v);
                                     return std::nullopt;
                                 }});
    return run_sweep("pencil", cases, e);
}

}  // namespace lmhs
