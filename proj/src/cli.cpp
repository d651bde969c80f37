#include "lmhs/cli.hpp"

#include "lmhs/json_io.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace lmhs::cli {

namespace {

// Left-aligned text table with a header row.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& os) const
    {
        std::vector<std::size_t> width;
        for (const auto& row : rows_) {
            width.resize(std::max(width.size(), row.size()), 0);
            for (std::size_t c = 0; c < row.size(); ++c)
                width[c] = std::max(width[c], row[c].size());
        }
        for (const auto& row : rows_) {
            std::string line;
            for (std::size_t c = 0; c < row.size(); ++c) {
                std::string cell = row[c];
                if (c + 1 < row.size())
                    cell.resize(width[c], ' ');
                line += (c ? "  " : "") + cell;
            }
            os << line << "\n";
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::string str(const BigInt& v)
{
    return v.get_str();
}

std::string str(int v)
{
    return std::to_string(v);
}

void print_page(const E1Page& page, std::ostream& out)
{
    TextTable t({"i", "j", "weight", "dim", "summands"});
    for (const auto& [key, cell] : page.cells)
        t.add({str(key.first), str(key.second), str(page.weight(key.first, key.second)), str(cell.dim),
               cell.summands ? cell.summands->to_string() : "-"});
    t.print(out);
}

void print_sweeps(const std::vector<SweepResult>& results, std::ostream& out)
{
    TextTable t({"suite", "cases", "failed", "status"});
    for (const auto& r : results)
        t.add({r.suite, std::to_string(r.cases), std::to_string(r.failures.size()), r.passed() ? "PASS" : "FAIL"});
    t.print(out);
    for (const auto& r : results)
        for (const auto& f : r.failures)
            out << "FAIL " << r.suite << " [" << f.input << "]: " << f.detail << "\n";
}

bool all_passed(const std::vector<SweepResult>& results)
{
    return std::all_of(results.begin(), results.end(), [](const SweepResult& r) { return r.passed(); });
}

struct Options {
    int n = 0;
    std::vector<int> degrees;
    bool vanishing = false;
    std::string table_path;
    bool json = false;
    bool full = false;
    bool trace = false;
    std::vector<int> sweep_bounds;
    int r = 0, p = 0, q = 0, k = 0;
    int d = 0, d1 = 0, d2 = 0;
    std::string suite = "all";
    int nmax = 0, rmax = 0, dmax = 0;
    bool serial = false;
    int threads = 0;
};

int cmd_e1(const Options& o, std::ostream& out)
{
    E1Page page;
    if (!o.table_path.empty()) {
        std::ifstream in(o.table_path);
        if (!in)
            throw std::invalid_argument("cannot open table file " + o.table_path);
        Json doc;
        try {
            doc = Json::parse(in);
        } catch (const Json::parse_error& ex) {
            throw std::invalid_argument("table file " + o.table_path + " is not valid JSON: " + ex.what());
        }
        const CohomologyTable table = table_from_json(doc);
        page = build_e1_custom(table, table.n, table.r);
    } else {
        const DegenerationInput input(o.n, o.degrees);
        const E1Options opts{o.trace, Execution::parallel};
        page = o.vanishing ? build_e1_vanishing(input, opts) : build_e1_nearby(input, opts);
    }

    if (o.json) {
        Json doc = to_json(page);
        if (o.table_path.empty()) {
            doc["degrees"] = o.degrees;
            doc["d0"] = DegenerationInput(o.n, o.degrees).d0();
        }
        out << doc.dump(2) << "\n";
    } else {
        print_page(page, out);
    }
    return kExitOk;
}

int cmd_limit(const Options& o, std::ostream& out)
{
    const DegenerationInput input(o.n, o.degrees);
    if (o.json) {
        out << limit_to_json(input, o.full).dump(2) << "\n";
        return kExitOk;
    }

    const LimitMHS mhs = limit_mhs(input);
    out << input.to_string() << "  d0=" << input.d0() << "  P_n(d0)="
        << prim_middle_dim(CompleteIntersection(input.n(), Multidegree{input.d0()})) << "\n\n";

    TextTable prim({"k", "weight", "dim", "N-primitive part"});
    for (const auto& [k, piece] : mhs.primitive.primitives)
        prim.add({str(k), str(mhs.primitive.center_weight + k), str(piece.total_dim()), piece.to_string()});
    prim.print(out);

    out << "\n";
    TextTable jordan({"block size", "count"});
    for (const auto& [size, count] : jordan_profile(input).blocks)
        jordan.add({str(size), str(count)});
    jordan.print(out);

    out << "\n";
    TextTable levels({"k", "weight", "level"});
    for (const auto& [k, lvl] : level_report(input))
        levels.add({str(k), str(input.n() - 1 + k), lvl ? str(*lvl) : "undefined"});
    levels.print(out);

    if (o.full) {
        out << "\n";
        TextTable graded({"weight", "dim", "Gr^W"});
        for (const auto& [w, piece] : mhs.full_graded.grades())
            graded.add({str(w), str(piece.total_dim()), piece.to_string()});
        graded.print(out);
        out << "\n";
        TextTable other({"j", "H^j(X_inf)"});
        for (int j = 0; j <= 2 * (input.n() - 1); ++j)
            if (j != input.n() - 1)
                other.add({str(j), other_degrees(input, j).to_string()});
        other.print(out);
    }
    out << "\nmiddle_has_hyperplane_class: " << (mhs.middle_has_hyperplane_class ? "yes" : "no") << "\n";
    return kExitOk;
}

int cmd_verify_eq04(const Options& o, std::ostream& out)
{
    if (!o.sweep_bounds.empty()) {
        if (o.sweep_bounds.size() != 3)
            throw std::invalid_argument("--sweep expects nmax,rmax,dmax");
        SweepBounds b;
        b.n_hi = o.sweep_bounds[0];
        b.r_hi = o.sweep_bounds[1];
        b.d_hi = o.sweep_bounds[2];
        if (b.n_hi < 2 || b.r_hi < 2 || b.d_hi < 1)
            throw std::invalid_argument("--sweep bounds must satisfy nmax >= 2, rmax >= 2, dmax >= 1");
        const auto result = sweep_identity_04(b, o.serial ? Execution::serial : Execution::parallel);
        if (o.json)
            out << to_json(result).dump(2) << "\n";
        else
            print_sweeps({result}, out);
        return result.passed() ? kExitOk : kExitVerificationFailed;
    }

    const DegenerationInput input(o.n, o.degrees);
    const auto check = verify_identity_04(input);
    if (o.json) {
        out << Json{{"n", input.n()}, {"degrees", input.degrees()}, {"lhs", check.lhs.get_str()},
                    {"rhs", check.rhs.get_str()}, {"equal", check.equal}}
                   .dump(2)
            << "\n";
    } else {
        out << input.to_string() << "\n";
        out << "lhs P_n(d0)   = " << check.lhs << "\n";
        out << "rhs subset sum = " << check.rhs << "\n";
        out << (check.equal ? "PASS" : "FAIL dimension identity violated") << "\n";
    }
    return check.equal ? kExitOk : kExitVerificationFailed;
}

int cmd_koszul(const Options& o, std::ostream& out)
{
    if (o.r < 1)
        throw std::invalid_argument("--r must be >= 1");
    if (o.q > o.r)
        throw std::invalid_argument("--q must be <= --r");
    const auto h = truncated_homology(o.r, o.p, o.q);
    if (o.json) {
        Json hom = Json::object();
        for (const auto& [i, d] : h)
            hom[std::to_string(i)] = d;
        out << Json{{"r", o.r}, {"p", o.p}, {"q", o.q}, {"homology", hom}}.dump(2) << "\n";
    } else {
        TextTable t({"degree", "dim H"});
        for (const auto& [i, d] : h)
            t.add({str(i), std::to_string(d)});
        t.print(out);
    }
    return kExitOk;
}

int cmd_koszul_euler(const Options& o, std::ostream& out)
{
    if (o.n < 2 || o.r < 1)
        throw std::invalid_argument("koszul-euler needs --n >= 2 and --r >= 1");
    const auto res = eprime_euler(o.n, o.r, o.k);
    const bool ok = res.euler == res.expected;
    if (o.json) {
        out << Json{{"n", o.n}, {"r", o.r}, {"k", o.k}, {"applicable", res.applicable}, {"euler", res.euler.get_str()},
                    {"expected", res.expected.get_str()}, {"survivor_low", res.survivor_low.get_str()},
                    {"survivor_high", res.survivor_high.get_str()}, {"match", ok}}
                   .dump(2)
            << "\n";
    } else {
        out << "n=" << o.n << " r=" << o.r << " k=" << o.k << (res.applicable ? "" : "  (diagonal vanishes)") << "\n";
        out << "euler characteristic = " << res.euler << "\n";
        out << "survivors C(r-1,0)=" << res.survivor_low << " C(r-1,n)=" << res.survivor_high
            << "  expected = " << res.expected << "\n";
        out << (ok ? "PASS" : "FAIL 'E_1 Euler characteristic does not match survivors") << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_pencil(const Options& o, std::ostream& out)
{
    const PencilInput input(o.n, o.d1, o.d2);
    const auto lines = weak_lefschetz_inequalities(input);
    const E1Page table = e1_table(input);
    const E1Page page = build_e1_nearby(input.as_degeneration());
    bool consistent = table.cells.size() == page.cells.size();
    for (const auto& [key, cell] : table.cells) {
        const E1Cell* other = page.find(key.first, key.second);
        consistent = consistent && other && other->summands == cell.summands;
    }
    const bool ok = consistent && std::all_of(lines.begin(), lines.end(), [](const auto& l) { return l.holds; });

    if (o.json) {
        Json doc = pencil_to_json(input);
        doc["e1_matches_weight_ss"] = consistent;
        out << doc.dump(2) << "\n";
        return ok ? kExitOk : kExitVerificationFailed;
    }

    out << "Y = P^" << input.n << ", L = O(" << input.d1 << ") x O(" << input.d2 << "), d0 = " << input.d0() << "\n\n";
    const GammaTable g(input);
    TextTable gt({"V", "dim", "gamma^-3", "gamma^-2", "gamma^-1", "gamma^0"});
    for (auto v : {PencilVariety::Y, PencilVariety::Y0, PencilVariety::Y1, PencilVariety::Y2, PencilVariety::Z,
                   PencilVariety::Sigma})
        gt.add({to_string(v), str(g.dim(v)), str(g.gamma(v, -3)), str(g.gamma(v, -2)), str(g.gamma(v, -1)),
                str(g.gamma(v, 0))});
    gt.print(out);

    out << "\nE_1 page\n";
    print_page(table, out);
    out << "matches weight spectral sequence builder: " << (consistent ? "yes" : "NO") << "\n\n";

    TextTable lt({"relation", "lhs", "rhs", "status"});
    for (const auto& l : lines)
        lt.add({l.statement, str(l.lhs), str(l.rhs), l.holds ? "ok" : "FAIL"});
    lt.print(out);

    const auto t6 = theorem6_inequality(input);
    out << "\ngamma^0(Y0) = " << t6.gamma0_y0 << ", gamma^-1(Y) = " << t6.gamma_minus1_y << ": "
        << (t6.holds ? "vanishing cycles do not vanish" : "inequality fails") << "\n";
    out << "sufficient condition: " << to_string(t6.branch) << "\n";
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_hodge(const Options& o, std::ostream& out)
{
    const auto h = hypersurface_hodge_numbers(o.n, o.d);
    BigInt sum = 0;
    for (const auto& x : h)
        sum += x;
    const BigInt p = prim_hypersurface_closed_form(o.n, o.d);
    const bool ok = sum == p;
    if (o.json) {
        Json arr = Json::array();
        for (const auto& x : h)
            arr.push_back(x.get_str());
        out << Json{{"n", o.n}, {"d", o.d}, {"hodge", arr}, {"sum", sum.get_str()}, {"prim_dim", p.get_str()},
                    {"match", ok}}
                   .dump(2)
            << "\n";
    } else {
        TextTable t({"i", "p", "dim Gr_F^p H^{n-1}_prim"});
        for (int i = 1; i <= o.n; ++i)
            t.add({str(i), str(o.n - i), str(h[static_cast<std::size_t>(i - 1)])});
        t.print(out);
        out << "sum = " << sum << ", P_n(d) = " << p << (ok ? "" : "  MISMATCH") << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_sweep(const Options& o, std::ostream& out)
{
    const Execution e = o.serial ? Execution::serial : Execution::parallel;
    const int nmax = o.nmax ? o.nmax : 8;
    const int rmax = o.rmax ? o.rmax : 8;
    const int dmax = o.dmax ? o.dmax : 4;
    const SweepBounds wide{2, nmax, 2, rmax, 1, dmax};
    const SweepBounds narrow{2, std::min(nmax, 6), 2, std::min(rmax, 6), 1, std::min(dmax, 3)};

    const std::vector<std::string> known{"eq04",  "all-ones", "euler-numbers", "griffiths", "koszul",  "eprime",
                                         "purity", "e1-euler", "limit",         "nilpotency", "levels", "pencil"};
    if (o.suite != "all" && std::find(known.begin(), known.end(), o.suite) == known.end())
        throw std::invalid_argument("unknown suite '" + o.suite + "'");
    auto want = [&o](const char* name) { return o.suite == "all" || o.suite == name; };

    std::vector<SweepResult> results;
    if (want("eq04"))
        results.push_back(sweep_identity_04(wide, e));
    if (want("all-ones"))
        results.push_back(sweep_all_ones_identity(2, nmax, 2, 10, e));
    if (want("euler-numbers"))
        results.push_back(sweep_euler_numbers(20, 20, e));
    if (want("griffiths"))
        results.push_back(sweep_griffiths(8, 8, e));
    if (want("koszul"))
        results.push_back(sweep_truncated_homology(std::min(rmax, 8), e));
    if (want("eprime"))
        results.push_back(sweep_eprime_euler(2, std::min(nmax, 6), 2, rmax, e));
    if (want("purity"))
        results.push_back(sweep_e1_purity(narrow, e));
    if (want("e1-euler"))
        results.push_back(sweep_e1_euler(narrow, e));
    if (want("limit"))
        results.push_back(sweep_limit_mhs(wide, false, e));
    if (want("nilpotency"))
        results.push_back(sweep_nilpotency(2, std::min(nmax, 5), rmax, e));
    if (want("levels"))
        results.push_back(sweep_level_bound(3, nmax, 2, rmax, e));
    if (want("pencil"))
        results.push_back(sweep_pencil(2, 9, 4, e));

    if (o.json) {
        Json arr = Json::array();
        for (const auto& r : results)
            arr.push_back(to_json(r));
        out << Json{{"suites", arr}, {"passed", all_passed(results)}}.dump(2) << "\n";
    } else {
        print_sweeps(results, out);
    }
    return all_passed(results) ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Weight spectral sequences and limit mixed Hodge structures of {g1...gr = t g0} in P^n", "lmhs"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&o](CLI::App* sub, bool required) {
        auto* n = sub->add_option("--n", o.n, "ambient dimension n >= 2");
        auto* d = sub->add_option("--degrees", o.degrees, "degrees d1,...,dr")->delimiter(',');
        if (required) {
            n->required();
            d->required();
        }
        return std::pair{n, d};
    };

    auto* e1 = app.add_subcommand("e1", "E_1 page of the weight spectral sequence");
    auto [e1_n, e1_d] = add_input(e1, false);
    e1->add_flag("--vanishing", o.vanishing, "vanishing-cycle variant");
    auto* e1_table_opt = e1->add_option("--table", o.table_path, "cohomology table JSON file");
    e1->add_flag("--trace", o.trace, "include per-subset provenance (JSON only)");
    e1->add_flag("--json", o.json, "JSON output");
    e1_table_opt->excludes(e1_n)->excludes(e1_d);

    auto* limit = app.add_subcommand("limit", "graded pieces of the limit mixed Hodge structure");
    add_input(limit, true);
    limit->add_flag("--full", o.full, "also print the full weight-graded object");
    limit->add_flag("--json", o.json, "JSON output");

    auto* eq04 = app.add_subcommand("verify-eq04", "check the dimension identity");
    auto [eq_n, eq_d] = add_input(eq04, false);
    auto* eq_sweep = eq04->add_option("--sweep", o.sweep_bounds, "nmax,rmax,dmax")->delimiter(',');
    eq04->add_flag("--serial", o.serial, "run the sweep without threads");
    eq04->add_flag("--json", o.json, "JSON output");
    eq_sweep->excludes(eq_n)->excludes(eq_d);

    auto* koszul = app.add_subcommand("koszul", "homology of a truncated Koszul complex");
    koszul->add_option("--r", o.r)->required();
    koszul->add_option("--p", o.p)->required();
    koszul->add_option("--q", o.q)->required();
    koszul->add_flag("--json", o.json, "JSON output");

    auto* keuler = app.add_subcommand("koszul-euler", "Euler characteristic of an 'E_1 diagonal");
    keuler->add_option("--n", o.n)->required();
    keuler->add_option("--r", o.r)->required();
    keuler->add_option("--k", o.k)->required();
    keuler->add_flag("--json", o.json, "JSON output");

    auto* pencil = app.add_subcommand("pencil", "gamma table and inequalities for a pencil on P^n");
    pencil->add_option("--n", o.n)->required();
    pencil->add_option("--d1", o.d1)->required();
    pencil->add_option("--d2", o.d2)->required();
    pencil->add_flag("--json", o.json, "JSON output");

    auto* hodge = app.add_subcommand("hodge", "primitive Hodge numbers of a hypersurface");
    hodge->add_option("--n", o.n)->required();
    hodge->add_option("--d", o.d)->required();
    hodge->add_flag("--json", o.json, "JSON output");

    auto* sweep = app.add_subcommand("sweep", "batch invariant suites");
    sweep->add_option("--suite", o.suite, "suite name or 'all'");
    sweep->add_option("--nmax", o.nmax);
    sweep->add_option("--rmax", o.rmax);
    sweep->add_option("--dmax", o.dmax);
    sweep->add_flag("--serial", o.serial, "serial reference execution");
    sweep->add_option("--threads", o.threads, "OpenMP thread count");
    sweep->add_flag("--json", o.json, "JSON output");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << "usage error: " << ex.what() << "\n";
        return kExitUsage;
    }

    try {
        if (o.threads > 0)
            omp_set_num_threads(o.threads);
        if (*e1) {
            if (o.table_path.empty() && (o.n == 0 || o.degrees.empty()))
                throw std::invalid_argument("e1 needs --n and --degrees, or --table");
            return cmd_e1(o, out);
        }
        if (*limit)
            return cmd_limit(o, out);
        if (*eq04) {
            if (o.sweep_bounds.empty() && (o.n == 0 || o.degrees.empty()))
                throw std::invalid_argument("verify-eq04 needs --n and --degrees, or --sweep");
            return cmd_verify_eq04(o, out);
        }
        if (*koszul)
            return cmd_koszul(o, out);
        if (*keuler)
            return cmd_koszul_euler(o, out);
        if (*pencil)
            return cmd_pencil(o, out);
        if (*hodge)
            return cmd_hodge(o, out);
        if (*sweep)
            return cmd_sweep(o, out);
    } catch (const std::invalid_argument& ex) {
        err << "usage error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        err << "internal invariant violated: " << ex.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}

}  // namespace lmhs::cli
