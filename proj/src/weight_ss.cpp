#include "lmhs/weight_ss.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace lmhs {

DegenerationInput::DegenerationInput(int n, std::vector<int> degrees)
    : n_(n)
    , degrees_(std::move(degrees))
{
    if (n_ < 2)
        throw std::invalid_argument("DegenerationInput: n must be >= 2, got " + std::to_string(n_));
    if (degrees_.size() < 2)
        throw std::invalid_argument("DegenerationInput: need r >= 2 degrees, got " + std::to_string(degrees_.size()));
    if (degrees_.size() > 30)
        throw std::invalid_argument("DegenerationInput: r > 30 is not supported");
    for (int d : degrees_)
        if (d < 1)
            throw std::invalid_argument("DegenerationInput: degrees must be >= 1, got " + std::to_string(d));
}

int DegenerationInput::d0() const
{
    int s = 0;
    for (int d : degrees_)
        s += d;
    return s;
}

Multidegree DegenerationInput::subset_degrees(unsigned mask) const
{
    std::vector<int> ds;
    for (int k = 0; k < r(); ++k)
        if (mask & (1u << k))
            ds.push_back(degrees_[static_cast<std::size_t>(k)]);
    return Multidegree(std::move(ds));
}

Multidegree DegenerationInput::subset_degrees_primed(unsigned mask) const
{
    return subset_degrees(mask).with(d0());
}

std::string DegenerationInput::to_string() const
{
    std::ostringstream os;
    os << "n=" << n_ << " degrees=(";
    for (std::size_t k = 0; k < degrees_.size(); ++k)
        os << (k ? "," : "") << degrees_[k];
    os << ")";
    return os.str();
}

BigInt E1Page::dim(int i, int j) const
{
    const E1Cell* c = find(i, j);
    return c ? c->dim : BigInt(0);
}

const E1Cell* E1Page::find(int i, int j) const
{
    auto it = cells.find({i, j});
    return it == cells.end() ? nullptr : &it->second;
}

bool E1Page::same_dims(const E1Page& other) const
{
    if (cells.size() != other.cells.size())
        return false;
    for (const auto& [key, cell] : cells) {
        if (other.dim(key.first, key.second) != cell.dim)
            return false;
    }
    return true;
}

namespace {

std::vector<std::vector<unsigned>> masks_by_size(int r)
{
    std::vector<std::vector<unsigned>> out(static_cast<std::size_t>(r) + 1);
    for (unsigned mask = 1; mask < (1u << r); ++mask)
        out[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    return out;
}

struct Column {
    std::map<int, E1Cell> cells;  // keyed by j
    std::vector<E1TraceEntry> trace;
};

void add_term(Column& col, int i, int j, int l, unsigned mask, bool primed, int degree, int twist,
              const FormalSum& piece, bool trace)
{
    if (piece.empty())
        return;
    E1Cell& cell = col.cells[j];
    if (!cell.summands)
        cell.summands.emplace();
    *cell.summands += piece;
    cell.dim += piece.total_dim();
    if (trace)
        col.trace.push_back({i, j, l, mask, primed, degree, twist});
}

// Column i of the page: Y_I terms with |I| = i+2l+1, l >= max(-i, y_lmin),
// and Y'_I terms with |I| = i+2l+2, l >= max(-i, 0).
Column build_column(const DegenerationInput& input, const std::vector<std::vector<unsigned>>& masks, int i,
                    int y_lmin, bool trace)
{
    Column col;
    const int n = input.n();
    const int r = input.r();

    for (int l = std::max(-i, y_lmin); i + 2 * l + 1 <= std::min(r, n); ++l) {
        const int s = i + 2 * l + 1;
        const int twist = i + l;
        for (unsigned mask : masks[static_cast<std::size_t>(s)]) {
            const CompleteIntersection y(n, input.subset_degrees(mask));
            for (int deg = 0; deg <= 2 * y.dim(); ++deg)
                add_term(col, i, deg - n + s, l, mask, false, deg, twist, cohomology_as_formal_sum(y, deg, twist),
                         trace);
        }
    }

    for (int l = std::max(-i, 0); i + 2 * l + 2 <= std::min(r, n - 1); ++l) {
        const int s = i + 2 * l + 2;
        const int twist = i + l + 1;
        for (unsigned mask : masks[static_cast<std::size_t>(s)]) {
            const CompleteIntersection y(n, input.subset_degrees_primed(mask));
            for (int deg = 0; deg <= 2 * y.dim(); ++deg)
                add_term(col, i, deg - n + s + 1, l, mask, true, deg, twist, cohomology_as_formal_sum(y, deg, twist),
                         trace);
        }
    }
    return col;
}

E1Page build_page(const DegenerationInput& input, const E1Options& options, E1Kind kind)
{
    const int n = input.n();
    const int y_lmin = kind == E1Kind::vanishing ? 1 : 0;
    const auto masks = masks_by_size(input.r());
    const int width = 2 * n - 1;
    std::vector<Column> columns(static_cast<std::size_t>(width));

#pragma omp parallel for schedule(dynamic) if (options.execution == Execution::parallel)
    for (int c = 0; c < width; ++c)
        columns[static_cast<std::size_t>(c)] = build_column(input, masks, c - (n - 1), y_lmin, options.trace);

    E1Page page;
    page.n = n;
    page.kind = kind;
    for (int c = 0; c < width; ++c) {
        const int i = c - (n - 1);
        auto& col = columns[static_cast<std::size_t>(c)];
        for (auto& [j, cell] : col.cells)
            page.cells.emplace(std::pair{i, j}, std::move(cell));
        page.trace.insert(page.trace.end(), col.trace.begin(), col.trace.end());
    }
    return page;
}

const BigInt& table_entry(const std::map<int, std::map<int, BigInt>>& part, const char* name, int size, int j)
{
    auto row = part.find(size);
    if (row != part.end()) {
        auto it = row->second.find(j);
        if (it != row->second.end())
            return it->second;
    }
    throw std::invalid_argument(std::string("CohomologyTable: missing ") + name + " entry (|I|=" + std::to_string(size)
                                + ", j=" + std::to_string(j) + ")");
}

}  // namespace

E1Page build_e1_nearby(const DegenerationInput& input, const E1Options& options)
{
    return build_page(input, options, E1Kind::nearby);
}

E1Page build_e1_vanishing(const DegenerationInput& input, const E1Options& options)
{
    return build_page(input, options, E1Kind::vanishing);
}

CohomologyTable CohomologyTable::from_projective_space(const DegenerationInput& input)
{
    CohomologyTable table;
    table.n = input.n();
    table.r = input.r();
    const auto masks = masks_by_size(input.r());
    for (int s = 1; s <= std::min(table.r, table.n); ++s) {
        for (int deg = 0; deg <= 2 * (table.n - s); ++deg) {
            BigInt total = 0;
            for (unsigned mask : masks[static_cast<std::size_t>(s)])
                total += betti(CompleteIntersection(table.n, input.subset_degrees(mask)), deg);
            table.yi[s][deg] = total;
        }
    }
    for (int s = 2; s <= std::min(table.r, table.n - 1); ++s) {
        for (int deg = 0; deg <= 2 * (table.n - s - 1); ++deg) {
            BigInt total = 0;
            for (unsigned mask : masks[static_cast<std::size_t>(s)])
                total += betti(CompleteIntersection(table.n, input.subset_degrees_primed(mask)), deg);
            table.ypi[s][deg] = total;
        }
    }
    return table;
}

E1Page build_e1_custom(const CohomologyTable& table, int n, int r)
{
    if (n < 2 || r < 2)
        throw std::invalid_argument("build_e1_custom: need n >= 2 and r >= 2");
    for (const auto* part : {&table.yi, &table.ypi})
        for (const auto& [s, row] : *part)
            for (const auto& [j, v] : row)
                if (v < 0)
                    throw std::invalid_argument("CohomologyTable: negative dimension at (|I|=" + std::to_string(s)
                                                + ", j=" + std::to_string(j) + ")");

    E1Page page;
    page.n = n;
    page.kind = E1Kind::custom;
    auto add = [&page](int i, int j, const BigInt& v) {
        if (v == 0)
            return;
        page.cells[{i, j}].dim += v;
    };

    for (int i = -(n - 1); i <= n - 1; ++i) {
        for (int l = std::max(-i, 0); i + 2 * l + 1 <= std::min(r, n); ++l) {
            const int s = i + 2 * l + 1;
            for (int deg = 0; deg <= 2 * (n - s); ++deg)
                add(i, deg - n + s, table_entry(table.yi, "YI", s, deg));
        }
        for (int l = std::max(-i, 0); i + 2 * l + 2 <= std::min(r, n - 1); ++l) {
            const int s = i + 2 * l + 2;
            for (int deg = 0; deg <= 2 * (n - s - 1); ++deg)
                add(i, deg - n + s + 1, table_entry(table.ypi, "YpI", s, deg));
        }
    }
    return page;
}

EulerCheck euler_characteristic_check(const E1Page& page, const DegenerationInput& input)
{
    EulerCheck check;
    check.lhs = 0;
    for (const auto& [key, cell] : page.cells) {
        if (key.second % 2 == 0)
            check.lhs += cell.dim;
        else
            check.lhs -= cell.dim;
    }
    check.sign = kE1EulerSign * ((input.n() - 1) % 2 == 0 ? 1 : -1);
    check.rhs = check.sign * euler_hypersurface(input.n(), input.d0());
    return check;
}

std::optional<std::pair<int, int>> first_impure_cell(const E1Page& page)
{
    for (const auto& [key, cell] : page.cells) {
        if (cell.summands && !cell.summands->is_pure(page.weight(key.first, key.second)))
            return key;
    }
    return std::nullopt;
}

}  // namespace lmhs
