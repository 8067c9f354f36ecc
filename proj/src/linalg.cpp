#include "dfsub/linalg.hpp"

#include <algorithm>
#include <set>

namespace dfsub {

std::vector<std::size_t> rref(ConstMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pr = row;
        while (pr < m.size() && m[pr][col].is_zero()) ++pr;
        if (pr == m.size()) continue;
        std::swap(m[row], m[pr]);
        Const inv = Const(1) / m[row][col];
        for (std::size_t c = col; c < cols; ++c)
            if (!m[row][c].is_zero()) m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Const f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                if (!m[row][c].is_zero()) m[r][c] -= f * m[row][c];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

std::size_t rank(ConstMatrix m) { return rref(m).size(); }

std::vector<SymId> form_columns(const std::vector<LinearForm>& forms) {
    std::set<SymId> all;
    for (const auto& f : forms)
        for (const auto& [s, c] : f) all.insert(s);
    std::vector<SymId> cols(all.begin(), all.end());
    sort_symbols(cols);
    return cols;
}

std::vector<LinearForm> rref_forms(const std::vector<LinearForm>& forms) {
    std::vector<SymId> cols = form_columns(forms);
    std::map<SymId, std::size_t> index;
    for (std::size_t k = 0; k < cols.size(); ++k) index[cols[k]] = k;
    ConstMatrix m;
    for (const auto& f : forms) {
        std::vector<Const> row(cols.size());
        bool any = false;
        for (const auto& [s, c] : f) {
            if (c.is_zero()) continue;
            row[index[s]] = c;
            any = true;
        }
        if (any) m.push_back(std::move(row));
    }
    rref(m);
    std::vector<LinearForm> out;
    for (const auto& row : m) {
        LinearForm f;
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (!row[k].is_zero()) f[cols[k]] = row[k];
        out.push_back(std::move(f));
    }
    return out;
}

bool span_equal(const std::vector<LinearForm>& a, const std::vector<LinearForm>& b) {
    return rref_forms(a) == rref_forms(b);
}

bool in_span(const LinearForm& f, const std::vector<LinearForm>& basis) {
    auto r = rref_forms(basis);
    std::vector<LinearForm> ext = basis;
    ext.push_back(f);
    return rref_forms(ext).size() == r.size();
}

Const evaluate_form(const LinearForm& f, const std::map<SymId, Const>& point) {
    Const s;
    for (const auto& [sym, c] : f) {
        auto it = point.find(sym);
        if (it != point.end()) s += c * it->second;
    }
    return s;
}

IntMatrix hermite_normal_form(IntMatrix rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const auto& r) { return std::all_of(r.begin(), r.end(), [](const mpz_class& v) { return v == 0; }); }),
               rows.end());
    if (rows.empty()) return rows;
    std::size_t cols = rows[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        // Euclid on column col among rows >= row.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = row; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
            }
            if (best == rows.size()) break;
            std::swap(rows[row], rows[best]);
            bool reduced = false;
            for (std::size_t r = row + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[row][col].get_mpz_t());
                for (std::size_t c = col; c < cols; ++c) rows[r][c] -= q * rows[row][c];
                if (rows[r][col] != 0) reduced = true;
            }
            if (!reduced) break;
        }
        if (rows[row][col] == 0) continue;
        if (rows[row][col] < 0)
            for (auto& v : rows[row]) v = -v;
        for (std::size_t r = 0; r < row; ++r) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[row][col].get_mpz_t());
            if (q != 0)
                for (std::size_t c = col; c < cols; ++c) rows[r][c] -= q * rows[row][c];
        }
        ++row;
    }
    rows.resize(row);
    return rows;
}

}  // namespace dfsub
