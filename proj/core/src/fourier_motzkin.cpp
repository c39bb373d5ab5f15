#include "toric/fourier_motzkin.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

// Scales a row to a canonical integer-primitive form so duplicates produced
// by the pairwise combination step can be discarded.
void normalize_row(LinIneq& row) {
    Int lcm_den = 1;
    for (const Rat& v : row.coeffs) lcm_den = lcm(lcm_den, denominator(v));
    lcm_den = lcm(lcm_den, denominator(row.rhs));
    Int g = 0;
    auto scaled = [&](const Rat& v) { return numerator(v) * (lcm_den / denominator(v)); };
    for (const Rat& v : row.coeffs) g = gcd(g, scaled(v));
    g = gcd(g, scaled(row.rhs));
    if (g == 0) return;  // all-zero row, keep as is
    for (Rat& v : row.coeffs) v = Rat(scaled(v) / g);
    row.rhs = Rat(scaled(row.rhs) / g);
}

struct RowLess {
    bool operator()(const LinIneq& a, const LinIneq& b) const {
        if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
        return a.rhs < b.rhs;
    }
};

// Drops rows with zero coefficient vector.  A row 0 >= c with c > 0 is a
// contradiction; the caller is told through `contradiction`.
std::vector<LinIneq> prune(std::vector<LinIneq> rows, bool& contradiction) {
    std::set<LinIneq, RowLess> keep;
    for (LinIneq& r : rows) {
        normalize_row(r);
        const bool zero = std::all_of(r.coeffs.begin(), r.coeffs.end(),
                                      [](const Rat& v) { return v == 0; });
        if (zero) {
            if (r.rhs > 0) contradiction = true;
            continue;
        }
        keep.insert(std::move(r));
    }
    return {keep.begin(), keep.end()};
}

}  // namespace

std::vector<LinIneq> fm_eliminate(std::vector<LinIneq> rows, std::size_t var) {
    const std::size_t width = rows.empty() ? 0 : rows[0].coeffs.size();
    std::vector<LinIneq> zero, pos, neg;
    for (LinIneq& r : rows) {
        if (r.coeffs[var] == 0) zero.push_back(std::move(r));
        else if (r.coeffs[var] > 0) pos.push_back(std::move(r));
        else neg.push_back(std::move(r));
    }
    std::vector<LinIneq> out = std::move(zero);
    for (const LinIneq& p : pos) {
        for (const LinIneq& n : neg) {
            // p.coeffs[var] > 0 > n.coeffs[var]; the combination
            // (-n_var) * p + p_var * n has a zero coefficient at `var` and
            // is implied by the pair (both weights are positive).
            const Rat wp = -n.coeffs[var];
            const Rat wn = p.coeffs[var];
            LinIneq c;
            c.coeffs.resize(width);
            for (std::size_t j = 0; j < width; ++j)
                c.coeffs[j] = wp * p.coeffs[j] + wn * n.coeffs[j];
            c.coeffs[var] = 0;
            c.rhs = wp * p.rhs + wn * n.rhs;
            out.push_back(std::move(c));
        }
    }
    bool contradiction = false;
    out = prune(std::move(out), contradiction);
    if (contradiction) {
        LinIneq bad;
        bad.coeffs.assign(width, Rat(0));
        bad.rhs = 1;
        out.push_back(std::move(bad));
    }
    return out;
}

bool fm_feasible(std::vector<LinIneq> rows, std::size_t nvars) {
    bool contradiction = false;
    rows = prune(std::move(rows), contradiction);
    if (contradiction) return false;
    for (std::size_t v = 0; v < nvars; ++v) {
        if (rows.empty()) return true;
        rows = fm_eliminate(std::move(rows), v);
    }
    contradiction = false;
    rows = prune(std::move(rows), contradiction);
    return !contradiction;
}

FmInterval fm_project_to(std::vector<LinIneq> rows, std::size_t nvars, std::size_t keep) {
    bool contradiction = false;
    rows = prune(std::move(rows), contradiction);
    if (contradiction) return {};
    for (std::size_t v = 0; v < nvars; ++v) {
        if (v == keep) continue;
        rows = fm_eliminate(std::move(rows), v);
    }
    FmInterval iv;
    iv.feasible = true;
    for (const LinIneq& r : rows) {
        const Rat& a = r.coeffs[keep];
        if (a == 0) {
            if (r.rhs > 0) return {};
            continue;
        }
        const Rat bound = r.rhs / a;
        if (a > 0) {
            if (!iv.lower || bound > *iv.lower) iv.lower = bound;
        } else {
            if (!iv.upper || bound < *iv.upper) iv.upper = bound;
        }
    }
    if (iv.lower && iv.upper && *iv.lower > *iv.upper) return {};
    return iv;
}

}  // namespace toric
