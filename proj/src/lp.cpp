#include "pltop/lp.hpp"

#include <cassert>

namespace pltop {

namespace {

// Dense tableau for min c.z, A z = rhs, z >= 0.
struct Tableau {
    int m = 0, n = 0;
    std::vector<std::vector<Rational>> row;  // m x (n+1), last col = rhs
    std::vector<Rational> cost;              // n+1, last = -objective
    std::vector<int> basis;                  // basic variable per row

    void pivot(int r, int c) {
        Rational inv = 1 / row[r][c];
        for (int j = 0; j <= n; ++j) row[r][j] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || row[i][c] == 0) continue;
            Rational f = row[i][c];
            for (int j = 0; j <= n; ++j) row[i][j] -= f * row[r][j];
        }
        if (cost[c] != 0) {
            Rational f = cost[c];
            for (int j = 0; j <= n; ++j) cost[j] -= f * row[r][j];
        }
        basis[r] = c;
    }

    // Bland's rule; returns false on unboundedness.
    bool run() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < n; ++j)
                if (cost[j] < 0) { enter = j; break; }
            if (enter < 0) return true;
            int leave = -1;
            for (int i = 0; i < m; ++i) {
                if (row[i][enter] <= 0) continue;
                if (leave < 0) { leave = i; continue; }
                Rational cur = row[i][n] / row[i][enter];
                Rational best = row[leave][n] / row[leave][enter];
                if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LPResult lp_minimize(int nvars, const std::vector<LinCon>& cons, const VecQ& objective) {
    // Standard form: x = xp - xn; inequality a.x >= b gets slack a.x - s = b.
    int nineq = 0;
    for (const auto& c : cons)
        if (!c.equality) ++nineq;
    int m = int(cons.size());
    int nreal = 2 * nvars + nineq;

    Tableau t;
    t.m = m;
    t.n = nreal + m;  // artificials appended
    t.row.assign(m, std::vector<Rational>(t.n + 1, Rational(0)));
    t.basis.assign(m, -1);

    int slack = 0;
    for (int i = 0; i < m; ++i) {
        const LinCon& c = cons[i];
        assert(int(c.a.size()) == nvars);
        for (int v = 0; v < nvars; ++v) {
            t.row[i][2 * v] = c.a[v];
            t.row[i][2 * v + 1] = -c.a[v];
        }
        if (!c.equality) t.row[i][2 * nvars + slack++] = -1;
        t.row[i][t.n] = c.b;
        if (t.row[i][t.n] < 0)
            for (int j = 0; j <= t.n; ++j) t.row[i][j] = -t.row[i][j];
        t.row[i][nreal + i] = 1;
        t.basis[i] = nreal + i;
    }

    // Phase 1: minimize the artificial sum.
    t.cost.assign(t.n + 1, Rational(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= t.n; ++j)
            if (j < nreal || j == t.n) t.cost[j] -= t.row[i][j];
    if (!t.run()) return {LPResult::Status::Infeasible, 0, {}};  // cannot happen: phase 1 bounded
    if (-t.cost[t.n] != 0) return {LPResult::Status::Infeasible, 0, {}};

    // Drive residual artificials out of the basis, dropping redundant rows.
    for (int i = 0; i < t.m; ++i) {
        if (t.basis[i] < nreal) continue;
        int c = -1;
        for (int j = 0; j < nreal; ++j)
            if (t.row[i][j] != 0) { c = j; break; }
        if (c >= 0) {
            t.pivot(i, c);
        } else {
            t.row.erase(t.row.begin() + i);
            t.basis.erase(t.basis.begin() + i);
            --t.m;
            --i;
        }
    }
    // Drop artificial columns.
    for (auto& r : t.row) { r[nreal] = r[t.n]; r.resize(nreal + 1); }
    t.n = nreal;

    // Phase 2.
    t.cost.assign(t.n + 1, Rational(0));
    for (int v = 0; v < nvars; ++v) {
        t.cost[2 * v] = objective[v];
        t.cost[2 * v + 1] = -objective[v];
    }
    for (int i = 0; i < t.m; ++i) {
        if (t.cost[t.basis[i]] == 0) continue;
        Rational f = t.cost[t.basis[i]];
        for (int j = 0; j <= t.n; ++j) t.cost[j] -= f * t.row[i][j];
    }
    if (!t.run()) return {LPResult::Status::Unbounded, 0, {}};

    VecQ z(t.n, Rational(0));
    for (int i = 0; i < t.m; ++i) z[t.basis[i]] = t.row[i][t.n];
    VecQ x(nvars);
    for (int v = 0; v < nvars; ++v) x[v] = z[2 * v] - z[2 * v + 1];
    return {LPResult::Status::Optimal, -t.cost[t.n], x};
}

LPResult lp_maximize(int nvars, const std::vector<LinCon>& cons, const VecQ& objective) {
    VecQ neg(objective.size());
    for (size_t i = 0; i < objective.size(); ++i) neg[i] = -objective[i];
    LPResult r = lp_minimize(nvars, cons, neg);
    if (r.status == LPResult::Status::Optimal) r.value = -r.value;
    return r;
}

std::optional<VecQ> lp_feasible_point(int nvars, const std::vector<LinCon>& cons) {
    LPResult r = lp_minimize(nvars, cons, VecQ(nvars, Rational(0)));
    if (r.status != LPResult::Status::Optimal) return std::nullopt;
    return r.point;
}

}  // namespace pltop
