#pragma once

// Slow, direct re-implementations used as expected-value sources in tests.
// None of these call into the library's arithmetic or search code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

// a mod b by repeated stepping.
inline long long residue(long long a, long long b) {
    while (a < 0) a += b;
    while (a >= b) a -= b;
    return a;
}

// delta as a reduced (numerator, denominator) pair.
inline std::pair<long long, long long> delta(int d, int g, int r, int l, int m) {
    long long num = 2LL * d + 2LL * g - 2LL * r + 2LL * l + (r + 1LL) * m;
    long long den = r - 1;
    long long k = std::gcd(num, den);
    return {num / k, den / k};
}

// Is x/y within w/(r-1) of 1 around an integer target? Written with
// doubled-up fractions rather than the library's integer rewrite.
inline bool window(int d, int g, int r, int l, int m, long long target, int w) {
    auto [num, den] = delta(d, g, r, l, m);
    // |num/den - target| <= (r-1-w)/(r-1)
    long long lhs = std::llabs(num - target * den) * (r - 1);
    long long rhs = (long long)(r - 1 - w) * den;
    return lhs <= rhs;
}

// ---- erasability: the case table, keeping every reachable state -------------

struct St {
    int t1, t2;
    bool strong;
    int twist;
    auto key() const { return std::tuple(t1, t2, strong, twist); }
    bool operator<(const St& o) const { return key() < o.key(); }
};

inline St norm(St s, int r) {
    while (s.t1 == r - 1) s = {s.t2, 0, true, s.twist + 1};
    return s;
}

inline void table(const St& a, const St& b, int r, std::set<St>& out) {
    int f = r - 1, n = a.twist + b.twist;
    bool both = a.strong && b.strong;
    if (a.t1 + b.t1 < f) out.insert(norm({a.t1 + b.t1, a.t2 + b.t2, both, n}, r));
    if (a.t2 + b.t2 < f && a.t1 + b.t1 == f) out.insert(norm({a.t2 + b.t2, 0, true, n + 1}, r));
    if (b.t2 == 0 && b.t1 + a.t2 <= f && f <= b.t1 + a.t1) out.insert(norm({a.t2 + a.t1 + b.t1 - f, 0, both, n + 1}, r));
    if (b.t1 + a.t2 < f && a.t1 + b.t2 == f) out.insert(norm({a.t2 + b.t1, 0, b.strong, n + 1}, r));
    if (a.t1 + b.t2 == f && b.t1 + a.t2 == f) out.insert(norm({0, 0, true, n + 2}, r));
}

struct Type {
    int t1, t2;
    bool strong;
    auto key() const { return std::tuple(t1, t2, strong); }
    bool operator<(const Type& o) const { return key() < o.key(); }
    bool operator==(const Type& o) const { return key() == o.key(); }
};

// Every state reachable by folding this order, both roles at each step.
inline std::set<St> finals(const std::vector<Type>& order, int r) {
    std::set<St> cur{norm({order[0].t1, order[0].t2, order[0].strong, 0}, r)};
    for (std::size_t i = 1; i < order.size(); ++i) {
        St in = norm({order[i].t1, order[i].t2, order[i].strong, 0}, r);
        std::set<St> next;
        for (const auto& s : cur) {
            table(s, in, r, next);
            table(in, s, r, next);
        }
        cur = std::move(next);
    }
    return cur;
}

inline bool order_ok(const std::vector<Type>& order, int r) {
    if (order.empty()) return true;
    for (const auto& s : finals(order, r))
        if (s.t2 == 0 && s.strong) return true;
    return false;
}

inline bool erasable(std::vector<Type> items, int r) {
    if (items.empty()) return true;
    std::sort(items.begin(), items.end());
    do {
        if (order_ok(items, r)) return true;
    } while (std::next_permutation(items.begin(), items.end()));
    return false;
}

// ---- one-variable integer feasibility by scanning ----------------------------

struct Frac {
    long long num, den;
};

inline std::optional<long long> scan(const std::vector<Frac>& lo, const std::vector<Frac>& hi, long long from = -10000,
                                     long long to = 10000) {
    for (long long n = from; n <= to; ++n) {
        bool ok = true;
        for (const auto& f : lo) ok = ok && n * f.den >= f.num;
        for (const auto& f : hi) ok = ok && n * f.den <= f.num;
        if (ok) return n;
    }
    return std::nullopt;
}

// ---- master rule with explicit n_i multisets -----------------------------------

using Goal = std::tuple<int, int, int, int, int>;

// Every (n_1 <= ... <= n_k) with n_i = r-1 mod 2, 2 <= n_i <= r-1, and no 2
// when banned.
inline void multisets(int k, int lo, int r, bool ban2, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if ((int)cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (int n = lo; n <= r - 1; ++n) {
        if ((n - (r - 1)) % 2 != 0 || n < 2 || (ban2 && n == 2)) continue;
        cur.push_back(n);
        multisets(k, n, r, ban2, cur, out);
        cur.pop_back();
    }
}

// Goal sets of the master rule (or its three-goal variant) at a tuple,
// trying explicit multisets. Subgoals are not filtered.
inline std::set<std::vector<Goal>> master_goal_sets(int d, int g, int r, int l, int m, bool three) {
    std::set<std::vector<Goal>> out;
    for (int lp = 0; lp <= l; ++lp)
        for (int mp = 0; mp <= m; ++mp) {
            if (r == 3 && mp != 0) continue;
            if (three ? !(mp < m && 2 * mp + lp < r - 2) : !(2 * mp + lp <= r - 2)) continue;
            for (int dp = g + r; dp <= d; ++dp) {
                if (g == 0 && m != 0 && dp == g + r) continue;
                std::vector<std::vector<int>> ns;
                std::vector<int> cur;
                multisets(mp, 0, r, dp == r + 1 && g == 1, cur, ns);
                for (const auto& n : ns) {
                    int s = std::accumulate(n.begin(), n.end(), 0);
                    if (!window(d, g, r, l, m, lp + 2LL * (d - dp) + s + (three ? 1 : 0), 1)) continue;
                    int lb = l - lp + ((r - 1) * mp - s) / 2, mb = m - mp;
                    if (three)
                        out.insert({{dp - 1, g, r - 1, lb, mb}, {dp - 1, g, r - 1, lb, mb - 1}, {dp - 2, g, r - 2, lb, mb}});
                    else
                        out.insert({{dp - 1, g, r - 1, lb, mb}});
                }
            }
        }
    return out;
}

}  // namespace oracle
