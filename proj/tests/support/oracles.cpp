#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

Rational cf_value(const std::vector<std::int64_t>& a) {
    Rational v(static_cast<long long>(a.back()));
    for (std::size_t i = a.size() - 1; i-- > 0;) v = Rational(static_cast<long long>(a[i])) - v.reciprocal();
    return v;
}

std::vector<std::int64_t> cf_digits(const Rational& q) {
    // q = a - 1/rest with rest < -1, so -1/rest lies in (0,1) and a = floor(q).
    std::vector<std::int64_t> out;
    Rational x = q;
    for (;;) {
        if (x.is_integer()) {
            out.push_back(static_cast<std::int64_t>(x.num()));
            return out;
        }
        sfill::BigInt fl = x.num() / x.den();  // truncation toward zero
        if (x.num() < 0) fl -= 1;               // floor for negatives
        auto a = static_cast<std::int64_t>(fl);
        out.push_back(a);
        x = (Rational(static_cast<long long>(a)) - x).reciprocal();
    }
}

std::vector<std::int64_t> to_digits(const sfill::NegCF& cf) {
    std::vector<std::int64_t> out;
    for (const auto& c : cf.coeffs()) out.push_back(static_cast<std::int64_t>(c));
    return out;
}

std::vector<std::int64_t> arithmetic_dual(const std::vector<std::int64_t>& a) {
    Rational v = cf_value(a);  // -p/q
    Rational p = -Rational(v.num());
    Rational q(v.den());
    return cf_digits(-(p / (p - q)));
}

std::vector<std::pair<std::size_t, std::size_t>> truncation_pairs(const std::vector<std::int64_t>& a,
                                                                  const std::vector<std::int64_t>& b) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        Rational r = -cf_value({a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i)}).reciprocal();
        for (std::size_t j = 1; j <= b.size(); ++j) {
            Rational s = -cf_value({b.begin(), b.begin() + static_cast<std::ptrdiff_t>(j)}).reciprocal();
            if (r + s == Rational(1)) out.emplace_back(i, j);
        }
    }
    return out;
}

bool naive_realizable(const std::vector<Rational>& rs, long long n_limit) {
    for (long long n = 2; n <= n_limit; ++n) {
        Rational inv{sfill::BigInt(1), sfill::BigInt(n)};
        bool tail_ok = true;
        for (std::size_t j = 2; j < rs.size(); ++j) tail_ok = tail_ok && inv > rs[j];
        if (!tail_ok) continue;
        for (long long h = 1; h < n; ++h) {
            if (std::gcd(n, h) != 1) continue;
            Rational hn{sfill::BigInt(h), sfill::BigInt(n)};
            if (hn > rs[0] && Rational(1) - hn > rs[1]) return true;
        }
    }
    return false;
}

bool naive_special(long long e0, const std::vector<Rational>& rs) {
    if (e0 != -1 || rs.size() < 3) return false;
    Rational sum(0);
    for (const auto& r : rs) sum += r;
    return !naive_realizable(rs) && sum > Rational(1) && rs[0] + rs[1] < Rational(1);
}

long long plumbing_weight_sum(long long e0, const std::vector<Rational>& rs) {
    long long total = std::llabs(e0);
    for (const auto& r : rs) {
        for (auto a : cf_digits(-r.reciprocal())) total += std::llabs(a);
    }
    return total;
}

namespace {

struct Enumerator {
    const Matrix& q;
    std::size_t max_rank;
    const EmbeddingVisitor& visit;
    Matrix vecs;  // each sized max_rank
    bool stopped = false;

    bool pairings_ok(std::size_t i) const {
        for (std::size_t j = 0; j < i; ++j) {
            std::int64_t dot = 0;
            for (std::size_t c = 0; c < max_rank; ++c) dot += vecs[i][c] * vecs[j][c];
            if (-dot != q[i][j]) return false;
        }
        return -std::inner_product(vecs[i].begin(), vecs[i].end(), vecs[i].begin(), std::int64_t{0}) == q[i][i];
    }

    void vertex(std::size_t i, std::size_t used) {
        if (stopped) return;
        if (i == q.size()) {
            Matrix trimmed;
            for (const auto& v : vecs) trimmed.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(used));
            if (!visit(trimmed, used)) stopped = true;
            return;
        }
        old_column(i, 0, used, -q[i][i]);
    }

    // Entries on coordinates already in use.
    void old_column(std::size_t i, std::size_t c, std::size_t used, std::int64_t rest) {
        if (stopped) return;
        if (c == used) {
            new_columns(i, used, rest);
            return;
        }
        for (std::int64_t x = 0; x * x <= rest; ++x) {
            for (std::int64_t v : {x, -x}) {
                vecs[i][c] = v;
                old_column(i, c + 1, used, rest - x * x);
                if (x == 0) break;
            }
        }
        vecs[i][c] = 0;
    }

    // Opens coordinates used, used+1, ... with positive entries.
    void new_columns(std::size_t i, std::size_t c, std::int64_t rest) {
        if (stopped) return;
        if (rest == 0) {
            if (pairings_ok(i)) vertex(i + 1, c);
            return;
        }
        if (c == max_rank) return;
        for (std::int64_t x = 1; x * x <= rest; ++x) {
            vecs[i][c] = x;
            new_columns(i, c + 1, rest - x * x);
        }
        vecs[i][c] = 0;
    }
};

}  // namespace

void enumerate_embeddings(const Matrix& q, std::size_t max_rank, const EmbeddingVisitor& visit) {
    Enumerator e{q, max_rank, visit, Matrix(q.size(), std::vector<std::int64_t>(max_rank, 0))};
    e.vertex(0, 0);
}

bool embeds(const Matrix& q, std::size_t max_rank) {
    bool found = false;
    enumerate_embeddings(q, max_rank, [&](const Matrix&, std::size_t) {
        found = true;
        return false;
    });
    return found;
}

bool check_embedding(const Matrix& q, const Matrix& vectors) {
    if (vectors.size() != q.size()) return false;
    for (std::size_t i = 0; i < q.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            if (vectors[i].size() != vectors[j].size()) return false;
            std::int64_t dot = 0;
            for (std::size_t c = 0; c < vectors[i].size(); ++c) dot += vectors[i][c] * vectors[j][c];
            if (-dot != q[i][j]) return false;
        }
    }
    return true;
}

bool embeds_naive(const Matrix& q, std::size_t rank) {
    std::int64_t maxw = 0;
    for (std::size_t i = 0; i < q.size(); ++i) maxw = std::max(maxw, -q[i][i]);
    auto b = static_cast<std::int64_t>(std::sqrt(static_cast<double>(maxw)));
    while ((b + 1) * (b + 1) <= maxw) ++b;

    // Every vector of [-b, b]^rank, bucketed by norm.
    std::map<std::int64_t, Matrix> by_norm;
    std::vector<std::int64_t> v(rank, -b);
    for (;;) {
        std::int64_t norm = 0;
        for (auto x : v) norm += x * x;
        if (norm <= maxw) by_norm[norm].push_back(v);
        std::size_t c = 0;
        while (c < rank && v[c] == b) v[c++] = -b;
        if (c == rank) break;
        ++v[c];
    }

    Matrix chosen;
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == q.size()) return true;
        for (const auto& cand : by_norm[-q[i][i]]) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                std::int64_t dot = 0;
                for (std::size_t c = 0; c < rank; ++c) dot += cand[c] * chosen[j][c];
                ok = -dot == q[i][j];
            }
            if (!ok) continue;
            chosen.push_back(cand);
            if (go(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return go(0);
}

std::int64_t WeightedTree::total() const { return std::accumulate(weights.begin(), weights.end(), std::int64_t{0}); }

bool WeightedTree::is_chain() const {
    std::vector<int> degree(weights.size(), 0);
    for (auto [u, v] : edges) {
        ++degree[u];
        ++degree[v];
    }
    return std::all_of(degree.begin(), degree.end(), [](int d) { return d <= 2; });
}

Matrix WeightedTree::form() const {
    Matrix m(weights.size(), std::vector<std::int64_t>(weights.size(), 0));
    for (std::size_t i = 0; i < weights.size(); ++i) m[i][i] = -weights[i];
    for (auto [u, v] : edges) m[u][v] = m[v][u] = 1;
    return m;
}

namespace {

std::string rooted_code(const WeightedTree& t, const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> kids;
    for (int u : adj[v]) {
        if (u != parent) kids.push_back(rooted_code(t, adj, u, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + std::to_string(t.weights[v]);
    for (const auto& k : kids) s += k;
    return s + ")";
}

}  // namespace

std::string canonical_form(const WeightedTree& t) {
    std::vector<std::vector<int>> adj(t.weights.size());
    for (auto [u, v] : t.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::string best;
    for (int r = 0; r < static_cast<int>(t.weights.size()); ++r) {
        std::string code = rooted_code(t, adj, r, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

std::vector<WeightedTree> all_weighted_trees(int max_total) {
    std::vector<WeightedTree> out;
    std::set<std::string> seen;
    std::vector<WeightedTree> layer;
    for (int w = 1; w <= max_total; ++w) {
        WeightedTree t{{w}, {}};
        seen.insert(canonical_form(t));
        layer.push_back(t);
    }
    // Every tree arises from a smaller one by attaching a leaf with its final weight.
    while (!layer.empty()) {
        out.insert(out.end(), layer.begin(), layer.end());
        std::vector<WeightedTree> next;
        for (const auto& t : layer) {
            for (std::int64_t w = 1; t.total() + w <= max_total; ++w) {
                for (int v = 0; v < static_cast<int>(t.weights.size()); ++v) {
                    WeightedTree u = t;
                    u.weights.push_back(w);
                    u.edges.emplace_back(v, static_cast<int>(t.weights.size()));
                    if (seen.insert(canonical_form(u)).second) next.push_back(std::move(u));
                }
            }
        }
        layer = std::move(next);
    }
    return out;
}

Rational random_unit_rational(Rng& rng, long long max_den) {
    long long q = std::uniform_int_distribution<long long>(2, max_den)(rng);
    long long p = std::uniform_int_distribution<long long>(1, q - 1)(rng);
    return Rational(sfill::BigInt(p), sfill::BigInt(q));
}

std::vector<Rational> random_tuple(Rng& rng, std::size_t k, long long max_den) {
    std::vector<Rational> rs;
    for (std::size_t i = 0; i < k; ++i) rs.push_back(random_unit_rational(rng, max_den));
    std::sort(rs.begin(), rs.end(), [](const Rational& a, const Rational& b) { return a > b; });
    return rs;
}

Rational random_below_minus_one(Rng& rng, long long max_den, long long max_int) {
    long long q = std::uniform_int_distribution<long long>(1, max_den)(rng);
    long long p = std::uniform_int_distribution<long long>(q + 1, max_int * q)(rng);
    return Rational(sfill::BigInt(-p), sfill::BigInt(q));
}

}  // namespace oracle
