#include "sfill/embedding.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "sfill/errors.hpp"

namespace sfill {

std::string to_string(SearchOutcome outcome) {
    switch (outcome) {
        case SearchOutcome::Found: return "found";
        case SearchOutcome::ExhaustedNoEmbedding: return "no_embedding";
        case SearchOutcome::Timeout: return "timeout";
    }
    return "timeout";
}

std::size_t completeness_bound(const IntersectionLattice& lattice) {
    std::size_t total = 0;
    for (std::size_t v = 0; v < lattice.dim(); ++v) {
        total += static_cast<std::size_t>(std::llabs(lattice(v, v)));
    }
    return total;
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t isqrt(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

struct Timeout {};

class Searcher {
public:
    Searcher(const IntersectionLattice& lattice, std::size_t cap, Clock::time_point deadline)
        : lattice_(lattice), n_(lattice.dim()), cap_(cap), deadline_(deadline) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
            return std::llabs(lattice(x, x)) > std::llabs(lattice(y, y));
        });
        rows_.assign(n_, std::vector<std::int64_t>(cap_, 0));
        suffix_.assign(n_, std::vector<std::int64_t>(cap_ + 1, 0));
        ties_.assign(n_ + 1, std::vector<char>(cap_, 0));
        cols_.assign(n_ + 1, 0);
        targets_.assign(n_, std::vector<std::int64_t>(n_, 0));
        dots_.assign(n_, std::vector<std::int64_t>(n_, 0));
    }

    bool run() { return place(0); }

    std::uint64_t nodes() const { return nodes_; }

    Embedding embedding() const {
        Embedding e;
        e.rank = cols_[n_];
        e.vectors.resize(n_);
        for (std::size_t pos = 0; pos < n_; ++pos) {
            const auto& row = rows_[pos];
            e.vectors[order_[pos]].assign(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(e.rank));
        }
        return e;
    }

private:
    void tick() {
        if ((steps_++ & 0xFFF) == 0 && Clock::now() >= deadline_) throw Timeout{};
    }

    bool place(std::size_t pos) {
        if (pos == n_) return true;
        ++nodes_;
        tick();
        const std::size_t v = order_[pos];
        auto& targets = targets_[pos];
        auto& dots = dots_[pos];
        for (std::size_t u = 0; u < pos; ++u) {
            targets[u] = -lattice_(order_[u], v);
            dots[u] = 0;
        }
        return assign_existing(pos, 0, std::llabs(lattice_(v, v)));
    }

    // Chooses the entry of column col (< cols_[pos]) for the vector at pos.
    bool assign_existing(std::size_t pos, std::size_t col, std::int64_t remaining) {
        const std::size_t used = cols_[pos];
        auto& row = rows_[pos];
        auto& targets = targets_[pos];
        auto& dots = dots_[pos];
        if (col == used) {
            for (std::size_t u = 0; u < pos; ++u) {
                if (dots[u] != targets[u]) return false;
            }
            return open_columns(pos, used, remaining, remaining);
        }
        tick();
        const std::int64_t bound = isqrt(remaining);
        const bool tied = ties_[pos][col] != 0;
        const std::int64_t ceiling = tied ? std::min(bound, row[col - 1]) : bound;
        // 0, 1, -1, 2, -2, ...
        for (std::int64_t step = 0; step <= 2 * bound; ++step) {
            const std::int64_t x = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
            if (x > ceiling) continue;
            const std::int64_t rest = remaining - x * x;
            bool feasible = true;
            for (std::size_t u = 0; u < pos; ++u) {
                dots[u] += x * rows_[u][col];
            }
            for (std::size_t u = 0; u < pos && feasible; ++u) {
                const std::int64_t gap = targets[u] - dots[u];
                // Cauchy-Schwarz over the columns still to be chosen.
                if (gap * gap > rest * suffix_[u][col + 1]) feasible = false;
            }
            if (feasible) {
                row[col] = x;
                if (assign_existing(pos, col + 1, rest)) return true;
            }
            for (std::size_t u = 0; u < pos; ++u) {
                dots[u] -= x * rows_[u][col];
            }
        }
        row[col] = 0;
        return false;
    }

    // Spends the remaining squared length on fresh columns as a nonincreasing
    // sequence of positive entries.
    bool open_columns(std::size_t pos, std::size_t col, std::int64_t remaining, std::int64_t largest) {
        auto& row = rows_[pos];
        if (remaining == 0) {
            commit(pos, col);
            return place(pos + 1);
        }
        if (col == cap_) return false;
        tick();
        for (std::int64_t x = std::min(isqrt(remaining), largest); x >= 1; --x) {
            row[col] = x;
            if (open_columns(pos, col + 1, remaining - x * x, x)) return true;
        }
        row[col] = 0;
        return false;
    }

    void commit(std::size_t pos, std::size_t used_after) {
        const std::size_t used_before = cols_[pos];
        auto& row = rows_[pos];
        std::fill(row.begin() + static_cast<std::ptrdiff_t>(used_after), row.end(), 0);
        cols_[pos + 1] = used_after;
        auto& ties = ties_[pos + 1];
        std::fill(ties.begin(), ties.end(), 0);
        for (std::size_t c = 1; c < used_before; ++c) {
            ties[c] = static_cast<char>(ties_[pos][c] && row[c] == row[c - 1]);
        }
        for (std::size_t c = used_before + 1; c < used_after; ++c) {
            ties[c] = static_cast<char>(row[c] == row[c - 1]);
        }
        auto& suffix = suffix_[pos];
        suffix[cap_] = 0;
        for (std::size_t c = cap_; c-- > 0;) {
            suffix[c] = suffix[c + 1] + row[c] * row[c];
        }
    }

    const IntersectionLattice& lattice_;
    std::size_t n_;
    std::size_t cap_;
    Clock::time_point deadline_;
    std::vector<std::size_t> order_;             // position -> vertex
    std::vector<std::vector<std::int64_t>> rows_;  // by position
    std::vector<std::vector<std::int64_t>> suffix_;
    std::vector<std::vector<char>> ties_;  // ties_[pos][c]: column c matches c-1 on positions < pos
    std::vector<std::size_t> cols_;        // columns in use before position pos
    std::vector<std::vector<std::int64_t>> targets_;  // targets_[pos][u] = -Q(u, v)
    std::vector<std::vector<std::int64_t>> dots_;     // running <x_u, x_v> for the vector at pos
    std::uint64_t nodes_ = 0;
    std::uint64_t steps_ = 0;
};

}  // namespace

SearchCertificate find_embedding(const IntersectionLattice& lattice, const SearchLimits& limits) {
    for (std::size_t v = 0; v < lattice.dim(); ++v) {
        if (lattice(v, v) >= 0) {
            throw PreconditionError("diagonal entry " + std::to_string(v) + " is " + std::to_string(lattice(v, v)) +
                                    "; embeddings into (Z^d, -Id) need negative weights");
        }
    }
    const std::size_t cap = limits.max_rank.value_or(completeness_bound(lattice));
    const auto start = Clock::now();
    const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(std::max(0.0, limits.max_seconds)));

    SearchCertificate cert;
    cert.searched_rank = cap;
    Searcher searcher(lattice, cap, deadline);
    try {
        if (searcher.run()) {
            cert.outcome = SearchOutcome::Found;
            cert.embedding = searcher.embedding();
        } else {
            cert.outcome = SearchOutcome::ExhaustedNoEmbedding;
        }
    } catch (const Timeout&) {
        cert.outcome = SearchOutcome::Timeout;
    }
    cert.nodes = searcher.nodes();
    cert.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return cert;
}

bool verify_embedding(const IntersectionLattice& lattice, const Embedding& embedding) {
    const std::size_t n = lattice.dim();
    if (embedding.vectors.size() != n) return false;
    for (const auto& x : embedding.vectors) {
        if (x.size() != embedding.rank) return false;
    }
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u; v < n; ++v) {
            std::int64_t dot = 0;
            for (std::size_t i = 0; i < embedding.rank; ++i) {
                dot += embedding.vectors[u][i] * embedding.vectors[v][i];
            }
            if (-dot != lattice(u, v)) return false;
        }
    }
    for (std::size_t i = 0; i < embedding.rank; ++i) {
        bool used = std::any_of(embedding.vectors.begin(), embedding.vectors.end(),
                                [i](const auto& x) { return x[i] != 0; });
        if (!used) return false;
    }
    return true;
}

}  // namespace sfill
