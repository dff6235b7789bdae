#include "circulant/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <set>
#include <cstdio>
#include <thread>

#include "circulant/bounds.hpp"
#include "circulant/errors.hpp"
#include "circulant/partition.hpp"
#include "json.hpp"

namespace circulant {

namespace {

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

int worker_count(const SearchOptions& o) {
    if (o.threads > 0) return o.threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Reusable BFS scratch with epoch-stamped visit marks, so candidate scans
// avoid an O(n) reset per graph.
struct Arena {
    std::vector<std::int32_t> mark;
    std::vector<std::int32_t> cur, nxt;
    std::int32_t epoch = 0;

    void ensure(std::int64_t n) {
        if (static_cast<std::int64_t>(mark.size()) < n) mark.assign(n, 0);
        if (epoch == std::numeric_limits<std::int32_t>::max()) {
            std::fill(mark.begin(), mark.end(), 0);
            epoch = 0;
        }
    }
};

// Diameter of the circulant on n vertices with the given connection set,
// capped at kcap levels. caps[l] = mac_bound(d,kcap) - mac_bound(d,l) bounds
// the growth still available after level l, which lets hopeless candidates
// abort early. Returns the diameter, -1 if disconnected, -2 if > kcap.
int bfs_capped(std::int64_t n, const std::int64_t* conn, int degree, std::int64_t kcap,
               const std::int64_t* caps, Arena& a) {
    a.ensure(n);
    const std::int32_t e = ++a.epoch;
    a.cur.clear();
    a.cur.push_back(0);
    a.mark[0] = e;
    std::int64_t seen = 1;
    std::int64_t level = 0;
    while (true) {
        if (seen == n) return static_cast<int>(level);
        if (level == kcap) return -2;
        if (seen + caps[level] < n) return -2;
        a.nxt.clear();
        for (std::int32_t v : a.cur) {
            for (int i = 0; i < degree; ++i) {
                std::int64_t u = v + conn[i];
                if (u >= n) u -= n;
                if (a.mark[u] != e) {
                    a.mark[u] = e;
                    a.nxt.push_back(static_cast<std::int32_t>(u));
                }
            }
        }
        if (a.nxt.empty()) return -1;
        ++level;
        seen += static_cast<std::int64_t>(a.nxt.size());
        std::swap(a.cur, a.nxt);
    }
}

std::int64_t fold(std::int64_t x, std::int64_t n) { return std::min(x, n - x); }

// Candidate generator sets on n vertices with fixed first generator g1,
// remaining dimension-1 generators chosen above it in lexicographic order.
struct ShardScan {
    std::int64_t n;
    int f;
    bool half;
    std::int64_t gmax;

    template <typename Visit>  // Visit(const std::vector<std::int64_t>& gens) -> bool (true = stop)
    void run(std::int64_t g1, Visit&& visit) const {
        std::vector<std::int64_t> gens(f);
        gens[0] = g1;
        for (int i = 1; i < f; ++i) gens[i] = g1 + i;
        if (gens.back() > gmax) return;
        while (true) {
            if (visit(gens)) return;
            int i = f - 1;
            while (i >= 1 && gens[i] == gmax - (f - 1 - i)) --i;
            if (i < 1) return;
            ++gens[i];
            for (int j = i + 1; j < f; ++j) gens[j] = gens[j - 1] + 1;
        }
    }
};

struct Candidate {
    std::int64_t n;
    int f;
    bool half;
    std::int64_t base_gcd;  // gcd(n, n/2) when the half element is present, else n

    bool connected(const std::vector<std::int64_t>& gens) const {
        std::int64_t g = base_gcd;
        for (std::int64_t x : gens) {
            g = std::gcd(g, x);
            if (g == 1) return true;
        }
        return g == 1;
    }

    void fill_conn(const std::vector<std::int64_t>& gens, std::int64_t* conn) const {
        int j = 0;
        for (std::int64_t g : gens) {
            conn[j++] = g;
            conn[j++] = n - g;
        }
        if (half) conn[j++] = n / 2;
    }
};

struct ScanResult {
    std::vector<std::vector<std::int64_t>> hits;  // lex order within the shard
    std::int64_t enumerated = 0;
    bool budget_exceeded = false;
};

}  // namespace

std::int64_t graph_diameter(const GraphSpec& spec) { return distance_levels(spec).diameter; }

GraphSpec multiplier_image(const GraphSpec& spec, std::int64_t unit) {
    const std::int64_t n = spec.order();
    unit %= n;
    if (unit < 0) unit += n;
    if (std::gcd(unit, n) != 1)
        throw Error("multiplier_image: " + std::to_string(unit) + " is not a unit mod " +
                    std::to_string(n));
    std::vector<std::int64_t> img;
    img.reserve(spec.generators().size());
    for (std::int64_t g : spec.generators())
        img.push_back(fold(static_cast<std::int64_t>(static_cast<__int128>(unit) * g % n), n));
    return GraphSpec(n, std::move(img), spec.include_half());
}

GraphSpec canonical_form(const GraphSpec& spec) {
    const std::int64_t n = spec.order();
    std::vector<std::int64_t> best = spec.generators();
    std::vector<std::int64_t> img(best.size());
    for (std::int64_t u = 2; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        for (std::size_t i = 0; i < img.size(); ++i)
            img[i] = fold(static_cast<std::int64_t>(static_cast<__int128>(u) * spec.generators()[i] % n), n);
        std::sort(img.begin(), img.end());
        if (img < best) best = img;
    }
    return GraphSpec(n, std::move(best), spec.include_half());
}

std::int64_t candidate_count(int degree, std::int64_t n) {
    if (degree < 2 || n < 2) return 0;
    bool half = degree % 2;
    if (half && n % 2) return 0;
    int f = degree / 2;
    std::int64_t m = (n - 1) / 2;  // generators live in 1..(n-1)/2 for both parities
    try {
        return binomial(m, f);
    } catch (const Error&) {
        return kInt64Max;
    }
}

namespace {

// One order's exhaustive scan, sharded by first generator. exact restricts
// hits to diameter == kcap (witness scan) instead of <= kcap (extremal
// scan); first_only stops at the lexicographically first hit; keep, when
// given, must also accept the hit.
ScanResult scan_order(int degree, std::int64_t kcap, std::int64_t n, bool exact, bool first_only,
                      const SearchOptions& options,
                      const std::function<bool(const GraphSpec&)>* keep = nullptr) {
    ScanResult out;
    const bool half = degree % 2;
    if (half && n % 2) return out;
    const int f = degree / 2;
    const std::int64_t gmax = (n - 1) / 2;
    if (gmax < f) return out;

    std::vector<std::int64_t> caps(kcap + 1);
    for (std::int64_t l = 0; l <= kcap; ++l) caps[l] = mac_bound(degree, kcap) - mac_bound(degree, l);

    const Candidate cand{n, f, half, half ? std::gcd(n, n / 2) : n};
    const ShardScan scan{n, f, half, gmax};
    const std::int64_t nshards = gmax - f + 1;
    if (nshards <= 0) return out;

    std::vector<ScanResult> results(nshards);
    std::atomic<std::int64_t> next{0};
    std::atomic<std::int64_t> min_hit_shard{kInt64Max};
    std::atomic<std::int64_t> spent{0};
    std::atomic<bool> over_budget{false};

    auto worker = [&]() {
        Arena arena;
        std::vector<std::int64_t> conn(2 * f + 1);
        while (true) {
            std::int64_t s = next.fetch_add(1);
            if (s >= nshards) return;
            if (first_only && s > min_hit_shard.load(std::memory_order_relaxed)) continue;
            if (over_budget.load(std::memory_order_relaxed)) return;
            ScanResult& r = results[s];
            int tick = 0;
            scan.run(s + 1, [&](const std::vector<std::int64_t>& gens) {
                ++r.enumerated;
                if (++tick == 256) {
                    tick = 0;
                    if (first_only && s > min_hit_shard.load(std::memory_order_relaxed)) return true;
                    if (spent.fetch_add(256, std::memory_order_relaxed) > options.budget) {
                        over_budget.store(true, std::memory_order_relaxed);
                        return true;
                    }
                }
                if (!cand.connected(gens)) return false;
                cand.fill_conn(gens, conn.data());
                int diam = bfs_capped(n, conn.data(), 2 * f + (half ? 1 : 0), kcap, caps.data(), arena);
                if (diam < 0) return false;
                if (exact && diam != kcap) return false;
                if (keep && !(*keep)(GraphSpec(n, gens, half))) return false;
                r.hits.push_back(gens);
                if (first_only) {
                    std::int64_t prev = min_hit_shard.load();
                    while (prev > s && !min_hit_shard.compare_exchange_weak(prev, s)) {
                    }
                    return true;
                }
                return false;
            });
        }
    };

    int threads = std::min<std::int64_t>(worker_count(options), nshards);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (ScanResult& r : results) {
        out.enumerated += r.enumerated;
        for (auto& h : r.hits) out.hits.push_back(std::move(h));
    }
    if (first_only && out.hits.size() > 1) out.hits.resize(1);
    out.budget_exceeded = over_budget.load();
    return out;
}

}  // namespace

SearchReport extremal_search(int degree, std::int64_t diameter, std::int64_t n_max,
                             const SearchOptions& options) {
    if (degree < 2) throw Error("extremal_search: degree must be at least 2");
    if (diameter < 1) throw Error("extremal_search: diameter must be at least 1");

    std::int64_t space = 0;
    for (std::int64_t n = n_max; n >= 2; --n) {
        std::int64_t c = candidate_count(degree, n);
        if (c >= kInt64Max - space) {
            space = kInt64Max;
            break;
        }
        space += c;
    }
    if (space > options.budget)
        throw RangeTooLarge("extremal_search: " + std::to_string(space) +
                            " raw candidates exceed budget " + std::to_string(options.budget));

    SearchReport report;
    report.degree = degree;
    report.diameter = diameter;
    report.n_max = n_max;

    const bool half = degree % 2;
    for (std::int64_t n = n_max; n >= 2; --n) {
        if (half && n % 2) continue;
        ScanResult scan = scan_order(degree, diameter, n, /*exact=*/false, /*first_only=*/false,
                                     options);
        report.explored += scan.enumerated;
        if (options.progress)
            std::fprintf(stderr, "search d=%d k=%lld n=%lld: %lld candidates, %zu hits\n", degree,
                         static_cast<long long>(diameter), static_cast<long long>(n),
                         static_cast<long long>(scan.enumerated), scan.hits.size());
        if (scan.hits.empty()) continue;

        std::set<GraphSpec> classes;
        for (const auto& gens : scan.hits)
            classes.insert(canonical_form(GraphSpec(n, gens, half)));
        report.best_order = n;
        report.witnesses.assign(classes.begin(), classes.end());
        report.multiplier_classes = static_cast<std::int64_t>(classes.size());
        return report;
    }
    return report;
}

std::optional<GraphSpec> find_witness(int degree, std::int64_t diameter, std::int64_t n,
                                      const SearchOptions& options) {
    if (degree < 2) throw Error("find_witness: degree must be at least 2");
    if (diameter < 1) throw Error("find_witness: diameter must be at least 1");

    // The budget is enforced while scanning: early exit usually touches a
    // tiny prefix of the raw candidate space. A scan that tripped the budget
    // may have skipped earlier shards, so its hits cannot be trusted to be
    // lexicographically first.
    ScanResult scan = scan_order(degree, diameter, n, /*exact=*/true, /*first_only=*/true, options);
    if (scan.budget_exceeded)
        throw RangeTooLarge("find_witness: budget " + std::to_string(options.budget) +
                            " exhausted after " + std::to_string(scan.enumerated) + " candidates");
    if (!scan.hits.empty()) return GraphSpec(n, scan.hits.front(), degree % 2);
    return std::nullopt;
}

std::optional<GraphSpec> find_witness_where(int degree, std::int64_t diameter, std::int64_t n,
                                            const std::function<bool(const GraphSpec&)>& keep,
                                            const SearchOptions& options) {
    if (degree < 2) throw Error("find_witness: degree must be at least 2");
    if (diameter < 1) throw Error("find_witness: diameter must be at least 1");
    ScanResult scan =
        scan_order(degree, diameter, n, /*exact=*/true, /*first_only=*/true, options, &keep);
    if (scan.budget_exceeded)
        throw RangeTooLarge("find_witness: budget " + std::to_string(options.budget) +
                            " exhausted after " + std::to_string(scan.enumerated) + " candidates");
    if (!scan.hits.empty()) return GraphSpec(n, scan.hits.front(), degree % 2);
    return std::nullopt;
}

std::string SearchReport::to_json() const {
    nlohmann::json j;
    j["degree"] = degree;
    j["diameter"] = diameter;
    j["n_max"] = n_max;
    j["best_order"] = best_order;
    j["multiplier_classes"] = multiplier_classes;
    j["explored"] = explored;
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : witnesses)
        j["witnesses"].push_back(nlohmann::json::parse(w.to_json()));
    return j.dump();
}

}  // namespace circulant
