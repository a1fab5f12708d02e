#include "shiftlab/proximal.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace shiftlab {

void Bounds::validate() const {
    if (explore_depth < 0 || horizon < 1 || window < 1 || min_disagreements < 1)
        throw input_error("bounds must all be >= 1 (explore_depth >= 0)");
    if (horizon < window)
        throw input_error("bounds require horizon >= window");
    if (window > 8 || min_disagreements > 7)
        throw input_error("window > 8 or min_disagreements > 7 is not supported");
    if (horizon > 4096)
        throw input_error("horizon too large");
}

std::string Bounds::describe() const {
    std::ostringstream os;
    os << "explore_depth=" << explore_depth << " horizon=" << horizon
       << " window=" << window << " min_disagreements=" << min_disagreements
       << " bfs_cap=" << effective_bfs_cap();
    return os.str();
}

const char* proximal_status_name(ProximalStatus s) {
    switch (s) {
        case ProximalStatus::WitnessFound:
            return "witness-found";
        case ProximalStatus::NoWitnessUpToBound:
            return "no-witness-up-to-bound";
        default:
            return "inconclusive";
    }
}

namespace {

// pattern evaluation on an explicit pair -----------------------------------

struct PatternResult {
    bool pass = false;
    ProximalEvidence evidence;
};

PatternResult evaluate_pattern(const RayPair& pair, const Bounds& b) {
    PatternResult r;
    int len = pair.horizon();
    std::vector<bool> agree(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i)
        agree[static_cast<size_t>(i)] =
            pair.x[static_cast<size_t>(i)] == pair.y[static_cast<size_t>(i)];

    int a = -1;
    for (int i = 0; i < len; ++i)
        if (agree[static_cast<size_t>(i)]) {
            a = i;
            break;
        }
    if (a < 0)
        return r;
    r.evidence.first_agreement = a;
    r.evidence.blocks.push_back({a, 0});

    std::vector<int> dis;
    for (int i = a + 1; i < len; ++i)
        if (!agree[static_cast<size_t>(i)])
            dis.push_back(i);
    if (static_cast<int>(dis.size()) < b.min_disagreements)
        return r;
    int d = dis[static_cast<size_t>(b.min_disagreements - 1)];
    r.evidence.disagreements.assign(dis.begin(),
                                    dis.begin() + b.min_disagreements);

    // for each n <= window, the earliest block after d
    for (int n = 0; n <= b.window; ++n) {
        int found = -1;
        for (int i = d + 1; i + n < len; ++i) {
            bool ok = true;
            for (int j = i; j <= i + n; ++j)
                if (!agree[static_cast<size_t>(j)]) {
                    ok = false;
                    break;
                }
            if (ok) {
                found = i;
                break;
            }
        }
        if (found < 0)
            return r;
        r.evidence.blocks.push_back({found, n});
    }
    r.pass = true;
    return r;
}

void check_pair_on_graph(const GraphGen& g, const RayPair& pair) {
    if (pair.x.empty() || pair.y.empty())
        throw input_error("ray pair must be nonempty");
    if (pair.x.size() != pair.y.size())
        throw input_error("ray pair must have equal lengths");
    require_path(pair.x);
    require_path(pair.y);
    for (const FinitePath* p : {&pair.x, &pair.y})
        for (const auto& e : *p) {
            auto edges = g.out_edges(e.src);
            if (std::find(edges.begin(), edges.end(), e) == edges.end())
                throw input_error("ray edge does not belong to the graph");
        }
}

}  // namespace

ProximalReport verify_strict_proximal_prefix(const GraphGen& g, const RayPair& pair,
                                             const Bounds& bounds) {
    bounds.validate();
    check_pair_on_graph(g, pair);

    ProximalReport rep;
    rep.bounds = bounds;
    rep.pair = pair;

    int cap = bounds.effective_bfs_cap();
    bool exact = pair.horizon() <= cap;
    rep.evidence.geodesic_check =
        exact ? "exact" : "windowed(" + std::to_string(cap) + ")";
    bool geo = is_geodesic_windowed(g, pair.x, cap) &&
               is_geodesic_windowed(g, pair.y, cap);
    rep.evidence.geodesic_ok = geo;

    auto pat = evaluate_pattern(pair, bounds);
    rep.evidence.first_agreement = pat.evidence.first_agreement;
    rep.evidence.disagreements = pat.evidence.disagreements;
    rep.evidence.blocks = pat.evidence.blocks;
    rep.evidence.geodesic_ok = geo;
    rep.status = (geo && pat.pass) ? ProximalStatus::WitnessFound
                                   : ProximalStatus::NoWitnessUpToBound;
    return rep;
}

// ------------------------------------------------------------ the search

namespace {

struct SearchShared {
    const GraphGen* g = nullptr;
    Bounds bounds;
    int a_max = 0;
    std::atomic<std::int64_t> best_task{-1};  // lowest accepting task index
    std::atomic<std::uint64_t> states{0};
    std::atomic<std::uint64_t> anchors{0};
    std::atomic<bool> tainted{false};
    size_t row_budget = 1u << 21;
    size_t intern_budget = 1u << 22;
};

struct Anchor {
    VertexId t;
    int a;
};

struct Task {
    VertexId u, v;
    std::vector<Anchor> anchors;
    // result
    bool accepted = false;
    RayPair witness;
};

// Joint DFS over one (u, v) start pair. States are (vertex pair, time,
// disagreement count, current agreement run, achieved block mask); only
// failing states are memoized. Validity of an edge for one side means the
// extended prefix is still geodesic from that side's start vertex.
class TaskRunner {
  public:
    TaskRunner(SearchShared& sh, Task& task)
        : sh_(sh), task_(task), gc_(*sh.g),
          row_u_(gc_, gc_.id_of(task.u), sh.row_budget),
          row_v_(gc_, gc_.id_of(task.v), sh.row_budget) {
        m_ = sh_.bounds.min_disagreements;
        window_ = sh_.bounds.window;
        horizon_ = sh_.bounds.horizon;
        full_mask_ = (1u << (window_ + 1)) - 1;
        memo_.resize(static_cast<size_t>(horizon_) + 1);
    }

    void run() {
        for (const auto& anc : task_.anchors) {
            sh_.anchors.fetch_add(1, std::memory_order_relaxed);
            if (run_anchor(anc))
                return;
        }
    }

    bool tainted_reject = false;

  private:
    struct Valid {
        GraphCache::Arc arc;
        bool taint = false;
    };

    std::vector<Valid> valid_arcs(DistanceRow& row, int t, int k) {
        std::vector<Valid> out;
        for (const auto& a : gc_.out(t)) {
            auto ans = row.query(a.dst, k + 1);
            if (ans.d && *ans.d == k + 1)
                out.push_back({a, false});
            else if (!ans.exact)
                out.push_back({a, true});  // unknown: over-approximate
        }
        return out;
    }

    // memoized per time step: tx,ty < 2^22, c < 8, run < 16, mask < 2^9
    std::uint64_t key(int tx, int ty, int c, int run, unsigned mask) const {
        std::uint64_t kk = static_cast<std::uint64_t>(tx);
        kk |= static_cast<std::uint64_t>(ty) << 22;
        kk |= static_cast<std::uint64_t>(c) << 44;
        kk |= static_cast<std::uint64_t>(run) << 47;
        kk |= static_cast<std::uint64_t>(mask) << 51;
        return kk;
    }

    bool can_extend(DistanceRow& row, std::unordered_set<std::uint64_t>& failed,
                    FinitePath* out, int t, int k) {
        if (k == horizon_)
            return true;
        std::uint64_t kk = static_cast<std::uint64_t>(t) |
                           (static_cast<std::uint64_t>(k) << 32);
        if (failed.count(kk))
            return false;
        for (const auto& va : valid_arcs(row, t, k)) {
            if (out)
                out->push_back({gc_.vertex(t), va.arc.label, gc_.vertex(va.arc.dst)});
            if (can_extend(row, failed, out, va.arc.dst, k + 1))
                return true;
            if (out)
                out->pop_back();
        }
        failed.insert(kk);
        return false;
    }

    bool dfs(int tx, int ty, int k, int c, int run, unsigned mask) {
        sh_.states.fetch_add(1, std::memory_order_relaxed);
        if (c == m_ && mask == full_mask_) {
            // pattern complete; both rays must still reach the horizon
            FinitePath ext_x, ext_y;
            if (can_extend(row_u_, failed_x_, &ext_x, tx, k) &&
                can_extend(row_v_, failed_y_, &ext_y, ty, k)) {
                tail_x_ = std::move(ext_x);
                tail_y_ = std::move(ext_y);
                return true;
            }
            return false;
        }
        if (k == horizon_)
            return false;
        // remaining-step prune
        int rem = horizon_ - k;
        int need;
        if (c < m_) {
            need = (m_ - c) + (window_ + 1);
        } else {
            int missing = window_;
            while (missing >= 0 && (mask >> missing) & 1u)
                --missing;
            need = missing + 1 - run;
            if (need < 0) need = 0;
        }
        if (rem < need)
            return false;

        std::uint64_t kk = key(tx, ty, c, run, mask);
        auto& memo = memo_[static_cast<size_t>(k)];
        if (memo.count(kk))
            return false;
        if (gc_.interned() >= (1u << 22))
            throw std::length_error("vertex budget exceeded");

        auto xs = valid_arcs(row_u_, tx, k);
        auto ys = valid_arcs(row_v_, ty, k);
        for (const auto& ex : xs) {
            for (const auto& ey : ys) {
                bool equal = tx == ty && ex.arc.label == ey.arc.label &&
                             ex.arc.dst == ey.arc.dst;
                int c2 = c, run2 = run;
                unsigned mask2 = mask;
                if (equal) {
                    if (c == m_) {
                        run2 = std::min(run + 1, window_ + 1);
                        mask2 |= 1u << (run2 - 1);
                    }
                } else {
                    if (c < m_) {
                        c2 = c + 1;
                        run2 = 0;
                        mask2 = 0;
                    } else {
                        run2 = 0;
                    }
                }
                stack_x_.push_back({gc_.vertex(tx), ex.arc.label, gc_.vertex(ex.arc.dst)});
                stack_y_.push_back({gc_.vertex(ty), ey.arc.label, gc_.vertex(ey.arc.dst)});
                if (dfs(ex.arc.dst, ey.arc.dst, k + 1, c2, run2, mask2))
                    return true;
                stack_x_.pop_back();
                stack_y_.pop_back();
            }
        }
        memo.insert(kk);
        states_memoized_ += 1;
        if (states_memoized_ > sh_.intern_budget)
            throw std::length_error("state budget exceeded");
        return false;
    }

    /// Lexicographically least geodesic path u -> t of length a (possibly
    /// empty when a == 0 and u == t).
    bool prefix_path(DistanceRow& row, int from, int to, int a, FinitePath* out) {
        if (a == 0)
            return from == to;
        for (const auto& va : valid_arcs(row, from, static_cast<int>(out->size()))) {
            out->push_back({gc_.vertex(from), va.arc.label, gc_.vertex(va.arc.dst)});
            // target must stay reachable in the remaining steps
            if (prefix_path(row, va.arc.dst, to, a - 1, out))
                return true;
            out->pop_back();
        }
        return false;
    }

    bool run_anchor(const Anchor& anc) {
        int t0 = gc_.id_of(anc.t);
        // the agreement move: a shared edge valid on both sides
        for (const auto& ex : valid_arcs(row_u_, t0, anc.a)) {
            auto ay = row_v_.query(ex.arc.dst, anc.a + 1);
            bool ok_v = (ay.d && *ay.d == anc.a + 1) || !ay.exact;
            if (!ok_v)
                continue;
            stack_x_.clear();
            stack_y_.clear();
            LabeledEdge e{gc_.vertex(t0), ex.arc.label, gc_.vertex(ex.arc.dst)};
            stack_x_.push_back(e);
            stack_y_.push_back(e);
            if (dfs(ex.arc.dst, ex.arc.dst, anc.a + 1, 0, 0, 0)) {
                if (materialize(anc))
                    return true;
            }
        }
        return false;
    }

    bool materialize(const Anchor& anc) {
        FinitePath px, py;
        int uid = gc_.id_of(task_.u);
        int vid = gc_.id_of(task_.v);
        int t0 = gc_.id_of(anc.t);
        if (anc.a > 0) {
            if (!prefix_path(row_u_, uid, t0, anc.a, &px) ||
                !prefix_path(row_v_, vid, t0, anc.a, &py))
                return false;
        }
        px.insert(px.end(), stack_x_.begin(), stack_x_.end());
        py.insert(py.end(), stack_y_.begin(), stack_y_.end());
        px.insert(px.end(), tail_x_.begin(), tail_x_.end());
        py.insert(py.end(), tail_y_.begin(), tail_y_.end());
        RayPair pair{std::move(px), std::move(py)};
        auto rep = verify_strict_proximal_prefix(*sh_.g, pair, sh_.bounds);
        if (rep.status == ProximalStatus::WitnessFound) {
            task_.accepted = true;
            task_.witness = std::move(pair);
            return true;
        }
        // only reachable through over-approximated validity answers
        tainted_reject = true;
        return false;
    }

    SearchShared& sh_;
    Task& task_;
    GraphCache gc_;
    DistanceRow row_u_, row_v_;
    int m_ = 3, window_ = 4, horizon_ = 12;
    unsigned full_mask_ = 31;
    std::uint64_t states_memoized_ = 0;
    std::vector<std::unordered_set<std::uint64_t>> memo_;
    std::unordered_set<std::uint64_t> failed_x_, failed_y_;
    FinitePath stack_x_, stack_y_, tail_x_, tail_y_;
};

int thread_count() {
    if (const char* env = std::getenv("SHIFTLAB_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1)
            return std::min(n, 64);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hc, 1u, 8u));
}

}  // namespace

ProximalReport proximal_witness_search(const GraphGen& g, const Bounds& bounds) {
    bounds.validate();

    ProximalReport rep;
    rep.bounds = bounds;

    SearchShared sh;
    sh.g = &g;
    sh.bounds = bounds;
    sh.a_max = bounds.horizon - bounds.min_disagreements - bounds.window - 2;
    if (sh.a_max < 0) {
        rep.status = ProximalStatus::NoWitnessUpToBound;
        rep.reason = "pattern cannot fit in the horizon";
        return rep;
    }

    // start vertices in canonical order
    GraphFragment ball = explore(g, bounds.explore_depth);
    const auto& starts = ball.vertices;

    // anchors: (t, a) pairs with a <= a_max, grouped by the starts that
    // reach t in exactly a steps
    GraphCache gc(g);
    std::map<std::pair<int, int>, std::vector<int>> anchor_starts;
    for (size_t ui = 0; ui < starts.size(); ++ui) {
        std::map<int, int> dists;
        std::vector<std::pair<int, int>> frontier{{gc.id_of(starts[ui]), 0}};
        dists[gc.id_of(starts[ui])] = 0;
        for (int d = 0; d < sh.a_max; ++d) {
            std::vector<std::pair<int, int>> next;
            for (auto [t, dd] : frontier)
                for (const auto& arc : gc.out(t))
                    if (dists.emplace(arc.dst, dd + 1).second)
                        next.push_back({arc.dst, dd + 1});
            frontier = std::move(next);
        }
        for (auto [t, d] : dists)
            anchor_starts[{t, d}].push_back(static_cast<int>(ui));
    }

    // tasks: unordered start pairs sharing at least one anchor
    std::map<std::pair<int, int>, std::vector<Anchor>> task_map;
    for (const auto& [ta, us] : anchor_starts) {
        for (size_t i = 0; i < us.size(); ++i)
            for (size_t j = i; j < us.size(); ++j)
                task_map[{us[i], us[j]}].push_back(
                    Anchor{gc.vertex(ta.first), ta.second});
    }

    std::vector<Task> tasks;
    tasks.reserve(task_map.size());
    for (auto& [uv, anchors] : task_map) {
        Task t;
        t.u = starts[static_cast<size_t>(uv.first)];
        t.v = starts[static_cast<size_t>(uv.second)];
        std::sort(anchors.begin(), anchors.end(), [&](const Anchor& a, const Anchor& b) {
            if (a.a != b.a)
                return a.a < b.a;
            return vertex_name(a.t, g.alphabet) < vertex_name(b.t, g.alphabet);
        });
        t.anchors = std::move(anchors);
        tasks.push_back(std::move(t));
    }
    rep.pairs_checked = tasks.size();

    std::atomic<size_t> next{0};
    std::atomic<bool> budget_blown{false};
    std::atomic<bool> taint_reject{false};
    int nthreads = thread_count();
    std::vector<std::thread> pool;
    for (int w = 0; w < nthreads; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= tasks.size())
                    return;
                std::int64_t best = sh.best_task.load();
                if (best >= 0 && static_cast<std::int64_t>(i) > best)
                    continue;  // a canonically earlier witness exists
                try {
                    TaskRunner runner(sh, tasks[i]);
                    runner.run();
                    if (runner.tainted_reject)
                        taint_reject.store(true);
                } catch (const std::length_error&) {
                    budget_blown.store(true);
                    return;
                }
                if (tasks[i].accepted) {
                    std::int64_t ii = static_cast<std::int64_t>(i);
                    std::int64_t cur = sh.best_task.load();
                    while ((cur < 0 || ii < cur) &&
                           !sh.best_task.compare_exchange_weak(cur, ii)) {
                    }
                }
            }
        });
    }
    for (auto& th : pool)
        th.join();

    if (budget_blown.load()) {
        rep.status = ProximalStatus::Inconclusive;
        rep.reason = "search state budget exceeded";
        return rep;
    }

    std::int64_t best = sh.best_task.load();
    if (best >= 0) {
        const Task& t = tasks[static_cast<size_t>(best)];
        auto ver = verify_strict_proximal_prefix(g, t.witness, bounds);
        rep.status = ProximalStatus::WitnessFound;
        rep.pair = t.witness;
        rep.evidence = ver.evidence;
        return rep;
    }
    if (taint_reject.load()) {
        rep.status = ProximalStatus::Inconclusive;
        rep.reason = "distance budget exceeded during candidate validation";
        return rep;
    }
    rep.status = ProximalStatus::NoWitnessUpToBound;
    rep.anchors_checked = sh.anchors.load();
    rep.states_visited = sh.states.load();
    return rep;
}

}  // namespace shiftlab
