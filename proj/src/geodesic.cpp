#include "shiftlab/geodesic.hpp"

namespace shiftlab {

DistanceRow::DistanceRow(GraphCache& gc, int src, size_t node_budget)
    : gc_(&gc), budget_(node_budget) {
    dist_.emplace(src, 0);
    frontier_.push_back(src);
}

void DistanceRow::expand() {
    std::vector<int> next;
    for (int u : frontier_) {
        for (const auto& a : gc_->out(u)) {
            if (dist_.emplace(a.dst, radius_ + 1).second) {
                next.push_back(a.dst);
                if (dist_.size() > budget_) {
                    saturated_ = true;
                    frontier_.clear();
                    return;
                }
            }
        }
    }
    frontier_ = std::move(next);
    ++radius_;
}

DistanceRow::Answer DistanceRow::query(int dst, int cap) {
    auto it = dist_.find(dst);
    while (it == dist_.end() && radius_ < cap && !frontier_.empty() && !saturated_) {
        expand();
        it = dist_.find(dst);
    }
    if (it != dist_.end() && it->second <= cap)
        return {it->second, true};
    if (saturated_)
        return {std::nullopt, false};
    return {std::nullopt, true};
}

std::optional<int> distance(const GraphGen& g, const VertexId& u, const VertexId& v,
                            int cap) {
    if (cap < 0)
        throw input_error("distance cap must be >= 0");
    GraphCache gc(g);
    DistanceRow row(gc, gc.id_of(u));
    return row.query(gc.id_of(v), cap).d;
}

bool is_geodesic(const GraphGen& g, const FinitePath& path) {
    require_path(path);
    auto d = distance(g, path_src(path), path_dst(path), static_cast<int>(path.size()));
    return d && *d == static_cast<int>(path.size());
}

bool is_geodesic_windowed(const GraphGen& g, const FinitePath& path, int cap) {
    require_path(path);
    if (cap < 1)
        throw input_error("window cap must be >= 1");
    GraphCache gc(g);
    std::unordered_map<int, std::unique_ptr<DistanceRow>> rows;
    auto len = static_cast<int>(path.size());
    for (int i = 0; i < len; ++i) {
        int w = std::min(cap, len - i);
        int src = gc.id_of(path[static_cast<size_t>(i)].src);
        int dst = gc.id_of(path[static_cast<size_t>(i + w - 1)].dst);
        auto& row = rows[src];
        if (!row)
            row = std::make_unique<DistanceRow>(gc, src);
        auto ans = row->query(dst, w);
        if (!ans.d || *ans.d != w)
            return false;
    }
    return true;
}

namespace {

void rays_rec(GraphCache& gc, DistanceRow& row, int t, int depth, int length,
              FinitePath& acc, std::vector<FinitePath>* out, bool first_only,
              std::optional<FinitePath>* first) {
    if (depth == length) {
        if (first_only)
            *first = acc;
        else
            out->push_back(acc);
        return;
    }
    for (const auto& a : gc.out(t)) {
        if (first_only && first->has_value())
            return;
        auto ans = row.query(a.dst, depth + 1);
        if (ans.d && *ans.d == depth + 1) {
            acc.push_back({gc.vertex(t), a.label, gc.vertex(a.dst)});
            rays_rec(gc, row, a.dst, depth + 1, length, acc, out, first_only, first);
            acc.pop_back();
        }
    }
}

}  // namespace

std::vector<FinitePath> geodesic_rays(const GraphGen& g, const VertexId& v, int length) {
    if (length < 1)
        throw input_error("ray length must be >= 1");
    GraphCache gc(g);
    int src = gc.id_of(v);
    DistanceRow row(gc, src);
    std::vector<FinitePath> out;
    FinitePath acc;
    rays_rec(gc, row, src, 0, length, acc, &out, false, nullptr);
    return out;
}

std::optional<FinitePath> first_geodesic_ray(const GraphGen& g, const VertexId& v,
                                             int length) {
    if (length < 1)
        throw input_error("ray length must be >= 1");
    GraphCache gc(g);
    int src = gc.id_of(v);
    DistanceRow row(gc, src);
    std::optional<FinitePath> first;
    FinitePath acc;
    rays_rec(gc, row, src, 0, length, acc, nullptr, true, &first);
    return first;
}

}  // namespace shiftlab
