#include "shiftlab/bipartite.hpp"

namespace shiftlab {

namespace {

struct SplitSymbol {
    Symbol c, d;
};

SplitSymbol split_cd(const BipartiteCodeSpec& spec, Symbol s) {
    int dsz = spec.d.size();
    Symbol c = s / dsz;
    Symbol d = s % dsz;
    if (c < 0 || c >= spec.c.size())
        throw input_error("symbol does not decompose over the partition");
    return {c, d};
}

}  // namespace

Configuration bipartite_apply(const BipartiteCodeSpec& spec, const Configuration& x) {
    int csz = spec.c.size();
    bool forward = spec.direction == BipartiteCodeSpec::Direction::Forward;
    // forward: y[i] = (d_i, c_{i+1}); backward: y[i] = (d_{i-1}, c_i)
    auto image_at = [&](std::int64_t i) -> Symbol {
        SplitSymbol a = split_cd(spec, x.at(forward ? i : i - 1));
        SplitSymbol b = split_cd(spec, x.at(forward ? i + 1 : i));
        return a.d * csz + b.c;
    };
    std::int64_t lo = x.origin() - (forward ? 1 : 0);
    std::int64_t hi = x.core_end() + (forward ? 0 : 1);  // exclusive
    auto lp = static_cast<std::int64_t>(x.left_period().size());
    auto rp = static_cast<std::int64_t>(x.right_period().size());
    Word left, core, right;
    for (std::int64_t i = lo - lp; i < lo; ++i)
        left.push_back(image_at(i));
    for (std::int64_t i = lo; i < hi; ++i)
        core.push_back(image_at(i));
    for (std::int64_t i = hi; i < hi + rp; ++i)
        right.push_back(image_at(i));
    return Configuration(std::move(left), std::move(core), std::move(right), lo);
}

Configuration bipartite_unapply_forward(const BipartiteCodeSpec& spec,
                                        const Configuration& y) {
    // y[i] = (d_i, c_{i+1}) over DC; recover x[i] = (c_i, d_i)
    int csz = spec.c.size();
    int dsz = spec.d.size();
    auto source_at = [&](std::int64_t i) -> Symbol {
        Symbol prev = y.at(i - 1);
        Symbol cur = y.at(i);
        Symbol c = prev % csz;
        Symbol d = cur / csz;
        return c * dsz + d;
    };
    std::int64_t lo = y.origin();
    std::int64_t hi = y.core_end() + 1;
    auto lp = static_cast<std::int64_t>(y.left_period().size());
    auto rp = static_cast<std::int64_t>(y.right_period().size());
    Word left, core, right;
    for (std::int64_t i = lo - lp; i < lo; ++i)
        left.push_back(source_at(i));
    for (std::int64_t i = lo; i < hi; ++i)
        core.push_back(source_at(i));
    for (std::int64_t i = hi; i < hi + rp; ++i)
        right.push_back(source_at(i));
    return Configuration(std::move(left), std::move(core), std::move(right), lo);
}

FinitePath lift_to_induced_first(const BipartiteGraphGen& bg, const FinitePath& path) {
    require_path(path);
    int leave_size = bg.leave.size();
    FinitePath out;
    out.reserve(path.size());
    for (const auto& e : path) {
        // v -a-> w becomes v -(a,/)-> w through mid(v, a)
        auto mids = bg.graph.out_edges(VertexId::original(e.src));
        bool found = false;
        for (const auto& m : mids) {
            if (m.label != e.label)
                continue;
            auto leaves = bg.graph.out_edges(m.dst);
            if (leaves.size() != 1)
                throw input_error("midpoint without a unique leaving edge");
            Symbol d = leaves[0].label - bg.enter.size();
            out.push_back({VertexId::original(e.src), e.label * leave_size + d,
                           VertexId::original(e.dst)});
            found = true;
            break;
        }
        if (!found)
            throw input_error("path edge missing from the subdivided graph");
    }
    return out;
}

FinitePath path_bipartite(const BipartiteGraphGen& bg, const FinitePath& path) {
    require_path(path);
    if (path.size() < 2)
        throw input_error("forward re-chunking needs at least two edges");
    int enter_size = bg.enter.size();
    int leave_size = bg.leave.size();

    // recover the alternating half-edge sequence c0 d0 c1 d1 ... through
    // the midpoints, then re-chunk as (d0 c1)(d1 c2)...
    struct Halves {
        Symbol c, d;
        VertexId mid;
    };
    std::vector<Halves> halves;
    halves.reserve(path.size());
    for (const auto& e : path) {
        if (bg.color(e.src) != 0)
            throw input_error("path does not start on the first component");
        const auto* ov = std::get_if<OriginalV>(&e.src.v);
        if (!ov)
            throw input_error("first-component vertices must wrap originals");
        Symbol c = e.label / leave_size;
        Symbol d = e.label % leave_size;
        if (c >= enter_size)
            throw input_error("label does not decompose over the partition");
        halves.push_back({c, d, VertexId::midpoint(*ov->base, c)});
    }
    FinitePath out;
    out.reserve(path.size() - 1);
    for (size_t i = 0; i + 1 < path.size(); ++i)
        out.push_back({halves[i].mid, halves[i].d * enter_size + halves[i + 1].c,
                       halves[i + 1].mid});
    return out;
}

TransportReport transport_check(const BipartiteGraphGen& bg, const RayPair& pair,
                                const Bounds& bounds) {
    bounds.validate();
    if (bounds.window < 2)
        throw input_error("transport needs window >= 2 (the image loses one index)");

    auto [first, second] = induced_pair(bg);

    TransportReport rep;
    int cap = bounds.effective_bfs_cap();
    rep.geodesic_in = is_geodesic_windowed(first, pair.x, cap) &&
                      is_geodesic_windowed(first, pair.y, cap);
    auto in_rep = verify_strict_proximal_prefix(first, pair, bounds);
    rep.witness_in = in_rep.status == ProximalStatus::WitnessFound;

    RayPair image{path_bipartite(bg, pair.x), path_bipartite(bg, pair.y)};
    Bounds out_bounds = bounds;
    out_bounds.window = bounds.window - 1;
    out_bounds.horizon = std::max(1, bounds.horizon - 1);
    rep.window_out = out_bounds.window;
    rep.geodesic_out = is_geodesic_windowed(second, image.x, cap) &&
                       is_geodesic_windowed(second, image.y, cap);
    rep.out_report = verify_strict_proximal_prefix(second, image, out_bounds);
    rep.witness_out = rep.out_report.status == ProximalStatus::WitnessFound;
    return rep;
}

}  // namespace shiftlab
