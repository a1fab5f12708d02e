#include "shiftlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace shiftlab {

VertexId VertexId::dyck_stack(std::vector<int> stack) {
    return VertexId{DyckStackV{std::move(stack)}};
}
VertexId VertexId::sgap_index(std::int64_t n) {
    return VertexId{SGapIndexV{n}};
}
VertexId VertexId::beta_index(std::int64_t n) {
    return VertexId{BetaIndexV{n}};
}
VertexId VertexId::star(VertexId base, bool starred) {
    return VertexId{StarV{std::make_shared<const VertexId>(std::move(base)), starred}};
}
VertexId VertexId::pair(VertexId left, VertexId right) {
    return VertexId{PairV{std::make_shared<const VertexId>(std::move(left)),
                          std::make_shared<const VertexId>(std::move(right))}};
}
VertexId VertexId::original(VertexId base) {
    return VertexId{OriginalV{std::make_shared<const VertexId>(std::move(base))}};
}
VertexId VertexId::midpoint(VertexId src, Symbol label) {
    return VertexId{MidpointV{std::make_shared<const VertexId>(std::move(src)), label}};
}

bool VertexId::operator==(const VertexId& o) const {
    if (v.index() != o.v.index())
        return false;
    switch (v.index()) {
        case 0:
            return std::get<DyckStackV>(v).stack == std::get<DyckStackV>(o.v).stack;
        case 1:
            return std::get<SGapIndexV>(v).n == std::get<SGapIndexV>(o.v).n;
        case 2:
            return std::get<BetaIndexV>(v).n == std::get<BetaIndexV>(o.v).n;
        case 3: {
            const auto& a = std::get<StarV>(v);
            const auto& b = std::get<StarV>(o.v);
            return a.starred == b.starred && *a.base == *b.base;
        }
        case 4: {
            const auto& a = std::get<PairV>(v);
            const auto& b = std::get<PairV>(o.v);
            return *a.left == *b.left && *a.right == *b.right;
        }
        case 5:
            return *std::get<OriginalV>(v).base == *std::get<OriginalV>(o.v).base;
        default: {
            const auto& a = std::get<MidpointV>(v);
            const auto& b = std::get<MidpointV>(o.v);
            return a.label == b.label && *a.src == *b.src;
        }
    }
}

bool VertexId::operator<(const VertexId& o) const {
    if (v.index() != o.v.index())
        return v.index() < o.v.index();
    switch (v.index()) {
        case 0:
            return std::get<DyckStackV>(v).stack < std::get<DyckStackV>(o.v).stack;
        case 1:
            return std::get<SGapIndexV>(v).n < std::get<SGapIndexV>(o.v).n;
        case 2:
            return std::get<BetaIndexV>(v).n < std::get<BetaIndexV>(o.v).n;
        case 3: {
            const auto& a = std::get<StarV>(v);
            const auto& b = std::get<StarV>(o.v);
            if (*a.base != *b.base)
                return *a.base < *b.base;
            return a.starred < b.starred;
        }
        case 4: {
            const auto& a = std::get<PairV>(v);
            const auto& b = std::get<PairV>(o.v);
            if (*a.left != *b.left)
                return *a.left < *b.left;
            return *a.right < *b.right;
        }
        case 5:
            return *std::get<OriginalV>(v).base < *std::get<OriginalV>(o.v).base;
        default: {
            const auto& a = std::get<MidpointV>(v);
            const auto& b = std::get<MidpointV>(o.v);
            if (*a.src != *b.src)
                return *a.src < *b.src;
            return a.label < b.label;
        }
    }
}

namespace {

inline size_t hash_mix(size_t h, size_t x) {
    return h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

size_t hash_vertex(const VertexId& v) {
    size_t h = v.v.index() + 1;
    switch (v.v.index()) {
        case 0:
            for (int x : std::get<DyckStackV>(v.v).stack)
                h = hash_mix(h, static_cast<size_t>(x));
            break;
        case 1:
            h = hash_mix(h, static_cast<size_t>(std::get<SGapIndexV>(v.v).n));
            break;
        case 2:
            h = hash_mix(h, static_cast<size_t>(std::get<BetaIndexV>(v.v).n + 1));
            break;
        case 3: {
            const auto& s = std::get<StarV>(v.v);
            h = hash_mix(h, hash_vertex(*s.base));
            h = hash_mix(h, s.starred ? 2 : 1);
            break;
        }
        case 4: {
            const auto& p = std::get<PairV>(v.v);
            h = hash_mix(h, hash_vertex(*p.left));
            h = hash_mix(h, hash_vertex(*p.right));
            break;
        }
        case 5:
            h = hash_mix(h, hash_vertex(*std::get<OriginalV>(v.v).base));
            break;
        default: {
            const auto& m = std::get<MidpointV>(v.v);
            h = hash_mix(h, hash_vertex(*m.src));
            h = hash_mix(h, static_cast<size_t>(m.label));
            break;
        }
    }
    return h;
}

std::string dyck_opener_name(int i) {
    static const char* names[4] = {"(", "[", "{", "<"};
    if (i >= 1 && i <= 4)
        return names[i - 1];
    return "a" + std::to_string(i);
}

std::string name_rec(const VertexId& v, const Alphabet* labels) {
    switch (v.v.index()) {
        case 0: {
            std::string s = "dyck:\"";
            for (int i : std::get<DyckStackV>(v.v).stack)
                s += dyck_opener_name(i);
            return s + "\"";
        }
        case 1:
            return "sgap:" + std::to_string(std::get<SGapIndexV>(v.v).n);
        case 2:
            return "beta:" + std::to_string(std::get<BetaIndexV>(v.v).n);
        case 3: {
            const auto& s = std::get<StarV>(v.v);
            std::string base = name_rec(*s.base, nullptr);
            return s.starred ? "star:(" + base + ",*)" : "star:(" + base + ")";
        }
        case 4: {
            const auto& p = std::get<PairV>(v.v);
            return "pair:(" + name_rec(*p.left, nullptr) + "," +
                   name_rec(*p.right, nullptr) + ")";
        }
        case 5:
            return "orig:(" + name_rec(*std::get<OriginalV>(v.v).base, nullptr) + ")";
        default: {
            const auto& m = std::get<MidpointV>(v.v);
            std::string lbl = labels && labels->contains(m.label)
                                  ? labels->name(m.label)
                                  : "#" + std::to_string(m.label);
            return "mid:(" + name_rec(*m.src, nullptr) + ",\"" + lbl + "\")";
        }
    }
}

}  // namespace

size_t VertexHash::operator()(const VertexId& v) const {
    return hash_vertex(v);
}

std::string vertex_name(const VertexId& v, const Alphabet& labels) {
    return name_rec(v, &labels);
}

int GraphCache::id_of(const VertexId& v) {
    auto it = ids_.find(v);
    if (it != ids_.end())
        return it->second;
    int id = static_cast<int>(verts_.size());
    ids_.emplace(v, id);
    verts_.push_back(v);
    arcs_.emplace_back();
    return id;
}

const std::vector<GraphCache::Arc>& GraphCache::out(int id) {
    auto& slot = arcs_[static_cast<size_t>(id)];
    if (!slot) {
        auto edges = g_->out_edges(verts_[static_cast<size_t>(id)]);
        auto arcs = std::make_unique<std::vector<Arc>>();
        arcs->reserve(edges.size());
        for (const auto& e : edges)
            arcs->push_back(Arc{e.label, id_of(e.dst)});
        // arcs_ may have grown (id_of invalidates slot reference)
        arcs_[static_cast<size_t>(id)] = std::move(arcs);
    }
    return *arcs_[static_cast<size_t>(id)];
}

GraphFragment explore(const GraphGen& g, int depth) {
    if (depth < 0)
        throw input_error("explore depth must be >= 0");
    GraphFragment f;
    f.labels = &g.alphabet;
    f.max_depth = depth;

    std::map<VertexId, int> seen;  // vertex -> depth
    std::vector<VertexId> level{g.root};
    seen.emplace(g.root, 0);
    auto by_name = [&](const VertexId& a, const VertexId& b) {
        return vertex_name(a, g.alphabet) < vertex_name(b, g.alphabet);
    };

    for (int d = 0; d < depth && !level.empty(); ++d) {
        std::sort(level.begin(), level.end(), by_name);
        std::vector<VertexId> next;
        for (const auto& v : level)
            for (const auto& e : g.out_edges(v))
                if (seen.emplace(e.dst, d + 1).second)
                    next.push_back(e.dst);
        level = std::move(next);
    }

    for (const auto& [v, d] : seen) {
        f.vertices.push_back(v);
        f.depth.push_back(d);
    }
    // canonical order: depth, then name
    std::vector<size_t> idx(f.vertices.size());
    for (size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (f.depth[a] != f.depth[b])
            return f.depth[a] < f.depth[b];
        return by_name(f.vertices[a], f.vertices[b]);
    });
    GraphFragment out;
    out.labels = f.labels;
    out.max_depth = 0;
    for (size_t i : idx) {
        out.vertices.push_back(f.vertices[i]);
        out.depth.push_back(f.depth[i]);
        out.max_depth = std::max(out.max_depth, f.depth[i]);
    }

    for (const auto& v : out.vertices)
        for (const auto& e : g.out_edges(v))
            if (seen.count(e.dst))
                out.edges.push_back(e);
    std::sort(out.edges.begin(), out.edges.end(),
              [&](const LabeledEdge& a, const LabeledEdge& b) {
                  std::string an = vertex_name(a.src, g.alphabet);
                  std::string bn = vertex_name(b.src, g.alphabet);
                  if (an != bn)
                      return an < bn;
                  if (a.label != b.label)
                      return a.label < b.label;
                  return vertex_name(a.dst, g.alphabet) < vertex_name(b.dst, g.alphabet);
              });
    return out;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string to_dot(const GraphFragment& f, size_t max_vertices) {
    const Alphabet& alpha = *f.labels;
    std::map<VertexId, size_t> kept;
    size_t n = std::min(max_vertices, f.vertices.size());
    for (size_t i = 0; i < n; ++i)
        kept.emplace(f.vertices[i], i);

    std::ostringstream os;
    os << "digraph shiftlab {\n  rankdir=LR;\n";
    for (size_t i = 0; i < n; ++i) {
        bool frontier = f.depth[i] == f.max_depth || f.vertices.size() > max_vertices;
        os << "  \"" << dot_escape(vertex_name(f.vertices[i], alpha)) << "\" [shape="
           << (frontier && f.max_depth > 0 ? "box" : "ellipse") << "];\n";
    }
    for (const auto& e : f.edges) {
        if (!kept.count(e.src) || !kept.count(e.dst))
            continue;
        os << "  \"" << dot_escape(vertex_name(e.src, alpha)) << "\" -> \""
           << dot_escape(vertex_name(e.dst, alpha)) << "\" [label=\""
           << dot_escape(alpha.name(e.label)) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string fragment_summary(const GraphFragment& f) {
    std::ostringstream os;
    os << "vertices: " << f.vertices.size() << "\nedges: " << f.edges.size()
       << "\ndepth: " << f.max_depth << "\n";
    return os.str();
}

void require_path(const FinitePath& path) {
    if (path.empty())
        throw input_error("path must be nonempty");
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (path[i].dst != path[i + 1].src)
            throw input_error("path is not contiguous at edge " + std::to_string(i));
}

Word path_label(const FinitePath& path) {
    require_path(path);
    Word w;
    w.reserve(path.size());
    for (const auto& e : path)
        w.push_back(e.label);
    return w;
}

const VertexId& path_src(const FinitePath& path) {
    require_path(path);
    return path.front().src;
}

const VertexId& path_dst(const FinitePath& path) {
    require_path(path);
    return path.back().dst;
}

bool return_reachable(const GraphGen& g, const VertexId& v, int cap) {
    if (cap < 0)
        throw input_error("cap must be >= 0");
    GraphCache gc(g);
    int target = gc.root_id();
    int start = gc.id_of(v);
    if (start == target)
        return true;
    std::vector<int> frontier{start};
    std::unordered_map<int, bool> seen{{start, true}};
    for (int d = 0; d < cap; ++d) {
        std::vector<int> next;
        for (int u : frontier)
            for (const auto& a : gc.out(u)) {
                if (a.dst == target)
                    return true;
                if (!seen[a.dst]) {
                    seen[a.dst] = true;
                    next.push_back(a.dst);
                }
            }
        frontier = std::move(next);
    }
    return false;
}

}  // namespace shiftlab
