#include "flipmod/canon.hpp"

#include <vector>

#include "flipmod/error.hpp"

namespace flipmod {

namespace {

void put_varint(std::string& out, int32_t value)
{
    // zigzag then LEB128
    uint32_t u = (static_cast<uint32_t>(value) << 1) ^ static_cast<uint32_t>(value >> 31);
    while (u >= 0x80) {
        out.push_back(static_cast<char>(u | 0x80));
        u >>= 7;
    }
    out.push_back(static_cast<char>(u));
}

// Vertex token kinds. Marked vertices are emitted by their spec identity,
// unmarked ones by the order in which the traversal first meets them.
enum : int32_t {
    tok_privileged = 0,
    tok_marked_loop = 1,
    tok_unmarked_loop = 2,
    tok_marked_interior = 3,
    tok_unmarked_interior = 4,
};

} // namespace

std::string CanonicalCode::hex() const
{
    static const char* digits = "0123456789abcdef";
    std::string h;
    h.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        h.push_back(digits[c >> 4]);
        h.push_back(digits[c & 15]);
    }
    return h;
}

CanonicalCode CanonicalCode::from_hex(const std::string& h)
{
    auto val = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        fail(errc::bad_argument, "not a hex digit");
    };
    if (h.size() % 2 != 0)
        fail(errc::bad_argument, "odd hex length");
    CanonicalCode c;
    c.bytes.reserve(h.size() / 2);
    for (size_t i = 0; i < h.size(); i += 2)
        c.bytes.push_back(static_cast<char>(val(h[i]) * 16 + val(h[i + 1])));
    return c;
}

CanonicalCode canonical_code(const Triangulation& T)
{
    const int nd = T.dart_count();
    std::vector<int32_t> pos(nd, -1);
    std::vector<int32_t> order;
    order.reserve(nd);
    std::vector<int32_t> vertex_ordinal(T.verts.size(), -1);
    int next_ordinal = 0;

    int root = T.priv_dart[T.n() - 1];
    pos[root] = 0;
    order.push_back(root);

    CanonicalCode code;
    code.bytes.reserve(nd * 6);

    auto index_of = [&](int d) -> int32_t {
        if (d < 0)
            return -1;
        if (pos[d] < 0) {
            pos[d] = static_cast<int>(order.size());
            order.push_back(d);
        }
        return pos[d];
    };

    for (size_t i = 0; i < order.size(); ++i) {
        int d = order[i];
        put_varint(code.bytes, index_of(T.next(d)));
        put_varint(code.bytes, index_of(T.twin(d)));

        int v = T.origin(d);
        const Vertex& vx = T.verts[v];
        int32_t kind, value;
        switch (vx.kind) {
        case VertexKind::privileged:
            kind = tok_privileged;
            value = vx.index;
            break;
        case VertexKind::loop:
            if (T.spec.loops[vx.index].marked) {
                kind = tok_marked_loop;
                value = vx.index;
            } else {
                kind = tok_unmarked_loop;
                if (vertex_ordinal[v] < 0)
                    vertex_ordinal[v] = next_ordinal++;
                value = vertex_ordinal[v];
            }
            break;
        case VertexKind::interior:
        default:
            if (T.spec.interior[vx.index].marked) {
                kind = tok_marked_interior;
                value = vx.index;
            } else {
                kind = tok_unmarked_interior;
                if (vertex_ordinal[v] < 0)
                    vertex_ordinal[v] = next_ordinal++;
                value = vertex_ordinal[v];
            }
            break;
        }
        put_varint(code.bytes, kind);
        put_varint(code.bytes, value);

        const Mark& m = T.darts[d].mark;
        switch (m.kind) {
        case MarkKind::interior:
            put_varint(code.bytes, 0);
            break;
        case MarkKind::privileged:
            put_varint(code.bytes, m.index);
            break;
        case MarkKind::loop:
            // marked loops are identified by spec index, unmarked ones only
            // through their vertex ordinal
            put_varint(code.bytes, T.spec.loops[m.index].marked ? -(m.index + 1) : -1000000);
            break;
        }
    }
    return code;
}

bool equivalent(const Triangulation& a, const Triangulation& b)
{
    if (a.spec != b.spec)
        fail(errc::spec_mismatch, "triangulations live on different surfaces");
    return canonical_code(a) == canonical_code(b);
}

bool rooted_isomorphic(const Triangulation& a, const Triangulation& b)
{
    if (a.spec != b.spec || a.dart_count() != b.dart_count())
        return false;
    const int nd = a.dart_count();
    std::vector<int32_t> to_b(nd, -1), to_a(nd, -1);
    std::vector<int32_t> vmap(a.verts.size(), -1), vmap_rev(b.verts.size(), -1);

    auto match_vertex = [&](int va, int vb) {
        const Vertex& xa = a.verts[va];
        const Vertex& xb = b.verts[vb];
        if (xa.kind != xb.kind)
            return false;
        bool marked;
        switch (xa.kind) {
        case VertexKind::privileged: marked = true; break;
        case VertexKind::loop: marked = a.spec.loops[xa.index].marked; break;
        default: marked = a.spec.interior[xa.index].marked; break;
        }
        if (marked && xa.index != xb.index)
            return false;
        if (vmap[va] < 0 && vmap_rev[vb] < 0) {
            vmap[va] = vb;
            vmap_rev[vb] = va;
            return true;
        }
        return vmap[va] == vb;
    };

    std::vector<std::pair<int, int>> stack;
    auto pair_up = [&](int da, int db) {
        if (da < 0 && db < 0)
            return true;
        if (da < 0 || db < 0)
            return false;
        if (to_b[da] < 0 && to_a[db] < 0) {
            if (a.darts[da].mark != b.darts[db].mark)
                return false;
            if (!match_vertex(a.origin(da), b.origin(db)))
                return false;
            to_b[da] = db;
            to_a[db] = da;
            stack.emplace_back(da, db);
            return true;
        }
        return to_b[da] == db;
    };

    if (!pair_up(a.priv_dart[a.n() - 1], b.priv_dart[b.n() - 1]))
        return false;
    while (!stack.empty()) {
        auto [da, db] = stack.back();
        stack.pop_back();
        if (!pair_up(a.next(da), b.next(db)))
            return false;
        if (!pair_up(a.twin(da), b.twin(db)))
            return false;
    }
    for (int d = 0; d < nd; ++d)
        if (to_b[d] < 0)
            return false;
    return true;
}

} // namespace flipmod
