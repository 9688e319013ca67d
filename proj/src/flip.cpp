#include "flipmod/flip.hpp"

#include "flipmod/error.hpp"

namespace flipmod {

bool is_flippable(const Triangulation& T, int arc)
{
    if (arc < 0 || arc >= T.dart_count() || !T.is_interior(arc))
        return false;
    int t = T.twin(arc);
    return T.next(arc) != t && T.next(T.next(arc)) != t;
}

std::vector<int> flippable_arcs(const Triangulation& T)
{
    std::vector<int> out;
    for (int a : T.interior_arcs())
        if (is_flippable(T, a))
            out.push_back(a);
    return out;
}

std::pair<Triangulation, int> flip(const Triangulation& T, int arc)
{
    if (arc < 0 || arc >= T.dart_count() || !T.is_interior(arc))
        fail(errc::unflippable, "arc " + std::to_string(arc) + " is not an interior arc");
    if (!is_flippable(T, arc))
        fail(errc::unflippable, "arc " + std::to_string(arc) + " has both sides on one face");

    Triangulation R = T;
    int d = arc, t = T.twin(arc);
    int d1 = T.next(d), d2 = T.next(d1);
    int t1 = T.next(t), t2 = T.next(t1);

    // quadrilateral corners before the flip: d runs a->b, faces (a,b,c) and
    // (b,a,e); afterwards d runs e->c, t runs c->e
    int c = T.origin(d2);
    int e = T.origin(t2);

    R.darts[d].origin = e;
    R.darts[t].origin = c;
    R.darts[t1].next = d;
    R.darts[d].next = d2;
    R.darts[d2].next = t1;
    R.darts[d1].next = t;
    R.darts[t].next = t2;
    R.darts[t2].next = d1;

    return {std::move(R), std::min(d, t)};
}

std::vector<std::pair<int, Triangulation>> neighbors(const Triangulation& T)
{
    std::vector<std::pair<int, Triangulation>> out;
    for (int a : flippable_arcs(T))
        out.emplace_back(a, flip(T, a).first);
    return out;
}

} // namespace flipmod
