"""Named posets and spaces used by the tests and the CLI ``--fixture`` option."""

from __future__ import annotations

from itertools import combinations

from .poset import Poset, antichain, chain

# 10 points; 1 < 2,3; 2,3 < 4,5,6; 4,5 < 7; 5,6 < 8; 7,6 < 9; 9,8 < 10
TEN_POINT_COVERS = [
    (1, 2), (1, 3),
    (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6),
    (4, 7), (5, 7), (5, 8), (6, 8), (6, 9), (7, 9),
    (8, 10), (9, 10),
]

# same bottom, with only 4,5 < 7 on top: the cycle complex is not exact at level 2
SEVEN_POINT_COVERS = [
    (1, 2), (1, 3),
    (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6),
    (4, 7), (5, 7),
]

# the six-vertex triangulation of the real projective plane
RP2_TRIANGLES = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
    (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4),
]


def ten_point() -> Poset:
    return Poset(range(1, 11), TEN_POINT_COVERS)


def seven_point() -> Poset:
    return Poset(range(1, 8), SEVEN_POINT_COVERS)


def circle() -> Poset:
    """Two minimal and two maximal points, each minimal below each maximal."""
    return Poset("abcd", [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])


def face_poset(facets) -> Poset:
    """Nonempty faces of the simplicial complex generated by ``facets``, under inclusion."""
    faces = set()
    for f in facets:
        f = tuple(sorted(f))
        for k in range(1, len(f) + 1):
            faces.update(combinations(f, k))
    faces = sorted(faces, key=lambda s: (len(s), s))
    names = {f: "".join(map(str, f)) for f in faces}
    rels = [(names[f[:i] + f[i + 1:]], names[f]) for f in faces if len(f) > 1 for i in range(len(f))]
    return Poset([names[f] for f in faces], rels)


def rp2() -> Poset:
    return face_poset(RP2_TRIANGLES)


FIXTURES = {
    "ten-point": ten_point,
    "seven-point": seven_point,
    "circle": circle,
    "rp2": rp2,
    "chain3": lambda: chain(3),
    "antichain3": lambda: antichain(3),
    "point": lambda: chain(1),
}
