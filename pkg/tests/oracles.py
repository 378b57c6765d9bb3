"""Independent oracles used by the test suite.

Nothing here reuses the library's arithmetic paths: the determinant
comes from checkerboard-coloring the plat diagram's complement (faces
traced from the planar rotation system) and an exact integer Bareiss
determinant; component counts come from tracing strand endpoints; the
octahedron volume from summing the Lobachevsky series.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache

A_STRANDS = (2, 3)
B_STRANDS = (1, 2)

_CW_NEXT = {"ne": "se", "se": "sw", "sw": "nw", "nw": "ne"}
_QUADRANT_AFTER = {"ne": "e", "se": "s", "sw": "w", "nw": "n"}


def _pattern_strand_sequence(pattern):
    """Strand pair for each crossing of an unsigned region-size pattern."""
    out = []
    for region, size in enumerate(pattern):
        strands = A_STRANDS if region % 2 == 0 else B_STRANDS
        out.extend([strands] * size)
    return out


def _plat_edges(strand_sequence):
    """Arcs of the capped 4-plat as port-to-port edges.

    Ports are (crossing index, corner).  Strand ends are swept left to
    right; the caps join (1,2) and (3,4) at both ends and are folded into
    the arcs they route.
    """
    open_end = {pos: ("L", pos) for pos in (1, 2, 3, 4)}
    segments = []
    for i, (s, t) in enumerate(strand_sequence):
        segments.append((open_end[s], (i, "nw")))
        segments.append((open_end[t], (i, "sw")))
        open_end[s] = (i, "ne")
        open_end[t] = (i, "se")
    for pos in (1, 2, 3, 4):
        segments.append((open_end[pos], ("R", pos)))

    # Stitch through the terminal cap pairings to get port-to-port arcs.
    link = {}
    for a, b in segments:
        link.setdefault(a, []).append(b)
        link.setdefault(b, []).append(a)
    for side in ("L", "R"):
        for a, b in ((1, 2), (3, 4)):
            link[(side, a)].append((side, b))
            link[(side, b)].append((side, a))

    edges = []
    seen = set()
    for start in sorted(k for k in link if isinstance(k[0], int)):
        if start in seen:
            continue
        path = [start]
        seen.add(start)
        prev = None
        here = start
        while True:
            nxt = [x for x in link[here] if x != prev]
            assert len(nxt) == 1, f"bad routing at {here}"
            prev, here = here, nxt[0]
            if isinstance(here[0], int):
                seen.add(here)
                break
            path.append(here)
        edges.append((start, here))
    return edges


class PlatFaceData:
    """Checkerboard face structure of one unsigned plat pattern.

    Precomputes, per crossing, which diagonal pair of quadrants is white
    and the two white faces it joins; ``determinant`` then only needs the
    braid exponent signs.
    """

    def __init__(self, pattern):
        strand_sequence = _pattern_strand_sequence(pattern)
        n_crossings = len(strand_sequence)
        edges = _plat_edges(strand_sequence)
        assert len(edges) == 2 * n_crossings

        other_end = {}
        for a, b in edges:
            other_end[a] = b
            other_end[b] = a

        face_of_quadrant = {}
        face_of_departure = {}
        visited = set()
        n_faces = 0
        for c in range(n_crossings):
            for corner in ("ne", "nw", "sw", "se"):
                start = (c, corner)
                if start in visited:
                    continue
                face_id = n_faces
                n_faces += 1
                arrival = start
                while arrival not in visited:
                    visited.add(arrival)
                    ci, ai = arrival
                    face_of_quadrant[(ci, _QUADRANT_AFTER[ai])] = face_id
                    departure = (ci, _CW_NEXT[ai])
                    face_of_departure[departure] = face_id
                    arrival = other_end[departure]
        assert n_faces == n_crossings + 2, f"Euler count failed: {n_faces}"

        adjacency = [set() for _ in range(n_faces)]
        for a, b in edges:
            fa, fb = face_of_departure[a], face_of_departure[b]
            adjacency[fa].add(fb)
            adjacency[fb].add(fa)
        color = [-1] * n_faces
        stack = [0]
        color[0] = 0
        while stack:
            f = stack.pop()
            for g in adjacency[f]:
                if color[g] == -1:
                    color[g] = 1 - color[f]
                    stack.append(g)
                else:
                    assert color[g] != color[f], "complement not checkerboard"

        white_faces = [f for f in range(n_faces) if color[f] == 1]
        index = {f: i for i, f in enumerate(white_faces)}
        per_crossing = []
        for c in range(n_crossings):
            qf = {q: face_of_quadrant[(c, q)] for q in "news"}
            assert color[qf["n"]] == color[qf["s"]] != color[qf["e"]] == color[qf["w"]]
            east_west_white = color[qf["e"]] == 1
            pair = ("e", "w") if east_west_white else ("n", "s")
            per_crossing.append(
                (east_west_white, index[qf[pair[0]]], index[qf[pair[1]]])
            )
        self.n_white = len(white_faces)
        self.per_crossing = per_crossing

    def determinant(self, braid_signs) -> int:
        size = self.n_white - 1
        if size <= 0:
            return 1
        matrix = [[0] * self.n_white for _ in range(self.n_white)]
        for (east_west_white, i, j), sign in zip(self.per_crossing, braid_signs):
            eta = sign if east_west_white else -sign
            if i != j:
                matrix[i][j] -= eta
                matrix[j][i] -= eta
                matrix[i][i] += eta
                matrix[j][j] += eta
        minor = [row[1:] for row in matrix[1:]]
        return abs(bareiss_determinant(minor))


@lru_cache(maxsize=None)
def _face_data(pattern) -> PlatFaceData:
    return PlatFaceData(pattern)


def bareiss_determinant(matrix) -> int:
    """Fraction-free exact determinant of an integer matrix."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _braid_signs(entries):
    signs = []
    for region, entry in enumerate(entries):
        s = 1 if entry > 0 else -1
        if region % 2 == 1:
            s = -s
        signs.extend([s] * abs(entry))
    return signs


def goeritz_determinant_of_entries(entries) -> int:
    """|det| of the plat closure of a Conway entry tuple."""
    pattern = tuple(abs(e) for e in entries)
    return _face_data(pattern).determinant(_braid_signs(entries))


def plat_component_count_of_entries(entries) -> int:
    """Count link components by tracing strand endpoints through the braid."""
    perm = {1: 1, 2: 2, 3: 3, 4: 4}
    for region, entry in enumerate(entries):
        s, t = A_STRANDS if region % 2 == 0 else B_STRANDS
        if abs(entry) % 2 == 1:
            # position swap; handedness does not matter for tracing
            for key in perm:
                if perm[key] == s:
                    perm[key] = t
                elif perm[key] == t:
                    perm[key] = s
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent.setdefault(a, a)
        parent.setdefault(b, b)
        parent[find(a)] = find(b)

    for side in ("L", "R"):
        union((side, 1), (side, 2))
        union((side, 3), (side, 4))
    for pos in (1, 2, 3, 4):
        union(("L", pos), ("R", perm[pos]))
    return len({find(("L", pos)) for pos in (1, 2, 3, 4)})


def orbit_equivalent(p: int, q1: int, q2: int, allow_mirror: bool) -> bool:
    """Brute-force Schubert orbit: scan for the inverse instead of pow()."""
    inverse = next(x for x in range(1, p) if (x * q1) % p == 1)
    orbit = {q1 % p, inverse}
    if allow_mirror:
        orbit |= {(p - y) % p for y in set(orbit)}
    return (q2 % p) in orbit


def octahedron_volume_oracle(terms: int = 200000) -> float:
    """8 * Lobachevsky(pi/4) summed from the series (1/2) sum sin(n pi/2)/n^2.

    Only n = 1, 3, 5, ... contribute, with alternating signs; averaging
    the last two partial sums tightens the alternating-series error.
    """
    partial = 0.0
    previous = 0.0
    for k in range(terms):
        previous = partial
        partial += (-1) ** k / (2 * k + 1) ** 2
    catalan = (partial + previous) / 2
    return 8 * (catalan / 2)


def nearest_integer_expansion(p: int, q: int):
    """Odd-length nonzero continued fraction expansion of p/q (no parity
    constraint on the entries; used to seed normalization searches)."""
    entries = []
    t = Fraction(p, q)
    while True:
        c = round(t)
        if 2 * t == int(2 * t) and t.denominator == 2:  # half-integer tie
            c = int(t - Fraction(1, 2))
        if c == 0:
            c = 1 if t > 0 else -1
        entries.append(c)
        r = t - c
        if r == 0:
            break
        t = 1 / r
    if len(entries) % 2 == 0:
        c = entries.pop()
        s = 1 if c != 1 else -1
        if c == -1:
            s = 1
        entries.extend([c - s, s])
    assert all(e != 0 for e in entries) and len(entries) % 2 == 1
    return tuple(entries)


def compositions(total: int, parts: int):
    """Ordered compositions of ``total`` into ``parts`` positive parts."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def all_entry_tuples(max_sum: int):
    """Every odd-length nonzero entry tuple with sum of magnitudes <= max_sum."""
    for s in range(1, max_sum + 1):
        for length in range(1, s + 1, 2):
            for pattern in compositions(s, length):
                for signs in itertools.product((1, -1), repeat=length):
                    yield tuple(c * sg for c, sg in zip(pattern, signs))


def random_even_b_words(seed: int, count: int, m_min=1, m_max=6, mag_min=2, mag_max=10):
    """Deterministic corpus of even-b Conway entry tuples."""
    rng = random.Random(seed)
    words = []
    while len(words) < count:
        m = rng.randint(m_min, m_max)
        entries = []
        for position in range(2 * m + 1):
            sign = rng.choice((1, -1))
            if position % 2 == 0:
                magnitude = rng.randint(mag_min, mag_max)
            else:
                magnitude = 2 * rng.randint(max(1, mag_min // 2), mag_max // 2)
            entries.append(sign * magnitude)
        words.append(tuple(entries))
    return words
