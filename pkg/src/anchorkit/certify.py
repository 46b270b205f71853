"""Reconstructibility certificates and the exhaustive deck oracle.

A certificate asserts that a graph is determined up to isomorphism by its
deck, together with a machine-checkable witness of why.  Kinds:

* VertexTransitive: one vertex orbit (regular; a known reconstructible family)
* Disconnected: the graph or its complement is disconnected (cards of the
  complement are complements of cards, so the property transfers)
* OrbitAnchor: deleting an orbit of size >= 3 leaves a structural anchor or a
  deck-distinguishable connective anchor
* AsymmetricN2: some n-2 vertex set is a structural anchor with trivial
  automorphism group
* FixedNeighborhoodN2: an n-2 structural anchor H such that one deleted
  vertex's neighborhood inside H is fixed setwise by every automorphism of H
* SmallAutOrbit2: an orbit {v, w} of size 2 whose removal leaves a structural
  anchor with automorphism group of order 1, 2, 3, or nonabelian of order 6
* DistanceAnchor: an n-2 structural anchor where the distance through H
  between the two deleted vertices pins their joint attachment uniquely up to
  isomorphism (the attachment pair is known from cards only up to Aut(H);
  whether the two are adjacent is a separate count known from the deck)
* TreeLeafPair / TreeInternal: tree pipeline outcomes
* Unknown: no certificate fired; explicitly a non-claim

The oracle is independent of all of the above: it enumerates every
isomorphism class of the given order and collects those whose deck matches.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from . import canon
from .anchor import (
    AnchorVerdict,
    anchor_verdict,
    is_distinguishable_in_deck,
)
from .deck import Deck, deck_of
from .enumeration import MAX_ENUM_ORDER, enumerate_graphs
from .graphcore import (
    SimpleGraph,
    automorphism_generators,
    automorphisms,
    canonical_key,
    distance_matrix,
    induced_key,
    induced_subgraph,
    is_vertex_transitive,
    orbits,
    subgraph_census,
)
from .shadow import build_shadow, is_shadow_vertex_transitive

ORACLE_ORDER_CAP = 9


class CertificateKind(str, Enum):
    VERTEX_TRANSITIVE = "VertexTransitive"
    DISCONNECTED = "Disconnected"
    ORBIT_ANCHOR = "OrbitAnchor"
    ASYMMETRIC_N2 = "AsymmetricN2"
    FIXED_NEIGHBORHOOD_N2 = "FixedNeighborhoodN2"
    SMALL_AUT_ORBIT2 = "SmallAutOrbit2"
    DISTANCE_ANCHOR = "DistanceAnchor"
    TREE_LEAF_PAIR = "TreeLeafPair"
    TREE_INTERNAL = "TreeInternal"
    UNKNOWN = "Unknown"


@dataclass(frozen=True, eq=True)
class Certificate:
    kind: CertificateKind
    witness: dict

    def as_dict(self) -> dict:
        return {"kind": self.kind.value, "witness": self.witness}


def _structural(g: SimpleGraph, verts: tuple[int, ...]) -> bool:
    mask = sum(1 << v for v in verts)
    return subgraph_census(g)[induced_key(g, mask)] == 1


# ---------------------------------------------------------------------------
# orbit certificate
# ---------------------------------------------------------------------------


def certify_orbit_anchor(g: SimpleGraph) -> Certificate | None:
    """Orbit of size >= 3 whose removal leaves an anchor.  Connective anchors
    additionally need the conservative deck-distinguishability check."""
    if is_vertex_transitive(g):
        return None
    everything = set(range(g.n))
    for orb in orbits(g):
        if len(orb) < 3:
            continue
        rest = tuple(sorted(everything - set(orb)))
        verdict = anchor_verdict(g, rest)
        if verdict is AnchorVerdict.STRUCTURAL:
            return Certificate(
                CertificateKind.ORBIT_ANCHOR,
                {
                    "orbit": list(orb),
                    "anchor": list(rest),
                    "anchor_kind": "structural",
                },
            )
        if verdict is AnchorVerdict.CONNECTIVE and is_distinguishable_in_deck(
            g, rest
        ):
            return Certificate(
                CertificateKind.ORBIT_ANCHOR,
                {
                    "orbit": list(orb),
                    "anchor": list(rest),
                    "anchor_kind": "connective",
                    "deck_distinguishable": True,
                },
            )
    return None


# ---------------------------------------------------------------------------
# n-2 certificates
# ---------------------------------------------------------------------------


def _pair_anchor(g: SimpleGraph, v: int, w: int):
    """Induced graph on V - {v, w} plus the position map, or None when it is
    not a structural anchor."""
    verts = tuple(x for x in range(g.n) if x not in (v, w))
    if not _structural(g, verts):
        return None
    sub, vmap = induced_subgraph(g, verts)
    pos = {x: i for i, x in enumerate(vmap)}
    return sub, pos


def certify_asymmetric_n2(g: SimpleGraph) -> Certificate | None:
    """Structural n-2 anchor with trivial automorphism group."""
    for v, w in combinations(range(g.n), 2):
        got = _pair_anchor(g, v, w)
        if got is None:
            continue
        sub, _ = got
        if not automorphism_generators(sub):
            return Certificate(
                CertificateKind.ASYMMETRIC_N2,
                {
                    "removed": [v, w],
                    "anchor": [x for x in range(g.n) if x not in (v, w)],
                },
            )
    return None


def certify_fixed_neighborhood_n2(g: SimpleGraph) -> Certificate | None:
    """Structural n-2 anchor H with one deleted vertex's H-neighborhood fixed
    setwise by all of Aut(H).  The other vertex's attachment is read off a
    card containing H whole, and the edge between the two deleted vertices is
    a count the deck determines, so one fixed side suffices."""
    for v, w in combinations(range(g.n), 2):
        got = _pair_anchor(g, v, w)
        if got is None:
            continue
        sub, pos = got
        gens = automorphism_generators(sub)
        for probe in (v, w):
            nb = frozenset(pos[x] for x in g.neighbors(probe) if x in pos)
            if all(frozenset(s[x] for x in nb) == nb for s in gens):
                return Certificate(
                    CertificateKind.FIXED_NEIGHBORHOOD_N2,
                    {
                        "removed": [v, w],
                        "fixed_vertex": probe,
                        "neighborhood": sorted(nb),
                    },
                )
    return None


def certify_small_aut_orbit2(g: SimpleGraph) -> Certificate | None:
    """Orbit of size 2 whose removal leaves a structural anchor with
    automorphism group of order 1, 2, or 3, or nonabelian of order 6."""
    for orb in orbits(g):
        if len(orb) != 2:
            continue
        v, w = orb
        got = _pair_anchor(g, v, w)
        if got is None:
            continue
        sub, _ = got
        group = automorphisms(sub)
        k = len(group)
        ok = k in (1, 2, 3)
        if k == 6:
            ok = any(
                canon.compose(a, b) != canon.compose(b, a)
                for a in group
                for b in group
            )
        if ok:
            return Certificate(
                CertificateKind.SMALL_AUT_ORBIT2,
                {"orbit": list(orb), "aut_order": k},
            )
    return None


def _distance_pins_placement(g: SimpleGraph, v: int, w: int):
    """Judge whether the through-H distance of v and w determines their joint
    attachment to H = g - {v, w} uniquely up to isomorphism.

    The deck reveals each attachment set only up to Aut(H), so the candidate
    reassemblies are H plus two vertices wired to any pair from the two
    Aut(H)-orbits (the v-w edge is copied from g; its presence is deck-known
    via the edge count).  Returns (ok, realized_distance, class_count,
    placement_count): ok means every distance value seen across candidates is
    achieved by exactly one isomorphism class.
    """
    verts = tuple(x for x in range(g.n) if x not in (v, w))
    sub, vmap = induced_subgraph(g, verts)
    pos = {x: i for i, x in enumerate(vmap)}
    a0 = frozenset(pos[x] for x in g.neighbors(v) if x in pos)
    b0 = frozenset(pos[x] for x in g.neighbors(w) if x in pos)
    gens = automorphism_generators(sub)
    orb_a = canon.set_orbit(gens, a0)
    orb_b = canon.set_orbit(gens, b0)
    dmat = distance_matrix(sub)
    adjacent = g.has_edge(v, w)
    k = sub.n

    def through_distance(aa: frozenset, bb: frozenset):
        best = None
        for x in aa:
            row = dmat[x]
            for y in bb:
                d = row[y]
                if d >= 0 and (best is None or d < best):
                    best = d
        return None if best is None else best + 2

    def assembled_key(aa: frozenset, bb: frozenset) -> bytes:
        adj = list(sub.adj) + [0, 0]
        for x in aa:
            adj[k] |= 1 << x
            adj[x] |= 1 << k
        for y in bb:
            adj[k + 1] |= 1 << y
            adj[y] |= 1 << (k + 1)
        if adjacent:
            adj[k] |= 1 << (k + 1)
            adj[k + 1] |= 1 << k
        return canon.plain_key(k + 2, tuple(adj))

    groups: dict[object, set[bytes]] = {}
    for aa in orb_a:
        for bb in orb_b:
            groups.setdefault(through_distance(aa, bb), set()).add(
                assembled_key(aa, bb)
            )
    ok = all(len(ks) == 1 for ks in groups.values())
    return ok, through_distance(a0, b0), len(groups), len(orb_a) * len(orb_b)


def certify_distance_anchor(g: SimpleGraph) -> Certificate | None:
    """Structural n-2 anchor whose through-distance pins the placement."""
    for v, w in combinations(range(g.n), 2):
        if _pair_anchor(g, v, w) is None:
            continue
        ok, dist, classes, placements = _distance_pins_placement(g, v, w)
        if ok:
            return Certificate(
                CertificateKind.DISTANCE_ANCHOR,
                {
                    "removed": [v, w],
                    "distance": dist,
                    "distance_classes": classes,
                    "placements": placements,
                },
            )
    return None


# ---------------------------------------------------------------------------
# tree pipeline
# ---------------------------------------------------------------------------


def _anchor_status(g: SimpleGraph, verts: tuple[int, ...]) -> str | None:
    verdict = anchor_verdict(g, verts)
    if verdict is AnchorVerdict.STRUCTURAL:
        return "structural"
    if verdict is AnchorVerdict.CONNECTIVE and is_distinguishable_in_deck(g, verts):
        return "connective"
    return None


def certify_tree(t: SimpleGraph) -> Certificate:
    """Tree certification: start from the internal (non-leaf) vertices, which
    form an anchor or a deck-distinguishable connective anchor; stop when two
    outside vertices remain (leaf pair pinned by their distance) or when the
    outside is a whole orbit of size >= 3; otherwise grow the anchor, and as
    a last resort accept a vertex-transitive shadow graph over the final
    anchor."""
    if t.n < 3:
        raise ValueError(f"tree certification needs order >= 3, got {t.n}")
    if not t.is_tree():
        raise ValueError("certify_tree needs a tree")
    leaves = {v for v in range(t.n) if t.degree(v) == 1}
    inner = tuple(sorted(set(range(t.n)) - leaves))
    orbit_sets = [set(o) for o in orbits(t)]
    held = inner
    while True:
        status = _anchor_status(t, held)
        if status is None:
            return Certificate(
                CertificateKind.UNKNOWN,
                {"reason": "tree anchor not deck-distinguishable",
                 "anchor": list(held)},
            )
        rest = tuple(v for v in range(t.n) if v not in held)
        if len(rest) == 2:
            ok, dist, classes, placements = _distance_pins_placement(
                t, rest[0], rest[1]
            )
            if ok:
                return Certificate(
                    CertificateKind.TREE_LEAF_PAIR,
                    {
                        "leaves": list(rest),
                        "anchor": list(held),
                        "anchor_kind": status,
                        "distance": dist,
                    },
                )
            return Certificate(
                CertificateKind.UNKNOWN,
                {"reason": "leaf pair not pinned by distance",
                 "leaves": list(rest)},
            )
        if len(rest) >= 3 and set(rest) in orbit_sets:
            return Certificate(
                CertificateKind.ORBIT_ANCHOR,
                {
                    "orbit": list(rest),
                    "anchor": list(held),
                    "anchor_kind": status,
                    "via": "tree",
                },
            )
        grown = _grow_tree_anchor(t, held, rest)
        if grown is not None:
            held = grown
            continue
        x = build_shadow(t, held)
        if x.m >= 3 and is_shadow_vertex_transitive(x):
            return Certificate(
                CertificateKind.TREE_INTERNAL,
                {"anchor": list(held), "shadow_vertices": x.m},
            )
        return Certificate(
            CertificateKind.UNKNOWN,
            {"reason": "maximal tree anchor with non-transitive shadow",
             "anchor": list(held)},
        )


def _grow_tree_anchor(t, held, rest):
    """Smallest extension keeping at least two vertices outside; structural
    wins over connective at each size, lexicographic within a size."""
    for add in range(1, len(rest) - 1):
        for extra in combinations(rest, add):
            cand = tuple(sorted(held + extra))
            if _structural(t, cand):
                return cand
        for extra in combinations(rest, add):
            cand = tuple(sorted(held + extra))
            if _anchor_status(t, cand) == "connective":
                return cand
    return None


# ---------------------------------------------------------------------------
# pipeline
# ---------------------------------------------------------------------------


def certify(g: SimpleGraph) -> Certificate:
    """Cheap structural certificates first, the n-2 scans last.  Scans try
    every witness position in deterministic order, so coverage does not
    depend on how a smallest anchor would have been grown."""
    if g.n < 3:
        raise ValueError(f"certification needs order >= 3, got {g.n}")
    if is_vertex_transitive(g):
        return Certificate(
            CertificateKind.VERTEX_TRANSITIVE, {"orbit": list(range(g.n))}
        )
    if not g.is_connected():
        return Certificate(CertificateKind.DISCONNECTED, {"complement": False})
    if not g.complement().is_connected():
        return Certificate(CertificateKind.DISCONNECTED, {"complement": True})
    if g.is_tree():
        return certify_tree(g)
    for fn in (
        certify_orbit_anchor,
        certify_asymmetric_n2,
        certify_fixed_neighborhood_n2,
        certify_small_aut_orbit2,
        certify_distance_anchor,
    ):
        cert = fn(g)
        if cert is not None:
            return cert
    return Certificate(CertificateKind.UNKNOWN, {})


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OracleVerdict:
    matches: tuple[SimpleGraph, ...]

    @property
    def unique(self) -> bool:
        return len(self.matches) == 1

    @property
    def keys(self) -> tuple[bytes, ...]:
        return tuple(canonical_key(m) for m in self.matches)


_deck_index_cache: dict[int, dict[bytes, tuple[int, ...]]] = {}


def _delete_vertex_adj(n: int, adj: tuple[int, ...], v: int) -> tuple[int, ...]:
    low = (1 << v) - 1
    return tuple(
        (adj[u] & low) | ((adj[u] >> (v + 1)) << v)
        for u in range(n)
        if u != v
    )


def _deck_signature_fast(n: int, adj: tuple[int, ...]) -> bytes:
    head = bytes([n - 1])
    keys = []
    for v in range(n):
        code, _, _ = canon.search(n - 1, _delete_vertex_adj(n, adj, v))
        keys.append(head + code)
    keys.sort()
    return b"".join(keys)


def _deck_index(n: int) -> dict[bytes, tuple[int, ...]]:
    got = _deck_index_cache.get(n)
    if got is None:
        got = {}
        for i, g in enumerate(enumerate_graphs(n)):
            sig = _deck_signature_fast(n, g.adj)
            got[sig] = got.get(sig, ()) + (i,)
        _deck_index_cache[n] = got
    return got


def oracle_reconstruct(d: Deck, max_order: int = ORACLE_ORDER_CAP) -> OracleVerdict:
    """Every isomorphism class of order d.order whose deck equals d.

    Pure brute force: no certificate logic is consulted.  Orders above
    max_order (default 9) are refused; raising the cap to 10 is possible but
    far beyond interactive budgets.
    """
    n = d.order
    if n > max_order:
        raise ValueError(
            f"oracle capped at order {max_order}; got a deck of order {n}"
        )
    if n > MAX_ENUM_ORDER:
        raise ValueError(f"oracle cannot enumerate order {n}")
    pool = enumerate_graphs(n)
    idx = _deck_index(n).get(d.signature(), ())
    return OracleVerdict(tuple(pool[i] for i in idx))


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def _recheck(g: SimpleGraph, cert: Certificate) -> bool:
    kind = cert.kind
    w = cert.witness
    try:
        if kind is CertificateKind.VERTEX_TRANSITIVE:
            return is_vertex_transitive(g)
        if kind is CertificateKind.DISCONNECTED:
            target = g.complement() if w.get("complement") else g
            return not target.is_connected()
        if kind is CertificateKind.ORBIT_ANCHOR:
            orb = tuple(sorted(w["orbit"]))
            if len(orb) < 3 or orb not in orbits(g):
                return False
            rest = tuple(sorted(set(range(g.n)) - set(orb)))
            if list(rest) != sorted(w["anchor"]):
                return False
            verdict = anchor_verdict(g, rest)
            if w["anchor_kind"] == "structural":
                return verdict is AnchorVerdict.STRUCTURAL
            return (
                verdict is AnchorVerdict.CONNECTIVE
                and is_distinguishable_in_deck(g, rest)
            )
        if kind is CertificateKind.ASYMMETRIC_N2:
            v, w2 = w["removed"]
            got = _pair_anchor(g, v, w2)
            return got is not None and not automorphism_generators(got[0])
        if kind is CertificateKind.FIXED_NEIGHBORHOOD_N2:
            v, w2 = w["removed"]
            got = _pair_anchor(g, v, w2)
            if got is None:
                return False
            sub, pos = got
            probe = w["fixed_vertex"]
            if probe not in (v, w2):
                return False
            nb = frozenset(pos[x] for x in g.neighbors(probe) if x in pos)
            gens = automorphism_generators(sub)
            return all(frozenset(s[x] for x in nb) == nb for s in gens)
        if kind is CertificateKind.SMALL_AUT_ORBIT2:
            orb = tuple(sorted(w["orbit"]))
            if len(orb) != 2 or orb not in orbits(g):
                return False
            got = _pair_anchor(g, orb[0], orb[1])
            if got is None:
                return False
            group = automorphisms(got[0])
            k = len(group)
            if k in (1, 2, 3):
                return True
            return k == 6 and any(
                canon.compose(a, b) != canon.compose(b, a)
                for a in group
                for b in group
            )
        if kind is CertificateKind.DISTANCE_ANCHOR:
            v, w2 = w["removed"]
            if _pair_anchor(g, v, w2) is None:
                return False
            return _distance_pins_placement(g, v, w2)[0]
        if kind is CertificateKind.TREE_LEAF_PAIR:
            if not g.is_tree():
                return False
            v, w2 = w["leaves"]
            if g.degree(v) != 1 or g.degree(w2) != 1:
                return False
            held = tuple(x for x in range(g.n) if x not in (v, w2))
            if _anchor_status(g, held) is None:
                return False
            return _distance_pins_placement(g, v, w2)[0]
        if kind is CertificateKind.TREE_INTERNAL:
            if not g.is_tree():
                return False
            held = tuple(sorted(w["anchor"]))
            if _anchor_status(g, held) is None:
                return False
            x = build_shadow(g, held)
            return x.m >= 3 and is_shadow_vertex_transitive(x)
        return False  # Unknown and anything unrecognized: no claim to check
    except (KeyError, ValueError, TypeError, IndexError):
        return False


def validate_certificate(
    g: SimpleGraph, cert: Certificate, max_order: int = ORACLE_ORDER_CAP
) -> bool:
    """Re-derive the certificate's claim from its witness and, when the order
    is within oracle range, confirm the deck really has a unique match equal
    to g.  Unknown certificates never validate (they claim nothing)."""
    if not _recheck(g, cert):
        return False
    if 3 <= g.n <= min(max_order, MAX_ENUM_ORDER):
        verdict = oracle_reconstruct(deck_of(g), max_order)
        return verdict.unique and verdict.keys[0] == canonical_key(g)
    return True
