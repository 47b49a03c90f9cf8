"""Finitely described trees under the coarse wedge topology.

A ScaffoldTree is a finite rooted graph of branch nodes joined by edges that
carry an ordinal length; the denoted tree contains, for every edge copy, the
chain of points at offsets 1..length above the parent node.  Ordinal segments
[0,eta] are the one-edge special case.  Admissible sets (the index family of
the canonical retractional skeleton) are kept in interval normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cmp_to_key
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .ordinals import (
    ALEPH0,
    ALEPH1,
    ONE,
    ZERO,
    CardClass,
    CofClass,
    Ord,
    add,
    cardinality_class,
    cofinality,
    compare,
    format_ordinal,
    is_successor,
    parse_ordinal,
    predecessor,
    subtract,
    successor,
    to_int,
    w_pow,
    OMEGA1,
    OMEGA2,
)

ANON = "*"


class SpaceError(ValueError):
    pass


class AdmissibilityError(SpaceError):
    pass


@dataclass(frozen=True)
class Edge:
    eid: str
    parent: str  # node id; "root" for the root
    child: Optional[str]  # branch node id, or None for a leaf end
    length: Ord
    multiplicity: CardClass
    copies: Tuple[str, ...]


@dataclass(frozen=True)
class PointAddr:
    """A tree point: (edge id, copy name, offset) or the root marker."""

    eid: Optional[str] = None
    copy: Optional[str] = None
    offset: Ord = ZERO

    @property
    def is_root(self) -> bool:
        return self.eid is None

    def __repr__(self):
        return f"PointAddr({format_point(self)!r})"


ROOT = PointAddr()


def format_point(p: PointAddr) -> str:
    if p.is_root:
        return "root"
    if p.copy == "":
        return f"{p.eid}@{format_ordinal(p.offset)}"
    return f"{p.eid}[{p.copy}]@{format_ordinal(p.offset)}"


class ScaffoldTree:
    """Validated scaffold; immutable after construction."""

    def __init__(self, edges: Sequence[Edge]):
        self.edges: Dict[str, Edge] = {}
        self.children_of: Dict[str, List[str]] = {"root": []}
        self.parent_edge: Dict[str, str] = {}
        for e in edges:
            if e.eid in self.edges:
                raise SpaceError(f"duplicate edge id {e.eid!r}")
            if e.length < ONE:
                raise SpaceError(f"edge {e.eid!r} has zero length")
            if e.multiplicity < CardClass.finite(1):
                raise SpaceError(f"edge {e.eid!r} has zero multiplicity")
            if e.multiplicity > CardClass.finite(1) and e.child is not None:
                raise SpaceError(
                    f"edge {e.eid!r}: bundles (multiplicity > 1) must end in a leaf"
                )
            if e.child is not None:
                if e.child == "root" or e.child in self.parent_edge:
                    raise SpaceError(f"node {e.child!r} has two parents or is root")
                self.parent_edge[e.child] = e.eid
                self.children_of.setdefault(e.child, [])
            self.edges[e.eid] = e
        for e in self.edges.values():
            if e.parent != "root" and e.parent not in self.parent_edge:
                raise SpaceError(f"edge {e.eid!r} hangs at unknown node {e.parent!r}")
            self.children_of[e.parent].append(e.eid)
        # reachability from the root doubles as the cycle check
        self._paths: Dict[str, Tuple[str, ...]] = {}
        self.node_height: Dict[str, Ord] = {"root": ZERO}
        stack = [("root", ())]
        seen_edges = 0
        while stack:
            node, path = stack.pop()
            for eid in reversed(self.children_of[node]):
                e = self.edges[eid]
                seen_edges += 1
                self._paths[eid] = path + (eid,)
                if e.child is not None:
                    self.node_height[e.child] = add(self.node_height[node], e.length)
                    stack.append((e.child, path + (eid,)))
        if seen_edges != len(self.edges):
            raise SpaceError("cycle detected: some edges are unreachable from root")

    def edge_path(self, eid: str) -> Tuple[str, ...]:
        return self._paths[eid]

    def validate_point(self, p: PointAddr) -> PointAddr:
        if p.is_root:
            return p
        e = self.edges.get(p.eid)
        if e is None:
            raise SpaceError(f"unknown edge {p.eid!r}")
        if p.copy != ANON and p.copy not in e.copies:
            raise SpaceError(f"unknown copy {p.copy!r} of edge {p.eid!r}")
        if p.copy == ANON and e.multiplicity.is_countable and e.multiplicity.kind == "finite":
            raise SpaceError(f"edge {p.eid!r} has no anonymous copies")
        if not (ONE <= p.offset <= e.length):
            raise SpaceError(
                f"offset {format_ordinal(p.offset)} out of range on edge {p.eid!r}"
            )
        return p

    def node_point(self, node: str) -> PointAddr:
        """The branch node as a tree point (top of its incoming edge)."""
        if node == "root":
            return ROOT
        eid = self.parent_edge[node]
        return PointAddr(eid, "", self.edges[eid].length)


def build_space(spec: Union[str, dict]) -> ScaffoldTree:
    """Build a scaffold from a "seg:<ordinal>" literal or a JSON-style dict."""
    if isinstance(spec, str):
        text = spec.strip()
        if text.startswith("seg:"):
            return segment(parse_ordinal(text[4:]))
        import json

        spec = json.loads(text)
    if not isinstance(spec, dict) or "edges" not in spec:
        raise SpaceError("space spec must be a dict with an 'edges' list")
    edges = []
    for raw in spec["edges"]:
        length = parse_ordinal(str(raw["length"]))
        mult = raw.get("multiplicity", 1)
        if mult == "w":
            multiplicity = ALEPH0
        elif mult == "w1":
            multiplicity = ALEPH1
        elif isinstance(mult, int):
            multiplicity = CardClass.finite(mult)
        else:
            raise SpaceError(f"bad multiplicity {mult!r}")
        copies = raw.get("copies")
        if copies is None:
            if multiplicity == CardClass.finite(1):
                copies = ("",)
            elif multiplicity.kind == "finite":
                copies = tuple(str(i) for i in range(1, multiplicity.n + 1))
            else:
                copies = ()
        else:
            copies = tuple(copies)
            if multiplicity.kind == "finite" and len(copies) != multiplicity.n:
                raise SpaceError(
                    f"edge {raw['id']!r}: {multiplicity.n} copies need exactly that many names"
                )
        edges.append(
            Edge(
                eid=str(raw["id"]),
                parent=str(raw.get("parent", "root")),
                child=raw.get("child"),
                length=length,
                multiplicity=multiplicity,
                copies=copies,
            )
        )
    return ScaffoldTree(edges)


def segment(eta: Ord) -> ScaffoldTree:
    """The ordinal segment [0, eta] as a one-edge scaffold."""
    if eta < ONE:
        raise SpaceError("segment requires eta >= 1")
    return ScaffoldTree([Edge("e1", "root", None, eta, CardClass.finite(1), ("",))])


def is_segment(T: ScaffoldTree) -> bool:
    return len(T.edges) == 1 and next(iter(T.edges.values())).multiplicity == CardClass.finite(1)


def seg_point(T: ScaffoldTree, a: Ord) -> PointAddr:
    """The ordinal a as a point of a one-edge scaffold (0 is the root)."""
    if a == ZERO:
        return ROOT
    eid = next(iter(T.edges))
    return T.validate_point(PointAddr(eid, "", a))


def point_ord(p: PointAddr) -> Ord:
    """Inverse of seg_point."""
    return p.offset


# ---------------------------------------------------------------------------
# order structure


def height(T: ScaffoldTree, p: PointAddr) -> Ord:
    T.validate_point(p)
    if p.is_root:
        return ZERO
    e = T.edges[p.eid]
    return add(T.node_height[e.parent], p.offset)


def _copy_path(T: ScaffoldTree, p: PointAddr) -> List[Tuple[str, str]]:
    path = T.edge_path(p.eid)
    return [(eid, "") for eid in path[:-1]] + [(path[-1], p.copy)]


def wedge(T: ScaffoldTree, p: PointAddr, q: PointAddr) -> PointAddr:
    """The maximum common lower bound s∧t."""
    T.validate_point(p)
    T.validate_point(q)
    if p.is_root or q.is_root:
        return ROOT
    cp, cq = _copy_path(T, p), _copy_path(T, q)
    i = 0
    while i < len(cp) and i < len(cq) and cp[i] == cq[i]:
        i += 1
    if i == len(cp) == len(cq):  # same edge copy
        return p if p.offset <= q.offset else q
    if i == len(cp):  # p's edge is traversed in full by q's path
        return p
    if i == len(cq):
        return q
    if i == 0:
        return ROOT
    eid, copy = cp[i - 1]
    return PointAddr(eid, copy, T.edges[eid].length)


def point_leq(T: ScaffoldTree, p: PointAddr, q: PointAddr) -> bool:
    return wedge(T, p, q) == p


def point_cmp(T: ScaffoldTree, p: PointAddr, q: PointAddr) -> int:
    """Deterministic total order refining the tree order (for canonical forms)."""
    if p == q:
        return 0
    kp = ((), "", ZERO) if p.is_root else (T.edge_path(p.eid), p.copy, p.offset)
    kq = ((), "", ZERO) if q.is_root else (T.edge_path(q.eid), q.copy, q.offset)
    if kp[0] != kq[0]:
        return -1 if kp[0] < kq[0] else 1
    if kp[1] != kq[1]:
        return -1 if kp[1] < kq[1] else 1
    return compare(kp[2], kq[2])


def point_predecessor(T: ScaffoldTree, p: PointAddr) -> Optional[PointAddr]:
    """The immediate predecessor x⁻ of an isolated-height point (None for root)."""
    if p.is_root:
        return None
    if not is_successor(p.offset):
        raise SpaceError(f"{format_point(p)} has limit height, no immediate predecessor")
    prev = predecessor(p.offset)
    if prev == ZERO:
        return T.node_point(T.edges[p.eid].parent)
    return PointAddr(p.eid, p.copy, prev)


def ims_count(T: ScaffoldTree, p: PointAddr) -> CardClass:
    """Cardinality class of the set of immediate successors."""
    T.validate_point(p)
    if p.is_root:
        node = "root"
    else:
        e = T.edges[p.eid]
        if p.offset < e.length:
            return CardClass.finite(1)
        if e.child is None:
            return CardClass.finite(0)
        node = e.child
    total = CardClass.finite(0)
    for eid in T.children_of[node]:
        total = total + T.edges[eid].multiplicity
    return total


def point_cofinality(T: ScaffoldTree, p: PointAddr) -> CofClass:
    T.validate_point(p)
    if p.is_root:
        return CofClass.Zero
    # height = parent height + offset, and cf(a+b) = cf(b) for b > 0
    return cofinality(p.offset)


@dataclass(frozen=True)
class Classification:
    is_r_tree: bool
    is_r1_tree: bool


def _violating_nodes(T: ScaffoldTree) -> List[Tuple[str, CardClass]]:
    out = []
    for node, kids in T.children_of.items():
        if node == "root" or not kids:
            continue
        if not cofinality(T.node_height[node]).is_uncountable:
            continue
        total = CardClass.finite(0)
        for eid in kids:
            total = total + T.edges[eid].multiplicity
        if total > CardClass.finite(1):
            out.append((node, total))
    return out


def classify(T: ScaffoldTree) -> Classification:
    bad = _violating_nodes(T)
    return Classification(
        is_r_tree=all(total.kind == "finite" for _node, total in bad),
        is_r1_tree=not bad,
    )


def reorder_to_r1(T: ScaffoldTree) -> ScaffoldTree:
    """Serialize the child edges at each violating branch node into a chain.

    The immediate successors z[1] .. z[k] of a violating node become a chain
    (in declaration order) and everything that used to sit above any z[i] is
    re-hung above z[k], preserving I(T) and S(T) up to order isomorphism.
    """
    if not classify(T).is_r_tree:
        raise SpaceError("reorder_to_r1 requires an r-tree")
    removed = set()
    extra: List[Edge] = []
    reparent: Dict[str, str] = {}
    for node, _total in _violating_nodes(T):
        slots = [
            (T.edges[eid], copy)
            for eid in T.children_of[node]
            for copy in T.edges[eid].copies
        ]
        mid = f"{node}__m"
        extra.append(
            Edge(f"{node}__r", node, mid, Ord(((ZERO, len(slots)),)), CardClass.finite(1), ("",))
        )
        for e, copy in slots:
            removed.add(e.eid)
            n = to_int(e.length)
            if n == 1:
                if e.child is not None:
                    reparent[e.child] = mid
                continue
            rest = e.length if n is None else Ord(((ZERO, n - 1),))
            suffix = f"__{copy}" if copy else ""
            extra.append(
                Edge(f"{e.eid}{suffix}__r", mid, e.child, rest, CardClass.finite(1), ("",))
            )
    edges = [e for e in T.edges.values() if e.eid not in removed] + extra
    edges = [
        e if e.parent not in reparent else Edge(
            e.eid, reparent[e.parent], e.child, e.length, e.multiplicity, e.copies
        )
        for e in edges
    ]
    return ScaffoldTree(edges)


# ---------------------------------------------------------------------------
# admissible sets


@dataclass(frozen=True)
class Atom:
    """A chain interval [lo, hi] of offsets on one edge copy."""

    eid: str
    copy: str
    lo: Ord
    hi: Ord


class AdmissibleSet:
    """Normal-form member of the family 𝒜(T): finitely many chain intervals
    with isolated-height left endpoints, wedge-closed, plus the root."""

    def __init__(self, tree: ScaffoldTree, atoms: Tuple[Atom, ...]):
        self.tree = tree
        self.atoms = atoms

    def __eq__(self, other):
        return (
            isinstance(other, AdmissibleSet)
            and self.tree is other.tree
            and self.atoms == other.atoms
        )

    def __hash__(self):
        return hash(self.atoms)

    def __repr__(self):
        return f"AdmissibleSet({format_atoms(self)!r})"

    def contains(self, p: PointAddr) -> bool:
        if p.is_root:
            return True
        for a in self.atoms:
            if a.eid == p.eid and a.copy == p.copy and a.lo <= p.offset <= a.hi:
                return True
        return False

    def endpoints(self) -> List[PointAddr]:
        pts = [ROOT]
        for a in self.atoms:
            pts.append(PointAddr(a.eid, a.copy, a.lo))
            pts.append(PointAddr(a.eid, a.copy, a.hi))
        return pts


def format_atoms(A: AdmissibleSet) -> str:
    parts = []
    for a in A.atoms:
        lo = format_point(PointAddr(a.eid, a.copy, a.lo))
        hi = format_point(PointAddr(a.eid, a.copy, a.hi))
        parts.append(f"[{lo}, {hi}]" if a.lo != a.hi else f"[{lo}]")
    return "; ".join(parts) if parts else "root"


def _normalize_atoms(T: ScaffoldTree, atoms: Iterable[Atom]) -> Tuple[Atom, ...]:
    by_chain: Dict[Tuple[str, str], List[Atom]] = {}
    for a in atoms:
        by_chain.setdefault((a.eid, a.copy), []).append(a)
    out = []
    for (eid, copy), group in sorted(by_chain.items()):
        group.sort(key=cmp_to_key(lambda a, b: compare(a.lo, b.lo)))
        cur = group[0]
        for a in group[1:]:
            if a.lo <= successor(cur.hi):
                if a.hi > cur.hi:
                    cur = Atom(eid, copy, cur.lo, a.hi)
            else:
                out.append(cur)
                cur = a
        out.append(cur)
    return tuple(out)


def make_admissible(
    T: ScaffoldTree,
    atoms: Iterable[Union[Atom, Tuple[PointAddr, PointAddr]]],
    auto_close: bool = False,
) -> AdmissibleSet:
    """Normalize and validate; optionally adjoin missing endpoint wedges."""
    work: List[Atom] = []
    for item in atoms:
        if isinstance(item, Atom):
            p = PointAddr(item.eid, item.copy, item.lo)
            q = PointAddr(item.eid, item.copy, item.hi)
        else:
            p, q = item
        if p.is_root and q.is_root:
            continue  # the root is always adjoined
        if p.is_root or q.is_root:
            raise AdmissibilityError("atoms are chain intervals on one edge copy; use offsets >= 1")
        T.validate_point(p)
        T.validate_point(q)
        if p.eid != q.eid or p.copy != q.copy:
            raise AdmissibilityError(
                f"atom endpoints {format_point(p)}, {format_point(q)} lie on different edge copies"
            )
        if p.copy == ANON:
            raise AdmissibilityError("atoms may only touch named copies")
        if p.offset > q.offset:
            raise AdmissibilityError("atom left endpoint exceeds right endpoint")
        if not is_successor(p.offset):
            raise AdmissibilityError(
                f"left endpoint {format_point(p)} has limit height (not an isolated point)"
            )
        work.append(Atom(p.eid, p.copy, p.offset, q.offset))
    atoms_nf = _normalize_atoms(T, work) if work else ()
    # wedge-closure on endpoint pairs (sufficient for the full denoted set)
    while True:
        A = AdmissibleSet(T, atoms_nf)
        pts = A.endpoints()
        missing = None
        for i, p in enumerate(pts):
            for q in pts[i + 1 :]:
                w = wedge(T, p, q)
                if not A.contains(w):
                    missing = w
                    break
            if missing:
                break
        if missing is None:
            return A
        if not auto_close:
            raise AdmissibilityError(
                f"not wedge-closed: missing {format_point(missing)} (auto_close=False)"
            )
        if not is_successor(missing.offset):
            raise AdmissibilityError(
                f"wedge closure needs {format_point(missing)}, which has limit height"
            )
        atoms_nf = _normalize_atoms(
            T, list(atoms_nf) + [Atom(missing.eid, missing.copy, missing.offset, missing.offset)]
        )


def retract(T: ScaffoldTree, A: AdmissibleSet, p: PointAddr) -> PointAddr:
    """r_A(p) = max(A ∩ p̂), the canonical retraction onto A."""
    T.validate_point(p)
    if p.is_root:
        return ROOT
    path = T.edge_path(p.eid)
    depth_of = {eid: i for i, eid in enumerate(path)}
    best, best_rank = ROOT, (-1, ZERO)
    for a in A.atoms:
        if a.eid == p.eid and a.copy == p.copy:
            if a.lo <= p.offset:
                off = a.hi if a.hi <= p.offset else p.offset
                rank = (depth_of[a.eid], off)
                cand = PointAddr(a.eid, a.copy, off)
            else:
                continue
        elif a.eid in depth_of and a.eid != p.eid and a.copy == "":
            rank = (depth_of[a.eid], a.hi)
            cand = PointAddr(a.eid, a.copy, a.hi)
        else:
            continue
        if rank[0] > best_rank[0] or (rank[0] == best_rank[0] and compare(rank[1], best_rank[1]) > 0):
            best, best_rank = cand, rank
    return best


def least_above(T: ScaffoldTree, A: AdmissibleSet, x: PointAddr) -> Optional[PointAddr]:
    """min(A ∩ V_x), or None when the wedge V_x misses A.

    Unique when it exists because A is wedge-closed; always of isolated height
    (it is an atom left endpoint or x itself)."""
    T.validate_point(x)
    if x.is_root:
        return ROOT
    candidates = []
    for a in A.atoms:
        lo_pt = PointAddr(a.eid, a.copy, a.lo)
        if point_leq(T, x, lo_pt):
            candidates.append(lo_pt)
        elif a.eid == x.eid and a.copy == x.copy and a.lo <= x.offset <= a.hi:
            candidates.append(x)
    if not candidates:
        return None
    best = candidates[0]
    for c in candidates[1:]:
        if point_leq(T, c, best):
            best = c
    return best


def union_admissible(A: AdmissibleSet, B: AdmissibleSet) -> AdmissibleSet:
    if A.tree is not B.tree:
        raise SpaceError("sets live on different spaces")
    return make_admissible(A.tree, list(A.atoms) + list(B.atoms), auto_close=True)


def intersect_admissible(A: AdmissibleSet, B: AdmissibleSet) -> AdmissibleSet:
    if A.tree is not B.tree:
        raise SpaceError("sets live on different spaces")
    out = []
    for a in A.atoms:
        for b in B.atoms:
            if a.eid != b.eid or a.copy != b.copy:
                continue
            lo = a.lo if a.lo >= b.lo else b.lo
            hi = a.hi if a.hi <= b.hi else b.hi
            if lo <= hi:
                out.append(Atom(a.eid, a.copy, lo, hi))
    return make_admissible(A.tree, out, auto_close=False)


def is_subset(A: AdmissibleSet, B: AdmissibleSet) -> bool:
    for a in A.atoms:
        if not any(
            b.eid == a.eid and b.copy == a.copy and b.lo <= a.lo and a.hi <= b.hi
            for b in B.atoms
        ):
            return False
    return True


# ---------------------------------------------------------------------------
# weight and topological predicates


def _interval_class(lo: Ord, hi: Ord) -> CardClass:
    """Cardinality class of the point count of [lo, hi] (all isolated when finite)."""
    tau = subtract(hi, lo)
    n = to_int(tau)
    if n is not None:
        return CardClass.finite(n + 1)
    return cardinality_class(tau)


def weight(T: ScaffoldTree) -> CardClass:
    """w(T) = dens(T) = card I(T)."""
    total = CardClass.finite(1)  # the root is isolated
    for e in T.edges.values():
        total = total + _interval_class(ONE, e.length) * e.multiplicity
    return total


def i_class(T: ScaffoldTree) -> CardClass:
    return weight(T)


def s_class(T: ScaffoldTree) -> CardClass:
    """card S(T) (points of countable cofinality); classwise it matches I(T)
    edge by edge, since isolated points already dominate each edge."""
    return weight(T)


def set_weight(T: ScaffoldTree, A: AdmissibleSet) -> CardClass:
    total = CardClass.finite(1)
    for a in A.atoms:
        total = total + _interval_class(a.lo, a.hi)
    return total


def is_countable_member(T: ScaffoldTree, A: AdmissibleSet) -> bool:
    """A ∈ 𝒜_ω ⟺ set_weight(A) ≤ ℵ₀."""
    return set_weight(T, A).is_countable


def sigma_continuity_ok(
    T: ScaffoldTree, A: AdmissibleSet
) -> Tuple[bool, Optional[PointAddr]]:
    """True iff every non-maximal A-point of uncountable cofinality has all of
    its immediate successors in A.  Only atom right endpoints can fail."""
    for a in A.atoms:
        if not cofinality(a.hi).is_uncountable:
            continue
        q = PointAddr(a.eid, a.copy, a.hi)
        e = T.edges[a.eid]
        if a.hi < e.length:
            if not A.contains(PointAddr(a.eid, a.copy, successor(a.hi))):
                return False, q
        elif e.child is not None:
            for eid in T.children_of[e.child]:
                kid = T.edges[eid]
                if kid.multiplicity.kind != "finite":
                    return False, q  # anonymous copies can never all lie in A
                for copy in kid.copies:
                    if not A.contains(PointAddr(eid, copy, ONE)):
                        return False, q
    return True, None


class Valdivia(Enum):
    YES = "yes"
    NO_DECISION = "no-decision"
    HYPOTHESIS_FAILS = "hypothesis-fails"


def tree_height(T: ScaffoldTree) -> Ord:
    """ht(T): the least ordinal strictly above every point height."""
    top = ZERO
    for e in T.edges.values():
        h = add(T.node_height[e.parent], e.length)
        if h > top:
            top = h
    return successor(top)


def valdivia_sufficient(T: ScaffoldTree) -> Valdivia:
    """Decidable fragment of the Valdivia/1-Plichko classification."""
    if not classify(T).is_r_tree:
        raise SpaceError("valdivia_sufficient requires an r-tree")
    if is_segment(T):
        eta = next(iter(T.edges.values())).length
        return Valdivia.YES if eta < OMEGA2 else Valdivia.HYPOTHESIS_FAILS
    if tree_height(T) >= OMEGA2:
        return Valdivia.HYPOTHESIS_FAILS
    omega1_omega = w_pow(add(OMEGA1, ONE))  # w1*w
    for e in T.edges.values():
        if e.length <= OMEGA1:
            continue
        if e.multiplicity.kind == "finite" and e.length < omega1_omega:
            continue
        return Valdivia.NO_DECISION
    return Valdivia.YES


# ---------------------------------------------------------------------------
# literals


def parse_point(T: ScaffoldTree, text: str) -> PointAddr:
    text = text.strip()
    if text == "root":
        return ROOT
    if "@" not in text:
        raise SpaceError(f"bad point literal {text!r}")
    head, offset = text.split("@", 1)
    head = head.strip()
    if head.endswith("]") and "[" in head:
        eid, copy = head[:-1].split("[", 1)
    else:
        eid, copy = head, ""
    p = PointAddr(eid.strip(), copy.strip(), parse_ordinal(offset))
    return T.validate_point(p)


def parse_atoms(T: ScaffoldTree, text: str) -> List[Tuple[PointAddr, PointAddr]]:
    """Parse '[p, q]; [r]' style admissible-set literals."""
    out = []
    text = text.strip()
    if text in ("", "root", "{}"):
        return out
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk or chunk == "root":
            continue
        if chunk.startswith("[") and chunk.endswith("]"):
            chunk = chunk[1:-1]
        inner = _split_atom(chunk)
        p = parse_point(T, inner[0])
        q = parse_point(T, inner[-1])
        out.append((p, q))
    return out


def _split_atom(chunk: str) -> List[str]:
    parts, depth, cur = [], 0, []
    for ch in chunk:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    if len(parts) not in (1, 2):
        raise SpaceError(f"bad atom literal {chunk!r}")
    return parts
