"""Markushevich bases and projectional generators.

Two explicit bases live here: the tail basis (g_x, ν_x) with ν_x = δ_x − δ_{x⁻},
and the PRI-derived basis (f_α, μ_α) built from a pluggable index bijection ξ
through the gap functions z and p and the closures A_α = cl ξ(I(κ)∩[0,α]).
The ξ built-ins are the identity and the pathological swap of the Mbaze divna
example (ξ transposes λ+1 and λ+2 above points λ of uncountable cofinality).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .ordinals import (
    ZERO,
    Ord,
    cofinality,
    format_ordinal,
    fundamental_sequence,
    is_successor,
    parse_ordinal,
    predecessor,
    successor,
)
from .space import (
    ROOT,
    AdmissibleSet,
    Atom,
    PointAddr,
    ScaffoldTree,
    format_point,
    is_segment,
    make_admissible,
    point_predecessor,
    seg_point,
)
from .functions import (
    AtomicMeasure,
    StepFunction,
    atomic_measure,
    dirac,
    evaluate,
    in_induced_D,
    indicator,
    linear_combine,
    pair,
)
from .report import VerificationReport


class BasisError(ValueError):
    pass


@dataclass(frozen=True)
class BasisPair:
    index: Ord
    vector: StepFunction
    functional: AtomicMeasure


def _basis_pair(index: Ord, vector: StepFunction, functional: AtomicMeasure) -> BasisPair:
    if pair(vector, functional) != 1:
        raise BasisError(f"biorthogonality broken at index {format_ordinal(index)}")
    return BasisPair(index, vector, functional)


def tail_basis(T: ScaffoldTree, x: PointAddr) -> BasisPair:
    """(g_x, ν_x): vector χ_{V_x}, functional δ_x − δ_{x⁻} (δ_root at the root)."""
    vector = indicator(T, x)
    if x.is_root:
        return _basis_pair(ZERO, vector, dirac(T, ROOT))
    pred = point_predecessor(T, x)
    functional = atomic_measure(T, [(x, Fraction(1)), (pred, Fraction(-1))])
    return _basis_pair(x.offset, vector, functional)


# ---------------------------------------------------------------------------
# gap functions on segments


def _segment_eta(T: ScaffoldTree) -> Ord:
    if not is_segment(T):
        raise BasisError("z_gap/p_pred/pri_basis operate on ordinal segments")
    return next(iter(T.edges.values())).length


def z_gap(T: ScaffoldTree, x: Ord, A: AdmissibleSet) -> Ord:
    """z(x) = max{y ∈ [x,η] : [x,y]∩A = ∅}; requires x ∉ A."""
    eta = _segment_eta(T)
    if x > eta or A.contains(seg_point(T, x)) or x == ZERO:
        raise BasisError(f"z_gap requires 1 <= x <= eta with x outside A")
    lo_above: Optional[Ord] = None
    for a in A.atoms:
        if a.lo >= x and (lo_above is None or a.lo < lo_above):
            lo_above = a.lo
    if lo_above is None:
        return eta
    z = predecessor(lo_above)
    assert z is not None  # atom left endpoints are successor ordinals
    return z


def p_pred(T: ScaffoldTree, x: Ord, A: AdmissibleSet) -> Ord:
    """p(x) = max A∩[0,x); requires x ∉ A (0 ∈ A always)."""
    _segment_eta(T)
    if A.contains(seg_point(T, x)) or x == ZERO:
        raise BasisError("p_pred requires x >= 1 outside A")
    best = ZERO
    for a in A.atoms:
        # an atom straddling x would put x in A, so a.lo < x forces a.hi < x
        if a.lo < x and a.hi > best:
            best = a.hi
    return best


# ---------------------------------------------------------------------------
# xi rules


class XiRule:
    """Bijection ξ: I(κ) → I(η) with a computable image-closure."""

    name = "abstract"

    def apply(self, alpha: Ord) -> Ord:
        raise NotImplementedError

    def inverse(self, beta: Ord) -> Ord:
        raise NotImplementedError

    def image_closure(self, T: ScaffoldTree, alpha: Ord) -> AdmissibleSet:
        """closure(ξ(I(κ)∩[0,alpha])) as an AdmissibleSet of the segment."""
        raise NotImplementedError


def _require_isolated(alpha: Ord) -> None:
    if alpha != ZERO and not is_successor(alpha):
        raise BasisError(f"{format_ordinal(alpha)} is not an isolated ordinal")


def _interval_atoms(T: ScaffoldTree, pieces: Sequence[Tuple[Ord, Ord]]) -> AdmissibleSet:
    eid = next(iter(T.edges))
    atoms = [Atom(eid, "", lo, hi) for lo, hi in pieces if lo <= hi]
    return make_admissible(T, atoms)


class IdentityXi(XiRule):
    name = "identity"

    def apply(self, alpha: Ord) -> Ord:
        _require_isolated(alpha)
        return alpha

    def inverse(self, beta: Ord) -> Ord:
        _require_isolated(beta)
        return beta

    def image_closure(self, T: ScaffoldTree, alpha: Ord) -> AdmissibleSet:
        if alpha == ZERO:
            return make_admissible(T, [])
        one = successor(ZERO)
        return _interval_atoms(T, [(one, alpha)])


class MbazeSwapXi(XiRule):
    """ξ(λ+1)=λ+2 and ξ(λ+2)=λ+1 above every λ of uncountable cofinality."""

    name = "mbaze-divna-swap"

    def apply(self, alpha: Ord) -> Ord:
        _require_isolated(alpha)
        if alpha == ZERO:
            return ZERO
        lam = predecessor(alpha)
        if lam is not None and cofinality(lam).is_uncountable:
            return successor(alpha)  # α = λ+1 ↦ λ+2
        lam2 = predecessor(lam) if lam is not None else None
        if lam2 is not None and cofinality(lam2).is_uncountable:
            return lam  # α = λ+2 ↦ λ+1
        return alpha

    inverse = apply  # the rule is an involution

    def image_closure(self, T: ScaffoldTree, alpha: Ord) -> AdmissibleSet:
        if alpha == ZERO:
            return make_admissible(T, [])
        one = successor(ZERO)
        lam = predecessor(alpha)
        if lam is not None and cofinality(lam).is_uncountable:
            # the pair (λ+1, λ+2) is cut: image misses λ+1, gains λ+2
            lp2 = successor(alpha)
            return _interval_atoms(T, [(one, lam), (lp2, lp2)])
        return _interval_atoms(T, [(one, alpha)])


class TableXi(XiRule):
    """Identity perturbed by finitely many transpositions of isolated ordinals."""

    name = "table"

    def __init__(self, swaps: Sequence[Tuple[Ord, Ord]]):
        self.map: Dict[Ord, Ord] = {}
        for a, b in swaps:
            _require_isolated(a)
            _require_isolated(b)
            if a == b or a == ZERO or b == ZERO:
                raise BasisError("swap clauses must transpose distinct nonzero ordinals")
            if a in self.map or b in self.map:
                raise BasisError("swap clauses must be disjoint")
            self.map[a] = b
            self.map[b] = a
        self.swaps = tuple((min(a, b), max(a, b)) for a, b in swaps)

    def apply(self, alpha: Ord) -> Ord:
        _require_isolated(alpha)
        return self.map.get(alpha, alpha)

    inverse = apply

    def image_closure(self, T: ScaffoldTree, alpha: Ord) -> AdmissibleSet:
        if alpha == ZERO:
            return make_admissible(T, [])
        one = successor(ZERO)
        removed = []
        added = []
        for a, b in self.swaps:  # a < b
            if a <= alpha < b:
                removed.append(a)
                added.append(b)
        pieces = [(one, alpha)]
        for r in sorted(removed):
            new_pieces = []
            for lo, hi in pieces:
                if lo <= r <= hi:
                    left = predecessor(r)
                    if left is not None and lo <= left:
                        new_pieces.append((lo, left))
                    if successor(r) <= hi:
                        new_pieces.append((successor(r), hi))
                else:
                    new_pieces.append((lo, hi))
            pieces = new_pieces
        pieces.extend((b, b) for b in added)
        return _interval_atoms(T, pieces)


def parse_xi_rule(spec: Union[str, dict]) -> XiRule:
    if isinstance(spec, dict):
        swaps = [
            (parse_ordinal(str(a)), parse_ordinal(str(b)))
            for a, b in spec.get("swaps", [])
        ]
        return TableXi(swaps)
    if spec == "identity":
        return IdentityXi()
    if spec == "mbaze-divna-swap":
        return MbazeSwapXi()
    raise BasisError(f"unknown xi rule {spec!r}")


def xi_image_closure(xi: XiRule, T: ScaffoldTree, alpha: Ord) -> AdmissibleSet:
    """A_α = closure(ξ(I(κ)∩[0,α])) on the segment T = [0,η]."""
    eta = _segment_eta(T)
    if alpha > eta:
        raise BasisError("alpha exceeds the segment endpoint")
    return xi.image_closure(T, alpha)


def pri_basis(T: ScaffoldTree, xi: XiRule, alpha: Ord) -> BasisPair:
    """(f_α, μ_α): f_α = χ_{[ξ(α), z(ξ(α),α−1)]}, μ_α = δ_{ξ(α)} − δ_{p(ξ(α),α−1)}."""
    eta = _segment_eta(T)
    if alpha == ZERO:
        return _basis_pair(ZERO, indicator(T, ROOT), dirac(T, ROOT))
    if not is_successor(alpha):
        raise BasisError(f"pri_basis index {format_ordinal(alpha)} is not isolated")
    x = xi.apply(alpha)
    prev = xi.image_closure(T, predecessor(alpha))
    if prev.contains(seg_point(T, x)):
        raise BasisError("xi rule is not injective: ξ(α) already lies in A_{α-1}")
    z = z_gap(T, x, prev)
    p = p_pred(T, x, prev)
    parts = [(Fraction(1), indicator(T, seg_point(T, x)))]
    if z < eta:
        parts.append((Fraction(-1), indicator(T, seg_point(T, successor(z)))))
    vector = linear_combine(parts)
    functional = atomic_measure(
        T, [(seg_point(T, x), Fraction(1)), (seg_point(T, p), Fraction(-1))]
    )
    return _basis_pair(alpha, vector, functional)


# ---------------------------------------------------------------------------
# checks and generators


def biorthogonality_check(pairs: Sequence[BasisPair], seed: int = 0) -> VerificationReport:
    report = VerificationReport(suite="biorthogonality", seed=seed)
    for i, bi in enumerate(pairs):
        for j, bj in enumerate(pairs):
            got = pair(bi.vector, bj.functional)
            want = Fraction(1) if i == j else Fraction(0)
            report.add(
                inputs={
                    "vector_index": format_ordinal(bi.index),
                    "functional_index": format_ordinal(bj.index),
                },
                expected=str(want),
                actual=str(got),
            )
    return report


def strong_reconstruct(T: ScaffoldTree, f: StepFunction) -> StepFunction:
    """Σ_x ν_x(f)·g_x over the plateau decomposition of f; exact by telescoping."""
    points: List[PointAddr] = [ROOT]
    points += [p for p, _c in f.terms if not p.is_root]
    parts = []
    for x in points:
        below = evaluate(f, point_predecessor(T, x)) if not x.is_root else Fraction(0)
        jump = evaluate(f, x) - below
        if jump != 0:
            parts.append((jump, indicator(T, x)))
    result = linear_combine(parts) if parts else linear_combine(
        [(Fraction(0), indicator(T, ROOT))]
    )
    if result != f:
        raise BasisError("strong reconstruction failed to reproduce the function")
    return result


def generator_phi(
    T: ScaffoldTree, mu: AtomicMeasure, truncation: int = 8
) -> List[PointAddr]:
    """Φ(μ): isolated atoms themselves; limit atoms of countable cofinality
    contribute the first `truncation` fundamental-sequence successors."""
    ok, witness = in_induced_D(T, mu)
    if not ok:
        raise BasisError(f"measure outside D: atom at {format_point(witness)}")
    out = []
    for p, _c in mu.atoms:
        if p.is_root or is_successor(p.offset):
            out.append(p)
            continue
        for n in range(1, truncation + 1):
            o = fundamental_sequence(p.offset, n)
            if not is_successor(o):
                o = successor(o)  # stay inside I(T); sup is still the atom
            out.append(PointAddr(p.eid, p.copy, o))
    uniq = []
    for p in out:
        if p not in uniq:
            uniq.append(p)
    uniq.sort(key=lambda p: (0,) if p.is_root else (1, format_point(p)))
    return uniq


def _kernel_basis(rows: List[List[Fraction]], ncols: int) -> List[List[Fraction]]:
    """Kernel basis of the matrix via exact Gauss-Jordan elimination."""
    m = [row[:] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            vec[pc] = -m[ri][fc]
        basis.append(vec)
    return basis


def generator_check(
    T: ScaffoldTree,
    M: Sequence[AtomicMeasure],
    truncation: int = 8,
    seed: int = 0,
) -> VerificationReport:
    """Finite-span surrogate of the projectional-generator property: no nonzero
    combination of M is orthogonal to every Φ-generator and every g at an
    isolated atom of M.  The weak*-closure condition is NOT checked."""
    report = VerificationReport(suite="generator-check", seed=seed)
    report.config["truncation"] = str(truncation)
    report.config["note"] = (
        "finite-span surrogate with truncated Phi; passing does not certify "
        "the full weak*-closure generator property"
    )
    constraint_pts: List[PointAddr] = []
    for mu in M:
        ok, witness = in_induced_D(T, mu)
        if not ok:
            raise BasisError(f"member outside D: atom at {format_point(witness)}")
        for p in generator_phi(T, mu, truncation):
            if p not in constraint_pts:
                constraint_pts.append(p)
        for p, _c in mu.atoms:
            if (p.is_root or is_successor(p.offset)) and p not in constraint_pts:
                constraint_pts.append(p)
    rows = [
        [pair(indicator(T, y), mu) for mu in M]
        for y in constraint_pts
    ]
    kernel = _kernel_basis(rows, len(M))
    witness = None
    for vec in kernel:
        combo = [(c, mu) for c, mu in zip(vec, M) if c != 0]
        if combo:
            from .functions import combine_measures

            if not combine_measures(combo).is_zero():
                witness = "[" + ", ".join(str(c) for c in vec) + "]"
                break
    report.add(
        inputs={
            "members": str(len(M)),
            "constraints": str(len(constraint_pts)),
        },
        expected="trivial kernel (up to zero combinations)",
        actual="trivial kernel (up to zero combinations)" if witness is None
        else f"nonzero kernel combination {witness}",
        witness=witness,
    )
    return report
