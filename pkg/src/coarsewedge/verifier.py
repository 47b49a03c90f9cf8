"""Property suites: independent finite-model oracle, skeleton-axiom checks,
commutation probes, fs-chain limit checks, the bounded σ-closure engine and
the 1-Plichko dichotomy for segments.  Every suite is deterministic under a
fixed seed and returns a VerificationReport.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .ordinals import (
    OMEGA1,
    OMEGA2,
    ZERO,
    CofClass,
    Ord,
    cofinality,
    format_ordinal,
    from_int,
    fundamental_sequence,
    is_successor,
    parse_ordinal,
    successor,
)
from .space import (
    ANON,
    ROOT,
    AdmissibilityError,
    AdmissibleSet,
    Atom,
    PointAddr,
    ScaffoldTree,
    format_atoms,
    format_point,
    is_countable_member,
    make_admissible,
    point_cofinality,
    retract,
    seg_point,
    segment,
    set_weight,
    sigma_continuity_ok,
    union_admissible,
    is_subset,
    wedge,
)
from .functions import (
    AtomicMeasure,
    StepFunction,
    adjoint,
    atomic_measure,
    dirac,
    evaluate,
    format_function,
    format_measure,
    in_induced_D,
    indicator,
    pair,
    project,
    step_function,
    sup_norm,
)
from .mbasis import MbazeSwapXi, generator_phi, pri_basis
from .report import VerificationReport


class VerifierError(ValueError):
    pass


# ---------------------------------------------------------------------------
# finite-model oracle


def _oracle_leq(T: ScaffoldTree, p: PointAddr, q: PointAddr) -> bool:
    """Tree order decided by climbing q's edge path; independent of wedge()."""
    if p.is_root:
        return True
    if q.is_root:
        return False
    segs: Dict[str, Tuple[str, Ord]] = {}
    eid, copy, limit = q.eid, q.copy, q.offset
    while True:
        segs[eid] = (copy, limit)
        parent = T.edges[eid].parent
        if parent == "root":
            break
        eid = T.parent_edge[parent]
        copy = ""
        limit = T.edges[eid].length
    if p.eid not in segs:
        return False
    copy, limit = segs[p.eid]
    return p.copy == copy and p.offset <= limit


class FiniteModelOracle:
    """Brute-force answers over the finite suborder spanned by the root, the
    atom endpoints of A, the query points, and their pairwise wedges."""

    def __init__(
        self,
        T: ScaffoldTree,
        A: Optional[AdmissibleSet],
        queries: Sequence[PointAddr],
        extra: Sequence[PointAddr] = (),
    ):
        self.T = T
        self.A = A
        pts: List[PointAddr] = [ROOT]
        if A is not None:
            pts += A.endpoints()
        qs = list(queries)
        pts += qs + list(extra)
        for i in range(len(qs)):
            for j in range(i + 1, len(qs)):
                pts.append(wedge(T, qs[i], qs[j]))
        self.model: List[PointAddr] = []
        for p in pts:
            if p not in self.model:
                self.model.append(p)

    def leq(self, p: PointAddr, q: PointAddr) -> bool:
        return _oracle_leq(self.T, p, q)

    def _max(self, candidates: List[PointAddr]) -> PointAddr:
        best = ROOT
        for c in candidates:
            if self.leq(best, c):
                best = c
        return best

    def retract(self, p: PointAddr) -> PointAddr:
        assert self.A is not None
        cands = [m for m in self.model + [p] if self.A.contains(m) and self.leq(m, p)]
        return self._max(cands)

    def wedge(self, p: PointAddr, q: PointAddr) -> PointAddr:
        cands = [m for m in self.model if self.leq(m, p) and self.leq(m, q)]
        return self._max(cands)

    def evaluate(self, f: StepFunction, p: PointAddr) -> Fraction:
        return sum((c for x, c in f.terms if self.leq(x, p)), Fraction(0))


def finite_model_oracle(
    T: ScaffoldTree,
    A: Optional[AdmissibleSet],
    queries: Sequence[PointAddr],
    extra: Sequence[PointAddr] = (),
) -> FiniteModelOracle:
    return FiniteModelOracle(T, A, queries, extra)


# ---------------------------------------------------------------------------
# samplers (deterministic for a fixed rng)

_FINITE = ["1", "2", "3", "5", "7"]
_COUNTABLE = ["w", "w + 1", "w*2", "w*2 + 3", "w^2", "w^2 + 1"]
_UNCOUNTABLE = ["w1", "w1 + 1", "w1 + 2", "w1*2", "w1*2 + 5", "w2"]
_DELTAS = ["0", "1", "2", "5", "w", "w*2", "w^2"]


def _offset_pool(T: ScaffoldTree, eid: str) -> List[Ord]:
    length = T.edges[eid].length
    pool = []
    for text in _FINITE + _COUNTABLE + _UNCOUNTABLE:
        o = parse_ordinal(text)
        if successor(ZERO) <= o <= length and o not in pool:
            pool.append(o)
    if length not in pool:
        pool.append(length)
    return pool


def sample_point(rng: random.Random, T: ScaffoldTree, allow_anon: bool = False) -> PointAddr:
    if rng.random() < 0.05:
        return ROOT
    eid = rng.choice(sorted(T.edges))
    e = T.edges[eid]
    copies = list(e.copies)
    if allow_anon and e.multiplicity.kind != "finite":
        copies.append(ANON)
    copy = rng.choice(copies) if copies else ANON
    return PointAddr(eid, copy, rng.choice(_offset_pool(T, eid)))


def sample_isolated_point(rng: random.Random, T: ScaffoldTree) -> PointAddr:
    for _ in range(50):
        p = sample_point(rng, T)
        if p.is_root or (is_successor(p.offset) and p.copy != ANON):
            return p
    return ROOT


def sample_admissible(
    rng: random.Random,
    T: ScaffoldTree,
    max_atoms: int = 3,
    countable: bool = True,
) -> AdmissibleSet:
    for _ in range(40):
        atoms = []
        for _k in range(rng.randint(0, max_atoms)):
            eid = rng.choice(sorted(T.edges))
            e = T.edges[eid]
            if not e.copies:
                continue
            copy = rng.choice(e.copies)
            lows = [o for o in _offset_pool(T, eid) if is_successor(o)]
            if not lows:
                continue
            lo = rng.choice(lows)
            if countable:
                from .ordinals import add

                hi = add(lo, parse_ordinal(rng.choice(_DELTAS)))
                if hi > e.length:
                    hi = lo
            else:
                his = [o for o in _offset_pool(T, eid) if o >= lo]
                hi = rng.choice(his) if his else lo
            atoms.append(Atom(eid, copy, lo, hi))
        try:
            return make_admissible(T, atoms, auto_close=True)
        except AdmissibilityError:
            continue
    return make_admissible(T, [])


def sample_step_function(
    rng: random.Random,
    T: ScaffoldTree,
    points: Optional[Sequence[PointAddr]] = None,
    max_terms: int = 4,
) -> StepFunction:
    items = []
    for _ in range(rng.randint(1, max_terms)):
        p = rng.choice(list(points)) if points else sample_isolated_point(rng, T)
        items.append((p, Fraction(rng.randint(-3, 3))))
    return step_function(T, items)


def sample_measure(
    rng: random.Random, T: ScaffoldTree, max_atoms: int = 3, in_d: bool = False
) -> AtomicMeasure:
    items = []
    for _ in range(rng.randint(1, max_atoms)):
        p = sample_point(rng, T)
        if p.copy == ANON:
            continue
        if in_d and point_cofinality(T, p).is_uncountable:
            continue
        items.append((p, Fraction(rng.randint(-3, 3))))
    return atomic_measure(T, items)


# ---------------------------------------------------------------------------
# skeleton axioms


def sample_family(
    rng: random.Random, T: ScaffoldTree, members: int
) -> List[AdmissibleSet]:
    """A family of countable admissible sets rich in comparable pairs whose
    total union is itself admissible (used as the up-closure witness)."""
    family: List[AdmissibleSet] = []
    cumulative = make_admissible(T, [])
    family.append(cumulative)
    attempts = 0
    while len(family) < members and attempts < members * 30:
        attempts += 1
        S = sample_admissible(rng, T, countable=True)
        try:
            bigger = union_admissible(cumulative, S)
        except AdmissibilityError:
            continue
        if not is_countable_member(T, bigger):
            continue
        cumulative = bigger
        if S not in family:
            family.append(S)
        if cumulative not in family and len(family) < members:
            family.append(cumulative)
    while len(family) < members:  # fallback: a nested chain on one edge
        eid = sorted(T.edges)[0]
        n = len(family) + 1
        hi = from_int(n)
        if hi > T.edges[eid].length:
            hi = T.edges[eid].length
        family.append(
            make_admissible(T, [Atom(eid, T.edges[eid].copies[0], successor(ZERO), hi)])
        )
    return family[:members]


def family_generator_points(
    T: ScaffoldTree, family: Sequence[AdmissibleSet]
) -> List[PointAddr]:
    pts: List[PointAddr] = [ROOT]
    for A in family:
        for a in A.atoms:
            for o in (a.lo, successor(a.lo), a.hi):
                if o <= a.hi and is_successor(o):
                    p = PointAddr(a.eid, a.copy, o)
                    if p not in pts:
                        pts.append(p)
    return pts


def check_skeleton_axioms(
    T: ScaffoldTree,
    family: Sequence[AdmissibleSet],
    test_fns: Sequence[StepFunction],
    seed: int = 0,
) -> VerificationReport:
    report = VerificationReport(suite="skeleton-axioms", seed=seed)
    report.config["axiom_iii"] = "sigma-completeness delegated to chain_limit_check"
    report.config["members"] = str(len(family))
    report.config["test_fns"] = str(len(test_fns))
    for idx, A in enumerate(family):
        w = set_weight(T, A)
        report.add(
            {"axiom": "i", "member": str(idx), "set": format_atoms(A)},
            expected="countable",
            actual="countable" if w.is_countable else str(w),
        )
    for i, A in enumerate(family):
        for j, B in enumerate(family):
            if i == j or not is_subset(A, B):
                continue
            bad = None
            for f in test_fns:
                pa = project(T, A, f)
                left = project(T, A, project(T, B, f))
                right = project(T, B, pa)
                if not (left == pa and right == pa):
                    bad = format_function(f)
                    break
            report.add(
                {"axiom": "ii", "A": format_atoms(A), "B": format_atoms(B)},
                expected="P_A P_B = P_B P_A = P_A on all test functions",
                actual="P_A P_B = P_B P_A = P_A on all test functions"
                if bad is None
                else f"mismatch on {bad}",
                witness=bad,
            )
    if family:
        up = family[0]
        for A in family[1:]:
            up = union_admissible(up, A)
        for k, f in enumerate(test_fns):
            fixed = project(T, up, f) == f
            report.add(
                {"axiom": "iv", "fn": format_function(f), "union": format_atoms(up)},
                expected="fixed by the family union",
                actual="fixed by the family union" if fixed else "moved",
            )
    elif test_fns and any(not f.is_zero() for f in test_fns):
        report.add(
            {"axiom": "iv", "family": "empty"},
            expected="fixed by the family union",
            actual="no admissible set available",
        )
    return report


def check_nested_commutation(
    T: ScaffoldTree,
    A: AdmissibleSet,
    B: AdmissibleSet,
    samples: Sequence[PointAddr],
    fns: Sequence[StepFunction] = (),
    seed: int = 0,
) -> VerificationReport:
    if not is_subset(A, B):
        raise VerifierError("check_nested_commutation requires A ⊆ B")
    report = VerificationReport(suite="nested-commutation", seed=seed)
    for p in samples:
        ra = retract(T, A, p)
        lhs = retract(T, A, retract(T, B, p))
        rhs = retract(T, B, ra)
        report.add(
            {"point": format_point(p), "A": format_atoms(A), "B": format_atoms(B)},
            expected=format_point(ra),
            actual=format_point(lhs) if lhs == rhs else f"{format_point(lhs)} vs {format_point(rhs)}",
        )
    for f in fns:
        pa = project(T, A, f)
        lhs_f = project(T, A, project(T, B, f))
        rhs_f = project(T, B, pa)
        ok = lhs_f == pa and rhs_f == pa
        report.add(
            {"fn": format_function(f), "A": format_atoms(A), "B": format_atoms(B)},
            expected="P_A P_B = P_B P_A = P_A",
            actual="P_A P_B = P_B P_A = P_A" if ok else "mismatch",
        )
    return report


def find_noncommuting_pair(
    T: ScaffoldTree, budget: int = 200, seed: int = 0
) -> Optional[Tuple[AdmissibleSet, AdmissibleSet, PointAddr]]:
    """Search small admissible pairs with r_A r_B ≠ r_B r_A; oracle-confirmed."""
    rng = random.Random(seed)
    for _ in range(budget):
        a = sample_isolated_point(rng, T)
        b = sample_isolated_point(rng, T)
        x = sample_point(rng, T)
        if a.is_root or b.is_root or a == b:
            continue
        try:
            A = make_admissible(T, [(a, a)])
            B = make_admissible(T, [(b, b)])
        except AdmissibilityError:
            continue
        lhs = retract(T, A, retract(T, B, x))
        rhs = retract(T, B, retract(T, A, x))
        if lhs == rhs:
            continue
        oracle = finite_model_oracle(T, A, [x, b], extra=[lhs, rhs])
        oracle_b = finite_model_oracle(T, B, [x, a], extra=[lhs, rhs])
        o_lhs = oracle.retract(oracle_b.retract(x))
        o_rhs = oracle_b.retract(oracle.retract(x))
        if o_lhs == lhs and o_rhs == rhs:
            return A, B, x
    return None


# ---------------------------------------------------------------------------
# chains


@dataclass(frozen=True)
class ChainFamily:
    """base ∪ [start, fs(lam, n)] growing to the limit set base ∪ [start, lam]."""

    base: AdmissibleSet
    eid: str
    copy: str
    start: Ord
    lam: Ord

    def __post_init__(self):
        T = self.base.tree
        if not is_successor(self.start):
            raise VerifierError("chain start must be an isolated offset")
        if cofinality(self.lam) != CofClass.Omega:
            raise VerifierError("chain limit must have cofinality omega")
        if not (self.start <= self.lam <= T.edges[self.eid].length):
            raise VerifierError("chain interval out of range")

    def member(self, n: int) -> AdmissibleSet:
        hi = fundamental_sequence(self.lam, n)
        if hi < self.start:
            hi = self.start
        return make_admissible(
            self.base.tree,
            list(self.base.atoms) + [Atom(self.eid, self.copy, self.start, hi)],
            auto_close=True,
        )

    def limit(self) -> AdmissibleSet:
        return make_admissible(
            self.base.tree,
            list(self.base.atoms) + [Atom(self.eid, self.copy, self.start, self.lam)],
            auto_close=True,
        )


def chain_limit_check(
    T: ScaffoldTree,
    chain: ChainFamily,
    queries: Sequence[PointAddr],
    steps: int = 8,
    seed: int = 0,
) -> VerificationReport:
    report = VerificationReport(suite="chain-limit", seed=seed)
    report.config["steps"] = str(steps)
    limit_set = chain.limit()
    members = [chain.member(n) for n in range(1, steps + 1)]
    for n in range(len(members) - 1):
        if not is_subset(members[n], members[n + 1]):
            raise VerifierError("chain members are not increasing")
    for x in queries:
        seq = [retract(T, M, x) for M in members]
        monotone = all(
            wedge(T, seq[k], seq[k + 1]) == seq[k] for k in range(len(seq) - 1)
        )
        rb = retract(T, limit_set, x)
        if seq[-1] == rb:
            sup_ok = True
            sup_desc = "eventually constant at " + format_point(rb)
        else:
            lam_pt = PointAddr(chain.eid, chain.copy, chain.lam)
            tail_on_fs = all(
                seq[n]
                == PointAddr(
                    chain.eid,
                    chain.copy,
                    max(fundamental_sequence(chain.lam, n + 1), chain.start),
                )
                for n in (len(seq) - 2, len(seq) - 1)
            )
            sup_ok = tail_on_fs and rb == lam_pt
            sup_desc = "fs supremum " + format_point(lam_pt)
        report.add(
            {
                "query": format_point(x),
                "chain": f"[{format_ordinal(chain.start)}, fs({format_ordinal(chain.lam)}, n)]",
            },
            expected="monotone with supremum retract(limit)",
            actual="monotone with supremum retract(limit)"
            if monotone and sup_ok
            else f"monotone={monotone}, {sup_desc}, limit={format_point(rb)}",
        )
    return report


# ---------------------------------------------------------------------------
# bounded sigma-closure


@dataclass
class ClosureRecord:
    functions: List[StepFunction]
    measures: List[AtomicMeasure]
    depth: int
    fixed_point: bool

    def to_dict(self) -> dict:
        return {
            "functions": [format_function(f) for f in self.functions],
            "measures": [format_measure(m) for m in self.measures],
            "depth": self.depth,
            "fixed_point_under_truncation": self.fixed_point,
        }


def bounded_sigma_closure(
    T: ScaffoldTree,
    seed_items: Sequence[Union[StepFunction, AtomicMeasure]],
    depth: int = 3,
    truncation: int = 8,
) -> ClosureRecord:
    """θ₁(A) = A ∪ Φ(A∩D) ∪ η(lin_Q(A∩M)), iterated `depth` times with the
    truncated Φ and the sup-norm norming chooser η."""
    funcs: List[StepFunction] = []
    meas: List[AtomicMeasure] = []
    for item in seed_items:
        if isinstance(item, StepFunction):
            funcs.append(item)
        else:
            ok, witness = in_induced_D(T, item)
            if not ok:
                raise VerifierError(f"seed measure outside D at {format_point(witness)}")
            meas.append(item)
    fixed = False
    for _round in range(depth):
        new_funcs = list(funcs)
        new_meas = list(meas)
        for mu in meas:
            for x in generator_phi(T, mu, truncation):
                gx = indicator(T, x)
                if gx not in new_funcs:
                    new_funcs.append(gx)
        for f in funcs:
            norm = sup_norm(f)
            if norm == 0:
                continue
            for p in [ROOT] + [q for q, _c in f.terms]:
                if abs(evaluate(f, p)) == norm:
                    dp = dirac(T, p)
                    if dp not in new_meas:
                        new_meas.append(dp)
        if new_funcs == funcs and new_meas == meas:
            fixed = True
            break
        funcs, meas = new_funcs, new_meas
    return ClosureRecord(funcs, meas, depth, fixed)


# ---------------------------------------------------------------------------
# 1-Plichko dichotomy for segments


def one_plichko_segment(eta: Ord) -> Tuple[bool, Optional[dict]]:
    """C([0,η]) is 1-Plichko ⟺ η < ω₂; negative answers carry the witness
    A = {0}∪[1,ω₁] whose adjoint pushes δ_{ω₁+1} to δ_{ω₁} ∉ D."""
    if eta < successor(ZERO):
        raise VerifierError("one_plichko_segment requires eta >= 1")
    if eta < OMEGA2:
        return True, None
    T = segment(eta)
    eid = next(iter(T.edges))
    A = make_admissible(T, [Atom(eid, "", successor(ZERO), OMEGA1)])
    ok, sigma_witness = sigma_continuity_ok(T, A)
    assert not ok and sigma_witness == seg_point(T, OMEGA1)
    escaper = dirac(T, seg_point(T, successor(OMEGA1)))
    pushed = adjoint(T, A, escaper)
    in_d, atom = in_induced_D(T, pushed)
    assert not in_d and atom == seg_point(T, OMEGA1)
    return False, {
        "set": format_atoms(A),
        "sigma_continuity_witness": format_point(sigma_witness),
        "escaping_atom": format_measure(escaper),
        "adjoint_image": format_measure(pushed),
        "image_in_D": in_d,
    }


# ---------------------------------------------------------------------------
# suite runners (deterministic per (suite, seed); consumed by the CLI)


def suite_oracle(T: ScaffoldTree, seed: int = 0, n: int = 510) -> VerificationReport:
    report = VerificationReport(suite="finite-model-oracle", seed=seed)
    rng = random.Random(seed)
    while len(report.cases) < n:
        A = sample_admissible(rng, T, countable=False)
        p = sample_point(rng, T, allow_anon=True)
        q = sample_point(rng, T, allow_anon=True)
        f = sample_step_function(rng, T)
        gens = [x for x, _c in f.terms]
        oracle = finite_model_oracle(T, A, [p, q], extra=gens)
        report.add(
            {"op": "retract", "set": format_atoms(A), "point": format_point(p)},
            expected=format_point(oracle.retract(p)),
            actual=format_point(retract(T, A, p)),
        )
        report.add(
            {"op": "wedge", "p": format_point(p), "q": format_point(q)},
            expected=format_point(oracle.wedge(p, q)),
            actual=format_point(wedge(T, p, q)),
        )
        report.add(
            {"op": "evaluate", "fn": format_function(f), "point": format_point(p)},
            expected=str(oracle.evaluate(f, p)),
            actual=str(evaluate(f, p)),
        )
    return report


def _total_variation(mu: AtomicMeasure) -> Fraction:
    return sum((abs(c) for _x, c in mu.atoms), Fraction(0))


def suite_duality(T: ScaffoldTree, seed: int = 0, n: int = 200) -> VerificationReport:
    report = VerificationReport(suite="projection-duality", seed=seed)
    rng = random.Random(seed)
    for _ in range(n):
        A = sample_admissible(rng, T, countable=False)
        f = sample_step_function(rng, T)
        mu = sample_measure(rng, T)
        pf = project(T, A, f)
        pm = adjoint(T, A, mu)
        lhs, rhs = pair(pf, mu), pair(f, pm)
        contract = sup_norm(pf) <= sup_norm(f) and _total_variation(pm) <= _total_variation(mu)
        report.add(
            {
                "set": format_atoms(A),
                "fn": format_function(f),
                "measure": format_measure(mu),
            },
            expected=f"<P_A f, mu> = <f, P_A* mu> = {lhs}, contractive",
            actual=f"<P_A f, mu> = <f, P_A* mu> = {rhs}, contractive"
            if lhs == rhs and contract
            else f"lhs={lhs} rhs={rhs} contractive={contract}",
        )
    return report


def escaping_atom(T: ScaffoldTree, A: AdmissibleSet, witness: PointAddr) -> Optional[PointAddr]:
    """An immediate successor of the sigma-continuity witness missing from A,
    if one lives on a named copy."""
    e = T.edges[witness.eid]
    if witness.offset < e.length:
        y = PointAddr(witness.eid, witness.copy, successor(witness.offset))
        return None if A.contains(y) else y
    for kid_id in sorted(T.edges):
        kid = T.edges[kid_id]
        if kid.parent != e.child:
            continue
        for copy in kid.copies:
            y = PointAddr(kid_id, copy, successor(ZERO))
            if not A.contains(y):
                return y
    return None


def suite_sigma(T: ScaffoldTree, seed: int = 0, n: int = 50) -> VerificationReport:
    """σ-continuity of r_A ⟺ D-stability of the adjoint, set by sampled set."""
    report = VerificationReport(suite="sigma-vs-D", seed=seed)
    rng = random.Random(seed)
    for _ in range(n):
        A = sample_admissible(rng, T, countable=False)
        ok, witness = sigma_continuity_ok(T, A)
        if ok:
            stable = True
            culprit = None
            for _k in range(6):
                mu = sample_measure(rng, T, in_d=True)
                if not in_induced_D(T, adjoint(T, A, mu))[0]:
                    stable, culprit = False, format_measure(mu)
                    break
            report.add(
                {"set": format_atoms(A), "sigma_continuous": "yes"},
                expected="adjoint preserves D",
                actual="adjoint preserves D" if stable else f"escaped via {culprit}",
            )
        else:
            y = escaping_atom(T, A, witness)
            if y is None:
                report.add(
                    {"set": format_atoms(A), "sigma_continuous": "no"},
                    expected="explicit escaping atom",
                    actual="no named-copy successor available",
                    witness=format_point(witness),
                )
                continue
            pushed = adjoint(T, A, dirac(T, y))
            escaped = not in_induced_D(T, pushed)[0]
            report.add(
                {"set": format_atoms(A), "sigma_continuous": "no"},
                expected="explicit escaping atom",
                actual="explicit escaping atom"
                if escaped
                else f"adjoint of d({format_point(y)}) stayed in D",
                witness=f"d({format_point(y)}) -> {format_measure(pushed)}",
            )
    return report


def suite_skeleton(
    T: ScaffoldTree, seed: int = 0, members: int = 20, fns: int = 30
) -> VerificationReport:
    rng = random.Random(seed)
    family = sample_family(rng, T, members)
    pts = family_generator_points(T, family)
    test_fns = [sample_step_function(rng, T, points=pts) for _ in range(fns)]
    return check_skeleton_axioms(T, family, test_fns, seed=seed)


def suite_commute(T: ScaffoldTree, seed: int = 0, samples: int = 20) -> VerificationReport:
    rng = random.Random(seed)
    A = sample_admissible(rng, T, countable=False)
    B = union_admissible(A, sample_admissible(rng, T, countable=False))
    queries = [sample_point(rng, T, allow_anon=True) for _ in range(samples)]
    report = check_nested_commutation(T, A, B, queries, seed=seed)
    report.suite = "commutation-dichotomy"
    found = find_noncommuting_pair(T, seed=seed)
    if found is not None:
        nA, nB, x = found
        lhs = retract(T, nA, retract(T, nB, x))
        rhs = retract(T, nB, retract(T, nA, x))
        report.add(
            {"op": "noncommuting-pair", "A": format_atoms(nA), "B": format_atoms(nB)},
            expected="oracle-confirmed witness",
            actual="oracle-confirmed witness",
            witness=f"x={format_point(x)}: {format_point(lhs)} != {format_point(rhs)}",
        )
    else:
        report.add(
            {"op": "noncommuting-pair"},
            expected="oracle-confirmed witness",
            actual="none found within budget",
        )
    return report


def sample_chain(rng: random.Random, T: ScaffoldTree) -> Optional[ChainFamily]:
    eids = sorted(T.edges)
    rng.shuffle(eids)
    for eid in eids:
        e = T.edges[eid]
        if not e.copies:
            continue
        lams = [
            o
            for o in _offset_pool(T, eid)
            if cofinality(o) == CofClass.Omega and o <= e.length
        ]
        if not lams:
            continue
        lam = rng.choice(lams)
        starts = [o for o in _offset_pool(T, eid) if is_successor(o) and o <= lam]
        start = rng.choice(starts) if starts else successor(ZERO)
        return ChainFamily(make_admissible(T, []), eid, rng.choice(e.copies), start, lam)
    return None


def suite_chain(
    T: ScaffoldTree, seed: int = 0, n_chains: int = 10, steps: int = 8
) -> VerificationReport:
    rng = random.Random(seed)
    report = VerificationReport(suite="chain-limits", seed=seed)
    report.config["steps"] = str(steps)
    made = 0
    guard = 0
    while made < n_chains and guard < n_chains * 20:
        guard += 1
        chain = sample_chain(rng, T)
        if chain is None:
            break
        queries = [sample_point(rng, T) for _ in range(4)] + [
            PointAddr(chain.eid, chain.copy, chain.lam)
        ]
        sub = chain_limit_check(T, chain, queries, steps=steps, seed=seed)
        for case in sub.cases:
            report.add_case(case)
        made += 1
    report.config["chains"] = str(made)
    return report


def repro_mbaze_divna(seed: int = 0, samples: int = 30) -> VerificationReport:
    """The swap-rule pathology on [0, ω₂]: P_A(f₁) = χ_{[ω₁+1, η]} lies outside
    the PRI-derived basis (and is nonzero), so the swapped system fails to be
    invariant under the canonical projections."""
    report = VerificationReport(suite="repro-mbaze-divna", seed=seed)
    T = segment(OMEGA2)
    swap = MbazeSwapXi()
    f1 = pri_basis(T, swap, from_int(1)).vector
    x = seg_point(T, successor(OMEGA1))
    A = make_admissible(T, [(x, x)])
    projected = project(T, A, f1)
    report.add(
        {"set": format_atoms(A), "fn": format_function(f1)},
        expected=format_function(indicator(T, x)),
        actual=format_function(projected),
    )
    report.add(
        {"check": "nonzero"},
        expected="nonzero",
        actual="nonzero" if not projected.is_zero() else "zero",
    )
    rng = random.Random(seed)
    pool = ["1", "2", "5", "7", "w + 1", "w*2 + 1", "w1 + 1", "w1 + 2", "w1*2 + 1"]
    indices = [parse_ordinal(t) for t in pool]
    while len(indices) < samples:
        indices.append(from_int(rng.randint(1, 10**6)))
    for alpha in indices[:samples]:
        vec = pri_basis(T, swap, alpha).vector
        report.add(
            {"check": "not a basis element", "index": format_ordinal(alpha)},
            expected="differs from f_" + format_ordinal(alpha),
            actual="differs from f_" + format_ordinal(alpha)
            if vec != projected
            else "coincides",
        )
    return report


def suite_plichko(etas: Sequence[Ord], seed: int = 0) -> VerificationReport:
    report = VerificationReport(suite="plichko-segments", seed=seed)
    for eta in etas:
        verdict, witness = one_plichko_segment(eta)
        report.add(
            {"eta": format_ordinal(eta)},
            expected="1-Plichko" if eta < OMEGA2 else "not 1-Plichko",
            actual="1-Plichko" if verdict else "not 1-Plichko",
            witness=None if witness is None else str(witness),
        )
    return report
