"""Step functions (the dense subalgebra spanned by χ_{V_x}) and finitely
supported measures on a ScaffoldTree, in exact rational duality.

On a segment [0,eta] the generator χ_{V_x} is the tail indicator g_x of the
interval [x, eta].  Projections P_A f = f∘r_A and their adjoints act exactly
on these representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .ordinals import CofClass
from .space import (
    ANON,
    ROOT,
    AdmissibleSet,
    PointAddr,
    ScaffoldTree,
    format_point,
    is_successor,
    least_above,
    parse_point,
    point_cmp,
    point_cofinality,
    point_leq,
    retract,
)


class FunctionError(ValueError):
    pass


def _canonical(
    T: ScaffoldTree, items: Iterable[Tuple[PointAddr, Fraction]]
) -> Tuple[Tuple[PointAddr, Fraction], ...]:
    acc: Dict[PointAddr, Fraction] = {}
    for p, c in items:
        acc[p] = acc.get(p, Fraction(0)) + c
    pts = [p for p, c in acc.items() if c != 0]
    pts.sort(key=cmp_to_key(lambda a, b: point_cmp(T, a, b)))
    return tuple((p, acc[p]) for p in pts)


@dataclass(frozen=True)
class StepFunction:
    """Σ c_x · χ_{V_x} over generator points x of isolated height."""

    tree: ScaffoldTree
    terms: Tuple[Tuple[PointAddr, Fraction], ...]

    def __eq__(self, other):
        return (
            isinstance(other, StepFunction)
            and self.tree is other.tree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return f"StepFunction({format_function(self)!r})"

    def is_zero(self) -> bool:
        return not self.terms


@dataclass(frozen=True)
class AtomicMeasure:
    """Σ c_i · δ_{x_i} with distinct atoms and nonzero coefficients."""

    tree: ScaffoldTree
    atoms: Tuple[Tuple[PointAddr, Fraction], ...]

    def __eq__(self, other):
        return (
            isinstance(other, AtomicMeasure)
            and self.tree is other.tree
            and self.atoms == other.atoms
        )

    def __hash__(self):
        return hash(self.atoms)

    def __repr__(self):
        return f"AtomicMeasure({format_measure(self)!r})"

    def is_zero(self) -> bool:
        return not self.atoms

    def total_variation(self) -> Fraction:
        return sum((abs(c) for _p, c in self.atoms), Fraction(0))


def step_function(
    T: ScaffoldTree, items: Iterable[Tuple[PointAddr, Fraction]]
) -> StepFunction:
    terms = _canonical(T, items)
    for p, _c in terms:
        T.validate_point(p)
        if not p.is_root and not is_successor(p.offset):
            raise FunctionError(
                f"generator {format_point(p)} has limit height; χ_V would be discontinuous"
            )
        if p.copy == ANON:
            raise FunctionError("generators may only use named copies")
    return StepFunction(T, terms)


def atomic_measure(
    T: ScaffoldTree, items: Iterable[Tuple[PointAddr, Fraction]]
) -> AtomicMeasure:
    atoms = _canonical(T, items)
    for p, _c in atoms:
        T.validate_point(p)
        if p.copy == ANON:
            raise FunctionError("measure atoms must name their copy")
    return AtomicMeasure(T, atoms)


def indicator(T: ScaffoldTree, x: PointAddr) -> StepFunction:
    """χ_{V_x} = g_x."""
    return step_function(T, [(x, Fraction(1))])


def dirac(T: ScaffoldTree, x: PointAddr) -> AtomicMeasure:
    return atomic_measure(T, [(x, Fraction(1))])


def linear_combine(parts: Sequence[Tuple[Fraction, StepFunction]]) -> StepFunction:
    if not parts:
        raise FunctionError("linear_combine needs at least one part")
    T = parts[0][1].tree
    items: List[Tuple[PointAddr, Fraction]] = []
    for scalar, f in parts:
        if f.tree is not T:
            raise FunctionError("mixed spaces in linear_combine")
        items.extend((p, Fraction(scalar) * c) for p, c in f.terms)
    return step_function(T, items)


def combine_measures(parts: Sequence[Tuple[Fraction, AtomicMeasure]]) -> AtomicMeasure:
    if not parts:
        raise FunctionError("combine_measures needs at least one part")
    T = parts[0][1].tree
    items: List[Tuple[PointAddr, Fraction]] = []
    for scalar, mu in parts:
        if mu.tree is not T:
            raise FunctionError("mixed spaces in combine_measures")
        items.extend((p, Fraction(scalar) * c) for p, c in mu.atoms)
    return atomic_measure(T, items)


def evaluate(f: StepFunction, p: PointAddr) -> Fraction:
    T = f.tree
    T.validate_point(p)
    total = Fraction(0)
    for x, c in f.terms:
        if point_leq(T, x, p):
            total += c
    return total


def plateau_representatives(f: StepFunction) -> List[PointAddr]:
    """Finitely many points meeting every plateau of f: for any p, the value
    f(p) equals f at the largest generator below p (or at the root)."""
    return [ROOT] + [p for p, _c in f.terms]


def sup_norm(f: StepFunction) -> Fraction:
    return max((abs(evaluate(f, p)) for p in plateau_representatives(f)), default=Fraction(0))


def project(T: ScaffoldTree, A: AdmissibleSet, f: StepFunction) -> StepFunction:
    """P_A f = f ∘ r_A, computed generator-wise: χ_{V_x}∘r_A = χ_{V_{x'}} with
    x' = min(A ∩ V_x), dropping generators whose wedge misses A."""
    items = []
    for x, c in f.terms:
        x2 = least_above(T, A, x)
        if x2 is not None:
            items.append((x2, c))
    result = step_function(T, items)
    # cross-check pointwise at plateau representatives of both functions
    for p in plateau_representatives(f) + plateau_representatives(result):
        if evaluate(result, p) != evaluate(f, retract(T, A, p)):
            raise FunctionError(
                f"internal consistency failure in project at {format_point(p)}"
            )
    return result


def adjoint(T: ScaffoldTree, A: AdmissibleSet, mu: AtomicMeasure) -> AtomicMeasure:
    """P_A^*(μ) = r_A(μ): push every atom through the retraction."""
    return atomic_measure(T, [(retract(T, A, p), c) for p, c in mu.atoms])


def pair(f: StepFunction, mu: AtomicMeasure) -> Fraction:
    if f.tree is not mu.tree:
        raise FunctionError("pairing across different spaces")
    return sum((c * evaluate(f, p) for p, c in mu.atoms), Fraction(0))


def in_induced_D(
    T: ScaffoldTree, mu: AtomicMeasure
) -> Tuple[bool, Optional[PointAddr]]:
    """μ ∈ D ⟺ every atom sits at a point of countable cofinality."""
    for p, _c in mu.atoms:
        if point_cofinality(T, p).is_uncountable:
            return False, p
    return True, None


# ---------------------------------------------------------------------------
# literals: "3*g(e1@1) - g(e1@w+1)" and "2*d(e1@w+5) - d(e1@3)"


def _parse_linear(T: ScaffoldTree, text: str, tag: str):
    items: List[Tuple[PointAddr, Fraction]] = []
    for sign, coeff, inner in _split_terms(text, tag):
        p = parse_point(T, inner)
        items.append((p, sign * coeff))
    return items


def _split_terms(text: str, tag: str):
    s = text.strip()
    if s in ("", "0"):
        return
    i, n = 0, len(s)
    sign = Fraction(1)
    while i < n:
        while i < n and s[i].isspace():
            i += 1
        if i < n and s[i] in "+-":
            sign = Fraction(1) if s[i] == "+" else Fraction(-1)
            i += 1
            continue
        j = i
        depth = 0
        while j < n and (depth > 0 or s[j] not in "+-"):
            if s[j] == "(":
                depth += 1
            elif s[j] == ")":
                depth -= 1
            j += 1
        chunk = s[i:j].strip()
        coeff = Fraction(1)
        if "*" in chunk.split("(", 1)[0]:
            head, chunk = chunk.split("*", 1)
            coeff = Fraction(head.strip())
            chunk = chunk.strip()
        if not (chunk.startswith(tag + "(") and chunk.endswith(")")):
            raise FunctionError(f"bad {tag}-term {chunk!r}")
        yield sign, coeff, chunk[len(tag) + 1 : -1]
        sign = Fraction(1)
        i = j


def parse_function(T: ScaffoldTree, text: str) -> StepFunction:
    return step_function(T, _parse_linear(T, text, "g"))


def parse_measure(T: ScaffoldTree, text: str) -> AtomicMeasure:
    return atomic_measure(T, _parse_linear(T, text, "d"))


def _fmt_terms(terms, tag: str) -> str:
    if not terms:
        return "0"
    parts = []
    for i, (p, c) in enumerate(terms):
        mag = abs(c)
        body = f"{tag}({format_point(p)})" if mag == 1 else f"{mag}*{tag}({format_point(p)})"
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def format_function(f: StepFunction) -> str:
    return _fmt_terms(f.terms, "g")


def format_measure(mu: AtomicMeasure) -> str:
    return _fmt_terms(mu.atoms, "d")
