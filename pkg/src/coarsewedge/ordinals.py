"""Exact arithmetic for ordinals in Cantor normal form over the atoms w, w1, w2.

An ordinal is a finite sum  w^e1*c1 + w^e2*c2 + ...  with strictly decreasing
exponents and positive integer coefficients.  The uncountable atoms w1 and w2
are represented as powers of the distinguished exponent markers Omega1/Omega2,
which sit above every exponent built from countable material.  This covers
everything below w2*w and a little beyond, which is all the constructions here
ever need; there is no general multiplication or exponentiation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Tuple, Union

MAX_COEFF = 10**18


class OrdinalError(ValueError):
    pass


class OrdinalParseError(OrdinalError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class OrdinalOverflowError(OrdinalError):
    pass


class _Marker:
    """Exponent marker Omega1 or Omega2; only ever appears in exponent slots."""

    __slots__ = ("level",)

    def __init__(self, level: int):
        self.level = level

    def __repr__(self):
        return f"Omega{self.level}"

    def __deepcopy__(self, memo):
        return self


OMEGA1_EXP = _Marker(1)
OMEGA2_EXP = _Marker(2)

Exp = Union[_Marker, "Ord"]


@dataclass(frozen=True)
class Ord:
    """Ordinal in normal form; the empty term tuple is 0."""

    terms: Tuple[Tuple[Exp, int], ...] = ()

    def __bool__(self) -> bool:
        return bool(self.terms)

    # Rich comparisons delegate to compare(); Ords are totally ordered.
    def __lt__(self, other: "Ord") -> bool:
        return compare(self, other) < 0

    def __le__(self, other: "Ord") -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other: "Ord") -> bool:
        return compare(self, other) > 0

    def __ge__(self, other: "Ord") -> bool:
        return compare(self, other) >= 0

    def __repr__(self):
        return f"Ord({format_ordinal(self)!r})"

    def __str__(self):
        return format_ordinal(self)


ZERO = Ord()
ONE = Ord(((ZERO, 1),))
OMEGA = Ord(((ONE, 1),))
OMEGA1 = Ord(((OMEGA1_EXP, 1),))
OMEGA2 = Ord(((OMEGA2_EXP, 1),))


class CofClass(Enum):
    Zero = "Zero"
    One = "One"
    Omega = "Omega"
    Omega1 = "Omega1"
    Omega2 = "Omega2"

    @property
    def is_uncountable(self) -> bool:
        return self in (CofClass.Omega1, CofClass.Omega2)


@dataclass(frozen=True)
class CardClass:
    """Cardinality class: Finite(n) or one of the three alephs."""

    kind: str  # "finite" | "aleph0" | "aleph1" | "aleph2"
    n: int = 0

    _RANK = {"finite": 0, "aleph0": 1, "aleph1": 2, "aleph2": 3}

    @staticmethod
    def finite(n: int) -> "CardClass":
        return CardClass("finite", n)

    def _key(self):
        return (self._RANK[self.kind], self.n)

    def __lt__(self, other: "CardClass") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "CardClass") -> bool:
        return self._key() <= other._key()

    @property
    def is_countable(self) -> bool:
        return self.kind in ("finite", "aleph0")

    def __str__(self):
        return str(self.n) if self.kind == "finite" else self.kind

    def __add__(self, other: "CardClass") -> "CardClass":
        if self.kind == "finite" and other.kind == "finite":
            return CardClass.finite(self.n + other.n)
        return max(self, other, key=CardClass._key)

    def __mul__(self, other: "CardClass") -> "CardClass":
        if self.kind == "finite" and other.kind == "finite":
            return CardClass.finite(self.n * other.n)
        if (self.kind == "finite" and self.n == 0) or (
            other.kind == "finite" and other.n == 0
        ):
            return CardClass.finite(0)
        return max(self, other, key=CardClass._key)


ALEPH0 = CardClass("aleph0")
ALEPH1 = CardClass("aleph1")
ALEPH2 = CardClass("aleph2")


def _cmp_exp(e: Exp, f: Exp) -> int:
    if isinstance(e, _Marker):
        if isinstance(f, _Marker):
            return (e.level > f.level) - (e.level < f.level)
        return compare(Ord(((e, 1),)), f)
    if isinstance(f, _Marker):
        return compare(e, Ord(((f, 1),)))
    return compare(e, f)


def compare(a: Ord, b: Ord) -> int:
    """-1/0/1 per the ordinal order; consistent with normal-form uniqueness."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        k = _cmp_exp(ea, eb)
        if k:
            return k
        if ca != cb:
            return (ca > cb) - (ca < cb)
    la, lb = len(a.terms), len(b.terms)
    return (la > lb) - (la < lb)


def from_int(n: int) -> Ord:
    if n < 0:
        raise OrdinalError("ordinals are nonnegative")
    if n > MAX_COEFF:
        raise OrdinalOverflowError(f"coefficient {n} exceeds the configured width")
    return Ord(((ZERO, n),)) if n else ZERO


def to_int(a: Ord) -> Optional[int]:
    """The integer value if a is finite, else None."""
    if not a.terms:
        return 0
    if len(a.terms) == 1 and a.terms[0][0] == ZERO:
        return a.terms[0][1]
    return None


def _check_coeff(c: int) -> int:
    if c > MAX_COEFF:
        raise OrdinalOverflowError(f"coefficient {c} exceeds the configured width")
    return c


def w_pow(e: Exp) -> Ord:
    """w^e, normalizing exponents that are exactly w1 or w2 to their markers."""
    if isinstance(e, Ord):
        if e == OMEGA1:
            e = OMEGA1_EXP
        elif e == OMEGA2:
            e = OMEGA2_EXP
    return Ord(((e, 1),))


def mul_nat(a: Ord, n: int) -> Ord:
    """a*n for a natural n and single-term a (all the grammar allows)."""
    if n == 0 or not a.terms:
        return ZERO
    if len(a.terms) != 1:
        raise OrdinalError("only single-term ordinals can be scaled")
    e, c = a.terms[0]
    return Ord(((e, _check_coeff(c * n)),))


def add(a: Ord, b: Ord) -> Ord:
    if not b.terms:
        return a
    if not a.terms:
        return b
    eb = b.terms[0][0]
    keep = []
    merge = 0
    for e, c in a.terms:
        k = _cmp_exp(e, eb)
        if k > 0:
            keep.append((e, c))
        elif k == 0:
            merge = c
            break
        else:
            break
    first = (eb, _check_coeff(merge + b.terms[0][1]))
    return Ord(tuple(keep) + (first,) + b.terms[1:])


def successor(a: Ord) -> Ord:
    return add(a, ONE)


def predecessor(a: Ord) -> Optional[Ord]:
    if not a.terms:
        return None
    e, c = a.terms[-1]
    if e != ZERO:
        return None
    if c == 1:
        return Ord(a.terms[:-1])
    return Ord(a.terms[:-1] + ((e, c - 1),))


def is_limit(a: Ord) -> bool:
    return bool(a.terms) and a.terms[-1][0] != ZERO


def is_successor(a: Ord) -> bool:
    return bool(a.terms) and a.terms[-1][0] == ZERO


def cofinality(a: Ord) -> CofClass:
    if not a.terms:
        return CofClass.Zero
    e, _c = a.terms[-1]
    if isinstance(e, _Marker):
        return CofClass.Omega1 if e.level == 1 else CofClass.Omega2
    if e == ZERO:
        return CofClass.One
    # cf(w^e) for an Ord exponent e >= 1
    if is_successor(e):
        return CofClass.Omega
    return cofinality(e)


def cardinality_class(a: Ord) -> CardClass:
    n = to_int(a)
    if n is not None:
        return CardClass.finite(n)
    if a < OMEGA1:
        return ALEPH0
    if a < OMEGA2:
        return ALEPH1
    return ALEPH2


def subtract(a: Ord, b: Ord) -> Ord:
    """The unique c with b + c = a; requires b <= a."""
    if compare(b, a) > 0:
        raise OrdinalError(f"cannot subtract {b} from smaller {a}")
    for i, (eb, cb) in enumerate(b.terms):
        ea, ca = a.terms[i]
        k = _cmp_exp(ea, eb)
        if k > 0:
            return Ord(a.terms[i:])
        if k == 0 and ca > cb:
            return Ord(((ea, ca - cb),) + a.terms[i + 1 :])
        # equal term: continue
    return Ord(a.terms[len(b.terms) :])


def fundamental_sequence(a: Ord, n: int) -> Ord:
    """Wainer-style fundamental sequence; requires cofinality(a) == Omega."""
    if cofinality(a) != CofClass.Omega:
        raise OrdinalError(f"{a} is not a limit of countable cofinality")
    head = a.terms[:-1]
    e, c = a.terms[-1]
    if c > 1:
        head = head + ((e, c - 1),)
    prefix = Ord(head)
    # fundamental sequence of w^e
    assert isinstance(e, Ord)
    if is_successor(e):
        d = predecessor(e)
        step = mul_nat(w_pow(d), n) if d != ZERO else from_int(n)
    else:
        step = w_pow(fundamental_sequence(e, n))
        if n == 0:
            step = ZERO  # w^fs(e,0) may not vanish; force monotone base case
    return add(prefix, step)


# ---------------------------------------------------------------------------
# parsing / printing


def _tokenize(text: str) -> Iterator[Tuple[str, str, int]]:
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+*^()":
            yield (ch, ch, i)
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            yield ("nat", text[i:j], i)
            i = j
        elif ch == "w":
            if i + 1 < n and text[i + 1] in "12" and not (
                i + 2 < n and text[i + 2].isdigit()
            ):
                yield ("atom", text[i : i + 2], i)
                i += 2
            else:
                yield ("atom", "w", i)
                i += 1
        else:
            raise OrdinalParseError(f"unexpected character {ch!r}", i)
    yield ("end", "", n)


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(_tokenize(text))
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise OrdinalParseError(f"expected {kind}, found {tok[1]!r}", tok[2])
        self.pos += 1
        return tok

    def parse_expr(self) -> Ord:
        value = self.parse_term()
        while self.peek()[0] == "+":
            self.take()
            value = add(value, self.parse_term())
        return value

    def parse_term(self) -> Ord:
        kind, text, pos = self.peek()
        if kind == "nat":
            self.take()
            return from_int(int(text))
        atom = self.parse_atom()
        if self.peek()[0] == "*":
            self.take()
            kind, text, pos = self.take("nat")
            return mul_nat(atom, int(text))
        return atom

    def parse_atom(self) -> Ord:
        kind, text, pos = self.take()
        if kind != "atom":
            raise OrdinalParseError(f"expected an atom, found {text!r}", pos)
        if text == "w1":
            return OMEGA1
        if text == "w2":
            return OMEGA2
        if self.peek()[0] != "^":
            return OMEGA
        self.take("^")
        kind, text, pos = self.peek()
        if kind == "(":
            self.take()
            exponent = self.parse_expr()
            self.take(")")
        elif kind == "nat":
            self.take()
            exponent = from_int(int(text))
        else:
            exponent = self.parse_atom()
        return w_pow(exponent)


def parse_ordinal(text: str) -> Ord:
    parser = _Parser(text)
    value = parser.parse_expr()
    parser.take("end")
    return value


def _format_exp(e: Ord) -> str:
    text = format_ordinal(e)
    if text in ("w", "w1", "w2") or text.isdigit():
        return text
    return f"({text})"


def format_ordinal(a: Ord) -> str:
    if not a.terms:
        return "0"
    parts = []
    for e, c in a.terms:
        if isinstance(e, _Marker):
            base = f"w{e.level}"
        elif e == ZERO:
            parts.append(str(c))
            continue
        elif e == ONE:
            base = "w"
        else:
            base = "w^" + _format_exp(e)
        parts.append(base if c == 1 else f"{base}*{c}")
    return " + ".join(parts)
