"""Exact rational arithmetic, univariate polynomials over Q and sign decisions.

Rationals are plain :class:`fractions.Fraction` values.  Polynomials are
immutable :class:`UniPoly` objects with ascending coefficient tuples.  Root
isolation uses Sturm sequences of the square-free part, so every answer is
exact: no floating point is involved anywhere.

>>> p = UniPoly.from_ints([-3, 21, -33])
>>> p(Fraction(1, 3))
Fraction(1, 3)
>>> sturm_count(p, OpenInterval(Fraction(0), Fraction(1, 2)))
1
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

RationalLike = Union[int, Fraction, str]

# refinement width for root brackets, as a fraction of the scanned interval
_REFINE_DIVISOR = 1024


class ZeroPolynomial(ValueError):
    """Raised when an operation needs a nonzero polynomial."""


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected so that binary rounding never leaks in.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational string: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def format_rational(q: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


class UniPoly:
    """Univariate polynomial in ``eta`` with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``eta**i``; trailing zeros are
    stripped, so the zero polynomial has an empty tuple and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def from_ints(cls, coeffs: Iterable[int]) -> "UniPoly":
        return cls(Fraction(c) for c in coeffs)

    @classmethod
    def constant(cls, c: RationalLike) -> "UniPoly":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: RationalLike = 1) -> "UniPoly":
        return cls([0] * degree + [c])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == UniPoly.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    @staticmethod
    def _coerce(other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly.constant(other)

    def __add__(self, other) -> "UniPoly":
        other = self._coerce(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return UniPoly(self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self._coeffs)

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            c = as_rational(other)
            return UniPoly(c * a for a in self._coeffs)
        if not self._coeffs or not other._coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power")
        result = UniPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for shift in range(len(rem) - 1 - dq, -1, -1):
            c = rem[shift + dq] / lead
            quot[shift] = c
            if c:
                for j, b in enumerate(other._coeffs):
                    rem[shift + j] -= c * b
        return UniPoly(quot), UniPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self._coeffs) if i)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.leading)

    def scale_argument(self, factor: RationalLike) -> "UniPoly":
        """Return ``q`` with ``q(eta) = self(factor * eta)``."""
        factor = as_rational(factor)
        return UniPoly(c * factor**i for i, c in enumerate(self._coeffs))

    def __repr__(self) -> str:
        return f"UniPoly([{', '.join(format_rational(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self, var: str = "eta") -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = format_rational(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q (zero only when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    """``p / gcd(p, p')``, made monic; same distinct roots as ``p``."""
    if p.is_zero():
        raise ZeroPolynomial("square-free part of the zero polynomial")
    if p.degree == 0:
        return UniPoly.constant(1)
    return (p // poly_gcd(p, p.derivative())).monic()


@dataclass(frozen=True)
class OpenInterval:
    """The open interval ``(lo, hi)`` with rational ends."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rational(self.lo))
        object.__setattr__(self, "hi", as_rational(self.hi))
        if not self.lo < self.hi:
            raise ValueError(f"empty interval: ({self.lo}, {self.hi})")

    def __contains__(self, x) -> bool:
        return self.lo < as_rational(x) < self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    """Sturm chain ``p, p', -rem(...)...`` of the square-free part of ``p``."""
    q = squarefree_part(p)
    chain = [q, q.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    return chain[:-1]


def sign_variations(chain: Sequence[UniPoly], x: Fraction) -> int:
    signs = [s for s in (_sign(f(x)) for f in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _open_count(chain: Sequence[UniPoly], a: Fraction, b: Fraction) -> int:
    # V(a) - V(b) counts roots in (a, b] for a square-free head
    n = sign_variations(chain, a) - sign_variations(chain, b)
    if chain[0](b) == 0:
        n -= 1
    return n


def sturm_count(p: UniPoly, interval: OpenInterval) -> int:
    """Number of distinct real roots of ``p`` strictly inside ``interval``."""
    if p.is_zero():
        raise ZeroPolynomial("cannot count roots of the zero polynomial")
    return _open_count(sturm_sequence(p), interval.lo, interval.hi)


@dataclass(frozen=True)
class RootBracket:
    """Closed bracket ``[lo, hi]`` holding exactly one root; ``lo == hi`` means exact."""

    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi


@dataclass(frozen=True)
class Segment:
    """A root-free stretch of the scanned interval.

    ``[inner_lo, inner_hi]`` is a rational sub-bracket known to contain no
    root; ``sample`` lies strictly between the neighbouring roots.
    """

    inner_lo: Fraction
    inner_hi: Fraction
    sample: Fraction
    sign: int


@dataclass(frozen=True)
class SignScan:
    interval: OpenInterval
    roots: tuple[RootBracket, ...]
    segments: tuple[Segment, ...]

    def summary(self) -> dict:
        return {
            "interval": [format_rational(self.interval.lo), format_rational(self.interval.hi)],
            "roots_inside": len(self.roots),
            "root_brackets": [[format_rational(r.lo), format_rational(r.hi)] for r in self.roots],
            "segment_signs": [s.sign for s in self.segments],
        }


def isolate_roots(p: UniPoly, interval: OpenInterval) -> list[RootBracket]:
    """Isolate the distinct roots of ``p`` inside ``interval`` by Sturm bisection.

    Brackets are disjoint, sorted, have widths at most ``width / 1024`` and
    never have an endpoint on ``interval``'s ends or on another root.
    """
    chain = sturm_sequence(p)
    q = chain[0]
    lo, hi = interval.lo, interval.hi
    exact: list[Fraction] = []
    loose: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, _open_count(chain, lo, hi))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            loose.append((a, b))
            continue
        m = (a + b) / 2
        if q(m) == 0:
            exact.append(m)
        stack.append((a, m, _open_count(chain, a, m)))
        stack.append((m, b, _open_count(chain, m, b)))

    forbidden = {lo, hi, *exact}
    tol = interval.width / _REFINE_DIVISOR
    refined = []
    for a, b in loose:
        while b - a > tol or a in forbidden or b in forbidden:
            m = (a + b) / 2
            if q(m) == 0:
                a = b = m
                break
            if _open_count(chain, a, m) == 1:
                b = m
            else:
                a = m
        refined.append(RootBracket(a, b))
    brackets = refined + [RootBracket(r, r) for r in exact]
    brackets.sort(key=lambda r: r.lo)
    return brackets


def sign_scan(p: UniPoly, interval: OpenInterval) -> SignScan:
    """Sign of ``p`` on every root-free piece of ``interval``."""
    roots = isolate_roots(p, interval)
    # the open ends behave like exact roots: never sample them
    lefts = [interval.lo] + [r.hi for r in roots]
    rights = [r.lo for r in roots] + [interval.hi]
    left_exact = [True] + [r.exact for r in roots]
    right_exact = [r.exact for r in roots] + [True]
    segments = []
    for L, R, le, re in zip(lefts, rights, left_exact, right_exact):
        if L == R:
            # only reachable between two loose brackets; L is then no root
            assert not (le or re)
        sample = (L + R) / 2
        segments.append(Segment(L, R, sample, _sign(p(sample))))
    return SignScan(interval, tuple(roots), tuple(segments))


def exists_positive(p: UniPoly, interval: OpenInterval) -> Fraction | None:
    """A rational ``w`` in ``interval`` with ``p(w) > 0``, or None if there is none.

    Picks the midpoint of the widest positive root-free piece (leftmost on
    ties), so the answer is deterministic.
    """
    if p.is_zero():
        return None
    scan = sign_scan(p, interval)
    best = None
    for seg in scan.segments:
        if seg.sign > 0 and (best is None or seg.inner_hi - seg.inner_lo > best.inner_hi - best.inner_lo):
            best = seg
    if best is None:
        return None
    assert p(best.sample) > 0
    return best.sample
