"""Small graded Chow rings with exact rational coefficients.

A :class:`ChowPresentation` is a finite graded basis together with
structure constants; :class:`CycleClass` is a coefficient vector over that
basis.  Three presentations are built in:

* ``multiprojective((n1, ..., nr))`` -- ``Q[h1..hr]/(hi^(ni+1))``, the ring of
  a product of projective spaces;
* ``hirzebruch(e)`` -- basis ``1, C0, F, pt`` with ``C0^2 = -e pt``,
  ``C0 F = pt`` and ``F^2 = 0``;
* ``table(...)`` -- anything else, given by explicit structure constants,
  checked for grading, commutativity and associativity on construction.

Integration returns the coefficient sum of the top-codimension part,
multiplied by the presentation's ``integral_scale`` (1 unless the ring models
a finite cover, see :meth:`ChowPresentation.covering`).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .exactmath import RationalLike, as_rational, format_rational


class PresentationMismatch(ValueError):
    """Classes from different Chow presentations were combined."""


class InvalidPresentation(ValueError):
    """Structure constants failed the grading/commutativity/associativity checks."""


_Product = dict  # (i, j) -> tuple[(k, coeff), ...]


@dataclass(frozen=True)
class ChowPresentation:
    kind: str
    dim: int
    basis: tuple[str, ...]
    codims: tuple[int, ...]
    point: str
    params: tuple = ()
    integral_scale: Fraction = Fraction(1)
    _products: _Product = field(default_factory=dict, compare=False, repr=False)
    _index: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(self.basis)})

    def __hash__(self) -> int:
        return hash((self.kind, self.dim, self.basis, self.codims, self.params, self.integral_scale))

    # -- construction -------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.basis)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            alias = self._parse_alias(name)
            if alias is None:
                raise KeyError(f"unknown basis element {name!r} in {self.describe()}") from None
            return alias

    def _parse_alias(self, name: str) -> int | None:
        if self.kind != "multiproj":
            return None
        exps = _parse_monomial(name, len(self.params))
        if exps is None:
            return None
        return self._index.get(_monomial_name(exps))

    def describe(self) -> str:
        if self.kind == "multiproj":
            label = " x ".join(f"P^{n}" for n in self.params)
        elif self.kind == "hirzebruch":
            label = f"Hirzebruch F_{self.params[0]}"
        else:
            label = f"table ring of dimension {self.dim}"
        if self.integral_scale != 1:
            label += f" (integrals x{format_rational(self.integral_scale)})"
        return label

    def zero(self) -> "CycleClass":
        return CycleClass(self, (Fraction(0),) * self.size)

    def unit(self) -> "CycleClass":
        return self.basis_class(self.basis[self.codims.index(0)])

    def basis_class(self, name: str, coeff: RationalLike = 1) -> "CycleClass":
        vec = [Fraction(0)] * self.size
        vec[self.index(name)] = as_rational(coeff)
        return CycleClass(self, tuple(vec))

    def from_terms(self, terms: Mapping[str, RationalLike]) -> "CycleClass":
        vec = [Fraction(0)] * self.size
        for name, c in terms.items():
            vec[self.index(name)] += as_rational(c)
        return CycleClass(self, tuple(vec))

    def point_class(self) -> "CycleClass":
        return self.basis_class(self.point)

    # -- multiprojective helpers ----------------------------------------

    def hyperplane(self, i: int) -> "CycleClass":
        """Pullback of the hyperplane class of the ``i``-th factor (1-based)."""
        if self.kind != "multiproj":
            raise TypeError("hyperplane classes exist only on multiprojective presentations")
        exps = [0] * len(self.params)
        exps[i - 1] = 1
        return self.basis_class(_monomial_name(exps))

    def line_bundle(self, degrees: Iterable[int]) -> "CycleClass":
        """First Chern class of ``O(a1, ..., ar)``."""
        degrees = list(degrees)
        if self.kind != "multiproj" or len(degrees) != len(self.params):
            raise ValueError(f"need {len(self.params)} degrees on {self.describe()}")
        out = self.zero()
        for i, a in enumerate(degrees, start=1):
            out = out + self.hyperplane(i) * a
        return out

    # -- multiplication ---------------------------------------------------

    def product_of_basis(self, i: int, j: int) -> tuple:
        if i > j:
            i, j = j, i
        return self._products.get((i, j), ())

    def structure_constants(self) -> dict[tuple[str, str], dict[str, Fraction]]:
        """Nonzero products of non-unit basis pairs, keyed by name."""
        unit = self.codims.index(0)
        out = {}
        for (i, j), terms in sorted(self._products.items()):
            if unit in (i, j) or not terms:
                continue
            out[(self.basis[i], self.basis[j])] = {self.basis[k]: c for k, c in terms}
        return out

    def with_structure_constant(self, a: str, b: str, target: str, value: RationalLike) -> "ChowPresentation":
        """Copy of this ring as a table with one structure constant overwritten.

        No validation is done: this exists to feed deliberately corrupted data
        into the verification harness.
        """
        consts = {k: dict(v) for k, v in self.structure_constants().items()}
        i, j = sorted((self.index(a), self.index(b)))
        key = (self.basis[i], self.basis[j])
        consts.setdefault(key, {})[self.basis[self.index(target)]] = as_rational(value)
        return table(
            self.dim,
            list(zip(self.basis, self.codims)),
            consts,
            self.point,
            validate=False,
            integral_scale=self.integral_scale,
        )

    def covering(self, degree: int) -> "ChowPresentation":
        """The same ring with every integral multiplied by ``degree``.

        Pulling classes back along a finite flat map of degree ``degree``
        preserves all products and multiplies degrees of zero-cycles by it.
        """
        if degree < 1:
            raise ValueError("covering degree must be positive")
        return _rebuild(self, integral_scale=self.integral_scale * degree)


def _rebuild(pres: ChowPresentation, **changes) -> ChowPresentation:
    kwargs = dict(
        kind=pres.kind,
        dim=pres.dim,
        basis=pres.basis,
        codims=pres.codims,
        point=pres.point,
        params=pres.params,
        integral_scale=pres.integral_scale,
        _products=pres._products,
    )
    kwargs.update(changes)
    return ChowPresentation(**kwargs)


def _monomial_name(exps: Iterable[int]) -> str:
    return "*".join(f"h{i}^{a}" for i, a in enumerate(exps, start=1))


_FACTOR = re.compile(r"^h(\d+)(?:\^(\d+))?$")


def _parse_monomial(name: str, nvars: int) -> list[int] | None:
    exps = [0] * nvars
    text = name.replace(" ", "")
    if text == "1":
        return exps
    for piece in text.split("*"):
        m = _FACTOR.match(piece)
        if not m:
            return None
        i = int(m.group(1))
        if not 1 <= i <= nvars:
            return None
        exps[i - 1] += int(m.group(2)) if m.group(2) is not None else 1
    return exps


def multiprojective(factors: Iterable[int]) -> ChowPresentation:
    """Chow ring of ``P^n1 x ... x P^nr`` (truncated polynomial ring)."""
    factors = tuple(int(n) for n in factors)
    if not factors or any(n < 1 for n in factors):
        raise ValueError("factor dimensions must be positive integers")
    monos = sorted(
        itertools.product(*(range(n + 1) for n in factors)),
        key=lambda e: (sum(e), tuple(-a for a in e)),
    )
    index = {e: i for i, e in enumerate(monos)}
    products: _Product = {}
    for i, a in enumerate(monos):
        for j in range(i, len(monos)):
            s = tuple(x + y for x, y in zip(a, monos[j]))
            if all(x <= n for x, n in zip(s, factors)):
                products[(i, j)] = ((index[s], Fraction(1)),)
    return ChowPresentation(
        kind="multiproj",
        dim=sum(factors),
        basis=tuple(_monomial_name(e) for e in monos),
        codims=tuple(sum(e) for e in monos),
        point=_monomial_name(factors),
        params=factors,
        _products=products,
    )


def hirzebruch(e: int) -> ChowPresentation:
    """Chow ring of the Hirzebruch surface ``F_e``: basis ``1, C0, F, pt``."""
    e = int(e)
    if e < 0:
        raise ValueError("Hirzebruch index e must be >= 0")
    one, c0, f, pt = range(4)
    products: _Product = {
        (one, one): ((one, Fraction(1)),),
        (one, c0): ((c0, Fraction(1)),),
        (one, f): ((f, Fraction(1)),),
        (one, pt): ((pt, Fraction(1)),),
        (c0, c0): ((pt, Fraction(-e)),) if e else (),
        (c0, f): ((pt, Fraction(1)),),
    }
    return ChowPresentation(
        kind="hirzebruch",
        dim=2,
        basis=("1", "C0", "F", "pt"),
        codims=(0, 1, 1, 2),
        point="pt",
        params=(e,),
        _products=products,
    )


def table(
    dim: int,
    basis: Iterable[tuple[str, int]],
    products: Mapping[tuple[str, str], Mapping[str, RationalLike]],
    point: str,
    *,
    validate: bool = True,
    integral_scale: RationalLike = 1,
) -> ChowPresentation:
    """Ring given by explicit structure constants.

    ``basis`` lists ``(name, codim)`` pairs and must contain exactly one
    codimension-0 element, which acts as the unit.  ``products`` maps a pair of
    non-unit names to the expansion of their product; missing pairs multiply
    to zero, and a pair may be given in either order (both orders must agree
    if both appear).
    """
    basis = [(str(n), int(c)) for n, c in basis]
    names = tuple(n for n, _ in basis)
    codims = tuple(c for _, c in basis)
    if len(set(names)) != len(names):
        raise InvalidPresentation("duplicate basis names")
    if dim < 1:
        raise InvalidPresentation("dimension must be positive")
    if codims.count(0) != 1:
        raise InvalidPresentation("exactly one codimension-0 (unit) basis element is required")
    if any(not 0 <= c <= dim for c in codims):
        raise InvalidPresentation("basis codimensions must lie in 0..dim")
    if point not in names or codims[names.index(point)] != dim:
        raise InvalidPresentation(f"point class {point!r} must be a basis element of codimension {dim}")
    index = {n: i for i, n in enumerate(names)}
    unit = codims.index(0)

    table_: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (a, b), expansion in products.items():
        if a not in index or b not in index:
            raise InvalidPresentation(f"product {a}*{b} names an unknown basis element")
        i, j = sorted((index[a], index[b]))
        if unit in (i, j):
            raise InvalidPresentation("products with the unit are implicit and must not be given")
        vec = {}
        for name, c in expansion.items():
            if name not in index:
                raise InvalidPresentation(f"product {a}*{b} expands into unknown element {name!r}")
            c = as_rational(c)
            if c:
                vec[index[name]] = c
        if (i, j) in table_ and table_[(i, j)] != vec:
            raise InvalidPresentation(f"product {a}*{b} is not symmetric")
        table_[(i, j)] = vec

    packed: _Product = {}
    for i in range(len(names)):
        packed[tuple(sorted((unit, i)))] = ((i, Fraction(1)),)
    for key, vec in table_.items():
        packed[key] = tuple(sorted(vec.items()))

    pres = ChowPresentation(
        kind="table",
        dim=dim,
        basis=names,
        codims=codims,
        point=point,
        params=tuple(sorted((k, v) for k, v in packed.items())),
        integral_scale=as_rational(integral_scale),
        _products=packed,
    )
    if validate:
        check_presentation(pres)
    return pres


def check_presentation(pres: ChowPresentation) -> None:
    """Exhaustive grading and associativity check; raises InvalidPresentation."""
    n = pres.size
    for i in range(n):
        for j in range(i, n):
            target = pres.codims[i] + pres.codims[j]
            for k, c in pres.product_of_basis(i, j):
                if c and pres.codims[k] != target:
                    raise InvalidPresentation(
                        f"{pres.basis[i]}*{pres.basis[j]} leaves codimension {target}"
                    )
    elems = [pres.basis_class(b) for b in pres.basis]
    for a, b, c in itertools.product(range(n), repeat=3):
        if pres.codims[a] + pres.codims[b] + pres.codims[c] > pres.dim:
            continue
        if (elems[a] * elems[b]) * elems[c] != elems[a] * (elems[b] * elems[c]):
            raise InvalidPresentation(
                f"product is not associative on ({pres.basis[a]}, {pres.basis[b]}, {pres.basis[c]})"
            )


@dataclass(frozen=True)
class CycleClass:
    """Rational combination of basis elements of one presentation."""

    presentation: ChowPresentation
    coeffs: tuple[Fraction, ...]

    def _check(self, other: "CycleClass") -> None:
        if other.presentation is not self.presentation and other.presentation != self.presentation:
            raise PresentationMismatch(
                f"{self.presentation.describe()} vs {other.presentation.describe()}"
            )

    def __add__(self, other: "CycleClass") -> "CycleClass":
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        return CycleClass(self.presentation, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycleClass":
        return CycleClass(self.presentation, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "CycleClass") -> "CycleClass":
        return self + (-other)

    def __mul__(self, other) -> "CycleClass":
        if not isinstance(other, CycleClass):
            c = as_rational(other)
            return CycleClass(self.presentation, tuple(c * a for a in self.coeffs))
        self._check(other)
        pres = self.presentation
        out = [Fraction(0)] * pres.size
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                for k, c in pres.product_of_basis(i, j):
                    out[k] += a * b * c
        return CycleClass(pres, tuple(out))

    def __rmul__(self, other) -> "CycleClass":
        return self * other

    def __pow__(self, n: int) -> "CycleClass":
        return power(self, n)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def component(self, codim: int) -> "CycleClass":
        pres = self.presentation
        return CycleClass(
            pres, tuple(c if pres.codims[i] == codim else Fraction(0) for i, c in enumerate(self.coeffs))
        )

    def is_homogeneous(self, codim: int) -> bool:
        return all(not c or self.presentation.codims[i] == codim for i, c in enumerate(self.coeffs))

    def terms(self) -> dict[str, Fraction]:
        return {self.presentation.basis[i]: c for i, c in enumerate(self.coeffs) if c}

    def integrate(self) -> Fraction:
        return integrate(self)

    def rebase(self, presentation: ChowPresentation) -> "CycleClass":
        """Same coefficient vector viewed in another presentation with the same basis."""
        if presentation.basis != self.presentation.basis:
            raise PresentationMismatch("rebase needs identical bases")
        return CycleClass(presentation, self.coeffs)

    def __str__(self) -> str:
        terms = self.terms()
        if not terms:
            return "0"
        parts = []
        for name, c in terms.items():
            parts.append(name if c == 1 else f"{format_rational(c)}*{name}")
        return " + ".join(parts).replace("+ -", "- ")


def mul(a: CycleClass, b: CycleClass) -> CycleClass:
    return a * b


def power(c: CycleClass, n: int) -> CycleClass:
    if n < 0:
        raise ValueError("negative power of a cycle class")
    result = c.presentation.unit()
    base = c
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def integrate(c: CycleClass) -> Fraction:
    pres = c.presentation
    total = sum((x for i, x in enumerate(c.coeffs) if pres.codims[i] == pres.dim), Fraction(0))
    return total * pres.integral_scale
