"""
Sparse multivariate polynomials over the rationals.

A polynomial is a map from exponent tuples to nonzero ``Fraction``
coefficients.  Values are treated as immutable once built.  Monomials are
ordered graded-lexicographically with variables in their declared order;
``grlex_key`` is the sort key used everywhere a deterministic choice is made.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from functools import reduce
from typing import Iterable, Mapping, Optional, Sequence, Tuple, Union

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


class DimensionError(ValueError):
    """Operands live in spaces with different numbers of variables."""


def grlex_key(exp: Exponent):
    return (sum(exp), exp)


def monomials_of_degree(nvars: int, degree: int):
    """All exponent tuples of total degree ``degree``, grlex ascending."""
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for k in range(left + 1):
            rec(prefix + (k,), left - k, slots - 1)

    rec((), degree, nvars)
    out.sort(key=grlex_key)
    return out


def monomials_up_to(nvars: int, degree: int):
    out = []
    for d in range(degree + 1):
        out.extend(monomials_of_degree(nvars, d))
    return out


@dataclass(frozen=True)
class Weights:
    """Positive integer weights, one per variable, with gcd 1."""

    values: Tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ValueError("weights must be nonempty")
        if any(v < 1 for v in vals):
            raise ValueError(f"weights must be positive: {vals}")
        if reduce(gcd, vals) != 1:
            raise ValueError(f"weights must be primitive: {vals}")

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def degree(self, exp: Exponent) -> int:
        return sum(w * e for w, e in zip(self.values, exp))

    def extend(self, extra: int, weight: int = 1) -> "Weights":
        return Weights(self.values + (weight,) * extra)


def _as_weights(w) -> Optional[Weights]:
    if w is None or isinstance(w, Weights):
        return w
    return Weights(tuple(w))


class Poly:
    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, terms: Optional[Mapping[Exponent, Scalar]] = None, nvars: Optional[int] = None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(int(e) for e in exp)
                if any(e < 0 for e in exp):
                    raise ValueError(f"negative exponent {exp}")
                c = Fraction(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
        if nvars is None:
            if not terms:
                raise ValueError("nvars is required for the zero polynomial")
            nvars = len(next(iter(terms)))
        for exp in clean:
            if len(exp) != nvars:
                raise DimensionError(f"exponent {exp} does not have {nvars} entries")
        self.terms = clean
        self.nvars = nvars
        self._hash = None

    @classmethod
    def _raw(cls, terms, nvars):
        # caller guarantees normalized terms
        p = cls.__new__(cls)
        p.terms = terms
        p.nvars = nvars
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls._raw({}, nvars)

    @classmethod
    def const(cls, c: Scalar, nvars: int) -> "Poly":
        c = Fraction(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def var(cls, i: int, nvars: int) -> "Poly":
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw({tuple(exp): Fraction(1)}, nvars)

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: Scalar = 1) -> "Poly":
        exp = tuple(exp)
        return cls({exp: coeff}, len(exp))

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def min_degree(self) -> int:
        """Order of vanishing at the origin; -1 for zero."""
        return min((sum(e) for e in self.terms), default=-1)

    def coeff(self, exp: Exponent) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coeff((0,) * self.nvars)

    def linear_part(self):
        """Coefficients of x_1..x_m in the linear part."""
        out = []
        for i in range(self.nvars):
            exp = [0] * self.nvars
            exp[i] = 1
            out.append(self.coeff(tuple(exp)))
        return out

    def sorted_terms(self, descending=True):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=descending)

    def leading_exponent(self) -> Exponent:
        return max(self.terms, key=grlex_key)

    # ring operations

    def _check(self, other: "Poly"):
        if self.nvars != other.nvars:
            raise DimensionError(f"{self.nvars} vs {other.nvars} variables")

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            v = terms.get(exp, 0) + c
            if v:
                terms[exp] = v
            else:
                terms.pop(exp, None)
        return Poly._raw(terms, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly._raw({e: v * c for e, v in self.terms.items()}, self.nvars)

    def mul(self, other: "Poly", trunc: Optional[int] = None) -> "Poly":
        """Product, optionally dropping monomials of total degree > trunc."""
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                if trunc is not None and sum(exp) > trunc:
                    continue
                v = terms.get(exp, 0) + c1 * c2
                if v:
                    terms[exp] = v
                else:
                    del terms[exp]
        return Poly._raw(terms, self.nvars)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Poly):
            return self.mul(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def pow(self, k: int, trunc: Optional[int] = None) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result.mul(base, trunc)
            k >>= 1
            if k:
                base = base.mul(base, trunc)
        return result

    def __pow__(self, k: int):
        return self.pow(k)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.nvars)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # calculus and substitution

    def diff(self, i: int) -> "Poly":
        terms = {}
        for exp, c in self.terms.items():
            if exp[i]:
                new = exp[:i] + (exp[i] - 1,) + exp[i + 1:]
                terms[new] = c * exp[i]
        return Poly._raw(terms, self.nvars)

    def substitute(self, images: Sequence["Poly"], trunc: Optional[int] = None) -> "Poly":
        """Compose with ``x_i -> images[i]``; images share a common variable count."""
        if len(images) != self.nvars:
            raise DimensionError(f"need {self.nvars} images, got {len(images)}")
        if not images:
            raise DimensionError("cannot substitute into a polynomial in zero variables")
        target = images[0].nvars
        for img in images:
            if img.nvars != target:
                raise DimensionError("substitution images disagree on variable count")
        powers = [dict() for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                if k == 0:
                    cache[k] = Poly.const(1, target)
                else:
                    cache[k] = power(i, k - 1).mul(images[i], trunc)
            return cache[k]

        out = Poly.zero(target)
        for exp, c in self.terms.items():
            term = Poly.const(c, target)
            for i, e in enumerate(exp):
                if e:
                    term = term.mul(power(i, e), trunc)
                    if term.is_zero():
                        break
            out = out + term
        return out

    def extend(self, extra: int) -> "Poly":
        """Same polynomial viewed in ``nvars + extra`` variables (new ones last)."""
        pad = (0,) * extra
        return Poly._raw({e + pad: c for e, c in self.terms.items()}, self.nvars + extra)

    def permute(self, order: Sequence[int]) -> "Poly":
        """Reorder variables: new variable j is old variable ``order[j]``."""
        return Poly._raw({tuple(e[k] for k in order): c for e, c in self.terms.items()}, self.nvars)

    def homogeneous_parts(self, w=None):
        """Split into (weighted) homogeneous pieces, keyed by degree."""
        w = _as_weights(w)
        parts = {}
        for exp, c in self.terms.items():
            d = w.degree(exp) if w is not None else sum(exp)
            parts.setdefault(d, {})[exp] = c
        return {d: Poly._raw(t, self.nvars) for d, t in sorted(parts.items())}

    def to_str(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        pieces = []
        for exp, c in self.sorted_terms(descending=True):
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(exp) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Poly({self.to_str()})"


def quasi_degree(f: Poly, w) -> Optional[int]:
    """Weighted degree shared by every monomial of ``f``.

    Returns None when ``f`` is zero or its monomials disagree; use
    ``f.is_zero()`` to tell those apart.
    """
    w = _as_weights(w)
    if len(w) != f.nvars:
        raise DimensionError(f"{len(w)} weights for {f.nvars} variables")
    degrees = {w.degree(e) for e in f.terms}
    if len(degrees) != 1:
        return None
    return degrees.pop()


def truncate(f: Poly, d: int, w=None) -> Poly:
    """Drop monomials of (weighted, when ``w`` is given) degree above ``d``."""
    w = _as_weights(w)
    if w is not None and len(w) != f.nvars:
        raise DimensionError(f"{len(w)} weights for {f.nvars} variables")
    deg = w.degree if w is not None else sum
    return Poly._raw({e: c for e, c in f.terms.items() if deg(e) <= d}, f.nvars)


def variables(nvars: int):
    return [Poly.var(i, nvars) for i in range(nvars)]


def poly_sum(items: Iterable[Poly], nvars: int) -> Poly:
    out = Poly.zero(nvars)
    for p in items:
        out = out + p
    return out
