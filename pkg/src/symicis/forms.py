"""
Exterior calculus with polynomial coefficients.

Indices are 0-based internally.  A p-form stores one ``Poly`` per strictly
increasing index tuple; zero coefficients are never stored.
"""

from fractions import Fraction
from itertools import combinations
from typing import Dict, Optional, Sequence, Tuple

from .poly import DimensionError, Poly, _as_weights, quasi_degree, truncate


def _sort_sign(indices):
    """Sign of the permutation sorting ``indices``; 0 on a repeat."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    # insertion sort counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(idx)


class DiffForm:
    __slots__ = ("degree", "nvars", "components", "_hash")

    def __init__(self, degree: int, nvars: int, components: Optional[Dict[Tuple[int, ...], Poly]] = None):
        # degree above nvars is allowed; such a form is necessarily zero
        if degree < 0:
            raise ValueError(f"negative form degree {degree}")
        comps = {}
        for idx, coeff in (components or {}).items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise ValueError(f"index tuple {idx} does not have length {degree}")
            if any(i < 0 or i >= nvars for i in idx):
                raise ValueError(f"index out of range in {idx}")
            if coeff.nvars != nvars:
                raise DimensionError("coefficient lives in the wrong number of variables")
            sign, key = _sort_sign(idx)
            if not sign or coeff.is_zero():
                continue
            coeff = coeff if sign > 0 else -coeff
            total = comps[key] + coeff if key in comps else coeff
            if total.is_zero():
                comps.pop(key, None)
            else:
                comps[key] = total
        self.degree = degree
        self.nvars = nvars
        self.components = comps
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, degree: int, nvars: int) -> "DiffForm":
        return cls(degree, nvars)

    @classmethod
    def function(cls, f: Poly) -> "DiffForm":
        return cls(0, f.nvars, {(): f})

    @classmethod
    def basic(cls, indices: Sequence[int], nvars: int, coeff=None) -> "DiffForm":
        """``coeff * dx_{i1} ^ ... ^ dx_{ip}`` (indices may be unsorted)."""
        if coeff is None:
            coeff = Poly.const(1, nvars)
        elif not isinstance(coeff, Poly):
            coeff = Poly.const(coeff, nvars)
        return cls(len(indices), nvars, {tuple(indices): coeff})

    # inspection

    def is_zero(self) -> bool:
        return not self.components

    def __bool__(self):
        return bool(self.components)

    def coeff(self, idx) -> Poly:
        return self.components.get(tuple(idx), Poly.zero(self.nvars))

    def as_poly(self) -> Poly:
        if self.degree != 0:
            raise ValueError("only a 0-form is a function")
        return self.coeff(())

    def min_degree(self) -> int:
        """Order of vanishing at 0 over all coefficients; -1 for zero."""
        return min((c.min_degree() for c in self.components.values()), default=-1)

    def coeff_degree(self) -> int:
        return max((c.degree() for c in self.components.values()), default=-1)

    def __eq__(self, other):
        if not isinstance(other, DiffForm):
            return NotImplemented
        return (self.degree, self.nvars, self.components) == (other.degree, other.nvars, other.components)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, self.nvars, frozenset(self.components.items())))
        return self._hash

    # linear structure

    def _check(self, other: "DiffForm"):
        if self.nvars != other.nvars:
            raise DimensionError(f"{self.nvars} vs {other.nvars} variables")
        if self.degree != other.degree:
            raise ValueError(f"cannot add a {self.degree}-form and a {other.degree}-form")

    def __add__(self, other):
        if not isinstance(other, DiffForm):
            return NotImplemented
        self._check(other)
        comps = dict(self.components)
        for idx, c in other.components.items():
            comps[idx] = comps[idx] + c if idx in comps else c
        return DiffForm(self.degree, self.nvars, comps)

    def __neg__(self):
        return DiffForm(self.degree, self.nvars, {i: -c for i, c in self.components.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "DiffForm":
        if isinstance(c, Poly):
            return DiffForm(self.degree, self.nvars, {i: c * v for i, v in self.components.items()})
        return DiffForm(self.degree, self.nvars, {i: v.scale(c) for i, v in self.components.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def map_coeffs(self, fn) -> "DiffForm":
        return DiffForm(self.degree, self.nvars, {i: fn(c) for i, c in self.components.items()})

    def truncate(self, d: int, w=None) -> "DiffForm":
        return self.map_coeffs(lambda c: truncate(c, d, w))

    def extend(self, extra: int) -> "DiffForm":
        return DiffForm(self.degree, self.nvars + extra, {i: c.extend(extra) for i, c in self.components.items()})

    def to_str(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if not self.components:
            return "0"
        pieces = []
        for idx in sorted(self.components):
            coeff = self.components[idx]
            block = "^".join(f"d{names[i]}" for i in idx)
            if not block:
                pieces.append(coeff.to_str(names))
                continue
            if coeff == 1:
                pieces.append(block)
            elif coeff == -1:
                pieces.append(f"-{block}")
            elif len(coeff.terms) == 1:
                pieces.append(f"{coeff.to_str(names)}*{block}")
            else:
                pieces.append(f"({coeff.to_str(names)})*{block}")
        text = pieces[0]
        for p in pieces[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def __repr__(self):
        return f"DiffForm({self.to_str()})"


class VectorField:
    __slots__ = ("components", "nvars")

    def __init__(self, components: Sequence[Poly]):
        components = tuple(components)
        if not components:
            raise ValueError("a vector field needs at least one component")
        nvars = components[0].nvars
        if len(components) != nvars or any(c.nvars != nvars for c in components):
            raise DimensionError("vector field must have one component per variable")
        self.components = components
        self.nvars = nvars

    @classmethod
    def euler(cls, weights) -> "VectorField":
        w = _as_weights(weights)
        n = len(w)
        return cls([Poly.var(i, n).scale(w[i]) for i in range(n)])

    def __call__(self, f: Poly) -> Poly:
        """Derivative of a function along the field."""
        if f.nvars != self.nvars:
            raise DimensionError("field and function disagree on variable count")
        out = Poly.zero(self.nvars)
        for i, a in enumerate(self.components):
            if a:
                out = out + a * f.diff(i)
        return out

    def scale(self, c) -> "VectorField":
        if isinstance(c, Poly):
            return VectorField([c * a for a in self.components])
        return VectorField([a.scale(c) for a in self.components])

    def __add__(self, other):
        return VectorField([a + b for a, b in zip(self.components, other.components)])

    def __eq__(self, other):
        return isinstance(other, VectorField) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def __repr__(self):
        return "VectorField(" + ", ".join(c.to_str() for c in self.components) + ")"


class PolyMap:
    """Map-germ from ``source_vars`` variables to ``len(components)`` variables."""

    __slots__ = ("components", "source_vars")

    def __init__(self, components: Sequence[Poly], source_vars: Optional[int] = None):
        components = tuple(components)
        if source_vars is None:
            if not components:
                raise ValueError("source_vars required for a map with no components")
            source_vars = components[0].nvars
        for c in components:
            if c.nvars != source_vars:
                raise DimensionError("map components disagree on source dimension")
            if c.constant_term():
                raise ValueError("map-germ components must vanish at the origin")
        self.components = components
        self.source_vars = source_vars

    @property
    def target_vars(self):
        return len(self.components)

    @classmethod
    def identity(cls, n: int) -> "PolyMap":
        return cls([Poly.var(i, n) for i in range(n)], n)

    @classmethod
    def scaling(cls, weights, t) -> "PolyMap":
        """``x_i -> t^{w_i} x_i``."""
        w = _as_weights(weights)
        n = len(w)
        t = Fraction(t)
        return cls([Poly.var(i, n).scale(t ** w[i]) for i in range(n)], n)

    def compose(self, inner: "PolyMap", trunc: Optional[int] = None) -> "PolyMap":
        """``self o inner``."""
        if inner.target_vars != self.source_vars:
            raise DimensionError("cannot compose: dimensions do not match")
        return PolyMap([c.substitute(inner.components, trunc) for c in self.components], inner.source_vars)

    def __repr__(self):
        return "PolyMap(" + ", ".join(c.to_str() for c in self.components) + ")"


# operations


def exterior_derivative(omega: DiffForm) -> DiffForm:
    comps = {}
    for idx, coeff in omega.components.items():
        for i in range(omega.nvars):
            if i in idx:
                continue
            der = coeff.diff(i)
            if der.is_zero():
                continue
            sign, key = _sort_sign((i,) + idx)
            term = der if sign > 0 else -der
            comps[key] = comps[key] + term if key in comps else term
    return DiffForm(omega.degree + 1, omega.nvars, comps)


d = exterior_derivative


def wedge(alpha: DiffForm, beta: DiffForm) -> DiffForm:
    if alpha.nvars != beta.nvars:
        raise DimensionError(f"{alpha.nvars} vs {beta.nvars} variables")
    deg = alpha.degree + beta.degree
    comps = {}
    for i1, c1 in alpha.components.items():
        for i2, c2 in beta.components.items():
            sign, key = _sort_sign(i1 + i2)
            if not sign:
                continue
            term = c1 * c2
            if sign < 0:
                term = -term
            comps[key] = comps[key] + term if key in comps else term
    return DiffForm(deg, alpha.nvars, comps)


def interior_product(X: VectorField, omega: DiffForm) -> DiffForm:
    if omega.degree == 0:
        raise ValueError("interior product of a 0-form is undefined")
    if X.nvars != omega.nvars:
        raise DimensionError("field and form disagree on variable count")
    comps = {}
    for idx, coeff in omega.components.items():
        for k, i in enumerate(idx):
            a = X.components[i]
            if a.is_zero():
                continue
            term = a * coeff
            if k % 2:
                term = -term
            key = idx[:k] + idx[k + 1:]
            comps[key] = comps[key] + term if key in comps else term
    return DiffForm(omega.degree - 1, omega.nvars, comps)


def lie_derivative(X: VectorField, omega: DiffForm) -> DiffForm:
    """Cartan's formula ``L_X = d i_X + i_X d``."""
    out = interior_product(X, exterior_derivative(omega))
    if omega.degree > 0:
        out = out + exterior_derivative(interior_product(X, omega))
    return out


def pullback(phi: PolyMap, omega: DiffForm, trunc: Optional[int]) -> DiffForm:
    """``phi^* omega`` with coefficients truncated at total degree ``trunc``.

    ``trunc=None`` computes the exact pullback.
    """
    if phi.target_vars != omega.nvars:
        raise DimensionError(f"map lands in {phi.target_vars} variables, form lives in {omega.nvars}")
    n = phi.source_vars
    diffs = [exterior_derivative(DiffForm.function(c)) for c in phi.components]
    out = DiffForm.zero(omega.degree, n)
    for idx, coeff in omega.components.items():
        term = DiffForm.function(coeff.substitute(phi.components, trunc))
        for i in idx:
            if term.is_zero():
                break
            term = wedge(term, diffs[i])
            if trunc is not None:
                term = term.truncate(trunc)
        if not term.is_zero():
            out = out + term
    return out if trunc is None else out.truncate(trunc)


def form_quasi_degree(omega: DiffForm, weights) -> Optional[int]:
    """Coefficient quasi-degree plus the weights of the differentials."""
    w = _as_weights(weights)
    degrees = set()
    for idx, coeff in omega.components.items():
        qd = quasi_degree(coeff, w)
        if qd is None:
            return None
        degrees.add(qd + sum(w[i] for i in idx))
    if len(degrees) != 1:
        return None
    return degrees.pop()


def quasi_homogeneous_parts(omega: DiffForm, weights) -> Dict[int, DiffForm]:
    """Split a form into pieces of fixed quasi-degree."""
    w = _as_weights(weights)
    parts: Dict[int, dict] = {}
    for idx, coeff in omega.components.items():
        shift = sum(w[i] for i in idx)
        for deg, piece in coeff.homogeneous_parts(w).items():
            parts.setdefault(deg + shift, {})[idx] = piece
    return {k: DiffForm(omega.degree, omega.nvars, v) for k, v in sorted(parts.items())}


def standard_symplectic(n: int, order: str = "pq") -> DiffForm:
    """``sum dp_i ^ dq_i``; variables ordered p1..pn, q1..qn (``"pq"``) or
    p1, q1, p2, q2, ... (``"interleaved"``)."""
    m = 2 * n
    comps = {}
    for i in range(n):
        if order == "pq":
            comps[(i, n + i)] = Poly.const(1, m)
        else:
            comps[(2 * i, 2 * i + 1)] = Poly.const(1, m)
    return DiffForm(2, m, comps)


def constant_matrix(omega: DiffForm):
    """Antisymmetric matrix of the value at 0 of a 2-form."""
    if omega.degree != 2:
        raise ValueError("constant_matrix expects a 2-form")
    m = omega.nvars
    mat = [[Fraction(0)] * m for _ in range(m)]
    for (i, j), c in omega.components.items():
        v = c.constant_term()
        mat[i][j] = v
        mat[j][i] = -v
    return mat


def monomial_forms(nvars: int, degree: int, exps):
    """Monomial p-forms ``x^e dx_J`` for each exponent and each index tuple."""
    idxs = list(combinations(range(nvars), degree))
    return [(e, J) for e in exps for J in idxs]
