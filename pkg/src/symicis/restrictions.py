"""
Algebraic restrictions of differential forms to zero-dimensional ideals.

The space of p-forms with zero algebraic restriction to I is spanned by
``I * Lambda^p`` and ``d(I * Lambda^(p-1))``.  Everything is computed on
T-jets where T is the nilpotency order of I: since ``m^T Lambda^p`` already
lies in ``I * Lambda^p``, two forms with equal T-jets have equal
restrictions.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import List, Optional, Tuple

from .errors import DomainError
from .forms import (
    DiffForm, VectorField, exterior_derivative, interior_product, quasi_homogeneous_parts,
)
from .ideals import (
    DEFAULT_CAP, FGIdeal, jet_membership, require_nilpotency,
    with_weights,
)
from .linalg import Echelon, nullspace
from .poly import DimensionError, Poly, monomials_of_degree, monomials_up_to


class NotClosedRepresentableError(DomainError):
    """The form's restriction is not the restriction of any closed form."""

    precondition = "closed_representable"


class FormIndex:
    """Column numbering of monomial p-forms ``x^e dx_J`` with |e| <= d.

    Columns ascend by (grlex of e, J), so lower coefficient degree comes
    first.
    """

    def __init__(self, nvars, p, d):
        self.nvars = nvars
        self.p = p
        self.d = d
        idxs = list(combinations(range(nvars), p))
        self.cols = [(e, J) for e in monomials_up_to(nvars, d) for J in idxs]
        self.index = {c: i for i, c in enumerate(self.cols)}

    def vector(self, omega: DiffForm):
        out = {}
        idx = self.index
        for J, coeff in omega.components.items():
            for e, c in coeff.terms.items():
                k = idx.get((e, J))
                if k is not None:
                    out[k] = c
        return out

    def form(self, vec) -> DiffForm:
        comps = {}
        for k, c in vec.items():
            e, J = self.cols[k]
            comps.setdefault(J, {})[e] = c
        return DiffForm(self.p, self.nvars, {J: Poly(t, self.nvars) for J, t in comps.items()})

    def monomial_form(self, k) -> DiffForm:
        return self.form({k: Fraction(1)})


@lru_cache(maxsize=None)
def form_index(nvars, p, d):
    return FormIndex(nvars, p, d)


def _closed_homogeneous(nvars, p, k):
    """Basis of closed p-forms with homogeneous coefficients of degree k."""
    src = [(e, J) for e in monomials_of_degree(nvars, k) for J in combinations(range(nvars), p)]
    if p == 0:
        return [{0: Fraction(1)}] if k == 0 else [], src
    if p >= nvars or k == 0:
        return [{i: Fraction(1)} for i in range(len(src))], src
    tgt = {}
    rows = {}
    for i, (e, J) in enumerate(src):
        dform = exterior_derivative(DiffForm.basic(J, nvars, Poly.monomial(e)))
        for J2, coeff in dform.components.items():
            for e2, c in coeff.terms.items():
                r = tgt.setdefault((e2, J2), len(tgt))
                rows.setdefault(r, {})[i] = c
    return nullspace(list(rows.values()), len(src)), src


@dataclass
class RestrictionSpace:
    """The quotient of (closed) p-form jets by forms with zero restriction."""

    ideal: FGIdeal
    degree: int
    trunc: int
    closed_only: bool
    quotient_basis: List[DiffForm]
    columns: FormIndex = field(repr=False)
    a0: Echelon = field(repr=False)
    quotient: Echelon = field(repr=False)
    closed_by_degree: dict = field(repr=False, default_factory=dict)

    @property
    def dimension(self):
        return len(self.quotient_basis)

    @property
    def nvars(self):
        return self.ideal.nvars

    def a0_spanning(self):
        """Forms spanning the zero-restriction jets (echelon rows)."""
        return [self.columns.form(r) for r in self.a0.rows.values()]

    @property
    def a0_basis(self):
        """Basis of zero-restriction jets, intersected with closed forms in
        closed mode."""
        if not self.closed_only or self.degree >= self.nvars:
            return self.a0_spanning()
        closed = [v for k in sorted(self.closed_by_degree) for v in self.closed_by_degree[k]]
        rems = [self.a0.reduce(v)[0] for v in closed]
        rows = {}
        for j, r in enumerate(rems):
            for c, v in r.items():
                rows.setdefault(c, {})[j] = v
        out = []
        for combo in nullspace(list(rows.values()), len(closed)):
            vec = {}
            for j, a in combo.items():
                for c, v in closed[j].items():
                    nv = vec.get(c, 0) + a * v
                    if nv:
                        vec[c] = nv
                    else:
                        vec.pop(c, None)
            if vec:
                out.append(self.columns.form(vec))
        return out

    def vector(self, omega: DiffForm):
        if omega.degree != self.degree:
            raise ValueError(f"degree mismatch: expected a {self.degree}-form, got a {omega.degree}-form")
        if omega.nvars != self.nvars:
            raise DimensionError(f"form in {omega.nvars} variables, ideal in {self.nvars}")
        return self.columns.vector(omega.truncate(self.trunc))

    def coordinates(self, omega: DiffForm) -> Tuple[Fraction, ...]:
        rem, _ = self.a0.reduce(self.vector(omega))
        rem2, combo = self.quotient.reduce(rem)
        if rem2:
            raise NotClosedRepresentableError(
                "the restriction of this form is not the restriction of a closed form"
            )
        return tuple(combo.get(k, Fraction(0)) for k in range(self.dimension))

    def representative(self, coords) -> DiffForm:
        out = DiffForm.zero(self.degree, self.nvars)
        for c, e in zip(coords, self.quotient_basis):
            if c:
                out = out + e.scale(c)
        return out

    def closed_from(self, k):
        """Closed jets with every coefficient vanishing to order >= k."""
        return [v for deg in sorted(self.closed_by_degree) if deg >= k for v in self.closed_by_degree[deg]]

    def contains_mod_a0(self, omega_vec, extra):
        """Whether ``omega_vec`` lies in the zero-restriction jets plus ``extra``."""
        ech = self.a0.copy()
        for v in extra:
            ech.add(v)
        rem, _ = ech.reduce(omega_vec)
        return not rem


@dataclass(frozen=True)
class AlgRestriction:
    space: RestrictionSpace
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != self.space.dimension:
            raise ValueError("coordinate vector does not match the quotient dimension")

    def is_zero(self):
        return not any(self.coords)

    def representative(self) -> DiffForm:
        return self.space.representative(self.coords)

    def first_nonzero(self) -> Optional[int]:
        for i, c in enumerate(self.coords):
            if c:
                return i
        return None


def _a0_echelon(ideal, p, T, cols):
    m = ideal.nvars
    ech = Echelon()
    forms_p = list(combinations(range(m), p))
    forms_q = list(combinations(range(m), p - 1)) if p >= 1 else []
    for g in ideal.generators:
        low = g.min_degree()
        for e in monomials_up_to(m, T + 1):
            deg = sum(e) + low
            if deg > T + 1:
                break
            h = Poly.monomial(e).mul(g, T + 1)
            if deg <= T:
                for J in forms_p:
                    ech.add(cols.vector(DiffForm.basic(J, m, h)))
            for J in forms_q:
                ech.add(cols.vector(exterior_derivative(DiffForm.basic(J, m, h))))
    return ech


def build_space(ideal: FGIdeal, p: int = 2, closed_only: bool = True,
                trunc: Optional[int] = None, cap: int = DEFAULT_CAP) -> RestrictionSpace:
    """Quotient basis of (closed) p-forms modulo zero-restriction forms.

    Representatives are chosen greedily in ascending column order, so they
    are monomial forms of the lowest possible degree.
    """
    m = ideal.nvars
    if p < 0 or p > m:
        raise ValueError(f"form degree {p} out of range for {m} variables")
    N = require_nilpotency(ideal, cap)
    T = N if trunc is None else trunc
    if T < N:
        raise ValueError(f"truncation {T} is below the nilpotency order {N}")
    return _build_space(ideal, p, closed_only, T)


@lru_cache(maxsize=128)
def _build_space(ideal, p, closed_only, T):
    m = ideal.nvars
    cols = form_index(m, p, T)
    a0 = _a0_echelon(ideal, p, T, cols)

    closed_by_degree = {}
    for k in range(T + 1):
        basis, src = _closed_homogeneous(m, p, k)
        vecs = []
        for b in basis:
            vecs.append({cols.index[src[i]]: c for i, c in b.items()})
        closed_by_degree[k] = vecs

    if closed_only:
        candidates = [v for k in range(T + 1) for v in closed_by_degree[k]]
    else:
        candidates = [{k: Fraction(1)} for k in range(len(cols.cols))]

    quotient = Echelon()
    basis = []
    for cand in candidates:
        rem, _ = a0.reduce(cand)
        if not rem:
            continue
        if quotient.add(rem, {len(basis): Fraction(1)}):
            basis.append(cols.form(cand))
    return RestrictionSpace(ideal, p, T, closed_only, basis, cols, a0, quotient, closed_by_degree)


def reduce(omega: DiffForm, space: RestrictionSpace) -> AlgRestriction:
    """Coordinates of the algebraic restriction of ``omega`` in the space's basis."""
    return AlgRestriction(space, space.coordinates(omega))


def is_zero_restriction(omega: DiffForm, space: RestrictionSpace) -> bool:
    return reduce(omega, space).is_zero()


def in_ideal_forms(omega: DiffForm, ideal: FGIdeal, cap: int = DEFAULT_CAP) -> bool:
    """Whether every coefficient of ``omega`` lies in the ideal."""
    N = require_nilpotency(ideal, cap)
    return all(jet_membership(c, ideal, N) for c in omega.components.values())


def homotopy_primitive(omega: DiffForm, ideal: FGIdeal, cap: int = DEFAULT_CAP,
                       require_ideal: bool = True) -> DiffForm:
    """A form ``alpha`` with coefficients in I and ``d alpha = omega``.

    ``omega`` must be closed with coefficients in the quasi-homogeneous
    ideal I.  On each piece of quasi-degree k the homotopy integral along
    the weighted scaling evaluates to ``i_E(piece) / k``.

    With ``require_ideal=False`` any closed form is accepted; then only
    ``d alpha = omega`` is guaranteed.
    """
    if omega.degree < 1:
        raise ValueError("homotopy primitive needs a form of degree >= 1")
    ideal = with_weights(ideal)
    if omega.nvars != ideal.nvars:
        raise DimensionError("form and ideal disagree on variable count")
    if not exterior_derivative(omega).is_zero():
        raise DomainError("the form is not closed", "closed")
    if require_ideal and not in_ideal_forms(omega, ideal, cap):
        raise DomainError("the form does not have coefficients in the ideal", "in_ideal")
    E = VectorField.euler(ideal.weights)
    alpha = DiffForm.zero(omega.degree - 1, omega.nvars)
    for k, piece in quasi_homogeneous_parts(omega, ideal.weights).items():
        if k == 0:
            raise DomainError("a piece of quasi-degree 0 cannot occur for positive weights", "malformed")
        alpha = alpha + interior_product(E, piece).scale(Fraction(1, k))
    return alpha
