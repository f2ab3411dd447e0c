"""
Symplectic classification of zero-dimensional quasi-homogeneous ICIS germs.

The pipeline for a germ ``(omega, I)`` on C^{2n}:

1. solve the generators with independent linear parts for a smooth graph
   M of minimal dimension and pull ``omega`` and ``I`` back to it;
2. reduce the restricted form in the quotient of closed 2-forms by forms
   with zero algebraic restriction;
3. read off the class from the first nonzero coordinate and attach the
   invariants (symplectic multiplicity, index of isotropy, realizability).
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DomainError
from .forms import (
    DiffForm, PolyMap, VectorField, constant_matrix, exterior_derivative, lie_derivative,
    pullback, standard_symplectic,
)
from .ideals import (
    DEFAULT_CAP, FGIdeal, NotQuasiHomogeneousError, embedding_codim, ideal_jets,
    nilpotency_order, require_nilpotency, restrict_ideal_to_graph,
)
from .linalg import Echelon, dense_rank, nullspace, rank
from .poly import Poly, monomials_up_to, truncate, variables
from .restrictions import AlgRestriction, RestrictionSpace, build_space, reduce

INF = math.inf


class CatalogError(DomainError):
    precondition = "catalog_member"


class NotRealizableError(DomainError):
    precondition = "realizable"


class GraphError(DomainError):
    precondition = "graph_solvable"


@dataclass(frozen=True)
class SymplecticForm:
    form: DiffForm
    n: int

    def __post_init__(self):
        if self.form.degree != 2 or self.form.nvars != 2 * self.n:
            raise ValueError("a symplectic form is a 2-form on C^{2n}")
        if not exterior_derivative(self.form).is_zero():
            raise DomainError("the form is not closed", "closed")
        if dense_rank(constant_matrix(self.form)) != 2 * self.n:
            raise DomainError("the form is degenerate at 0", "nondegenerate")

    @classmethod
    def standard(cls, n: int) -> "SymplecticForm":
        return cls(standard_symplectic(n), n)


# dimension reduction


@dataclass
class Reduction:
    form: DiffForm
    ideal: FGIdeal
    graph: PolyMap
    free: Tuple[int, ...]
    dependent: Tuple[int, ...]
    trunc: int


def _graph_equations(ideal: FGIdeal):
    """Combinations ``x_p + (free linear) + (higher order)`` of the
    generators, one per dependent variable p."""
    m = ideal.nvars
    ech = Echelon()
    for i, g in enumerate(ideal.generators):
        lin = {j: v for j, v in enumerate(g.linear_part()) if v}
        ech.add(lin, {i: Fraction(1)})
    # back-substitute so no row mentions another row's pivot
    rows, tags = {}, {}
    for p in sorted(ech.rows):
        row, tag = dict(ech.rows[p]), dict(ech.tags[p])
        for q in sorted((c for c in row if c != p and c in rows), reverse=True):
            f = row.get(q)
            if not f:
                continue
            for c, v in rows[q].items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
            for k, v in tags[q].items():
                nv = tag.get(k, 0) - f * v
                if nv:
                    tag[k] = nv
                else:
                    tag.pop(k, None)
        rows[p], tags[p] = row, tag
    eqs = {}
    for p, tag in tags.items():
        g = Poly.zero(m)
        for i, c in tag.items():
            g = g + ideal.generators[i].scale(c)
        if g.linear_part()[p] != 1:
            raise GraphError(f"could not normalize the linear part for variable {p}")
        eqs[p] = g
    return eqs


def _solve_graph(ideal, eqs, trunc):
    m = ideal.nvars
    dep = sorted(eqs)
    free = [j for j in range(m) if j not in eqs]
    r = len(free)
    free_vars = variables(r) if r else []
    images = [None] * m
    for k, j in enumerate(free):
        images[j] = free_vars[k]
    for p in dep:
        images[p] = Poly.zero(r)
    if r == 0:
        return PolyMap([Poly.zero(0)] * m, 0), tuple(free), tuple(dep)
    rest = {p: g - Poly.var(p, m) for p, g in eqs.items()}
    # fixed point x_p = -rest_p(x) on jets; each pass fixes one more degree
    for _ in range(trunc + 1):
        new = list(images)
        for p in dep:
            new[p] = truncate(-rest[p].substitute(images, trunc), trunc)
        if all(new[p] == images[p] for p in dep):
            break
        images = new
    for p, g in eqs.items():
        if not truncate(g.substitute(images, trunc), trunc).is_zero():
            raise GraphError("graph iteration did not converge")
    return PolyMap(images, r), tuple(free), tuple(dep)


def reduce_to_submanifold(omega, ideal: FGIdeal, trunc: Optional[int] = None,
                          cap: int = DEFAULT_CAP) -> Reduction:
    """Pull ``omega`` and ``ideal`` back to a smooth graph of minimal dimension
    whose vanishing ideal lies in ``ideal``.

    The dependent coordinates are the largest-index variables reachable by
    row reduction of the generators' linear parts; the output keeps the
    remaining variables in their original order.
    """
    if isinstance(omega, SymplecticForm):
        omega = omega.form
    if omega.nvars != ideal.nvars:
        raise DomainError("form and ideal live in different spaces", "dimension")
    c, _ = embedding_codim(ideal)
    m = ideal.nvars
    if c == 0:
        T = trunc if trunc is not None else require_nilpotency(ideal, cap)
        return Reduction(omega, ideal, PolyMap.identity(m), tuple(range(m)), (), T)
    eqs = _graph_equations(ideal)
    T = trunc if trunc is not None else max(2, ideal.max_degree())
    while True:
        graph, free, dep = _solve_graph(ideal, eqs, T)
        restricted = restrict_ideal_to_graph(ideal, graph, T)
        if restricted.nvars == 0:
            break
        N = nilpotency_order(restricted, cap)
        if N is None:
            if trunc is not None or T >= cap:
                raise DomainError("restricted ideal is not zero-dimensional", "zero_dimensional")
        elif N <= T or trunc is not None:
            # generators known modulo m^(T+1), which lies in m * I|_M once N <= T
            break
        T = min(2 * T, cap)
    form = pullback(graph, omega, T) if graph.source_vars else DiffForm.zero(omega.degree, 0)
    return Reduction(form, restricted, graph, free, dep, T)


# logarithmic vector fields and invariants


def derlog(ideal: FGIdeal, trunc: Optional[int] = None, cap: int = DEFAULT_CAP) -> List[VectorField]:
    """Spanning set of vector fields X with X(I) in I, coefficients of degree
    <= trunc (default: nilpotency order + 1)."""
    N = require_nilpotency(ideal, cap)
    D = N + 1 if trunc is None else trunc
    return _derlog(ideal, max(D, 0), max(N, 1))


@lru_cache(maxsize=64)
def _derlog(ideal, D, N):
    m = ideal.nvars
    jets = ideal_jets(FGIdeal(ideal.generators, m), N)
    unknowns = [(i, e) for i in range(m) for e in monomials_up_to(m, D)]
    partials = [[g.diff(i) for i in range(m)] for g in ideal.generators]
    rows = {}
    for col, (i, e) in enumerate(unknowns):
        mono = Poly.monomial(e)
        for j, parts in enumerate(partials):
            image = jets.remainder(mono.mul(parts[i], N))
            for exp, c in image.terms.items():
                rows.setdefault((j, exp), {})[col] = c
    fields = []
    for vec in nullspace(list(rows.values()), len(unknowns)):
        comps = [dict() for _ in range(m)]
        for col, c in vec.items():
            i, e = unknowns[col]
            comps[i][e] = c
        fields.append(VectorField([Poly(t, m) for t in comps]))
    return fields


def orbit_tangent(ar: AlgRestriction, fields: Optional[Sequence[VectorField]] = None):
    """Coordinate vectors of ``[L_X omega]`` for X in Derlog."""
    space = ar.space
    if fields is None:
        fields = derlog(space.ideal, space.trunc + 1)
    rep = ar.representative()
    out = []
    for X in fields:
        image = lie_derivative(X, rep)
        out.append(space.coordinates(image))
    return out


def symplectic_multiplicity(ar: AlgRestriction, ideal: Optional[FGIdeal] = None) -> int:
    """Codimension of the orbit of ``ar`` under ideal-preserving diffeomorphisms."""
    ideal = ar.space.ideal if ideal is None else ideal
    if ideal.weights is None:
        raise NotQuasiHomogeneousError("symplectic multiplicity needs a quasi-homogeneous ideal")
    tangent = orbit_tangent(ar)
    vecs = [{k: v for k, v in enumerate(t) if v} for t in tangent]
    return ar.space.dimension - rank(vecs)


def index_of_isotropy(ar: AlgRestriction):
    """Largest k such that some closed representative vanishes to order k;
    ``math.inf`` for the zero restriction."""
    if ar.is_zero():
        return INF
    space = ar.space
    vec = space.vector(ar.representative())
    k = 0
    while k <= space.trunc and space.contains_mod_a0(vec, space.closed_from(k + 1)):
        k += 1
    if k > space.trunc:
        raise DomainError("a nonzero restriction vanished to every order", "consistency")
    return k


def realizable(ar: AlgRestriction, ideal_full: FGIdeal, n: int) -> bool:
    """Whether some symplectic form on C^{2n} has this restriction."""
    c, kernel = embedding_codim(ideal_full)
    r = ideal_full.nvars - c
    theta = ar.representative()
    mat = constant_matrix(theta) if theta.nvars else []
    if theta.nvars == r:
        restricted = mat
    elif theta.nvars == ideal_full.nvars:
        # K^T A K on the tangent space of a minimal M
        restricted = [
            [sum(u[i] * mat[i][j] * v[j] for i in range(len(u)) for j in range(len(v))) for v in kernel]
            for u in kernel
        ]
    else:
        raise DomainError("restriction lives on neither the full space nor a minimal M", "dimension")
    rk = dense_rank(restricted) if restricted else 0
    return rk >= 2 * r - 2 * n


# catalog


@dataclass(frozen=True)
class Family:
    key: str
    label: str
    params: Tuple[str, ...]

    def check(self, a=None, b=None):
        if self.key == "Iab":
            if a is None or b is None or not a >= b >= 2:
                raise DomainError(f"I_{{a,b}} requires a >= b >= 2, got a={a}, b={b}", "parameters")
        elif self.key == "I2a+1":
            if a is None or a < 3:
                raise DomainError(f"I_{{2a+1}} requires a >= 3, got a={a}", "parameters")
        elif self.key == "I2a+4":
            if a is None or a < 2:
                raise DomainError(f"I_{{2a+4}} requires a >= 2, got a={a}", "parameters")
        elif self.key == "Ia+5":
            if a is None or a < 4:
                raise DomainError(f"I_{{a+5}} requires a >= 4, got a={a}", "parameters")

    def template(self, y: Poly, z: Poly, a=None, b=None) -> List[Poly]:
        if self.key == "Iab":
            return [y * z, y ** a + z ** b]
        if self.key == "I2a+1":
            return [y ** 2 + z ** 3, z ** a]
        if self.key == "I2a+4":
            return [y ** 2 + z ** 3, y * z ** a]
        if self.key == "Ia+5":
            return [y ** 2 + z ** a, y * z ** 2]
        return [y ** 2, z ** 4]

    def param_dict(self, a=None, b=None):
        out = {}
        if "a" in self.params:
            out["a"] = a
        if "b" in self.params:
            out["b"] = b
        return out


FAMILIES: Dict[str, Family] = {
    "Iab": Family("Iab", "I_{a,b}", ("a", "b")),
    "I2a+1": Family("I2a+1", "I_{2a+1}", ("a",)),
    "I2a+4": Family("I2a+4", "I_{2a+4}", ("a",)),
    "Ia+5": Family("Ia+5", "I_{a+5}", ("a",)),
    "I10star": Family("I10star", "I*_10", ()),
}

ALIASES = {
    "iab": "Iab", "ia,b": "Iab", "i_ab": "Iab",
    "i2a+1": "I2a+1", "i2a+4": "I2a+4", "ia+5": "Ia+5",
    "i10star": "I10star", "i10*": "I10star", "i*10": "I10star",
}


def family(name: str) -> Family:
    key = ALIASES.get(name.lower().replace(" ", ""), name)
    if key not in FAMILIES:
        raise CatalogError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}")
    return FAMILIES[key]


def _monic(g: Poly) -> Poly:
    return g.scale(1 / g.terms[g.leading_exponent()])


def _param_candidates(fam: Family, maxdeg: int):
    if fam.key == "Iab":
        for a in range(2, maxdeg + 1):
            for b in range(2, a + 1):
                yield a, b
    elif fam.params:
        for a in range(2, maxdeg + 1):
            yield a, None
    else:
        yield None, None


def recognize(ideal: FGIdeal):
    """Match a two-variable ideal against the catalog templates.

    Returns ``(family, a, b, swapped)`` where ``swapped`` means the template's
    (y, z) are the ideal's variables in reverse order.
    """
    if ideal.nvars != 2 or len(ideal.generators) != 2:
        raise CatalogError("ideal is not a two-generator ideal in two variables after reduction")
    gens = {_monic(g) for g in ideal.generators}
    maxdeg = max(g.degree() for g in gens)
    y, z = variables(2)
    for swapped in (False, True):
        yy, zz = (z, y) if swapped else (y, z)
        for fam in FAMILIES.values():
            for a, b in _param_candidates(fam, maxdeg):
                try:
                    fam.check(a, b)
                except DomainError:
                    continue
                if {_monic(t) for t in fam.template(yy, zz, a, b)} == gens:
                    return fam, a, b, swapped
    raise CatalogError("ideal does not match any catalog normal form in the given coordinates")


def normal_form(fam: Family, n: int, class_index: int, n_classes: int, a=None, b=None) -> List[Poly]:
    """Generators of a classification-table normal form in variables
    p1..pn, q1..qn (in that order)."""
    m = 2 * n
    xs = variables(m)
    p = xs[:n]
    q = xs[n:]
    tail = []
    for i in range(2, n):
        tail += [p[i], q[i]]
    if class_index == 0:
        gens = fam.template(p[0], q[0], a, b)
        if n >= 2:
            gens += [p[1], q[1]]
        return gens + tail
    if n < 2:
        raise NotRealizableError("only class 0 exists for n = 1")
    gens = fam.template(p[0], p[1], a, b) + [q[0]]
    if class_index == n_classes - 1:
        gens.append(q[1])
    else:
        gens.append(q[1] + p[0] * p[1] ** class_index)
    return gens + tail


def darboux_names(n: int) -> List[str]:
    return [f"p{i + 1}" for i in range(n)] + [f"q{i + 1}" for i in range(n)]


@dataclass
class ClassRecord:
    family: str
    params: dict
    n: int
    class_index: int
    label: str
    normal_form: List[str]
    cod: int
    mu: int
    iota: object
    realizable: bool
    coords: Tuple[Fraction, ...] = ()
    notes: List[str] = field(default_factory=list)

    def __post_init__(self):
        if self.cod != self.mu:
            raise AssertionError("cod and mu disagree")

    def to_json(self):
        return {
            "index": self.class_index,
            "label": self.label,
            "normal_form": list(self.normal_form),
            "cod": self.cod,
            "mu": self.mu,
            "iota": "inf" if self.iota == INF else self.iota,
            "realizable": self.realizable,
        }


@dataclass
class Analysis:
    """Invariants of a restriction, with the intermediate data."""

    reduction: Reduction
    space: RestrictionSpace
    restriction: AlgRestriction
    mu: int
    iota: object
    zero: bool
    realizable: bool


def analyze(omega, ideal: FGIdeal, n: Optional[int] = None, trunc: Optional[int] = None,
            cap: int = DEFAULT_CAP) -> Analysis:
    """Reduce, restrict and compute invariants for an arbitrary
    quasi-homogeneous zero-dimensional ideal (no catalog matching)."""
    if isinstance(omega, SymplecticForm):
        n = omega.n if n is None else n
        omega = omega.form
    if n is None:
        n = omega.nvars // 2
    red = reduce_to_submanifold(omega, ideal, cap=cap)
    if red.ideal.nvars == 0:
        raise DomainError("the ideal is the maximal ideal; nothing to restrict to", "zero_dimensional")
    space = build_space(red.ideal, 2, True, trunc, cap)
    ar = reduce(red.form, space)
    mu = symplectic_multiplicity(ar)
    iota = index_of_isotropy(ar)
    return Analysis(red, space, ar, mu, iota, ar.is_zero(), realizable(ar, ideal, n))


def _swap(reduction: Reduction) -> Reduction:
    swap = PolyMap([Poly.var(1, 2), Poly.var(0, 2)], 2)
    form = pullback(swap, reduction.form, reduction.trunc)
    ideal = FGIdeal.of([g.permute((1, 0)) for g in reduction.ideal.generators], 2)
    return Reduction(form, ideal, reduction.graph, reduction.free[::-1], reduction.dependent, reduction.trunc)


TABLE_NOTES = {
    "Ia+5": "the third I_{a+5} class is labelled with index 2 to match its cod/mu/i values (2, 2, inf); some listings print index 1",
}
COD_NOTE = "cod is reported equal to mu; no independent codimension is computed"


def classify(omega, ideal: FGIdeal, fam: Optional[str] = None, trunc: Optional[int] = None,
             cap: int = DEFAULT_CAP) -> ClassRecord:
    """Symplectic class of a catalog germ given in catalog normal-form coordinates."""
    if not isinstance(omega, SymplecticForm):
        omega = SymplecticForm(omega, omega.nvars // 2)
    n = omega.n
    red = reduce_to_submanifold(omega, ideal, cap=cap)
    if red.ideal.nvars != 2:
        raise CatalogError(f"minimal smooth M has dimension {red.ideal.nvars}, catalog germs need 2")
    found, a, b, swapped = recognize(red.ideal)
    if fam is not None and family(fam).key != found.key:
        raise CatalogError(f"ideal is a {found.label} germ, not {family(fam).label}")
    if swapped:
        red = _swap(red)
    space = build_space(red.ideal, 2, True, trunc, cap)
    ar = reduce(red.form, space)
    if not realizable(ar, ideal, n):
        raise NotRealizableError("not realizable by a symplectic form")
    first = ar.first_nonzero()
    index = space.dimension if first is None else first
    mu = symplectic_multiplicity(ar)
    iota = index_of_isotropy(ar)
    n_classes = space.dimension + 1
    nf = normal_form(found, n, index, n_classes, a, b)
    names = darboux_names(n)
    notes = [COD_NOTE]
    if found.key in TABLE_NOTES and index == 2:
        notes.append(TABLE_NOTES[found.key])
    return ClassRecord(
        family=found.key,
        params=found.param_dict(a, b),
        n=n,
        class_index=index,
        label=f"{found.label}^{index}",
        normal_form=[g.to_str(names) for g in nf],
        cod=mu,
        mu=mu,
        iota=iota,
        realizable=True,
        coords=ar.coords,
        notes=notes,
    )


def family_classes(fam: Family, a=None, b=None, cap: int = DEFAULT_CAP) -> int:
    """Number of symplectic classes for n >= 2: quotient dimension + 1."""
    y, z = variables(2)
    space = build_space(FGIdeal.of(fam.template(y, z, a, b)), 2, True, None, cap)
    return space.dimension + 1


def table_rows(fam_name: str, n: int, a=None, b=None, cap: int = DEFAULT_CAP) -> List[ClassRecord]:
    """Every symplectic class of a family on C^{2n}, each computed by
    classifying its own normal form."""
    fam = family(fam_name)
    fam.check(a, b)
    if n < 1:
        raise DomainError("n must be at least 1", "parameters")
    n_classes = family_classes(fam, a, b, cap)
    count = 1 if n == 1 else n_classes
    omega = SymplecticForm.standard(n)
    records = []
    for k in range(count):
        gens = normal_form(fam, n, k, n_classes, a, b)
        rec = classify(omega, FGIdeal.of(gens, 2 * n), fam.key, cap=cap)
        if rec.class_index != k:
            raise AssertionError(f"normal form {k} of {fam.label} classified as {rec.class_index}")
        records.append(rec)
    return records


def table_json(fam_name: str, n: int, a=None, b=None, cap: int = DEFAULT_CAP) -> dict:
    fam = family(fam_name)
    rows = table_rows(fam_name, n, a, b, cap)
    notes = [COD_NOTE]
    if fam.key in TABLE_NOTES and any(r.class_index == 2 for r in rows):
        notes.append(TABLE_NOTES[fam.key])
    return {
        "family": fam.key,
        "params": fam.param_dict(a, b),
        "n": n,
        "classes": [r.to_json() for r in rows],
        "notes": notes,
    }


def lagrangian_planes(n: int):
    """Coordinate Lagrangian planes of (C^{2n}, sum dp_i ^ dq_i) in
    p1..pn, q1..qn order: for each i pick p_i or q_i to vanish."""
    m = 2 * n
    out = []
    for mask in range(2 ** n):
        gens = []
        for i in range(n):
            j = i if (mask >> i) & 1 else n + i
            gens.append(Poly.var(j, m))
        out.append(gens)
    return out
