"""
Finitely generated ideals of function-germs at the origin.

Membership is decided on jets: the d-jet of ``f`` is compared against the
span of the d-jets of ``x^b * f_i``.  When the ideal contains a power
``m^N`` of the maximal ideal and ``d >= N``, this is exact membership in the
local ring.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Tuple

from .errors import DomainError
from .forms import PolyMap
from .linalg import Echelon, nullspace
from .poly import (
    DimensionError, Poly, Weights, grlex_key, monomials_of_degree, monomials_up_to,
    quasi_degree, truncate,
)

DEFAULT_CAP = 24


class NotZeroDimensionalError(DomainError):
    """The ideal contains no power of the maximal ideal below the cap."""

    precondition = "zero_dimensional"


class NotQuasiHomogeneousError(DomainError):
    precondition = "quasi_homogeneous"


@dataclass(frozen=True)
class FGIdeal:
    generators: Tuple[Poly, ...]
    nvars: int
    weights: Optional[Weights] = None
    degrees: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if g.nvars != self.nvars:
                raise DimensionError(f"generator in {g.nvars} variables, ideal in {self.nvars}")
            if g.constant_term():
                raise ValueError(f"generator {g.to_str()} does not vanish at 0")
        if self.weights is not None:
            w = self.weights if isinstance(self.weights, Weights) else Weights(tuple(self.weights))
            object.__setattr__(self, "weights", w)
            if len(w) != self.nvars:
                raise DimensionError("weights do not match variable count")
            degs = tuple(quasi_degree(g, w) for g in gens)
            if any(dg is None for dg in degs):
                raise NotQuasiHomogeneousError("a generator is not quasi-homogeneous for the given weights")
            if self.degrees is not None and tuple(self.degrees) != degs:
                raise ValueError(f"declared quasi-degrees {self.degrees} disagree with {degs}")
            object.__setattr__(self, "degrees", degs)

    @classmethod
    def of(cls, gens: Sequence[Poly], nvars: Optional[int] = None, detect_weights: bool = True) -> "FGIdeal":
        """Build an ideal, attaching weights when the generators admit them."""
        gens = tuple(g for g in gens if not g.is_zero())
        if nvars is None:
            if not gens:
                raise ValueError("nvars is required for the zero ideal")
            nvars = gens[0].nvars
        if detect_weights and gens and nvars:
            found = find_weights(gens)
            if found is not None:
                return cls(gens, nvars, found[0], found[1])
        return cls(gens, nvars)

    @property
    def is_quasi_homogeneous(self):
        return self.weights is not None

    def max_degree(self):
        return max((g.degree() for g in self.generators), default=0)

    def to_strs(self, names=None):
        return [g.to_str(names) for g in self.generators]


# weights


def _exponent_constraints(gens):
    rows = []
    for g in gens:
        exps = sorted(g.terms, key=grlex_key)
        base = exps[0]
        for e in exps[1:]:
            row = {j: Fraction(a - b) for j, (a, b) in enumerate(zip(e, base)) if a != b}
            if row:
                rows.append(row)
    return rows


def _equal_degree_constraints(gens):
    base = gens[0].leading_exponent()
    rows = []
    for g in gens[1:]:
        e = g.leading_exponent()
        row = {j: Fraction(a - b) for j, (a, b) in enumerate(zip(e, base)) if a != b}
        if row:
            rows.append(row)
    return rows


def find_weights(gens: Sequence[Poly], bound: int = 64):
    """Positive primitive weights making every generator quasi-homogeneous,
    with the resulting quasi-degrees; None if none exist with entries up to
    ``bound``.

    Weights giving all generators one common quasi-degree are preferred when
    they exist; within either system the lexicographically smallest vector
    is returned.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return None
    rows = _exponent_constraints(gens)
    found = _lex_min_positive(rows + _equal_degree_constraints(gens), gens[0].nvars, bound)
    if found is None:
        found = _lex_min_positive(rows, gens[0].nvars, bound)
    if found is None:
        return None
    w = Weights(tuple(found))
    return w, tuple(quasi_degree(g, w) for g in gens)


def _lex_min_positive(rows, m, bound):
    # echelon with pivot at the largest column: each pivot variable is a
    # combination of smaller-index free variables
    ech = Echelon()
    for r in rows:
        ech.add(r)
    reduced = {}
    for p in sorted(ech.rows):
        row = dict(ech.rows[p])
        for q in sorted((c for c in row if c != p and c in reduced), reverse=True):
            f = row.get(q)
            if f:
                for c, v in reduced[q].items():
                    nv = row.get(c, 0) - f * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
        reduced[p] = row
    # lam[p] = -sum(row[j] * lam[j]) over free j < p
    expr = {p: {j: -v for j, v in row.items() if j != p} for p, row in reduced.items()}

    lam = [0] * m

    def bounds_ok(p, k):
        # interval of lam[p] given lam[:k] fixed and free entries in [1, bound]
        lo = hi = Fraction(0)
        for j, c in expr[p].items():
            if j < k:
                lo += c * lam[j]
                hi += c * lam[j]
            elif c > 0:
                lo += c
                hi += c * bound
            else:
                lo += c * bound
                hi += c
        return hi >= 1 and lo <= bound

    def feasible(k):
        return all(bounds_ok(p, k) for p in expr if p >= k)

    def search(k):
        if k == m:
            return True
        if k in expr:
            v = sum(c * lam[j] for j, c in expr[k].items())
            if v.denominator != 1 or not 1 <= v <= bound:
                return False
            lam[k] = int(v)
            return feasible(k + 1) and search(k + 1)
        for v in range(1, bound + 1):
            lam[k] = v
            if feasible(k + 1) and search(k + 1):
                return True
        return False

    if not feasible(0) or not search(0):
        return None
    return lam


def with_weights(ideal: FGIdeal) -> FGIdeal:
    """Return ``ideal`` with weights attached, or raise if it has none."""
    if ideal.weights is not None:
        return ideal
    found = find_weights(ideal.generators)
    if found is None:
        raise NotQuasiHomogeneousError("not quasi-homogeneous in given coordinates")
    return FGIdeal(ideal.generators, ideal.nvars, found[0], found[1])


# jets


class MonomialIndex:
    """Column numbering of monomials of degree <= d, grlex ascending."""

    def __init__(self, nvars, d):
        self.nvars = nvars
        self.d = d
        self.exps = monomials_up_to(nvars, d)
        self.index = {e: i for i, e in enumerate(self.exps)}

    def vector(self, f: Poly):
        idx = self.index
        return {idx[e]: c for e, c in f.terms.items() if e in idx}

    def poly(self, vec) -> Poly:
        return Poly({self.exps[i]: c for i, c in vec.items()}, self.nvars)


@lru_cache(maxsize=None)
def monomial_index(nvars, d):
    return MonomialIndex(nvars, d)


class IdealJets:
    """The d-jets of an ideal as an echelonized subspace."""

    def __init__(self, ideal: FGIdeal, d: int):
        self.ideal = ideal
        self.d = d
        self.mono = monomial_index(ideal.nvars, d)
        ech = Echelon()
        for g in ideal.generators:
            low = g.min_degree()
            for e in self.mono.exps:
                if sum(e) + low > d:
                    break
                ech.add(self.mono.vector(Poly.monomial(e).mul(g, d)))
        self.echelon = ech

    def remainder(self, f: Poly) -> Poly:
        rem, _ = self.echelon.reduce(self.mono.vector(truncate(f, self.d)))
        return self.mono.poly(rem)

    def contains(self, f: Poly) -> bool:
        rem, _ = self.echelon.reduce(self.mono.vector(truncate(f, self.d)))
        return not rem

    def standard_monomials(self):
        """Monomials that are not pivots: a basis of the jet quotient."""
        piv = self.echelon.rows
        return [e for i, e in enumerate(self.mono.exps) if i not in piv]


@lru_cache(maxsize=256)
def ideal_jets(ideal: FGIdeal, d: int) -> IdealJets:
    return IdealJets(ideal, d)


def jet_membership(f: Poly, ideal: FGIdeal, trunc: int) -> bool:
    if f.nvars != ideal.nvars:
        raise DimensionError(f"polynomial in {f.nvars} variables, ideal in {ideal.nvars}")
    return ideal_jets(_plain(ideal), trunc).contains(f)


def _plain(ideal):
    # cache key independent of attached weight data
    if ideal.weights is None:
        return ideal
    return FGIdeal(ideal.generators, ideal.nvars)


def nilpotency_order(ideal: FGIdeal, cap: int = DEFAULT_CAP) -> Optional[int]:
    """Smallest N <= cap with every degree-N monomial in the ideal."""
    return _nilpotency(_plain(ideal), cap)


@lru_cache(maxsize=None)
def _nilpotency(ideal, cap):
    m = ideal.nvars
    if m == 0:
        return 0
    top = ideal.max_degree()
    for N in range(1, cap + 1):
        jets = ideal_jets(ideal, N + top)
        if all(jets.contains(Poly.monomial(e)) for e in monomials_of_degree(m, N)):
            return N
    return None


def require_nilpotency(ideal: FGIdeal, cap: int = DEFAULT_CAP) -> int:
    N = nilpotency_order(ideal, cap)
    if N is None:
        raise NotZeroDimensionalError(
            f"no power of the maximal ideal of degree <= {cap} lies in the ideal"
        )
    return N


def quotient_dimension(ideal: FGIdeal, cap: int = DEFAULT_CAP) -> int:
    """Dimension of the local algebra O/I."""
    N = require_nilpotency(ideal, cap)
    return len(ideal_jets(_plain(ideal), N).standard_monomials())


# linear data


def embedding_codim(ideal: FGIdeal):
    """Rank ``c`` of the generators' linear parts and a basis of their
    common kernel (the tangent space at 0 of a minimal smooth M)."""
    m = ideal.nvars
    rows = []
    for g in ideal.generators:
        lin = g.linear_part()
        rows.append({j: v for j, v in enumerate(lin) if v})
    ker = nullspace(rows, m)
    c = m - len(ker)
    kernel = [[vec.get(j, Fraction(0)) for j in range(m)] for vec in ker]
    return c, kernel


def suspend(ideal, extra: int) -> FGIdeal:
    """Append ``extra`` new coordinates, each added as a generator."""
    if extra < 0:
        raise ValueError("number of suspension variables must be >= 0")
    if not isinstance(ideal, FGIdeal):
        ideal = FGIdeal.of(ideal)
    if extra == 0:
        return ideal
    m = ideal.nvars + extra
    gens = [g.extend(extra) for g in ideal.generators]
    gens += [Poly.var(ideal.nvars + k, m) for k in range(extra)]
    if ideal.weights is not None:
        w = ideal.weights.extend(extra, 1)
        return FGIdeal(tuple(gens), m, w)
    return FGIdeal(tuple(gens), m)


def restrict_ideal_to_graph(ideal: FGIdeal, graph: PolyMap, trunc: int) -> FGIdeal:
    """Pull the generators back along ``graph`` and truncate; zeros dropped."""
    if graph.target_vars != ideal.nvars:
        raise DimensionError(f"graph lands in {graph.target_vars} variables, ideal lives in {ideal.nvars}")
    r = graph.source_vars
    gens = []
    for g in ideal.generators:
        if r == 0:
            continue
        h = truncate(g.substitute(graph.components, trunc), trunc)
        if not h.is_zero():
            gens.append(h)
    return FGIdeal.of(gens, r)
