"""Command-line interface.

Exit codes: 0 success, 1 usage or syntax error, 2 domain error.
"""

import argparse
import json
import sys
from fractions import Fraction

from .errors import DomainError
from .forms import DiffForm
from .ideals import DEFAULT_CAP, FGIdeal, find_weights
from .parser import ParseError, parse_form, parse_polys
from .restrictions import build_space, homotopy_primitive, reduce
from .symclass import (
    INF, analyze, classify, darboux_names, family, table_json,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _num(v: Fraction):
    return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _iota(v):
    return "inf" if v == INF else v


def _read_input(path):
    values = {}
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            for sep in (":", "="):
                if sep in line:
                    key, val = line.split(sep, 1)
                    values[key.strip().replace("-", "_")] = val.strip()
                    break
            else:
                raise UsageError(f"cannot read line {line!r} in {path}")
    return values


def _merge_input(args):
    if getattr(args, "input", None):
        for key, val in _read_input(args.input).items():
            if getattr(args, key, None) is None:
                setattr(args, key, val)


def _vars(args, n=None):
    if args.vars:
        names = [v.strip() for v in args.vars.split(",") if v.strip()]
        if len(set(names)) != len(names):
            raise UsageError("--vars contains a repeated name")
        return names
    if n is not None:
        return darboux_names(n)
    raise UsageError("--vars is required")


def _ideal(args, names):
    if not args.ideal:
        raise UsageError("--ideal is required")
    return FGIdeal.of(parse_polys(args.ideal, names), len(names))


def _symplectic_default(names):
    """sum dp_i ^ dq_i when the variables are exactly p1..pn, q1..qn."""
    if len(names) % 2:
        return None
    n = len(names) // 2
    if sorted(names) != sorted(darboux_names(n)):
        return None
    index = {v: i for i, v in enumerate(names)}
    out = DiffForm.zero(2, len(names))
    for i in range(1, n + 1):
        out = out + DiffForm.basic((index[f"p{i}"], index[f"q{i}"]), len(names))
    return out


def _form(args, names, default_symplectic=False):
    if args.form:
        return parse_form(args.form, names)
    if default_symplectic:
        omega = _symplectic_default(names)
        if omega is not None:
            return omega
    raise UsageError("--form is required (no default symplectic form for these variable names)")


# commands


def cmd_qh_check(args):
    names = _vars(args)
    gens = parse_polys(args.ideal or "", names) if args.ideal else None
    if not gens:
        raise UsageError("--ideal is required")
    found = find_weights(gens)
    if found is None:
        return {"quasi_homogeneous": False}, "not quasi-homogeneous in given coordinates"
    w, degs = found
    text = f"weights ({','.join(map(str, w.values))}), degrees ({','.join(map(str, degs))})"
    return {"quasi_homogeneous": True, "weights": list(w.values), "degrees": list(degs)}, text


def cmd_restrict_basis(args):
    names = _vars(args)
    ideal = _ideal(args, names)
    space = build_space(ideal, args.p, args.closed, None, args.trunc_cap)
    basis = [b.to_str(names) for b in space.quotient_basis]
    text = f"dim {space.dimension}: " + ", ".join(basis)
    return {"dimension": space.dimension, "basis": basis, "trunc": space.trunc}, text


def cmd_reduce(args):
    names = _vars(args)
    ideal = _ideal(args, names)
    omega = _form(args, names)
    space = build_space(ideal, omega.degree, args.closed, None, args.trunc_cap)
    ar = reduce(omega, space)
    coords = [_num(c) for c in ar.coords]
    basis = [b.to_str(names) for b in space.quotient_basis]
    text = f"coords ({', '.join(str(c) for c in coords)}) in basis [{', '.join(basis)}]"
    return {"coords": coords, "basis": basis}, text


def cmd_primitive(args):
    names = _vars(args)
    ideal = _ideal(args, names)
    omega = _form(args, names)
    alpha = homotopy_primitive(omega, ideal, args.trunc_cap, not args.allow_outside_ideal)
    return {"primitive": alpha.to_str(names)}, f"alpha = {alpha.to_str(names)}"


def cmd_invariants(args):
    names = _vars(args, args.n)
    ideal = _ideal(args, names)
    omega = _form(args, names, default_symplectic=True)
    n = args.n if args.n is not None else len(names) // 2
    res = analyze(omega, ideal, n, cap=args.trunc_cap)
    free = [names[j] for j in res.reduction.free]
    data = {
        "reduced_variables": free,
        "basis": [b.to_str(free) for b in res.space.quotient_basis],
        "coords": [_num(c) for c in res.restriction.coords],
        "mu": res.mu,
        "iota": _iota(res.iota),
        "zero_restriction": res.zero,
        "realizable": res.realizable,
    }
    text = "\n".join([
        f"reduced to {', '.join(free)}; basis [{', '.join(data['basis'])}]",
        f"coords ({', '.join(str(c) for c in data['coords'])})",
        f"mu = {res.mu}",
        f"iota = {_iota(res.iota)}",
        f"zero restriction: {'yes' if res.zero else 'no'}",
        f"realizable on C^{2 * n}: {'yes' if res.realizable else 'no'}",
    ])
    return data, text


def cmd_classify(args):
    if args.n is None and not args.vars:
        raise UsageError("--n or --vars is required")
    names = _vars(args, args.n)
    if args.n is not None and len(names) != 2 * args.n:
        raise UsageError(f"--n {args.n} needs {2 * args.n} variables, got {len(names)}")
    ideal = _ideal(args, names)
    omega = _form(args, names, default_symplectic=True)
    rec = classify(omega, ideal, args.family)
    data = rec.to_json()
    data.update({"family": rec.family, "params": rec.params, "n": rec.n,
                 "coords": [_num(c) for c in rec.coords], "notes": rec.notes})
    text = (f"{rec.label}: cod = {rec.cod}, mu = {rec.mu}, i = {_iota(rec.iota)}\n"
            f"normal form ({', '.join(rec.normal_form)})")
    return data, text


def cmd_table(args):
    fam = family(args.family)
    data = table_json(fam.key, args.n, args.a, args.b, args.trunc_cap)
    lines = [f"{fam.label}, n = {args.n}" + "".join(f", {k} = {v}" for k, v in data["params"].items())]
    for row in data["classes"]:
        lines.append(
            f"  {row['label']:<14} ({', '.join(row['normal_form'])})  "
            f"cod={row['cod']} mu={row['mu']} i={row['iota']}"
        )
    for note in data["notes"]:
        lines.append(f"note: {note}")
    return data, "\n".join(lines)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--trunc-cap", type=int, default=DEFAULT_CAP, metavar="D",
                        help="largest nilpotency order searched (default %(default)s)")
    common.add_argument("--input", metavar="FILE", help="read vars/ideal/form as 'key: value' lines")

    parser = _Parser(prog="symicis", description="Algebraic restrictions and symplectic ICIS classification")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=fn)
        return p

    p = add("qh-check", cmd_qh_check, "find quasi-homogeneous weights")
    p.add_argument("--vars")
    p.add_argument("--ideal")

    p = add("restrict-basis", cmd_restrict_basis, "quotient basis of algebraic restrictions")
    p.add_argument("--vars")
    p.add_argument("--ideal")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--closed", action="store_true", default=True)
    p.add_argument("--all-forms", dest="closed", action="store_false", help="do not restrict to closed forms")

    p = add("reduce", cmd_reduce, "coordinates of an algebraic restriction")
    p.add_argument("--vars")
    p.add_argument("--ideal")
    p.add_argument("--form")
    p.add_argument("--closed", action="store_true", default=True)
    p.add_argument("--all-forms", dest="closed", action="store_false")

    p = add("primitive", cmd_primitive, "primitive with coefficients in the ideal")
    p.add_argument("--vars")
    p.add_argument("--ideal")
    p.add_argument("--form")
    p.add_argument("--allow-outside-ideal", action="store_true",
                   help="accept closed forms not in I*L^p; only d(alpha) = form is then guaranteed")

    p = add("invariants", cmd_invariants, "symplectic multiplicity, index of isotropy, realizability")
    p.add_argument("--vars")
    p.add_argument("--ideal")
    p.add_argument("--form")
    p.add_argument("--n", type=int)

    p = add("classify", cmd_classify, "symplectic class of a catalog germ")
    p.add_argument("--family")
    p.add_argument("--vars")
    p.add_argument("--ideal")
    p.add_argument("--form")
    p.add_argument("--n", type=int)

    p = add("table", cmd_table, "all classes of a family")
    p.add_argument("--family", required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--n", type=int, required=True)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            parser.print_help(err)
            return 1
        _merge_input(args)
        data, text = args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except ValueError as exc:
        print(f"error: invalid input: {exc}", file=err)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return 1
    if args.json:
        print(json.dumps(data, indent=2), file=out)
    else:
        print(text, file=out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
