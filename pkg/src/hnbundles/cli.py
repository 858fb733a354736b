"""Command-line front end: bundle-spec parsing, subcommands, JSON/DOT
emission, and the brute-force check suites.

Exit codes: 0 success, 1 usage or parse error, 2 validation error,
3 internal invariant breach.
"""

import argparse
import json
import random
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .bundle import (Atom, PlainBundle, SlBundle, SoBundle, SpBundle,
                     is_semistable, underlying, vertical_degree,
                     vertical_degree_composite)
from .canon import (ad_degree, ad_degree_max_oracle, bh_conditions,
                    canonical_reduction, check_bh, hn_type)
from .errors import HnBundleError
from .hnfilt import (extend_with_perps, hn_filtration, hn_filtration_so,
                     hn_filtration_sp, hn_uniqueness_oracle)
from .lattice import fundamental_groups, levi_fundamental_groups, \
    obstruction_class, topological_type
from .parabolic import ParabolicIndex
from .rootsys import (GL, SL, SO, SP, GroupFamily, root_name, simple_roots,
                      weyl_orbit)
from .strata import (enumerate_strata, gl_dominance, hull_membership,
                     stratum_leq, to_dot)


class SpecError(HnBundleError):
    """Bundle-spec text failed to parse; message carries the position or rule."""


@dataclass(frozen=True)
class BundleSpec:
    family: GroupFamily
    bundle: object          # decorated or plain bundle, None for torus-split
    degrees: tuple          # torus-split degree vector, None for atom form


_HEAD = re.compile(r"^(gl|sl|sp|so)(\d+):(.*)$")


def parse_bundle_spec(text: str) -> BundleSpec:
    compact = "".join(text.split())
    m = _HEAD.match(compact)
    if not m:
        raise SpecError(f"expected 'family rank : body' at position 0 in {text!r}")
    kind, rank, body = m.group(1), int(m.group(2)), m.group(3)
    family = GroupFamily(kind, rank)
    if body.startswith("deg="):
        try:
            degrees = tuple(int(t) for t in body[4:].split(","))
        except ValueError:
            raise SpecError(f"bad integer in degree list {body[4:]!r}")
        if len(degrees) != family.cartan_dim:
            raise SpecError(
                f"rule degree-length: expected {family.cartan_dim} degrees")
        if kind == SL and sum(degrees) != 0:
            raise SpecError("rule sl-degree-zero: SL degrees must sum to 0")
        return BundleSpec(family, None, degrees)
    zero = 0
    if "|" in body:
        body, tail = body.split("|", 1)
        if not tail.startswith("z="):
            raise SpecError(f"expected 'z=INT' after '|', got {tail!r}")
        try:
            zero = int(tail[2:])
        except ValueError:
            raise SpecError(f"bad integer in zero-block rank {tail[2:]!r}")
        if zero < 0:
            raise SpecError("rule zero-rank: zero-block rank must be nonnegative")
    atoms = []
    for part in body.split(","):
        pm = re.match(r"^(-?\d+):(\d+)$", part)
        if not pm or int(pm.group(2)) < 1:
            raise SpecError(f"expected 'degree:rank' atom, got {part!r}")
        atoms.append(Atom(int(pm.group(1)), int(pm.group(2))))
    if kind in (GL, SL):
        if zero:
            raise SpecError("rule zero-block: only sp/so take a zero block")
        b = PlainBundle(tuple(atoms))
        if b.rank != rank:
            raise SpecError(f"rule rank-match: atoms have rank {b.rank}, spec says {rank}")
        if kind == SL:
            if b.degree != 0:
                raise SpecError("rule sl-degree-zero: SL bundle must have degree 0")
            return BundleSpec(family, SlBundle(b), None)
        return BundleSpec(family, b, None)
    if any(a.slope <= 0 for a in atoms):
        raise SpecError("rule positive-slope: sp/so atoms must have slope > 0")
    zpart = (Atom(0, zero),) if zero else ()
    cls = SpBundle if kind == SP else SoBundle
    try:
        b = cls(tuple(atoms), zpart)
    except (HnBundleError, ValueError) as exc:
        raise SpecError(f"rule decorated-shape: {exc}")
    if b.rank != rank:
        raise SpecError(f"rule rank-match: total rank {b.rank}, spec says {rank}")
    return BundleSpec(family, b, None)


def serialize_bundle_spec(spec: BundleSpec) -> str:
    head = f"{spec.family.kind}{spec.family.r}: "
    if spec.degrees is not None:
        return head + "deg=" + ",".join(str(d) for d in spec.degrees)
    b = spec.bundle
    if isinstance(b, SlBundle):
        b = b.underlying
    if isinstance(b, PlainBundle):
        return head + ",".join(f"{a.degree}:{a.rank}" for a in b.atoms)
    body = ",".join(f"{a.degree}:{a.rank}" for a in b.positive)
    if b.zero_rank:
        body += f" | z={b.zero_rank}"
    return head + body


def bundle_from_degrees(family: GroupFamily, degrees):
    """Torus-split bundle of the given degree vector."""
    if family.kind in (GL, SL):
        b = PlainBundle(tuple(Atom(d, 1) for d in degrees))
        return SlBundle(b) if family.kind == SL else b
    positive = tuple(Atom(abs(d), 1) for d in degrees if d != 0)
    zeros = 2 * sum(1 for d in degrees if d == 0) + (family.r % 2)
    zpart = tuple([Atom(0, 1)] * zeros)
    cls = SpBundle if family.kind == SP else SoBundle
    return cls(positive, zpart)


def _frac(x) -> str:
    return str(Fraction(x))


def _atom_list(atoms):
    return [[a.degree, a.rank] for a in atoms]


def _index_names(index: ParabolicIndex):
    return index.names()


_PRETTY = False


def _emit(doc) -> None:
    if _PRETTY:
        width = max(len(k) for k in doc)
        for key, value in doc.items():
            sys.stdout.write(f"{key.ljust(width)}  {json.dumps(value)}\n")
        return
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cmd_hn(args) -> int:
    spec = parse_bundle_spec(args.spec)
    if spec.degrees is not None:
        b = bundle_from_degrees(spec.family, spec.degrees)
    else:
        b = spec.bundle
    doc = {"command": "hn", "spec": serialize_bundle_spec(spec)}
    if isinstance(b, (PlainBundle, SlBundle)):
        filt = hn_filtration(b)
        doc["blocks"] = [_atom_list(q.atoms) for q in filt.quotients]
        doc["slopes"] = [_frac(s) for s in filt.slopes]
    else:
        filt = hn_filtration_sp(b) if isinstance(b, SpBundle) else hn_filtration_so(b)
        doc["blocks"] = [_atom_list(q.atoms) for q in filt.quotients]
        doc["middle_rank"] = sum(a.rank for a in filt.middle)
        doc["rank_flag"] = filt.rank_flag
        doc["full_blocks"] = [_atom_list(q.atoms)
                              for q in extend_with_perps(filt).quotients]
    doc["type"] = [_frac(c) for c in hn_type(b).mu]
    _emit(doc)
    return 0


def _cmd_semistable(args) -> int:
    spec = parse_bundle_spec(args.spec)
    b = bundle_from_degrees(spec.family, spec.degrees) \
        if spec.degrees is not None else spec.bundle
    _emit({"command": "semistable", "spec": serialize_bundle_spec(spec),
           "semistable": is_semistable(b)})
    return 0


def _parse_levi(family, tokens):
    names = {root_name(family, i): i for i in range(len(simple_roots(family)))}
    members = set()
    for t in tokens:
        if t not in names:
            raise SpecError(f"unknown simple root name {t!r}; choose from {sorted(names)}")
        members.add(names[t])
    return ParabolicIndex(family, frozenset(members))


def _cmd_pi1(args) -> int:
    family = GroupFamily(args.family, args.rank)
    if args.levi:
        index = _parse_levi(family, args.levi)
        der, pi1, ab = levi_fundamental_groups(family, index)
    else:
        der, pi1, ab = fundamental_groups(family)
    _emit({"command": "pi1", "family": f"{family.kind}{family.r}",
           "levi": _index_names(index) if args.levi else None,
           "der": der.describe(), "pi1": pi1.describe(), "ab": ab.describe()})
    return 0


def _cmd_canon(args) -> int:
    family = GroupFamily(args.family, args.rank)
    red = canonical_reduction(family, args.deg)
    levi_ss, degrees = check_bh(family, args.deg, red)
    doc = {"command": "canon", "family": f"{family.kind}{family.r}",
           "deg": list(args.deg),
           "mu": [_frac(c) for c in red.mu.mu],
           "index": _index_names(red.index),
           "ad_positive_count": len(red.ad_positive_roots),
           "ad_parabolic_rank": len(red.ad_parabolic_roots) + family.torus_dim,
           "levi_semistable": levi_ss,
           "char_degrees": [_frac(d) for d in degrees],
           "obstruction": _obstruction_doc(family, args.deg),
           "topological_type": [_frac(c) for c in topological_type(family, args.deg)]}
    if args.oracle:
        best, argmax = ad_degree_max_oracle(family, args.deg)
        doc["oracle_max"] = best
        doc["oracle_attained"] = ad_degree(family, red.index, red.mu.mu) == best
        doc["oracle_argmax_count"] = len(argmax)
    _emit(doc)
    return 0


def _obstruction_doc(family, a):
    free, torsion = obstruction_class(family, a)
    return {"free": list(free), "torsion": list(torsion)}


def _cmd_vdeg(args) -> int:
    family = GroupFamily(args.family, args.E[1])
    v = vertical_degree(family, tuple(args.E), tuple(args.F))
    w = vertical_degree_composite(family, tuple(args.E), tuple(args.F))
    if v != w:
        raise AssertionError("vertical degree routes disagree")
    _emit({"command": "vdeg", "family": f"{family.kind}{family.r}",
           "E": list(args.E), "F": list(args.F), "vertical_degree": v})
    return 0


def _cmd_strata(args) -> int:
    family = GroupFamily(args.family, args.rank)
    poset = enumerate_strata(family, args.bound, args.fix_type)
    dot = to_dot(poset)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dot)
    _emit({"command": "strata", "family": f"{family.kind}{family.r}",
           "bound": args.bound,
           "labels": [{"mu": [_frac(c) for c in s.mu.mu],
                       "index": _index_names(s.index)} for s in poset.labels],
           "covers": sorted(list(e) for e in poset.relation),
           "dot_path": args.dot})
    return 0


def _suite_hn(rng, cases):
    passed = 0
    for _ in range(cases):
        atoms = tuple(Atom(rng.randint(-3, 3), rng.randint(1, 2))
                      for _ in range(rng.randint(1, 4)))
        b = PlainBundle(atoms)
        if b.rank <= 6:
            assert hn_uniqueness_oracle(b)
        filt = hn_filtration(b)
        slopes = filt.slopes
        assert list(slopes) == sorted(slopes, reverse=True)
        positive = tuple(Atom(rng.randint(1, 3), 1) for _ in range(rng.randint(0, 2)))
        sp = SpBundle(positive, tuple([Atom(0, 1)] * (2 * rng.randint(0, 1))))
        if sp.rank:
            assert extend_with_perps(hn_filtration_sp(sp)).quotients == \
                hn_filtration(underlying(sp)).quotients
        passed += 1
    return passed


def _suite_canon(rng, cases):
    passed = 0
    for _ in range(cases):
        family = rng.choice([GroupFamily(GL, 3), GroupFamily(SP, 4),
                             GroupFamily(SO, 5)])
        a = tuple(rng.randint(-2, 2) for _ in range(family.cartan_dim))
        red = canonical_reduction(family, a)
        best, _ = ad_degree_max_oracle(family, a)
        assert ad_degree(family, red.index, red.mu.mu) == best
        levi_ss, degrees = check_bh(family, a, red)
        assert levi_ss and all(d > 0 for d in degrees)
        passed += 1
    return passed


def _suite_hull(rng, cases):
    passed = 0
    family = GroupFamily(GL, 3)
    for _ in range(cases):
        mu = tuple(sorted((rng.randint(-3, 3) for _ in range(3)), reverse=True))
        shift = sum(mu) - sum(m := tuple(
            sorted((rng.randint(-3, 3) for _ in range(3)), reverse=True)))
        nu = (m[0] + shift, m[1], m[2])
        if list(nu) != sorted(nu, reverse=True):
            continue
        assert hull_membership(family, mu, nu) == gl_dominance(mu, nu)
        passed += 1
    return passed


def _suite_lattice(rng, cases):
    passed = 0
    for _ in range(cases):
        family = rng.choice([GroupFamily(GL, 4), GroupFamily(SL, 3),
                             GroupFamily(SP, 6), GroupFamily(SO, 7)])
        a = [rng.randint(-3, 3) for _ in range(family.cartan_dim)]
        if family.kind == SL:
            a[-1] -= sum(a)
        b = [rng.randint(-3, 3) for _ in range(family.cartan_dim)]
        if family.kind == SL:
            b[-1] -= sum(b)
        fa, ta = obstruction_class(family, a)
        fb, tb = obstruction_class(family, b)
        fs, ts = obstruction_class(family, [x + y for x, y in zip(a, b)])
        assert fs == tuple(x + y for x, y in zip(fa, fb))
        _, pi1, _ = fundamental_groups(family)
        assert ts == tuple((x + y) % d for x, y, d in zip(ta, tb, pi1.torsion))
        for w in weyl_orbit(family, tuple(a)):
            assert topological_type(family, w) == topological_type(family, a)
        passed += 1
    return passed


_SUITES = {"hn": _suite_hn, "canon": _suite_canon,
           "hull": _suite_hull, "lattice": _suite_lattice}


def _cmd_check(args) -> int:
    rng = random.Random(args.seed)
    passed = _SUITES[args.suite](rng, args.cases)
    _emit({"command": "check", "suite": args.suite, "seed": args.seed,
           "cases": args.cases, "passed": passed})
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hnbundles",
                                description="exact HN filtration toolkit")
    p.add_argument("--pretty", action="store_true",
                   help="aligned key/value output instead of JSON")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("hn", help="HN filtration and type of a bundle spec")
    s.add_argument("spec")
    s.set_defaults(fn=_cmd_hn)

    s = sub.add_parser("semistable", help="semistability of a bundle spec")
    s.add_argument("spec")
    s.set_defaults(fn=_cmd_semistable)

    s = sub.add_parser("pi1", help="fundamental group triple")
    s.add_argument("--family", required=True, choices=[GL, SL, SP, SO])
    s.add_argument("--rank", required=True, type=int)
    s.add_argument("--levi", nargs="*", default=None,
                   help="simple-root names of the parabolic index")
    s.set_defaults(fn=_cmd_pi1)

    s = sub.add_parser("canon", help="canonical reduction of torus-split data")
    s.add_argument("--family", required=True, choices=[GL, SL, SP, SO])
    s.add_argument("--rank", required=True, type=int)
    s.add_argument("--deg", required=True,
                   type=lambda t: tuple(int(x) for x in t.split(",")))
    s.add_argument("--oracle", action="store_true")
    s.set_defaults(fn=_cmd_canon)

    s = sub.add_parser("vdeg", help="vertical degree of a flag reduction")
    s.add_argument("--family", required=True, choices=[GL, SL, SP, SO])
    s.add_argument("--E", required=True,
                   type=lambda t: tuple(int(x) for x in t.split(",")))
    s.add_argument("--F", required=True,
                   type=lambda t: tuple(int(x) for x in t.split(",")))
    s.set_defaults(fn=_cmd_vdeg)

    s = sub.add_parser("strata", help="stratification poset")
    s.add_argument("--family", required=True, choices=[GL, SL, SP, SO])
    s.add_argument("--rank", required=True, type=int)
    s.add_argument("--bound", required=True, type=int)
    s.add_argument("--dot", default=None)
    s.add_argument("--fix-type", dest="fix_type", type=int, default=None)
    s.set_defaults(fn=_cmd_strata)

    s = sub.add_parser("check", help="run a brute-force oracle suite")
    s.add_argument("--suite", required=True, choices=sorted(_SUITES))
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cases", type=int, default=100)
    s.set_defaults(fn=_cmd_check)
    return p


def run_command(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    global _PRETTY
    _PRETTY = args.pretty
    try:
        return args.fn(args)
    except SpecError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except (HnBundleError, ValueError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
