"""Batch command-line surface: every computation is driven from a JobSpec
and emits deterministic JSON (sorted keys, exact rational strings).

Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field as dc_field

from .algebra import DEFAULT_CAP, CapExceeded, NilAlgebra, Pattern
from .characters import (GroupTable, exp_kirillov, kirillov, supercharacter,
                         theta_lambda, xi)
from .chain import chain_compute
from .duals import Functional, orbit
from .exotic import (corner_character_analysis, exotic_report,
                     verify_chain_closed_forms)
from .scalars import field_make, is_prime


@dataclass
class JobSpec:
    """Normalized description of one CLI invocation; round-trips through
    JSON losslessly."""

    command: str
    q: int = 2
    modulus: list = None
    n: int = 0
    r: int = 0
    lam: list = dc_field(default_factory=list)
    which: str = ""
    cap: int = DEFAULT_CAP
    out: str = ""

    def to_json(self):
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text):
        return cls(**json.loads(text))


def _factor_prime_power(q):
    if q < 2:
        raise ValueError(f"q = {q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    if q != 1 or not is_prime(p):
        raise ValueError("q is not a prime power")
    return p, e


def _field_for(spec):
    p, e = _factor_prime_power(spec.q)
    return field_make(p, e, spec.modulus)


def _parse_lambda(text):
    entries = json.loads(text)
    if not isinstance(entries, list):
        raise ValueError("lambda must be a JSON list of [i, j, c] triples")
    out = []
    for item in entries:
        if not (isinstance(item, list) and len(item) == 3):
            raise ValueError(f"bad lambda entry {item!r}")
        out.append([int(item[0]), int(item[1]), int(item[2])])
    return out


# ---------------------------------------------------------------------------
# serialization


def ser_cyclotomic(c):
    return {"m": c.m, "coeffs": [str(x) for x in c.coeffs]}


def ser_functional(lam):
    return [[i, j, c] for (i, j), c in sorted(lam.entries().items())]


def ser_matrix_key(key):
    return [[i, j, c] for (i, j), c in key]


def ser_subspace(space):
    order = space.pattern.order
    basis = []
    for row in space.rows:
        basis.append([[order[k][0], order[k][1], v] for k, v in row])
    return {
        "dim": space.dim,
        "pivot_positions": [[order[k][0], order[k][1]] for k in space.pivots],
        "basis": basis,
    }


def ser_partition(partition):
    return partition.sorted_parts()


# ---------------------------------------------------------------------------
# commands


def cmd_chain(spec):
    field = _field_for(spec)
    algebra = NilAlgebra.pattern_algebra(Pattern.full(spec.n), field)
    lam = Functional.from_entries(algebra,
                                  {(i, j): c for i, j, c in spec.lam})
    ch = chain_compute(algebra, lam)
    return {
        "command": "chain",
        "n": spec.n,
        "q": spec.q,
        "lambda": ser_functional(lam),
        "d": ch.d,
        "dims_l": [s.dim for s in ch.l_list],
        "dims_s": [s.dim for s in ch.s_list],
        "l": [ser_subspace(s) for s in ch.l_list[1:]],
        "s": [ser_subspace(s) for s in ch.s_list[1:]],
        "l_bar": ser_subspace(ch.l_bar),
        "s_bar": ser_subspace(ch.s_bar),
        "xi_degree_exponent": ch.degree_exponent,
        "xi_norm_exponent": ch.norm_exponent,
        "chi_degree_exponent": ch.chi_degree_exponent,
        "chi_norm_exponent": ch.chi_norm_exponent,
    }, 0


def cmd_exotic(spec):
    field = _field_for(spec)
    n = spec.n if spec.n else 6 * spec.r + 1
    rep = exotic_report(spec.r, field, n, spec.cap)
    body = {
        "command": "exotic",
        "r": rep.r,
        "q": rep.q,
        "p": rep.p,
        "n": rep.n,
        "dim_ambient": rep.dim_ambient,
        "dim_l_bar": rep.dim_l_bar,
        "dim_s_bar": rep.dim_s_bar,
        "xi_degree_exponent": rep.xi_degree_exponent,
        "xi_norm_exponent": rep.xi_norm_exponent,
        "constituent_count": rep.constituent_count,
        "constituent_degree_exponent": rep.constituent_degree_exponent,
        "kirillov_degree_exponent": rep.kirillov_degree_exponent,
        "xi_set_size_exponent": rep.xi_set_size_exponent,
        "value_field_conductor": rep.value_field_conductor,
        "value_field_min_level": rep.value_field_min_level,
        "kirillov_is_character": rep.kirillov_is_character,
        "exp_kirillov_is_character": rep.exp_kirillov_is_character,
        "shape": ser_partition(rep.shape),
        "checks": {
            "chain_closed_forms": rep.technical.matches,
            "final_bilinear": rep.technical.final_bilinear_ok,
            "first_step_obstructions": rep.technical.perp_l_matches
            and rep.technical.perp_s_matches,
            "quotient_split": rep.split_checks,
            "nu_central": rep.nu_central,
        },
        "provenance": rep.provenance,
        "notes": rep.notes,
    }
    return body, 0 if rep.ok else 1


def cmd_verify(spec):
    field = _field_for(spec)
    tech, _, _ = verify_chain_closed_forms(spec.r, field)
    body = {
        "command": "verify",
        "r": tech.r,
        "q": tech.q,
        "matches": tech.matches,
        "dim_ambient": tech.dim_ambient,
        "dim_l_bar": tech.dim_l_bar,
        "dim_s_bar": tech.dim_s_bar,
        "stabilization": tech.stabilization,
        "final_bilinear": tech.final_bilinear_ok,
        "first_step_obstruction_sets": tech.perp_l_matches
        and tech.perp_s_matches,
        "pass": tech.ok,
    }
    return body, 0 if tech.ok else 1


def cmd_kappa(spec):
    field = _field_for(spec)
    rep = corner_character_analysis(spec.n, field, spec.cap)
    body = {
        "command": "kappa",
        "n": rep.n,
        "q": rep.q,
        "p": rep.p,
        "group_size": rep.group_size,
        "chi_degree": rep.chi_degree,
        "chi_formula_matches": rep.chi_formula_matches,
        "constituent_count": rep.constituent_count,
        "constituents_distinct": rep.constituents_distinct,
        "constituents_sum_matches": rep.constituents_sum_matches,
        "max_constituent_conductor": rep.max_constituent_conductor,
        "max_min_level": rep.max_min_level,
        "max_element_order": rep.max_element_order,
        "kirillov_is_character": rep.kirillov_is_character,
        "kirillov_witness": _ser_witness(rep.kirillov_witness),
        "exp_kirillov_is_character": rep.exp_kirillov_is_character,
        "exp_kirillov_witness": _ser_witness(rep.exp_kirillov_witness),
    }
    return body, 0


def _ser_witness(witness):
    if witness is None:
        return None
    return [ser_matrix_key(k) for k in witness]


def cmd_orbit(spec):
    field = _field_for(spec)
    algebra = NilAlgebra.pattern_algebra(Pattern.full(spec.n), field)
    lam = Functional.from_entries(algebra,
                                  {(i, j): c for i, j, c in spec.lam})
    orb = orbit(lam, spec.which, spec.cap)
    return {
        "command": "orbit",
        "n": spec.n,
        "q": spec.q,
        "lambda": ser_functional(lam),
        "which": spec.which,
        "size": len(orb),
        "orbit": [ser_functional(f) for f in orb],
    }, 0


def cmd_table(spec):
    field = _field_for(spec)
    algebra = NilAlgebra.pattern_algebra(Pattern.full(spec.n), field)
    group = GroupTable.from_algebra(algebra, spec.cap)
    lam = Functional.from_entries(algebra,
                                  {(i, j): c for i, j, c in spec.lam})
    if spec.which == "theta":
        fn = theta_lambda(group, lam)
    elif spec.which == "kirillov":
        fn = kirillov(group, lam, spec.cap)
    elif spec.which == "expkirillov":
        fn = exp_kirillov(group, lam, spec.cap)
    elif spec.which == "superchar":
        fn = supercharacter(group, lam, spec.cap)
    elif spec.which == "xi":
        fn = xi(algebra, lam, group, spec.cap).table
        if fn is None:
            raise CapExceeded("xi value table exceeds the enumeration cap")
    else:
        raise ValueError(f"unknown table kind {spec.which!r}")
    return {
        "command": "table",
        "n": spec.n,
        "q": spec.q,
        "lambda": ser_functional(lam),
        "which": spec.which,
        "degree": ser_cyclotomic(fn.degree),
        "values": [
            {"g": ser_matrix_key(g.key()), "value": ser_cyclotomic(v)}
            for g, v in zip(group.elements, fn.values)
        ],
    }, 0


COMMANDS = {
    "chain": cmd_chain,
    "exotic": cmd_exotic,
    "verify": cmd_verify,
    "kappa": cmd_kappa,
    "orbit": cmd_orbit,
    "table": cmd_table,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="utchar",
        description="Exact supercharacter / Kirillov computations on "
                    "unitriangular and algebra groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n=False, r=False, lam=False, which=None):
        p.add_argument("--q", type=int, required=True,
                       help="field size, a prime power")
        p.add_argument("--modulus", type=str, default=None,
                       help="comma-separated modulus coefficients, low "
                            "degree first (optional)")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                       help="enumeration cap")
        p.add_argument("--out", type=str, default="",
                       help="write JSON to this file instead of stdout")
        if n:
            p.add_argument("--n", type=int, required=True)
        if r:
            p.add_argument("--r", type=int, required=True)
        if lam:
            p.add_argument("--lambda", dest="lam", type=str, default="[]",
                           help='JSON list of [i, j, c] entries, 1-based')
        if which:
            p.add_argument("--which", type=str, required=True,
                           choices=which)

    common(sub.add_parser("chain", help="kernel chain of a functional"),
           n=True, lam=True)
    p_exotic = sub.add_parser("exotic", help="large-field character report")
    common(p_exotic, r=True)
    p_exotic.add_argument("--n", type=int, default=0,
                          help="ambient size (default 6r+1)")
    common(sub.add_parser("verify",
                          help="closed-form chain verification"), r=True)
    common(sub.add_parser("kappa",
                          help="corner supercharacter analysis on the "
                               "constant-diagonal group"), n=True)
    common(sub.add_parser("orbit", help="orbit of a functional"),
           n=True, lam=True,
           which=["left", "right", "two-sided", "coadjoint"])
    common(sub.add_parser("table", help="full value table of a function"),
           n=True, lam=True,
           which=["theta", "kirillov", "expkirillov", "superchar", "xi"])
    return parser


def spec_from_args(args):
    modulus = None
    if getattr(args, "modulus", None):
        modulus = [int(x) for x in args.modulus.split(",")]
    return JobSpec(
        command=args.command,
        q=args.q,
        modulus=modulus,
        n=getattr(args, "n", 0) or 0,
        r=getattr(args, "r", 0) or 0,
        lam=_parse_lambda(getattr(args, "lam", "[]") or "[]"),
        which=getattr(args, "which", "") or "",
        cap=args.cap,
        out=args.out,
    )


def run(spec):
    return COMMANDS[spec.command](spec)


def render(body):
    return json.dumps(body, sort_keys=True, separators=(",", ":")) + "\n"


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        spec = spec_from_args(args)
        body, code = run(spec)
    except CapExceeded as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except (ValueError, AssertionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    text = render(body)
    if spec.out:
        with open(spec.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
