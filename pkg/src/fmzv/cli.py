"""Command-line front end.

Subcommands::

    at-poly                       Anderson-Thakur polynomials H_0..H_N
    fmzv / fcmpl                  windows of residues at chosen primes
    verify main-theorem|interpolation|stuffle|truncated-chang
    discover                      F_p-relations zeta(s) zeta(s') = sum f zeta(s'')

Every command prints one JSON document (or CSV with ``--csv``).  Exit status
is 0 on success, 1 if any verification fails, 2 on usage errors.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, field, fields

from . import __version__
from .budget import DEFAULT_BUDGET, budget_limit
from .carlitz import at_polys, compositions_up_to
from .encoding import parse_composition, parse_point, parse_prime, parse_poly
from .errors import (BudgetExceeded, ExcludedPrime, FMZVError, MissingModulus, NonPrimeP,
                     NoSolution, NotIrreducible, ReducibleModulus, ValidationFailed)
from .evaluator import window
from .field import make_field
from .identities import discover_relation, verify_stuffle
from .poly import irreducibles, primes_up_to
from .sweeps import (stuffle_pairs, sweep_interpolation, sweep_main_theorem, sweep_stuffle,
                     sweep_truncated_chang)

SCHEMA_VERSION = "1"


class UsageError(Exception):
    pass


@dataclass
class JobConfig:
    """Everything that determines a run.  ``jobs`` and ``fmt`` do not affect results."""

    command: str
    identity: str = None
    p: int = None
    e: int = 1
    modulus: str = None
    prime_deg_max: int = None
    primes: list = field(default_factory=list)
    s: str = None
    s2: str = None
    u: str = None
    u2: str = None
    d: int = None
    dmax: int = None
    nmax: int = None
    weight_max: int = None
    depth_max: int = None
    s_max: int = None
    i_max: int = None
    points: int = None
    validation_deg: int = None
    seed: int = 0
    budget: int = DEFAULT_BUDGET
    jobs: int = 1
    fmt: str = "json"
    output: str = None

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        names = {f.name for f in fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise ValueError(f"unknown JobConfig keys: {sorted(unknown)}")
        return cls(**data)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def params(self):
        """The result-determining part, echoed in every report."""
        out = self.to_dict()
        for key in ("jobs", "fmt", "output", "command", "identity"):
            out.pop(key)
        return {k: v for k, v in out.items() if v is not None and v != []}


def _split_q(q):
    for p in range(2, q + 1):
        if q % p == 0:
            e, n = 0, q
            while n % p == 0:
                n //= p
                e += 1
            if n != 1:
                raise UsageError(f"q = {q} is not a prime power")
            return p, e
    raise UsageError(f"q = {q} is not a prime power")


def _common_parser():
    c = argparse.ArgumentParser(add_help=False)
    g = c.add_argument_group("field")
    g.add_argument("--p", type=int, help="characteristic")
    g.add_argument("--e", type=int, default=None, help="extension degree (default 1)")
    g.add_argument("--q", type=int, help="field size p^e (alternative to --p/--e)")
    g.add_argument("--modulus", help="F_p-polynomial [c0,...,1] defining F_q when e > 1")
    g = c.add_argument_group("primes")
    g.add_argument("--prime-deg-max", type=int, help="use all monic irreducibles up to this degree")
    g.add_argument("--prime", action="append", default=[], help="explicit prime [c0,...,1]; repeatable")
    g = c.add_argument_group("arguments")
    g.add_argument("--s", help="composition, e.g. 1,2")
    g.add_argument("--s2", help="second composition (stuffle, discover)")
    g.add_argument("--u", help='evaluation point, e.g. "1,1/θ" or "[0,1]/[1,1],2"')
    g.add_argument("--u2", help="second evaluation point (stuffle)")
    g.add_argument("--d", type=int, help="truncation level")
    g.add_argument("--nmax", type=int, help="largest n for at-poly")
    g = c.add_argument_group("run")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--jobs", type=int, default=1, help="worker processes")
    g.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="enumeration cap per call")
    fmt = g.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv")
    g.add_argument("--output", help="write to this path instead of stdout")
    return c


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser():
    common = _common_parser()
    parser = _Parser(prog="fmzv", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("at-poly", parents=[common], help="Anderson-Thakur polynomials")
    sub.add_parser("fmzv", parents=[common], help="FMZV window")
    sub.add_parser("fcmpl", parents=[common], help="FCMPL window")

    ver = sub.add_parser("verify", help="run an identity verifier")
    vsub = ver.add_subparsers(dest="identity", required=True, parser_class=_Parser)
    mt = vsub.add_parser("main-theorem", parents=[common])
    mt.add_argument("--weight-max", type=int, default=None)
    mt.add_argument("--depth-max", type=int, default=None)
    it = vsub.add_parser("interpolation", parents=[common])
    it.add_argument("--s-max", type=int, default=None)
    it.add_argument("--i-max", type=int, default=None)
    st = vsub.add_parser("stuffle", parents=[common])
    st.add_argument("--weight-max", type=int, default=None)
    st.add_argument("--depth-max", type=int, default=None)
    st.add_argument("--points", type=int, default=None)
    tc = vsub.add_parser("truncated-chang", parents=[common])
    tc.add_argument("--weight-max", type=int, default=None)
    tc.add_argument("--dmax", type=int, default=None)

    disc = sub.add_parser("discover", parents=[common], help="find F_p product relations")
    disc.add_argument("--validation-deg", type=int, default=None,
                      help="degree of held-out primes (default prime-deg-max + 1)")
    return parser


def parse_config(argv) -> JobConfig:
    ns = build_parser().parse_args(argv)
    p, e = ns.p, ns.e
    if ns.q is not None:
        qp, qe = _split_q(ns.q)
        if (p is not None and p != qp) or (e is not None and e != qe):
            raise UsageError(f"--q {ns.q} contradicts --p/--e")
        p, e = qp, qe
    if p is None:
        raise UsageError("the field needs --p (and optionally --e) or --q")
    cfg = JobConfig(command=ns.command, identity=getattr(ns, "identity", None), p=p,
                    e=1 if e is None else e, modulus=ns.modulus,
                    prime_deg_max=ns.prime_deg_max, primes=list(ns.prime), s=ns.s, s2=ns.s2,
                    u=ns.u, u2=ns.u2, d=ns.d, nmax=ns.nmax, seed=ns.seed, budget=ns.budget,
                    jobs=ns.jobs, fmt=ns.fmt or "json", output=ns.output)
    for name in ("weight_max", "depth_max", "dmax", "s_max", "i_max", "points", "validation_deg"):
        if hasattr(ns, name):
            setattr(cfg, name, getattr(ns, name))
    return cfg


# -- command bodies -------------------------------------------------------------

def _field(cfg):
    modulus = None
    if cfg.modulus:
        modulus = [int(x) for x in cfg.modulus.strip("[] ").split(",")]
    return make_field(cfg.p, cfg.e, modulus)


def _primes(F, cfg, default_deg=None):
    if cfg.primes:
        return [parse_prime(F, x) for x in cfg.primes]
    deg = cfg.prime_deg_max if cfg.prime_deg_max is not None else default_deg
    if deg is None:
        raise UsageError("choose primes with --prime or --prime-deg-max")
    return primes_up_to(F, deg)


def _need(cfg, *names):
    for name in names:
        if getattr(cfg, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for {cfg.command}")


def _cmd_at_poly(F, cfg):
    N = cfg.nmax if cfg.nmax is not None else F.q
    return {"results": [[list(pair) for pair in H.to_pairs()] for H in at_polys(F, N)]}, 0


def _cmd_window(F, cfg):
    _need(cfg, "s")
    s = parse_composition(cfg.s)
    primes = _primes(F, cfg)
    if cfg.command == "fmzv":
        w = window("fmzv", s, primes)
    else:
        _need(cfg, "u")
        w = window("fcmpl", s, primes, u=parse_point(F, cfg.u))
    out = w.to_dict()
    out["q"] = F.q
    return {"results": [out]}, 0


def _status(reports):
    return 0 if all(r.equal for r in reports) else 1


def _cmd_main_theorem(F, cfg):
    primes = _primes(F, cfg, default_deg=2)
    if cfg.s is not None:
        comps = [parse_composition(cfg.s)]
    else:
        wmax = cfg.weight_max if cfg.weight_max is not None else 3
        depth = cfg.depth_max if cfg.depth_max is not None else 3
        comps = compositions_up_to(wmax, depth)
    reports, excluded = sweep_main_theorem(F, comps, primes, cfg.jobs)
    return {"results": [r.to_dict() for r in reports], "excluded": excluded}, _status(reports)


def _cmd_interpolation(F, cfg):
    i_max = cfg.i_max if cfg.i_max is not None else 3
    if cfg.s is not None:
        s = parse_composition(cfg.s)
        if s.depth != 1:
            raise UsageError("interpolation takes a single integer --s")
        s_values = [s[0]]
    else:
        s_values = range(1, (cfg.s_max if cfg.s_max is not None else 4) + 1)
    reports = sweep_interpolation(F, s_values, i_max, cfg.jobs)
    return {"results": [r.to_dict() for r in reports]}, _status(reports)


def _cmd_stuffle(F, cfg):
    primes = _primes(F, cfg, default_deg=2)
    if cfg.s is not None:
        _need(cfg, "s2", "u", "u2")
        s, s2 = parse_composition(cfg.s), parse_composition(cfg.s2)
        u, u2 = parse_point(F, cfg.u), parse_point(F, cfg.u2)
        reports, excluded = [], []
        for P in primes:
            try:
                reports.append(verify_stuffle(s, s2, u, u2, P))
            except ExcludedPrime as exc:
                excluded.append({"prime": str(P), "reason": exc.reason})
        return {"results": [r.to_dict() for r in reports], "excluded": excluded}, _status(reports)
    wmax = cfg.weight_max if cfg.weight_max is not None else 4
    depth = cfg.depth_max if cfg.depth_max is not None else 2
    points = cfg.points if cfg.points is not None else 5
    reports = sweep_stuffle(F, stuffle_pairs(wmax, depth), primes, points, cfg.seed, cfg.jobs)
    return {"results": [r.to_dict() for r in reports]}, _status(reports)


def _cmd_truncated_chang(F, cfg):
    if cfg.d is not None:
        d_values = [cfg.d]
    else:
        d_values = range((cfg.dmax if cfg.dmax is not None else 3) + 1)
    if cfg.s is not None:
        comps = [parse_composition(cfg.s)]
    else:
        comps = compositions_up_to(cfg.weight_max if cfg.weight_max is not None else 4)
    reports = sweep_truncated_chang(F, comps, d_values, cfg.jobs)
    return {"results": [r.to_dict() for r in reports]}, _status(reports)


def _cmd_discover(F, cfg):
    _need(cfg, "s", "s2")
    s, s2 = parse_composition(cfg.s), parse_composition(cfg.s2)
    probes = _primes(F, cfg, default_deg=3)
    vdeg = cfg.validation_deg
    if vdeg is None:
        vdeg = max(P.degree for P in probes) + 1
    validation = [P for P in irreducibles(F, vdeg) if P not in set(probes)]
    try:
        cand = discover_relation(s, s2, probes, validation)
    except ValidationFailed as exc:
        out = exc.candidate.to_dict() if exc.candidate else {}
        out["error"] = str(exc)
        return {"results": [out]}, 1
    except NoSolution as exc:
        return {"results": [{"s": str(s), "s2": str(s2), "validated": False,
                             "error": str(exc)}]}, 1
    return {"results": [cand.to_dict()]}, 0


_VERIFY = {
    "main-theorem": _cmd_main_theorem,
    "interpolation": _cmd_interpolation,
    "stuffle": _cmd_stuffle,
    "truncated-chang": _cmd_truncated_chang,
}


def execute(cfg: JobConfig):
    """Run a parsed configuration; returns ``(document, exit_code)``."""
    F = _field(cfg)
    with budget_limit(cfg.budget):
        if cfg.command == "at-poly":
            body, code = _cmd_at_poly(F, cfg)
        elif cfg.command in ("fmzv", "fcmpl"):
            body, code = _cmd_window(F, cfg)
        elif cfg.command == "verify":
            body, code = _VERIFY[cfg.identity](F, cfg)
        elif cfg.command == "discover":
            body, code = _cmd_discover(F, cfg)
        else:  # pragma: no cover - argparse restricts choices
            raise UsageError(f"unknown command {cfg.command}")
    command = cfg.command if cfg.identity is None else f"{cfg.command} {cfg.identity}"
    doc = {"schema_version": SCHEMA_VERSION, "command": command, "q": F.q,
           "params": cfg.params()}
    doc.update(body)
    return doc, code


def _flatten(value):
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    return value


def render(doc, fmt="json") -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    rows = []
    for item in doc["results"]:
        if isinstance(item, dict) and "entries" in item:
            for e in item["entries"]:
                rows.append({"label": item["label"], "prime": e["prime"],
                             "residue": e["residue"], "excluded": ""})
            for e in item["excluded"]:
                rows.append({"label": item["label"], "prime": e["prime"],
                             "residue": "", "excluded": e["reason"]})
        elif isinstance(item, dict):
            rows.append({k: _flatten(v) for k, v in item.items() if k != "breakdown"})
        else:
            rows.append({"n": len(rows), "H": _flatten(item)})
    buf = io.StringIO()
    names = []
    for r in rows:
        names.extend(k for k in r if k not in names)
    writer = csv.DictWriter(buf, fieldnames=names, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


# bad parameters rather than failed computations
_USAGE_ERRORS = (UsageError, NonPrimeP, ReducibleModulus, MissingModulus, NotIrreducible,
                 BudgetExceeded, ValueError)


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cfg = parse_config(argv)
        doc, code = execute(cfg)
    except SystemExit as exc:  # --help / --version
        return exc.code or 0
    except _USAGE_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 2
    except FMZVError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    text = render(doc, cfg.fmt)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
