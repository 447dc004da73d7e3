"""Command-line entry point.

Every subcommand produces one report document (JSON, CSV or markdown) whose
checks each name the equality oracle that decided them.  Exit status is 0 when
every check passes, 1 on a failed check or a computation error, and 2 on a
usage or validation error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import __version__
from ._catalogue import zero_block_idempotent
from .cartan import RootSystem, Weight, bilinear, parse_weight, root_system, two_rho, weyl_dim
from .coordring import BUDGET_ENV, DEFAULT_D, CoordElement, Verdict, counit, decide, default_budget, u, ustar
from .flags import (
    LeviSubset,
    ad_invariance,
    equivariance_check,
    generators,
    grassmannian_projection,
    grassmannian_vector,
    in_flag,
    levi_invariant,
)
from .hochschild import (
    CocycleSpec,
    OutOfContract,
    TwistSpec,
    boundary,
    boundary_identity,
    cocycle_check,
    counit_side_symmetry,
    counit_twist_invariant,
    eta_apply,
    leibniz_check,
    random_chain,
    two_cycle,
)
from .matunits import (
    CoeffMatrix,
    antipode_relations,
    build_P,
    build_Q,
    is_flag_supported,
    is_projection,
    k2rho_diag,
    matrix_unit_suite,
    qtrace,
    theta_conjugation_check,
    unit_M,
    unit_N,
)
from .pairings import CycleSpec, chi, chi_tilde, family_certificate, family_ratio, independence_certificate, pairing_report
from .repbuild import E, F, RepBuildError, build_irrep, relation_checks
from .scalar import ONE, ZERO, RationalScalar, Scalar, qnum

SCHEMA = "artifact-report/1"
FORMATS = ("json", "csv", "markdown")
FAMILIES = ("n-omega1-plus-omega2",)
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class ConfigError(ValueError):
    """Invalid command-line input; reported with exit status 2."""


# -- configuration ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProjSpec:
    """A coefficient-matrix spec: ``diag:c1,..``, ``unit:m,n``, ``weight:w``, ``diag-index:K``, ``zero-block``, ``identity``."""

    kind: str
    args: tuple = ()

    @classmethod
    def parse(cls, text: str) -> "ProjSpec":
        kind, _, rest = text.partition(":")
        kind = kind.strip()
        try:
            if kind == "diag":
                return cls(kind, tuple(Scalar.parse(x) for x in rest.split(",")))
            if kind in ("unit", "weight"):
                args = tuple(int(x) for x in rest.split(","))
                if kind == "unit" and (len(args) != 2 or min(args) < 1):
                    raise ValueError("unit needs two 1-based indices")
                return cls(kind, args)
            if kind == "diag-index":
                return cls(kind, (int(rest),))
            if kind in ("zero-block", "identity") and not rest:
                return cls(kind)
        except ValueError as exc:
            raise ConfigError(f"bad projection spec {text!r}: {exc}") from exc
        raise ConfigError(f"bad projection spec {text!r}")

    def __str__(self) -> str:
        if not self.args:
            return self.kind
        return f"{self.kind}:" + ",".join(str(x) for x in self.args)

    def resolve(self, rep) -> CoeffMatrix:
        n = rep.dim
        if self.kind == "identity":
            return CoeffMatrix.identity(n)
        if self.kind == "zero-block":
            try:
                return zero_block_idempotent(rep)
            except ValueError as exc:
                raise ConfigError(str(exc)) from exc
        if self.kind == "diag":
            if len(self.args) != n:
                raise ConfigError(f"diag spec has {len(self.args)} entries, representation has dimension {n}")
            return CoeffMatrix.diag(self.args)
        if self.kind == "unit":
            m, k = self.args
            if max(m, k) > n:
                raise ConfigError(f"unit index out of range 1..{n}")
            return CoeffMatrix.unit(n, m - 1, k - 1)
        coords = self.args
        if self.kind == "diag-index":
            if rep.rs.rank != 1:
                raise ConfigError("diag-index labels weights of rank-1 modules; use weight:w1,..,wr")
        if len(coords) != rep.rs.rank:
            raise ConfigError(f"weight label needs {rep.rs.rank} coordinates")
        idx = rep.indices_of_weight(Weight(coords))
        if not idx:
            raise ConfigError(f"{Weight(coords)} is not a weight of {rep.label}")
        return CoeffMatrix.diag([ONE if k in idx else ZERO for k in range(n)])


@dataclass
class RunConfig:
    """Parsed and validated options for one subcommand run."""

    command: str
    rs: RootSystem | None = None
    weight: Weight | None = None
    proj: tuple = ()
    budget: int = 5000
    D: int = DEFAULT_D
    fmt: str = "json"
    seed: int = 0
    options: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "command": self.command,
            "type": self.rs.name if self.rs else None,
            "weight": list(self.weight.coords) if self.weight else None,
            "proj": [str(p) for p in self.proj],
            "budget": self.budget,
            "D": self.D,
            "seed": self.seed,
        }
        out.update({k: v for k, v in sorted(self.options.items())})
        return out


def _common(p: argparse.ArgumentParser, rep: bool = True, proj: bool = False) -> None:
    if rep:
        p.add_argument("--type", dest="rtype", help="root system, e.g. A2, B2, G2")
        p.add_argument("--weight", help="highest weight in fundamental-weight coordinates, e.g. 1,1")
    if proj:
        p.add_argument("--proj", action="append", nargs="+", default=[],
                       help="diag:c1,..  unit:m,n  weight:w  diag-index K  zero-block  identity")
    p.add_argument("--budget", type=int, default=None,
                   help=f"closure budget of the exact oracle (default 5000, env {BUDGET_ENV})")
    p.add_argument("--D", type=int, default=DEFAULT_D, help="degree of the bounded fallback oracle")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", dest="fmt", choices=FORMATS, default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="artifact", description="Exact twisted Hochschild computations for U_q(g)")
    parser.add_argument("--version", action="version", version=f"artifact {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-rep", help="build an irreducible module and check the defining relations")
    _common(p)
    p.add_argument("--max-depth", type=int, default=None, help="build only the top slice of this depth")
    p.add_argument("--matrices", action="store_true", help="include the E_i, F_i matrices")

    p = sub.add_parser("units", help="matrix-unit and antipode identities")
    _common(p)
    p.add_argument("--check", choices=("all", "product", "counit", "qtrace", "antipode"), default="all")
    p.add_argument("--sample", type=int, default=None, help="check only this many product pairs")

    p = sub.add_parser("cycle", help="the 2-cycle C(P), its boundary and its pairings")
    _common(p, proj=True)
    p.add_argument("--side", choices=("P", "Q", "both"), default="both")
    p.add_argument("--pair", default=None, help="cocycle roots, e.g. a=1,2")

    p = sub.add_parser("pair", help="closed-form, contraction and pipeline pairings")
    _common(p, proj=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--root", type=int, action="append", default=None)
    g.add_argument("--all-roots", action="store_true")
    p.add_argument("--no-pipeline", action="store_true", help="skip the chain pipeline")

    p = sub.add_parser("grassmannian", help="the Grassmannian projection on the sl_N fundamental module")
    _common(p, rep=False)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("flags", help="flag-manifold membership of matrix-unit entries")
    _common(p)
    p.add_argument("--check", choices=("membership",), default="membership")

    p = sub.add_parser("independence", help="linear-independence certificates")
    _common(p, proj=True)
    p.add_argument("--family", choices=FAMILIES, default=None)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--side", choices=("P", "Q", "both"), default="both")
    p.add_argument("--pipeline-max", type=int, default=4, help="cross-check with the chain pipeline up to this n")

    p = sub.add_parser("verify-all", help="run the full identity suite")
    _common(p)
    p.add_argument("--sample", type=int, default=None, help="product pairs for large modules (default 64 when dim > 4)")
    p.add_argument("--chains", type=int, default=4, help="random chains for b^2 = 0")
    p.add_argument("--no-examples", action="store_true", help="skip the fixed worked examples")
    return parser


def _rs(text: str) -> RootSystem:
    try:
        return root_system(text)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def parse_config(argv: Sequence[str] | None = None) -> RunConfig:
    """Parse and validate; argparse errors exit 2, semantic errors raise :class:`ConfigError`."""
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(command=ns.command, D=ns.D, fmt=ns.fmt, seed=ns.seed)
    try:
        cfg.budget = default_budget() if ns.budget is None else ns.budget
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if cfg.budget < 1 or cfg.D < 1:
        raise ConfigError("budget and D must be positive")
    rtype, weight = getattr(ns, "rtype", None), getattr(ns, "weight", None)
    needs_rep = ns.command in ("build-rep", "units", "cycle", "pair", "flags", "verify-all")
    if ns.command == "independence" and ns.family is None:
        needs_rep = True
    if needs_rep and (rtype is None or weight is None):
        raise ConfigError(f"{ns.command} needs --type and --weight")
    if rtype is not None:
        cfg.rs = _rs(rtype)
    if weight is not None:
        if cfg.rs is None:
            raise ConfigError("--weight needs --type")
        try:
            cfg.weight = parse_weight(cfg.rs, weight)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        if not cfg.weight.is_dominant():
            raise ConfigError(f"highest weight {weight} is not dominant")
    groups = getattr(ns, "proj", [])
    specs = []
    for group in groups:
        if group[0] == "diag-index" and len(group) == 2:
            group = [f"diag-index:{group[1]}"]
        specs += [ProjSpec.parse(t) for t in group]
    cfg.proj = tuple(specs)
    opts = cfg.options
    c = ns.command
    if c == "build-rep":
        opts.update(max_depth=ns.max_depth, matrices=ns.matrices)
    elif c == "units":
        opts.update(check=ns.check, sample=ns.sample)
    elif c == "cycle":
        opts.update(side=ns.side, roots=_roots_arg(ns.pair, cfg.rs))
    elif c == "pair":
        roots = ns.root if ns.root else list(range(1, cfg.rs.rank + 1))
        _validate_roots(roots, cfg.rs)
        opts.update(roots=roots, pipeline=not ns.no_pipeline)
    elif c == "grassmannian":
        if not 1 <= ns.r < ns.n:
            raise ConfigError("need 1 <= r < n")
        opts.update(r=ns.r, n=ns.n)
    elif c == "flags":
        opts.update(check=ns.check)
    elif c == "independence":
        if ns.max_n < 2:
            raise ConfigError("--max-n must be at least 2")
        if ns.family and cfg.rs is not None and cfg.rs.rank < 2:
            raise ConfigError("the family needs rank >= 2")
        if ns.family is None and len(cfg.proj) < 2:
            raise ConfigError("independence needs --family or at least two --proj specs")
        opts.update(family=ns.family, max_n=ns.max_n, side=ns.side, pipeline_max=ns.pipeline_max)
    elif c == "verify-all":
        opts.update(sample=ns.sample, chains=ns.chains, examples=not ns.no_examples)
    return cfg


def _validate_roots(roots, rs: RootSystem) -> None:
    bad = [a for a in roots if not 1 <= a <= rs.rank]
    if bad:
        raise ConfigError(f"roots {bad} out of range 1..{rs.rank}")


def _roots_arg(text: str | None, rs: RootSystem) -> list:
    if text is None:
        return list(range(1, rs.rank + 1))
    _, _, body = text.rpartition("=")
    try:
        roots = [int(x) for x in body.split(",")]
    except ValueError as exc:
        raise ConfigError(f"bad --pair {text!r}; expected e.g. a=1,2") from exc
    _validate_roots(roots, rs)
    return roots


# -- report assembly -------------------------------------------------------------------------

class Report:
    """Ordered checks plus a free-form result; serialized deterministically."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self.checks: list = []
        self.result: dict = {}
        self.tables: list = []

    def check(self, name: str, outcome, oracle: str = "exact", **detail) -> bool:
        if isinstance(outcome, Verdict):
            ok, oracle = outcome.equal, outcome.oracle
        else:
            ok = bool(outcome)
        row = {"name": name, "ok": ok, "oracle": oracle}
        if detail:
            row["detail"] = detail
        self.checks.append(row)
        return ok

    def verdicts(self, prefix: str, verdicts: dict) -> None:
        for k, v in verdicts.items():
            self.check(f"{prefix}{k}", v, "exact-matrix" if isinstance(v, bool) else "exact")

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.checks)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.cfg.command,
            "config": self.cfg.to_json(),
            "ok": self.ok,
            "summary": {"checks": len(self.checks), "failed": sum(not c["ok"] for c in self.checks)},
            "checks": self.checks,
            "result": self.result,
        }


def _md_checks(checks: list) -> str:
    lines = ["| check | result | oracle |", "|---|---|---|"]
    for c in checks:
        lines.append(f"| {c['name']} | {'PASS' if c['ok'] else 'FAIL'} | {c['oracle']} |")
    return "\n".join(lines)


def render(report: Report, fmt: str) -> str:
    doc = report.to_json()
    if fmt == "json":
        return json.dumps(doc, indent=2, ensure_ascii=False)
    if fmt == "markdown":
        parts = [f"# artifact {doc['command']}", "",
                 f"{doc['summary']['checks']} checks, {doc['summary']['failed']} failed", ""]
        for t in report.tables:
            parts += [t, ""]
        if report.checks:
            parts += [_md_checks(report.checks), ""]
        return "\n".join(parts).rstrip() + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["kind", "name", "ok", "oracle", "value"])
    for c in report.checks:
        w.writerow(["check", c["name"], c["ok"], c["oracle"], json.dumps(c.get("detail", {}), ensure_ascii=False)])
    for k, v in _flatten(report.result):
        w.writerow(["result", k, "", "", v])
    return buf.getvalue()


def _flatten(obj, prefix: str = ""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and any(isinstance(x, (dict, list)) for x in obj):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        yield prefix, obj if isinstance(obj, str) else json.dumps(obj, ensure_ascii=False)


# -- subcommands -------------------------------------------------------------------------------

def _build(cfg: RunConfig, max_depth: int | None = None):
    try:
        return build_irrep(cfg.rs, cfg.weight, max_depth=max_depth)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _wkey(w: Weight) -> str:
    return ",".join(str(x) for x in w.coords)


def _sparse(m) -> list:
    return [[i + 1, j + 1, str(v)] for i, row in sorted(m.rows.items()) for j, v in sorted(row.items())]


def cmd_build_rep(cfg: RunConfig, rpt: Report) -> None:
    rep = _build(cfg, cfg.options["max_depth"])
    mult = rep.weight_multiplicities()
    res = {
        "label": rep.label,
        "rank": cfg.rs.rank,
        "highest_weight": _wkey(rep.highest_weight),
        "dim": rep.dim,
        "truncated": rep.dim != weyl_dim(cfg.rs, cfg.weight),
        "weyl_dim": weyl_dim(cfg.rs, cfg.weight),
        "basis_weights": [_wkey(w) for w in rep.basis_weights],
        "weight_multiplicities": {_wkey(w): k for w, k in mult.items()},
    }
    if cfg.options["matrices"]:
        res["E"] = {str(i + 1): _sparse(m) for i, m in enumerate(rep.E_mats)}
        res["F"] = {str(i + 1): _sparse(m) for i, m in enumerate(rep.F_mats)}
    rpt.result = res
    if not res["truncated"]:
        rpt.check("dim = Weyl dimension", True, "exact-integer")
    rpt.verdicts("relation:", relation_checks(rep))


def _suite_table(rpt: Report, title: str) -> None:
    rpt.tables.append(f"## {title}\n\n" + _md_checks(rpt.checks))


def cmd_units(cfg: RunConfig, rpt: Report) -> None:
    rep = _build(cfg)
    which = cfg.options["check"]
    if which != "antipode":
        suite = matrix_unit_suite(rep, cfg.budget, cfg.options["sample"], cfg.seed)
        for k, v in suite.items():
            if which in ("all", k.split(":")[1]):
                rpt.check(k, v)
    if which in ("all", "antipode"):
        rpt.verdicts("antipode:", antipode_relations(rep, cfg.budget))
    rpt.result = {"rep": rep.label, "dim": rep.dim}


def _projections(cfg: RunConfig, rep, default: Callable | None = None) -> list:
    if cfg.proj:
        return [(str(p), p.resolve(rep)) for p in cfg.proj]
    if default is None:
        raise ConfigError(f"{cfg.command} needs --proj")
    return default(rep)


def _all_units(rep) -> list:
    return [(f"unit:{k + 1},{k + 1}", CoeffMatrix.unit(rep.dim, k, k)) for k in range(rep.dim)]


def _side_data(rep, c, side: str):
    if side == "P":
        return build_P(rep, c), k2rho_diag(rep, -1)
    return build_Q(rep, c), k2rho_diag(rep, 1)


def cmd_cycle(cfg: RunConfig, rpt: Report) -> None:
    rep = _build(cfg)
    sides = ("P", "Q") if cfg.options["side"] == "both" else (cfg.options["side"],)
    theta = TwistSpec.theta(rep.rs)
    out = []
    for label, c in _projections(cfg, rep):
        proj_ok = rpt.check(f"{label}:is_projection", is_projection(c))
        flag = is_flag_supported(rep, c)
        item = {"proj": label, "is_projection": proj_ok, "flag_supported": flag, "sides": {}}
        if flag:
            rpt.check(f"{label}:theta_conjugation", theta_conjugation_check(rep, c))
        for side in sides:
            M, V = _side_data(rep, c, side)
            ch = two_cycle(M, V)
            entry = {
                "chain_terms": len(ch),
                "degree": ch.degree,
                "qtrace": str(counit(qtrace(V, M))),
                "pairings": {f"eta_{a}": str(eta_apply(CocycleSpec.eta(a), ch)) for a in cfg.options["roots"]},
            }
            if proj_ok:
                for k, v in boundary_identity(M, V, theta, cfg.budget, cfg.D).items():
                    rpt.check(f"{label}:{side}:boundary:{k}", v)
            if flag:
                closed = chi if side == "P" else chi_tilde
                entry["closed_form"] = {f"eta_{a}": str(closed(rep, c, a)) for a in cfg.options["roots"]}
                for a in cfg.options["roots"]:
                    rpt.check(f"{label}:{side}:eta_{a} = closed form",
                              entry["pairings"][f"eta_{a}"] == entry["closed_form"][f"eta_{a}"], "exact-scalar")
            item["sides"][side] = entry
        out.append(item)
    rpt.result = {"rep": rep.label, "cycles": out}


def cmd_pair(cfg: RunConfig, rpt: Report) -> None:
    rep = _build(cfg)
    roots, pipeline = cfg.options["roots"], cfg.options["pipeline"]
    reports = []
    for label, c in _projections(cfg, rep, _all_units):
        if not is_flag_supported(rep, c):
            raise OutOfContract(f"{label} is not flag-supported; the pairing formulas do not apply")
        r = pairing_report(rep, c, roots, pipeline)
        doc = r.to_json()
        doc["proj"] = label
        reports.append(doc)
        for a in roots:
            rpt.check(f"{label}:P{a}:eta_lambda(-2rho) = chi", r.eta_lambda[a] == r.chi[a], "exact-scalar")
            rpt.check(f"{label}:Q{a}:eta_lambda(2rho-2alpha) = chi~", r.eta_lambda_tilde[a] == r.chi_tilde[a], "exact-scalar")
        for k, v in r.agreement.items():
            rpt.check(f"{label}:{k}:pipeline = closed form", v, "exact-scalar")
        rpt.tables.append(f"### {rep.label} {label}\n\n" + r.to_markdown())
    rpt.result = {"rep": rep.label, "reports": reports, "markdown": [t.split("\n\n", 1)[1] for t in rpt.tables]}


def _grassmannian(r: int, N: int, rpt: Report, budget: int, D: int, prefix: str = "") -> dict:
    P, _, c = grassmannian_projection(r, N)
    rep = P.rep
    rs = rep.rs
    rpt.check(f"{prefix}is_projection", is_projection(c))
    rpt.check(f"{prefix}is_flag_supported", is_flag_supported(rep, c))
    tr = qtrace(k2rho_diag(rep, -1), P)
    expected = Scalar.monomial(r - N) * qnum(r)
    rpt.check(f"{prefix}Tr(K_2rho^-1 P) = q^(r-N)[r]", decide(tr, CoordElement.const(expected), budget, D))
    lam_r = rep.basis_weights[r - 1]
    p = bilinear(rs, two_rho(rs), lam_r)
    rpt.check(f"{prefix}(2rho, lambda_r) = N-2r+1", p == N - 2 * r + 1, "exact-rational")
    chi_r = chi(rep, c, r)
    chi_expected = Scalar.monomial(1 - p)
    rpt.check(f"{prefix}chi_r(P) = q^(1-(2rho,lambda_r))", chi_r == chi_expected, "exact-scalar")
    w = grassmannian_vector(r, N)
    S = LeviSubset.complement(rs.rank, r)
    rpt.check(f"{prefix}levi_invariant:left", levi_invariant(w, S, "left"), "exact-matrix")
    rpt.check(f"{prefix}levi_invariant:right", levi_invariant(w, S, "right"), "exact-matrix")
    rpt.check(f"{prefix}theta_conjugation", theta_conjugation_check(rep, c))
    return {
        "r": r,
        "N": N,
        "rep": rep.label,
        "levi_subset": sorted(S.S),
        "entries": [[P[i, j].to_text() for j in range(N)] for i in range(N)],
        "trace": str(counit(tr)),
        "trace_expected": str(expected),
        "chi_r": str(chi_r),
        "chi_r_expected": str(chi_expected),
    }


def cmd_grassmannian(cfg: RunConfig, rpt: Report) -> None:
    res = rpt.result = _grassmannian(cfg.options["r"], cfg.options["n"], rpt, cfg.budget, cfg.D)
    rows = "\n".join("| " + " | ".join(f"`{x}`" for x in row) + " |" for row in res["entries"])
    head = "| " + " | ".join(str(j + 1) for j in range(res["N"])) + " |\n|" + "---|" * res["N"]
    rpt.tables.append(f"## {res['rep']}: P\n\n{head}\n{rows}")
    rpt.tables.append(
        "| quantity | value | expected |\n|---|---|---|\n"
        f"| Tr(K_2rho^-1 P) | {res['trace']} | {res['trace_expected']} |\n"
        f"| chi_{res['r']}(P) | {res['chi_r']} | {res['chi_r_expected']} |\n"
        f"| Levi subset S | {res['levi_subset']} | |"
    )


def cmd_flags(cfg: RunConfig, rpt: Report) -> None:
    rep = _build(cfg)
    n = rep.dim
    counted = {"M": 0, "N": 0}
    okM = okN = True
    for m in range(n):
        for k in range(n):
            if rep.basis_weights[m] != rep.basis_weights[k]:
                continue
            for tag, U, side in (("M", unit_M(rep, m, k), "right"), ("N", unit_N(rep, m, k), "left")):
                for row in U.entries:
                    for e in row:
                        if e.is_zero():
                            continue
                        counted[tag] += 1
                        good = in_flag(e, side)
                        if tag == "M":
                            okM &= good
                        else:
                            okN &= good
    rpt.check("M entries lie in the right flag subalgebra", okM, "exact-structural", entries=counted["M"])
    rpt.check("N entries lie in the left flag subalgebra", okN, "exact-structural", entries=counted["N"])
    rpt.result = {"rep": rep.label, "entries_checked": counted}


def _distinct(values) -> bool:
    vals = [str(v) for v in values]
    return len(set(vals)) == len(vals)


def cmd_independence(cfg: RunConfig, rpt: Report) -> None:
    sides = ("P", "Q") if cfg.options["side"] == "both" else (cfg.options["side"],)
    certs = []
    if cfg.options["family"]:
        systems = [cfg.rs] if cfg.rs is not None else [root_system(x) for x in ("A2", "B2", "G2")]
        n_max, pmax = cfg.options["max_n"], cfg.options["pipeline_max"]
        for rs in systems:
            for side in sides:
                cert, checks = family_certificate(rs, n_max, side, pipeline_max=min(pmax, n_max))
                tag = f"{rs.name}:{side}"
                ratios = cert.ratios()
                expected = [family_ratio(rs, n, side) for n in range(1, n_max + 1)]
                rpt.check(f"{tag}:all pairwise independent", cert.all_independent(), "exact-scalar")
                rpt.check(f"{tag}:ratios = q^(+-(n d1 - d2))[n]_(q1)", ratios == expected, "exact-scalar")
                rpt.check(f"{tag}:ratios pairwise distinct", _distinct(ratios), "exact-scalar")
                for n, ok in sorted(checks.items()):
                    rpt.check(f"{tag}:n={n}:pipeline = closed form", ok, "exact-scalar")
                doc = cert.to_json()
                doc.update(root_system=rs.name, side=side, family=cfg.options["family"],
                           expected_ratios=[str(x) for x in expected])
                certs.append(doc)
    else:
        rep = _build(cfg)
        projs = _projections(cfg, rep)
        for side in sides:
            cycles = []
            for label, c in projs:
                if not is_flag_supported(rep, c):
                    raise OutOfContract(f"{label} is not flag-supported")
                cycles.append(CycleSpec(f"{side}({label})", rep, c, side))
            roots = list(range(1, rep.rs.rank + 1))
            if len(roots) < 2:
                raise ConfigError("certificates need at least two cocycles (rank >= 2)")
            cert = independence_certificate(cycles, roots)
            pipe = independence_certificate(cycles, roots, pipeline=True)
            rpt.check(f"{side}:pipeline table = closed-form table", pipe.matrix == cert.matrix, "exact-scalar")
            rpt.check(f"{side}:all pairwise independent", cert.all_independent(), "exact-scalar")
            doc = cert.to_json()
            doc.update(rep=rep.label, side=side)
            certs.append(doc)
    rpt.result = {"certificates": certs}


# -- verify-all ------------------------------------------------------------------------------------

def _flag_elements(rep, side: str) -> list:
    """Nonzero entries of ``M^k_m`` (right flag) or ``N^k_m`` (left flag) with equal weights."""
    unit = unit_M if side == "right" else unit_N
    out = []
    n = rep.dim
    for m in range(n):
        for k in range(n):
            if rep.basis_weights[m] != rep.basis_weights[k]:
                continue
            U = unit(rep, m, k)
            out += [e for row in U.entries for e in row if not e.is_zero()]
    return out


def _verify_rep(cfg: RunConfig, rpt: Report, rep) -> None:
    rs, n = rep.rs, rep.dim
    rng = random.Random(cfg.seed)
    rpt.verdicts("relations:", relation_checks(rep))
    rpt.verdicts("antipode:", antipode_relations(rep, cfg.budget))
    sample = cfg.options["sample"]
    if sample is None and n > 4:
        sample = 64
    rpt.verdicts("units:", matrix_unit_suite(rep, cfg.budget, sample, cfg.seed))

    theta = TwistSpec.theta(rs)
    projs = _all_units(rep)
    if len(rep.indices_of_weight(Weight.zero(rs.rank))) >= 2:
        projs.append(("zero-block", zero_block_idempotent(rep)))
    for label, c in projs:
        rpt.check(f"{label}:theta_conjugation", theta_conjugation_check(rep, c))
        for side in ("P", "Q"):
            M, V = _side_data(rep, c, side)
            for k, v in boundary_identity(M, V, theta, cfg.budget, cfg.D).items():
                rpt.check(f"{label}:{side}:boundary:{k}", v)
        r = pairing_report(rep, c)
        rpt.check(f"{label}:three-path agreement", r.all_agree(), "exact-scalar")

    atoms = [u(rep, i, j) for i in range(n) for j in range(n)] + [ustar(rep, i, j) for i in range(n) for j in range(n)]
    for t in range(cfg.options["chains"]):
        for deg in (2, 3):
            ch = random_chain(rng, atoms, deg)
            bb = boundary(boundary(ch, theta), theta)
            rpt.check(f"b^2=0:chain{t}:degree{deg}", bb.is_zero(cfg.budget, cfg.D))

    twists = [theta, TwistSpec(rs.omega(1), two_rho(rs))]
    for side in ("left", "right"):
        elems = _flag_elements(rep, side)
        picks = [rng.choice(elems) for _ in range(12)]
        ok_cocycle = all(
            cocycle_check(CocycleSpec.eta(a), theta, [rng.choice(elems) for _ in range(4)])
            for a in range(1, rs.rank + 1) for _ in range(4)
        )
        rpt.check(f"cocycle:{side}-flag", ok_cocycle, "exact-scalar")
        rpt.check(f"counit:sigma-invariance:{side}-flag",
                  all(counit_twist_invariant(s, a) for s in twists for a in picks), "exact-scalar")
        rpt.check(f"counit:Leibniz:{side}-flag", all(
            leibniz_check(X, a, b)
            for X in (g for k in range(1, rs.rank + 1) for g in (E(k), F(k)))
            for a, b in zip(picks, reversed(picks))), "exact-scalar")
        rpt.check(f"counit:left-right symmetry:{side}-flag",
                  all(counit_side_symmetry(X, a) for X in generators(rs.rank) for a in picks), "exact-scalar")

    gens = generators(rs.rank)
    pairs = [(m, k) for m in range(n) for k in range(n)]
    if sample is not None:
        pairs = sorted(rng.sample(pairs, min(len(pairs), 8)))
    for m, k in pairs:
        v = [equivariance_check(rep, m, k, X, cfg.budget) for X in gens]
        rpt.check(f"equivariance:M/N({m + 1},{k + 1})", Verdict(all(x.equal for x in v), _oracle(v)))
    for m, k in pairs[:4]:
        rpt.check(f"ad-invariance:left:N({m + 1},{k + 1})", ad_invariance(unit_N(rep, m, k), "left", budget=cfg.budget))
        rpt.check(f"ad-invariance:right:M({m + 1},{k + 1})", ad_invariance(unit_M(rep, m, k), "right", budget=cfg.budget))


def _oracle(verdicts) -> str:
    return next((v.oracle for v in verdicts if v.oracle != "exact"), "exact")


def _verify_examples(cfg: RunConfig, rpt: Report) -> dict:
    out = {}
    # sl2 table: eta(C(M^k_k)) = [k] for the weight label k
    for n in range(1, 5):
        rep = build_irrep("A1", [n])
        vals = {}
        for k in range(n + 1):
            lab = rep.basis_weights[k].coords[0]
            ch = two_cycle(build_P(rep, CoeffMatrix.unit(rep.dim, k, k)), k2rho_diag(rep, -1))
            vals[lab] = eta_apply(CocycleSpec.eta(1), ch)
        ok = all(v == qnum(lab) for lab, v in vals.items())
        rpt.check(f"example:A1({n}):eta(C(P_k)) = [k]", ok, "exact-scalar")
        out[f"A1({n})"] = {str(k): str(v) for k, v in sorted(vals.items(), reverse=True)}

    adj = build_irrep("A2", [1, 1])
    q = Scalar.monomial
    two = qnum(2)
    table = {"P1": ((2, -1), (two, -q(-3))), "P2": ((-1, 2), (-q(-3), two)), "Prho": ((1, 1), (q(-3), q(-3)))}
    cycles = []
    for name, (w, expected) in table.items():
        c = CoeffMatrix.unit(adj.dim, adj.indices_of_weight(Weight(w))[0], adj.indices_of_weight(Weight(w))[0])
        r = pairing_report(adj, c)
        got = (r.chi[1], r.chi[2])
        rpt.check(f"example:A2(1,1):{name}:chi", got == expected, "exact-scalar")
        rpt.check(f"example:A2(1,1):{name}:pipeline", (r.eta[1], r.eta[2]) == expected, "exact-scalar")
        cycles.append(CycleSpec(name, adj, c))
    cert = independence_certificate(cycles, [1, 2])
    ratios = cert.ratios()
    rpt.check("example:A2(1,1):pairwise independent", cert.all_independent(), "exact-scalar")
    rpt.check("example:A2(1,1):ratio P1 = -q^3[2]", ratios[0] == -q(3) * two, "exact-scalar")
    rpt.check("example:A2(1,1):ratio P2 = -(q^3[2])^-1", ratios[1] == RationalScalar(-ONE, q(3) * two), "exact-rational")
    rpt.check("example:A2(1,1):ratio Prho = 1", ratios[2] == ONE, "exact-scalar")
    out["A2(1,1)"] = cert.to_json()

    out["grassmannians"] = [
        _grassmannian(r, N, rpt, cfg.budget, cfg.D, prefix=f"example:Gr({r},{N}):")
        for r, N in ((1, 2), (1, 3), (2, 4))
    ]
    for name in ("A2", "B2", "G2"):
        rs = root_system(name)
        for side in ("P", "Q"):
            cert, checks = family_certificate(rs, 8, side, pipeline_max=4)
            ratios = cert.ratios()
            rpt.check(f"example:family:{name}:{side}:independent", cert.all_independent(), "exact-scalar")
            rpt.check(f"example:family:{name}:{side}:ratios",
                      ratios == [family_ratio(rs, n, side) for n in range(1, 9)] and _distinct(ratios), "exact-scalar")
            rpt.check(f"example:family:{name}:{side}:pipeline n<=4", all(checks.values()), "exact-scalar")
    return out


def cmd_verify_all(cfg: RunConfig, rpt: Report) -> None:
    rep = _build(cfg)
    _verify_rep(cfg, rpt, rep)
    rpt.result = {"rep": rep.label, "dim": rep.dim}
    if cfg.options["examples"]:
        rpt.result["examples"] = _verify_examples(cfg, rpt)
    failed = [c["name"] for c in rpt.checks if not c["ok"]]
    rpt.result["failed"] = failed
    rpt.tables.append(_md_checks(rpt.checks) if failed else f"all {len(rpt.checks)} checks passed")


COMMANDS = {
    "build-rep": cmd_build_rep,
    "units": cmd_units,
    "cycle": cmd_cycle,
    "pair": cmd_pair,
    "grassmannian": cmd_grassmannian,
    "flags": cmd_flags,
    "independence": cmd_independence,
    "verify-all": cmd_verify_all,
}


def run(cfg: RunConfig) -> tuple:
    """Execute one subcommand; returns ``(report, exit_status)``.

    :class:`ConfigError` propagates so the caller can map it to status 2.
    """
    rpt = Report(cfg)
    COMMANDS[cfg.command](cfg, rpt)
    return rpt, EXIT_OK if rpt.ok else EXIT_FAIL


def _error_doc(cfg: RunConfig | None, command: str, exc: Exception) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "config": cfg.to_json() if cfg else None,
        "ok": False,
        "error": {"type": type(exc).__name__, "message": str(exc)},
    }


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    except ConfigError as exc:
        print(f"artifact: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        rpt, status = run(cfg)
    except ConfigError as exc:
        print(f"artifact: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OutOfContract, RepBuildError, ArithmeticError, ValueError, RuntimeError) as exc:
        print(json.dumps(_error_doc(cfg, cfg.command, exc), indent=2, ensure_ascii=False))
        return EXIT_FAIL
    sys.stdout.write(render(rpt, cfg.fmt).rstrip("\n") + "\n")
    return status
