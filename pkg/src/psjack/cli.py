"""Command-line front end: expand, verify and enumerate."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Optional, Sequence

from . import cluster, invariance
from .mpoly import SYMMETRY_TYPES, coef_str, to_latex, to_plain
from .prescribed import PrescribedError, PSJack, prescribed_jack_triangular, verify_BC_conditions
from .qalpha import ALPHA, QAlphaError, alpha_kr, check_kr
from .spart import (
    Superpartition,
    SpartError,
    admissible,
    enumerate_superpartitions,
    is_admissible,
    parse_superpartition,
    strip_zeros,
)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
JOBS_ENV = "PSJACK_JOBS"
FORMATS = ("json", "latex", "plain")


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    pass


class InternalBreach(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    label: Optional[str] = None
    T: str = "AS"
    k: Optional[int] = None
    r: Optional[int] = None
    N: Optional[int] = None
    alpha: str = "generic"
    fmt: str = "plain"
    jobs: int = 1
    out: Optional[str] = None
    what: Optional[str] = None
    basis: str = "m"
    filter: str = "admissible"
    m_min: int = 0
    m_max: Optional[int] = None
    n_max: Optional[int] = None
    smallest: bool = False
    rule: str = "exact"

    def validate(self) -> None:
        if self.T not in SYMMETRY_TYPES:
            raise UsageError(f"unknown type {self.T!r}")
        if self.fmt not in FORMATS:
            raise UsageError(f"unknown format {self.fmt!r}")
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")
        if self.command in ("expand", "verify") and not self.label:
            raise UsageError(f"{self.command} needs --label")
        if self.alpha == "kr" and (self.k is None or self.r is None):
            raise UsageError("--alpha kr needs --k and --r")
        if self.alpha not in ("generic", "kr"):
            try:
                Fraction(self.alpha)
            except (ValueError, ZeroDivisionError):
                raise UsageError(f"bad --alpha {self.alpha!r}") from None
        if self.command == "verify":
            if self.what not in ("eigen", "cluster", "invariance"):
                raise UsageError("verify needs --what eigen|cluster|invariance")
            if self.what in ("cluster", "invariance") and (self.k is None or self.r is None):
                raise UsageError(f"verify --what {self.what} needs --k and --r")
            if self.what == "invariance" and self.T != "AS":
                raise UsageError("invariance is decided for type AS only")
        if self.command == "enumerate":
            if self.k is None or self.r is None or self.N is None:
                raise UsageError("enumerate needs --k, --r and --N")
            if self.filter not in ("admissible", "invariant"):
                raise UsageError(f"unknown filter {self.filter!r}")
            if self.rule not in ("exact", "literal"):
                raise UsageError(f"unknown rule {self.rule!r}")
            if not self.smallest and self.n_max is None:
                raise UsageError("enumerate needs --n-max unless --smallest is given")
            if self.smallest and self.filter != "invariant":
                raise UsageError("--smallest applies to --filter invariant")
        if self.k is not None or self.r is not None:
            try:
                check_kr(self.k or 0, self.r or 0, require_coprime=False)
            except QAlphaError as e:
                raise UsageError(str(e)) from None


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _alpha(cfg: RunConfig):
    if cfg.alpha == "generic":
        return ALPHA
    if cfg.alpha == "kr":
        return alpha_kr(cfg.k, cfg.r, require_coprime=False)
    return Fraction(cfg.alpha)


def _alpha_text(a) -> str:
    return "generic" if a is ALPHA else str(a)


def _label(cfg: RunConfig, default_N: Optional[int] = None) -> Superpartition:
    try:
        sp = parse_superpartition(cfg.label)
        N = cfg.N if cfg.N is not None else default_N
        return sp.padded(N) if N is not None else sp
    except SpartError as e:
        raise UsageError(str(e)) from None


def _short(sp: Superpartition) -> Superpartition:
    return Superpartition(sp.antisym, strip_zeros(sp.sym))


def _label_latex(sp: Superpartition) -> str:
    sp = _short(sp)
    if not sp.antisym:
        return "(" + ",".join(map(str, sp.sym)) + ")"
    a = ",".join(map(str, sp.antisym))
    s = ",".join(map(str, sp.sym)) if sp.sym else "\\emptyset"
    return f"({a};{s})"


def _is_trivial(sp: Superpartition) -> bool:
    return sp.n == 0 and sp.m <= 1


def _build(sp: Superpartition, T: str, a) -> PSJack:
    try:
        P = prescribed_jack_triangular(sp, T)
    except PrescribedError as e:
        raise UsageError(str(e)) from None
    if a is ALPHA:
        return P
    try:
        return P.specialize(a)
    except (QAlphaError, ZeroDivisionError) as e:
        raise CheckFailed(f"P_{sp} has a pole at alpha = {a}: {e}") from None


def _ordered(P: PSJack) -> list[tuple[Superpartition, Any]]:
    return sorted(P.expansion.items(), key=lambda t: t[0].sort_key(), reverse=True)


def _render_m_plain(P: PSJack) -> str:
    pieces = []
    for g, c in _ordered(P):
        name = "1" if _is_trivial(g) else f"m{_short(g)}"
        cs = coef_str(c)
        if cs == "1":
            pieces.append(name)
        elif name == "1":
            pieces.append(cs)
        else:
            pieces.append(f"({cs})*{name}" if any(ch in cs for ch in "+-/ ") else f"{cs}*{name}")
    return " + ".join(pieces) if pieces else "0"


def _render_m_latex(P: PSJack) -> str:
    pieces = []
    for g, c in _ordered(P):
        name = "1" if _is_trivial(g) else f"m_{{{_label_latex(g)}}}"
        cs = coef_str(c, latex=True)
        if cs == "1":
            pieces.append(name)
        elif name == "1":
            pieces.append(cs)
        else:
            pieces.append(f"{cs}\\,{name}")
    return " + ".join(pieces) if pieces else "0"


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _dump(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, default=str)


def _report_text(cfg: RunConfig, report: dict) -> str:
    if cfg.fmt == "json":
        return _dump(report)
    if cfg.fmt == "latex":
        rows = [f"\\item {k}: \\texttt{{{_dump(v)}}}" for k, v in report.items()]
        return "\\begin{itemize}\n" + "\n".join(rows) + "\n\\end{itemize}"
    return "\n".join(f"{k}: {v if isinstance(v, str) else _dump(v)}" for k, v in report.items())


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_expand(cfg: RunConfig) -> int:
    sp = _label(cfg)
    a = _alpha(cfg)
    P = _build(sp, cfg.T, a)
    if cfg.fmt == "json":
        body: dict = {"label": str(sp), "type": cfg.T, "N": sp.N, "alpha": _alpha_text(a)}
        if cfg.basis == "x":
            body["terms"] = [{"exps": list(e), "coef": coef_str(c)} for e, c in P.poly.sorted_terms()]
        else:
            body["expansion"] = [{"label": str(_short(g)), "coef": coef_str(c)} for g, c in _ordered(P)]
        text = _dump(body)
    elif cfg.basis == "x":
        text = to_latex(P.poly) if cfg.fmt == "latex" else to_plain(P.poly)
    else:
        text = _render_m_latex(P) if cfg.fmt == "latex" else _render_m_plain(P)
    _emit(cfg, text)
    return EXIT_PASS


def _verify_eigen(cfg: RunConfig) -> dict:
    sp = _label(cfg)
    a = _alpha(cfg)
    P = _build(sp, cfg.T, a)
    return verify_BC_conditions(P, a)


def _verify_cluster(cfg: RunConfig) -> dict:
    k, r = cfg.k, cfg.r
    sp = _label(cfg, default_N=None)
    if cfg.N is None:
        sp = sp.padded(sp.m + len(strip_zeros(sp.sym)) + k)
    if k == 1 and r % 2 == 0 and cfg.alpha in ("generic", "kr"):
        try:
            rep = cluster.verify_clustering_k1(sp, cfg.T, r)
        except cluster.ClusterError:
            rep = None
        if rep is not None:
            return {
                "label": str(sp), "type": cfg.T, "k": k, "r": r, "case": rep.case,
                "order": rep.order, "orders": rep.orders, "constant": rep.details.get("constant"), "pass": rep.passed,
            }
    a = alpha_kr(k, r, require_coprime=False) if cfg.alpha in ("generic", "kr") else Fraction(cfg.alpha)
    P = _build(sp, cfg.T, a)
    try:
        rho, _, orders = cluster.cluster_order(P, k)
    except cluster.ClusterError as e:
        raise CheckFailed(str(e)) from None
    ok = rho == cluster.INFINITE or rho >= r
    return {"label": str(sp), "type": cfg.T, "k": k, "r": r, "alpha": str(a), "order": rho, "orders": orders, "pass": ok}


def _verify_invariance(cfg: RunConfig) -> dict:
    sp = _label(cfg)
    try:
        v = invariance.invariance_verdict(sp, cfg.k, cfg.r, cfg.N)
    except invariance.InvarianceError as e:
        raise CheckFailed(str(e)) from None
    if not v.agree:
        raise InternalBreach("combinatorial and analytic verdicts disagree: " + v.to_json())
    out = v.as_dict()
    out["pass"] = bool(v.analytic)
    return out


def cmd_verify(cfg: RunConfig) -> int:
    handler = {"eigen": _verify_eigen, "cluster": _verify_cluster, "invariance": _verify_invariance}[cfg.what]
    report = handler(cfg)
    _emit(cfg, _report_text(cfg, report))
    return EXIT_PASS if report.get("pass") else EXIT_FAIL


def _admissible_row(args: tuple) -> Optional[Superpartition]:
    sp, k, r, N = args
    return sp if is_admissible(sp, k, r, N) else None


def _invariant_row(args: tuple) -> Optional[Superpartition]:
    sp, k, r, N = args
    if not admissible(sp, k, r, N, "weak", require_coprime=False):
        return None
    return sp if invariance.combinatorial_verdict(sp, k, r)[0] != "no" else None


def _parallel_filter(fn: Callable[[tuple], Optional[Superpartition]], items: Sequence[tuple], jobs: int) -> list[Superpartition]:
    if jobs <= 1 or len(items) < 2:
        results = [fn(x) for x in items]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    return [x for x in results if x is not None]


def enumerate_labels(cfg: RunConfig) -> list[Superpartition]:
    """Labels in emission order: by m, then n, then increasing total order."""
    k, r, N = cfg.k, cfg.r, cfg.N
    m_max = N if cfg.m_max is None else min(cfg.m_max, N)
    if cfg.smallest:
        found = invariance.smallest_invariant(k, r, N, rule=cfg.rule)
        return [sp for sp in found if cfg.m_min <= sp.m <= m_max and (cfg.n_max is None or sp.n <= cfg.n_max)]
    candidates = []
    strict = cfg.filter == "invariant"
    for m in range(cfg.m_min, m_max + 1):
        for n in range(cfg.n_max + 1):
            labels = enumerate_superpartitions(n, m, N, strict=strict)
            candidates.extend(reversed(labels))
    fn = _invariant_row if cfg.filter == "invariant" else _admissible_row
    return _parallel_filter(fn, [(sp, k, r, N) for sp in candidates], cfg.jobs)


def cmd_enumerate(cfg: RunConfig) -> int:
    labels = enumerate_labels(cfg)
    if cfg.fmt == "json":
        body = {
            "k": cfg.k, "r": cfg.r, "N": cfg.N, "filter": cfg.filter, "smallest": cfg.smallest,
            "rule": cfg.rule if cfg.filter == "invariant" else None,
            "count": len(labels), "labels": [str(_short(sp)) for sp in labels],
        }
        text = _dump(body)
    elif cfg.fmt == "latex":
        text = "\n".join(f"${_label_latex(sp)}$" for sp in labels)
    else:
        text = "\n".join(str(_short(sp)) for sp in labels)
    _emit(cfg, text)
    return EXIT_PASS


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="psjack", description="Jack polynomials with prescribed symmetry.")
    p.add_argument("command", choices=("expand", "verify", "enumerate"))
    p.add_argument("--label", help='superpartition such as "(3,1;2,2)"; the empty side may be written as ∅')
    p.add_argument("--type", dest="T", default="AS", help="symmetry type AS, AA, SA or SS")
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--N", type=int, help="number of variables (the label is padded with zeros)")
    p.add_argument("--alpha", default="generic", help="generic, kr, or a rational P/Q")
    p.add_argument("--format", dest="fmt", default="plain", help="json, latex or plain")
    p.add_argument("--jobs", type=int, default=None, help=f"worker processes (default ${JOBS_ENV} or 1)")
    p.add_argument("--out", help="write output to this file")
    p.add_argument("--what", help="verify: eigen, cluster or invariance")
    p.add_argument("--basis", default="m", choices=("m", "x"), help="expand: monomial basis m or plain monomials x")
    p.add_argument("--filter", default="admissible", help="enumerate: admissible or invariant")
    p.add_argument("--m-min", type=int, default=0)
    p.add_argument("--m-max", type=int)
    p.add_argument("--n-max", type=int, help="enumerate: degree bound")
    p.add_argument("--smallest", action="store_true", help="enumerate: invariant labels inside the smallest invariant partition")
    p.add_argument("--rule", default="exact", help="enumerate: invariance rule, exact or literal")
    return p


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV)
    if raw is None:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"{JOBS_ENV} must be an integer") from None


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    jobs = ns.jobs if ns.jobs is not None else _default_jobs()
    cfg = RunConfig(
        command=ns.command, label=ns.label, T=ns.T, k=ns.k, r=ns.r, N=ns.N, alpha=ns.alpha, fmt=ns.fmt,
        jobs=jobs, out=ns.out, what=ns.what, basis=ns.basis, filter=ns.filter, m_min=ns.m_min,
        m_max=ns.m_max, n_max=ns.n_max, smallest=ns.smallest, rule=ns.rule,
    )
    cfg.validate()
    return cfg


def _error(code: int, kind: str, message: str) -> int:
    sys.stderr.write(_dump({"error": {"code": code, "type": kind, "message": message}}) + "\n")
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cfg = parse_config(argv)
        return {"expand": cmd_expand, "verify": cmd_verify, "enumerate": cmd_enumerate}[cfg.command](cfg)
    except UsageError as e:
        return _error(EXIT_USAGE, "usage", str(e))
    except CheckFailed as e:
        return _error(EXIT_FAIL, "check_failed", str(e))
    except InternalBreach as e:
        return _error(EXIT_INTERNAL, "internal", str(e))
    except Exception as e:  # noqa: BLE001
        return _error(EXIT_INTERNAL, "internal", f"{type(e).__name__}: {e}")


if __name__ == "__main__":
    sys.exit(main())
