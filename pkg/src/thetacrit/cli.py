"""Command-line front end: ``thetacrit <command> ...``.

Exit codes: 0 pass, 1 mathematical mismatch, 2 usage error. Every command
prints a human summary, or JSON-lines records with ``--jsonl``; ``--report
FILE`` also writes the records to a file.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import replace
from typing import Optional, Sequence

from . import acceptance, cm, fixtures
from .cyclic import estimate_lambda, residual
from .report import EXIT_USAGE, RunReport
from .theta import (DEFAULT_CONFIG, ThetaConfig, TruncationError, UpperHalfPoint, critical_family,
                    theta, theta0, theta1, theta_ab)


class UsageError(ValueError):
    pass


_COMPLEX_RE = re.compile(r"^[0-9eE.+\-ij]+$")


def parse_complex(text: str) -> complex:
    """Parse ``a+bi`` leniently: whitespace, ``i`` or ``j``, unicode minus, bare ``i``.

    A rational form ``(a+bi)/c`` is also accepted, e.g. ``(-7+i)/25``.
    """
    s = text.strip().replace(" ", "").replace("−", "-").replace("I", "i").replace("J", "j")
    s = s.replace("i", "j")
    frac = re.fullmatch(r"\((.+)\)/([0-9.]+)", s)
    if frac:
        den = float(frac.group(2))
        if den == 0:
            raise UsageError(f"zero denominator in {text!r}")
        return parse_complex(frac.group(1)) / den
    if not s or not _COMPLEX_RE.match(s):
        raise UsageError(f"cannot parse complex number {text!r}")
    try:
        return complex(s)
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r}") from None


def format_complex(z: complex) -> str:
    return f"{z.real:.15g}{z.imag:+.15g}i"


def _odd(text: str) -> int:
    try:
        d = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if d < 3 or d % 2 == 0:
        raise argparse.ArgumentTypeError(f"d must be odd and >= 3, got {d}")
    return d


def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


SEARCH_KEYS = ("k_min", "k_max", "p_max")
THETA_KEYS = ("tail_bound", "max_terms", "z_im_cap", "widen")


def load_config(path: Optional[str]) -> tuple[ThetaConfig, dict]:
    """Read an optional JSON file ``{"theta": {...}, "search": {...}}``."""
    search = {"k_min": cm.DEFAULT_K_RANGE[0], "k_max": cm.DEFAULT_K_RANGE[1], "p_max": cm.DEFAULT_P_MAX}
    if path is None:
        return DEFAULT_CONFIG, search
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    unknown = set(data) - {"theta", "search"}
    unknown |= {f"theta.{k}" for k in data.get("theta", {}) if k not in THETA_KEYS}
    unknown |= {f"search.{k}" for k in data.get("search", {}) if k not in SEARCH_KEYS}
    if unknown:
        raise UsageError(f"unknown config keys: {sorted(unknown)}")
    try:
        cfg = replace(DEFAULT_CONFIG, **data.get("theta", {}))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad theta config: {exc}") from None
    search.update({k: int(v) for k, v in data.get("search", {}).items()})
    return cfg, search


def _search_bounds(args, search: dict) -> dict:
    out = dict(search)
    for key in SEARCH_KEYS:
        val = getattr(args, key, None)
        if val is not None:
            out[key] = val
    return out


def cmd_pairs(args, rep: RunReport, cfg, search):
    pairs = cm.enumerate_pairs(args.d)
    if not pairs:
        rep.note(f"d={args.d}: no a in 1..{args.d - 1} with a = (d+1)^2/4 (mod 4); no pairs")
    for a, b in pairs:
        c2, c1, c0 = cm.nk_polynomial(args.d, a, b)
        lam0 = str(cm.CMDescriptor.build(args.d, a, b).lambda0)
        tau0 = cm.tau_string(args.d, a, b, 0, 1)
        rep.row("pairs", d=args.d, a=a, b=b, lambda0=lam0, tau0=tau0, m0=cm.m0(args.d, a, b),
                n0=cm.n0(args.d, a, b), nk=f"{c2}k^2 {c1:+d}k {c0:+d}")
        rep.note(f"a={a} b={b}  lambda0 = {lam0}  tau0 = {tau0}  m0 = {cm.m0(args.d, a, b)}  "
                 f"N_k = {c2}k^2 {c1:+d}k {c0:+d}")


def _descriptor(args) -> cm.CMDescriptor:
    try:
        return cm.CMDescriptor.build(args.d, args.a, args.b, args.k, args.p)
    except cm.GateError as exc:
        raise UsageError(str(exc)) from None


def cmd_tau(args, rep: RunReport, cfg, search):
    desc = _descriptor(args)
    s = desc.sigma
    rep.row("tau", d=desc.d, a=desc.a, b=desc.b, k=desc.k, p=desc.p, tau=desc.tau_string(),
            tau_float=complex(desc.tau), n_k=desc.n_k, epsilon=desc.epsilon, sigma=s.rows(),
            lam=str(desc.lam))
    rep.note(f"tau_{{{desc.k},{desc.p}}} = {desc.tau_string()} ~ {format_complex(complex(desc.tau))}")
    rep.note(f"N_{desc.k} = {desc.n_k}, epsilon = {desc.epsilon:+d}, sigma = {s.rows()}, "
             f"lambda = {desc.lam}")
    fixed = abs(s.act(complex(desc.tau)) - desc.d ** 2 * complex(desc.tau))
    rep.check("tau.sigma_fixes_d2tau", fixed, 1e-9 * desc.d ** 2)


def cmd_family(args, rep: RunReport, cfg, search):
    tau = UpperHalfPoint.from_complex(args.tau)
    f = critical_family(args.d, tau, args.z, cfg, rescale=args.rescale)
    for ell, v in enumerate(f.values):
        rep.row("family", l=ell, value=complex(v))
    lam = args.lam if args.lam is not None else estimate_lambda(f)
    res = residual(f, lam)
    rep.note(f"d={args.d} tau={format_complex(args.tau)} z={format_complex(args.z)}")
    rep.note(f"lambda {'given' if args.lam is not None else 'estimated'} = {format_complex(lam)}")
    rep.check("family.relative_residual", res.relative, args.tol, soft=args.lam is None,
              lam=lam, worst_k=res.worst_k)


def cmd_verify(args, rep: RunReport, cfg, search):
    desc = _descriptor(args)
    pred = complex(desc.lam)
    f = critical_family(desc.d, desc.tau, args.z, cfg, rescale=True)
    est = estimate_lambda(f)
    res = residual(f, pred)
    rep.note(f"tau = {desc.tau_string()}, z = {format_complex(args.z)}, epsilon = {desc.epsilon:+d}")
    rep.note(f"predicted lambda = {desc.lam} ~ {format_complex(pred)}; estimated {format_complex(est)}")
    rep.row("verify", d=desc.d, a=desc.a, b=desc.b, k=desc.k, p=desc.p, predicted=str(desc.lam),
            estimated=est, residual=res.relative)
    rep.check("verify.relative_residual", res.relative, args.tol)
    rep.check("verify.lambda_error", abs(est - pred), args.tol)


def cmd_lists(args, rep: RunReport, cfg, search):
    try:
        ents = fixtures.entries(args.d)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    rep.note(f"d={args.d}: {len(ents)} entries, list {fixtures.COMPLETENESS[args.d]}")
    rep.check(f"lists.count.d{args.d}", len(ents) == fixtures.PRINTED_COUNTS[args.d], got=len(ents))
    for i, r in enumerate(fixtures.realize_list(args.d)):
        e = r.entry
        status = "realized" if r.realized else "unrealized"
        if e.misprint:
            rep.note(f"  {e.printed} (misprint: {e.note})")
        rep.note(f"  {e.display:<28} expected {e.expected_provenance:<16} {status} {', '.join(r.tags)}")
        rep.row("lists", d=e.d, printed=e.printed, value=e.value, expected=e.expected_provenance,
                misprint=e.misprint, realized=r.realized, tags=list(r.tags),
                residual=r.best_residual)
        name = f"lists.{i:02d}.{e.value}"
        if e.realizable:
            rep.check(name, r.realized)
        else:
            rep.check(name, r.realized, expected=False, soft=True)


def cmd_theta(args, rep: RunReport, cfg, search):
    tau = UpperHalfPoint.from_complex(args.tau)
    fns = {"theta": theta, "theta0": theta0, "theta1": theta1}
    if args.char is not None:
        a, b = args.char
        val = theta_ab(a, b, args.z, tau, cfg)
        label = f"theta_{{{a},{b}}}"
    else:
        val = fns[args.kind](args.z, tau, cfg)
        label = args.kind
    rep.row("theta", function=label, z=args.z, tau=args.tau, value=val)
    rep.note(f"{label}({format_complex(args.z)}, {format_complex(args.tau)}) = {format_complex(val)}")


def cmd_negsign(args, rep: RunReport, cfg, search):
    b = args.d - args.a
    try:
        cm.m0(args.d, args.a, b)
    except cm.GateError as exc:
        raise UsageError(str(exc)) from None
    sb = _search_bounds(args, search)
    exists = cm.negative_sign_exists(args.a, b)
    hit = cm.search_negative_sign(args.d, args.a, b, sb["k_min"], sb["k_max"], sb["p_max"])
    lam = cm.CMDescriptor.build(args.d, args.a, b).lambda0
    rep.note(f"-({lam}): criterion says {'exists' if exists else 'never'}; "
             f"search k in [{sb['k_min']}, {sb['k_max']}], p <= {sb['p_max']}: "
             f"{'(k, p) = ' + str(hit) if hit else 'none'}")
    if hit:
        desc = cm.CMDescriptor.build(args.d, args.a, b, *hit)
        rep.note(f"tau = {desc.tau_string()}")
    rep.row("negsign", d=args.d, a=args.a, b=b, criterion=exists, witness=list(hit) if hit else None,
            **sb)
    if not exists:
        rep.check("negsign.no_witness_when_criterion_false", hit is None)
    else:
        rep.check("negsign.witness_found", hit is not None, soft=True)


def cmd_selftest(args, rep: RunReport, cfg, search):
    for r in acceptance.run_all(args.profile):
        rep.note(r.line())
        rep.records.extend(r.report.records)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file overriding theta and search settings")
    common.add_argument("--jsonl", action="store_true", help="print JSON-lines records")
    common.add_argument("--report", help="also write JSON-lines records to this file")

    p = argparse.ArgumentParser(prog="thetacrit", description="Critical values on Z/dZ from theta functions.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("pairs", parents=[common], help="gate-passing (a, b) with their CM data")
    s.add_argument("d", type=_odd)
    s.set_defaults(func=cmd_pairs)

    for name, func, help_ in (("tau", cmd_tau, "associated parameter, N_k, sign and sigma"),
                              ("verify", cmd_verify, "build the theta family and check the predicted value")):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("d", type=_odd)
        s.add_argument("a", type=int)
        s.add_argument("b", type=int)
        s.add_argument("k", type=int)
        s.add_argument("p", type=int)
        if name == "verify":
            s.add_argument("z", type=_complex_arg, nargs="?", default=0.1 + 0j)
            s.add_argument("--tol", type=float, default=1e-7)
        s.set_defaults(func=func)

    s = sub.add_parser("family", parents=[common], help="values of l -> theta(z + l/d, tau)")
    s.add_argument("d", type=_odd)
    s.add_argument("tau", type=_complex_arg)
    s.add_argument("z", type=_complex_arg, nargs="?", default=0j)
    s.add_argument("--lam", type=_complex_arg, help="check against this value instead of the estimate")
    s.add_argument("--tol", type=float, default=1e-7)
    s.add_argument("--rescale", action="store_true", help="scale out the largest term")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("lists", parents=[common], help="realise the published list for d")
    s.add_argument("d", type=_odd)
    s.set_defaults(func=cmd_lists)

    s = sub.add_parser("theta", parents=[common], help="evaluate a theta series")
    s.add_argument("z", type=_complex_arg)
    s.add_argument("tau", type=_complex_arg)
    s.add_argument("--kind", choices=("theta", "theta0", "theta1"), default="theta")
    s.add_argument("--char", type=int, nargs=2, metavar=("A", "B"), choices=(0, 1),
                   help="characteristic (a, b) in {0, 1}^2")
    s.set_defaults(func=cmd_theta)

    s = sub.add_parser("negsign", parents=[common], help="negative-sign criterion and witness search")
    s.add_argument("d", type=_odd)
    s.add_argument("a", type=int)
    s.add_argument("--k-min", dest="k_min", type=int)
    s.add_argument("--k-max", dest="k_max", type=int)
    s.add_argument("--p-max", dest="p_max", type=int)
    s.set_defaults(func=cmd_negsign)

    s = sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    s.add_argument("profile", nargs="?", choices=acceptance.PROFILES, default="quick")
    s.set_defaults(func=cmd_selftest)
    return p


_NEGATIVE_COMPLEX = re.compile(r"^-[0-9.ij]")


def _protect_negatives(argv: list[str]) -> list[str]:
    """A leading space keeps argparse from reading ``-0.3+0.1i`` as an option."""
    return [" " + a if _NEGATIVE_COMPLEX.match(a) else a for a in argv]


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negatives(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg, search = load_config(args.config)
        rep = RunReport(["thetacrit", *argv], seed=acceptance.SEED if args.command == "selftest" else None,
                        config={"theta": cfg.__dict__, "search": search})
        args.func(args, rep, cfg, search)
    except (UsageError, TruncationError, ValueError) as exc:
        print(f"thetacrit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(rep.to_jsonl())
    if args.jsonl:
        sys.stdout.write(rep.to_jsonl())
    else:
        print("\n".join(rep.summary_lines()))
    return rep.exit_status


if __name__ == "__main__":
    sys.exit(main())
