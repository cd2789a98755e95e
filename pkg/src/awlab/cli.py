"""Command-line front end.

    awlab gen|apply|fit|verify|moments|replay [flags]

JSON reports carry ``"schema": 1`` and the configuration that produced them,
so ``replay`` can re-run a saved report and compare it byte for byte.

Exit codes: 0 ok, 1 nonzero residual (or replay mismatch), 2 bad input,
3 relation admits only the trivial solution.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Optional

from .families import (
    AWParams,
    FamilyError,
    HermiteVariant,
    PearsonPair,
    TTRRSpec,
    aw_pearson_pair,
    aw_ttrr,
    generate_ops,
    hermite_ttrr,
    pearson_ttrr,
    special_aw_params,
)
from .functionals import (
    FunctionalTag,
    act,
    dual_action,
    functional_identity_residual,
    moments_from_ttrr,
    pearson_residual,
    ttrr_from_moments,
)
from .poly import Poly, to_laurent
from .qops import IdentityTag, dq, identity_residual, sq
from .scalar import QContext, Scalar, format_rational
from .structure import (
    OnlyTrivial,
    Relation,
    StructureError,
    aw_theorem_t_data,
    check_case_zero,
    check_conditions_31,
    check_dqsq_hermite,
    expansion_final01,
    fit_first_type,
    fit_second_type,
    hermite_system_residuals,
    ismail_residual,
    relation_residuals,
    second_order_data,
)

EXIT_OK, EXIT_RESIDUAL, EXIT_INPUT, EXIT_TRIVIAL = 0, 1, 2, 3

FAMILIES = ("askey-wilson", "q-hermite", "pearson", "special-aw")
CHECKS = (
    "identities",
    "case-zero",
    "dqsq-hermite",
    "hermite-system",
    "final01",
    "ismail",
    "pearson",
    "favard",
    "dual-basis",
)
RELATIONS = tuple(r.value for r in Relation)
DEFAULT_AW = "1/2,1/3,1/5,1/7"
DUAL_PROBE_DEG = 8

# Config keys echoed into every report; replay rebuilds argv from them.
_CONFIG_KEYS = (
    "command", "t", "n", "family", "params", "variant", "a", "check", "relation",
    "input", "seed", "trials", "op", "power", "poly", "k",
)


class InputError(Exception):
    """Bad command-line input; maps to exit code 2."""


# ---------------------------------------------------------------- parsing


def _scalar_csv(text: str) -> list:
    try:
        return [Scalar.parse(s) for s in text.split(",")]
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _context(args) -> QContext:
    try:
        return QContext(Fraction(args.t))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"--t: {exc}") from None


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


class Family:
    """A resolved family descriptor: recurrence plus whatever built it."""

    def __init__(self, name: str, ctx: QContext, ttrr: TTRRSpec, aw: Optional[AWParams] = None,
                 pair: Optional[PearsonPair] = None, variant: Optional[str] = None):
        self.name = name
        self.ctx = ctx
        self.ttrr = ttrr
        self.aw = aw
        self.pair = pair
        self.variant = variant

    def describe(self) -> dict:
        out = {"family": self.name, "t": format_rational(self.ctx.t)}
        if self.variant:
            out["variant"] = self.variant
        if self.aw is not None:
            out["params"] = [str(v) for v in self.aw.as_tuple()]
        if self.pair is not None:
            out["phi"] = [str(c) for c in self.pair.phi.coeffs]
            out["psi"] = [str(c) for c in self.pair.psi.coeffs]
        return out


def _family(args, N: int) -> Family:
    """Build the recurrence up to index N (B_0..B_N, C_1..C_N)."""
    if args.input:
        obj = _load_json(args.input)
        try:
            ttrr = TTRRSpec.from_json(obj)
            ctx = QContext(Fraction(obj["t"])) if "t" in obj else _context(args)
        except (KeyError, ValueError, ZeroDivisionError) as exc:
            raise InputError(f"{args.input}: {exc}") from None
        if ttrr.max_n < N:
            raise InputError(f"{args.input} holds the recurrence up to n = {ttrr.max_n}, need {N}")
        return Family("input", ctx, TTRRSpec(ttrr.B[: N + 1], ttrr.C[:N]))

    ctx = _context(args)
    name = args.family or "askey-wilson"
    try:
        if name == "askey-wilson":
            vals = _scalar_csv(args.params or DEFAULT_AW)
            if len(vals) != 4:
                raise InputError("askey-wilson needs four parameters")
            p = AWParams(*vals)
            return Family(name, ctx, aw_ttrr(ctx, p, N), aw=p)
        if name == "special-aw":
            a = Scalar.parse(args.a) if args.a else Scalar(Fraction(1, 3))
            p = special_aw_params(ctx, a, N=max(N, 20))
            return Family(name, ctx, aw_ttrr(ctx, p, N), aw=p)
        if name == "q-hermite":
            variant = args.variant or HermiteVariant.base_q.value
            return Family(name, ctx, hermite_ttrr(ctx, HermiteVariant(variant), N), variant=variant)
        if name == "pearson":
            if args.params:
                vals = _scalar_csv(args.params)
                if len(vals) != 5:
                    raise InputError("pearson needs a,b,c,d,e for phi = a x^2 + b x + c, psi = d x + e")
                a, b, c, d, e = vals
                pair = PearsonPair(Poly([c, b, a]), Poly([e, d]))
            else:
                pair = aw_pearson_pair(ctx, AWParams(*_scalar_csv(DEFAULT_AW)))
            return Family(name, ctx, pearson_ttrr(ctx, pair, N), pair=pair)
    except (FamilyError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"{type(exc).__name__}: {exc}") from None
    raise InputError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")


def _members(fam: Family, N: int) -> list:
    return generate_ops(fam.ttrr, N)


# --------------------------------------------------------------- commands


def _poly_strs(p: Poly) -> list:
    return [str(c) for c in p.coeffs]


def cmd_gen(args) -> tuple:
    N = args.n
    fam = _family(args, N)
    P = _members(fam, N)
    report = fam.describe()
    report.update(
        {
            "N": N,
            "B": [str(v) for v in fam.ttrr.B],
            "C": [str(v) for v in fam.ttrr.C],
            "P": [p.to_json() for p in P],
        }
    )
    rows = [(f"B_{n}", fam.ttrr.b(n)) for n in range(N + 1)] + [(f"C_{n}", fam.ttrr.c(n)) for n in range(1, N + 1)]
    return EXIT_OK, report, rows


def cmd_apply(args) -> tuple:
    ctx = _context(args)
    if args.poly:
        f = Poly(_scalar_csv(args.poly))
        source = "poly"
    else:
        fam = _family(args, args.n)
        f = _members(fam, args.n)[args.n]
        ctx = fam.ctx
        source = f"P_{args.n}"
    op = args.op or "dq"
    if op not in ("dq", "sq"):
        raise InputError("--op must be dq or sq")
    if args.power < 0:
        raise InputError("--power must be >= 0")
    g = f
    for _ in range(args.power):
        g = dq(ctx, g) if op == "dq" else sq(ctx, g)
    report = {
        "t": format_rational(ctx.t),
        "source": source,
        "op": op,
        "power": args.power,
        "input": f.to_json(),
        "output": g.to_json(),
        "output_laurent": [str(c) for c in to_laurent(g).c],
    }
    rows = [(f"x^{k}", c) for k, c in enumerate(g.coeffs)]
    return EXIT_OK, report, rows


def cmd_fit(args) -> tuple:
    N = args.n
    relation = Relation(args.relation or Relation.FIRST.value)
    fam = _family(args, N + 1)
    ctx = fam.ctx
    P = _members(fam, N + 1)
    report = fam.describe()
    report["relation"] = relation.value
    report["N"] = N
    try:
        if relation is Relation.FIRST:
            fits = fit_first_type(ctx, P, N)
        else:
            fits = fit_second_type(ctx, P, N, variant=relation)
    except OnlyTrivial as exc:
        report.update({"solution_dim": 0, "fits": [], "residual_zero": True, "violations": [str(exc)]})
        return EXIT_TRIVIAL, report, [("solution_dim", 0)]

    violations = []
    residual_zero = True
    fit_reports = []
    for idx, fit in enumerate(fits):
        res = relation_residuals(ctx, fit, P)
        bad = [n for n, r in res.items() if not r.is_zero()]
        if bad:
            residual_zero = False
            violations.append(f"fit {idx}: relation residual nonzero at n = {bad}")
        if fit.cn_zero:
            violations.append(f"fit {idx}: c_n = 0 at n = {fit.cn_zero}")
        entry = fit.to_json()
        if relation is Relation.FIRST and N >= 3:
            cond = check_conditions_31(ctx, fit, fam.ttrr)
            entry["conditions"] = cond.to_json()
            if not (cond.cond1_holds and cond.cond2_holds):
                violations.append(f"fit {idx}: side condition nonzero")
            try:
                data = second_order_data(ctx, fit, fam.ttrr)
            except StructureError as exc:
                entry["second_order"] = None
                violations.append(f"fit {idx}: {exc}")
            else:
                entry["second_order"] = data.to_json(N)
                ism = [n for n in range(1, N + 1) if not ismail_residual(ctx, data, P[n], n).is_zero()]
                entry["ismail_nonzero_at"] = ism
                if ism:
                    violations.append(f"fit {idx}: second-order equation fails at n = {ism}")
        if relation is not Relation.FIRST and fit.c and not fit.a and not fit.b:
            entry["c_n_over_c"] = [str(fit.cn[n] / fit.c) for n in range(1, N + 1)]
        fit_reports.append(entry)

    report.update({"solution_dim": len(fits), "fits": fit_reports, "residual_zero": residual_zero, "violations": violations})
    if fit_reports and "conditions" in fit_reports[0]:
        report["conditions"] = {"c1": fit_reports[0]["conditions"]["c1"], "c2": fit_reports[0]["conditions"]["c2"]}
    rows = [("solution_dim", len(fits))]
    first = fits[0]
    rows += [("pi", str(first.pi))]
    rows += [(f"c_{n}", first.cn[n]) for n in range(1, N + 1)]
    return (EXIT_OK if residual_zero else EXIT_RESIDUAL), report, rows


def _random_poly(rng: random.Random, max_deg: int) -> Poly:
    deg = rng.randint(0, max_deg)
    coeffs = []
    for _ in range(deg + 1):
        re = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        im = Fraction(rng.randint(-5, 5), rng.randint(1, 4)) if rng.random() < 0.5 else Fraction(0)
        coeffs.append(Scalar(re, im))
    return Poly(coeffs)


def _verify_identities(args) -> tuple:
    ctx = _context(args)
    rng = random.Random(args.seed)
    summary = {tag.value: 0 for tag in IdentityTag}
    summary.update({f"{IdentityTag.DnS.value}[n={k}]": 0 for k in range(4)})
    del summary[IdentityTag.DnS.value]
    failures = []
    for trial in range(args.trials):
        f = _random_poly(rng, 8)
        g = _random_poly(rng, 8)
        checks = [
            (IdentityTag.ProductD.value, identity_residual(ctx, IdentityTag.ProductD, f, g)),
            (IdentityTag.ProductS.value, identity_residual(ctx, IdentityTag.ProductS, f, g)),
            (IdentityTag.SSquare.value, identity_residual(ctx, IdentityTag.SSquare, f)),
            (IdentityTag.FDxG.value, identity_residual(ctx, IdentityTag.FDxG, f, g)),
            (IdentityTag.StartEq01.value, identity_residual(ctx, IdentityTag.StartEq01, f)),
        ]
        checks += [
            (f"{IdentityTag.DnS.value}[n={k}]", identity_residual(ctx, IdentityTag.DnS, f, n=k)) for k in range(4)
        ]
        for name, res in checks:
            if not res.is_zero():
                summary[name] += 1
                failures.append({"trial": trial, "identity": name, "residual": _poly_strs(res)})
    report = {"t": format_rational(ctx.t), "trials": args.trials, "seed": args.seed, "max_degree": 8,
              "nonzero_counts": summary, "failures": failures}
    rows = sorted(summary.items())
    return (EXIT_OK if not failures else EXIT_RESIDUAL), report, rows


def _verify_case_zero(args, fam: Family, P: list) -> tuple:
    rep = check_case_zero(fam.ctx, P, args.n)
    rows = [(f"n={n}", "0" if p.is_zero() else f"deg {p.degree}") for n, p in rep.residuals.items()]
    return rep.all_zero, rep.to_json(), rows


def _verify_dqsq_hermite(args, fam: Family, P: list) -> tuple:
    rep = check_dqsq_hermite(fam.ctx, P, args.n)
    ok = rep.all_zero and rep.matches_expected
    rows = [(f"r_{n}", v) for n, v in rep.r.items()]
    return ok, rep.to_json(), rows


def _verify_hermite_system(args, fam: Family, P: list) -> tuple:
    N = args.n
    rep = check_dqsq_hermite(fam.ctx, P, N + 3)
    out, rows, ok = {}, [], rep.all_zero
    for n in range(2, N + 1):
        e = hermite_system_residuals(fam.ctx, rep.r, fam.ttrr, n)
        out[str(n)] = [str(v) for v in e]
        ok = ok and not any(e)
        rows.append((f"n={n}", " ".join("0" if not v else "X" for v in e)))
    return ok, {"dqsq_residual_zero": rep.all_zero, "residuals": out}, rows


def _verify_final01(args, fam: Family, P: list) -> tuple:
    N = args.n
    fits = fit_second_type(fam.ctx, P, N + 1, variant=Relation.DQSQ)
    fit = fits[0]
    abc = (fit.a, fit.b, fit.c)
    out, rows, ok = [], [], True
    for n in range(2, N + 1):
        r = expansion_final01(fam.ctx, abc, fit, fam.ttrr, P, n)
        j = r.to_json()
        out.append(j)
        good = r.formulas_match and r.residual.is_zero() and bool(r.closed_form.r5)
        ok = ok and good
        rows.append((f"n={n}", "ok" if good else "FAIL"))
    return ok, {"pi": [str(fit.c), str(fit.b), str(fit.a)], "solution_dim": len(fits), "steps": out}, rows


def _verify_ismail(args, fam: Family, P: list) -> tuple:
    N = args.n
    ctx = fam.ctx
    out, rows, ok = {}, [], True
    if fam.aw is not None:
        data = aw_theorem_t_data(ctx, fam.aw)
        bad = [n for n in range(1, N + 1) if not ismail_residual(ctx, data, P[n], n).is_zero()]
        out["sigma_data"] = {"nonzero_at": bad, "lambda": [str(v) for v in data.lambdas(N)]}
        ok = ok and not bad
        rows.append(("sigma data", "0" if not bad else f"nonzero at {bad}"))
    try:
        fits = fit_first_type(ctx, P, max(N, 3))
    except OnlyTrivial as exc:
        out["fitted_data"] = {"error": str(exc)}
        rows.append(("fitted data", "no first-type fit"))
        if fam.aw is None:
            ok = False
    else:
        data = second_order_data(ctx, fits[0], fam.ttrr)
        bad = [n for n in range(1, N + 1) if not ismail_residual(ctx, data, P[n], n).is_zero()]
        out["fitted_data"] = dict(data.to_json(N), nonzero_at=bad)
        ok = ok and not bad
        rows.append(("fitted data", "0" if not bad else f"nonzero at {bad}"))
    return ok, out, rows


def _verify_pearson(args, fam: Family, P: list) -> tuple:
    ctx = fam.ctx
    N = args.n
    if fam.pair is not None:
        pair = fam.pair
    elif fam.aw is not None:
        pair = aw_pearson_pair(ctx, fam.aw)
    else:
        raise InputError("pearson check needs --family askey-wilson, special-aw or pearson")
    K = 2 * N + 4
    ref = pearson_ttrr(ctx, pair, N)
    same = ref.B == fam.ttrr.B[: N + 1] and ref.C == fam.ttrr.C[:N]
    u = moments_from_ttrr(fam.ttrr, K + 1)
    res = pearson_residual(ctx, pair, u, K)
    bad = [k for k, v in enumerate(res) if v]
    rows = [("ttrr match", "yes" if same else "no"), ("pearson residual", "0" if not bad else f"nonzero at {bad}")]
    return same and not bad, {"ttrr_match": same, "K": K, "nonzero_at": bad}, rows


def _verify_favard(args, fam: Family, P: list) -> tuple:
    N = args.n
    u = moments_from_ttrr(fam.ttrr, 2 * N + 1)
    back = ttrr_from_moments(u, N)
    okB = back.B == fam.ttrr.B[: N + 1]
    okC = back.C == fam.ttrr.C[:N]
    report = {"B_match": okB, "C_match": okC, "B": [str(v) for v in back.B], "C": [str(v) for v in back.C]}
    return okB and okC, report, [("B", "match" if okB else "MISMATCH"), ("C", "match" if okC else "MISMATCH")]


def _verify_dual_basis(args, fam: Family, P: list) -> tuple:
    """<a_n, P_m> = delta_nm for n, m <= min(N, 6) and the derivative identity
    for k = 1, 2, n <= 4 on probes x^0..x^8."""
    ctx = fam.ctx
    N = min(args.n, 6)
    u = moments_from_ttrr(fam.ttrr, len(P) - 1)
    bad_delta = [
        [n, m] for n in range(N + 1) for m in range(N + 1)
        if dual_action(u, P, n, P[m]) != (1 if n == m else 0)
    ]
    deriv = {}
    for k in (1, 2):
        for n in range(min(N, 4) + 1):
            r = functional_identity_residual(ctx, FunctionalTag.DualDeriv, u=u, P=P[: DUAL_PROBE_DEG + k + 1],
                                             n=n, k=k, K=DUAL_PROBE_DEG)
            deriv[f"k={k},n={n}"] = not any(r)
    ok = not bad_delta and all(deriv.values())
    rows = [("delta", "ok" if not bad_delta else f"{len(bad_delta)} bad")] + sorted(
        (key, "0" if v else "X") for key, v in deriv.items()
    )
    return ok, {"delta_violations": bad_delta, "derivative_identity_zero": deriv}, rows


# check -> (runner, recurrence depth needed for a given N)
_VERIFY = {
    "case-zero": (_verify_case_zero, lambda N: N + 1),
    "dqsq-hermite": (_verify_dqsq_hermite, lambda N: N),
    "hermite-system": (_verify_hermite_system, lambda N: N + 3),
    "final01": (_verify_final01, lambda N: N + 2),
    "ismail": (_verify_ismail, lambda N: max(N, 3) + 1),
    "pearson": (_verify_pearson, lambda N: 2 * N + 5),
    "favard": (_verify_favard, lambda N: 2 * N),
    "dual-basis": (_verify_dual_basis, lambda N: 2 * DUAL_PROBE_DEG - 2),
}


def cmd_verify(args) -> tuple:
    check = args.check
    if check is None:
        raise InputError(f"--check is required; choose from {', '.join(CHECKS)}")
    if check == "identities":
        return _verify_identities(args)
    if check not in _VERIFY:
        raise InputError(f"unknown check {check!r}; choose from {', '.join(CHECKS)}")
    fn, depth = _VERIFY[check]
    top = depth(args.n)
    fam = _family(args, top)
    P = _members(fam, top)
    report = fam.describe()
    try:
        ok, body, rows = fn(args, fam, P)
    except OnlyTrivial as exc:
        report.update({"check": check, "N": args.n, "residual_zero": False, "error": str(exc)})
        return EXIT_TRIVIAL, report, [("error", str(exc))]
    report.update({"check": check, "N": args.n, "residual_zero": ok})
    report.update(body)
    return (EXIT_OK if ok else EXIT_RESIDUAL), report, rows


def cmd_moments(args) -> tuple:
    N = args.n
    K = args.k if args.k is not None else 2 * N + 1
    fam = _family(args, max(N, K - 1))
    u = moments_from_ttrr(fam.ttrr, K)
    report = fam.describe()
    report["N"] = N
    report.update(u.to_json())
    ok = True
    if K >= 2 * N + 1:
        back = ttrr_from_moments(u, N)
        ok = back.B == fam.ttrr.B[: N + 1] and back.C == fam.ttrr.C[:N]
        report["favard_round_trip"] = ok
    P = _members(fam, min(N, K))
    report["orthogonality_zero"] = all(act(u, P[n]) == 0 for n in range(1, len(P)))
    rows = [(f"m_{k}", v) for k, v in enumerate(u.m)]
    return (EXIT_OK if ok else EXIT_RESIDUAL), report, rows


def _argv_from_config(cfg: dict) -> list:
    argv = [cfg["command"]]
    for key in _CONFIG_KEYS[1:]:
        val = cfg.get(key)
        if val is None:
            continue
        argv += [f"--{key}", str(val)]
    return argv


def cmd_replay(args) -> tuple:
    if not args.input:
        raise InputError("replay needs --input REPORT.json")
    saved = _load_json(args.input)
    cfg = saved.get("config")
    if not isinstance(cfg, dict) or cfg.get("command") in (None, "replay"):
        raise InputError(f"{args.input} carries no replayable config")
    sub = build_parser().parse_args(_argv_from_config(cfg))
    code, fresh, _ = _run(sub)
    same = _dumps(fresh) == _dumps(saved)
    report = {"replayed": cfg["command"], "input": args.input, "identical": same, "exit_code": code}
    return (EXIT_OK if same else EXIT_RESIDUAL), report, [("identical", same), ("exit_code", code)]


COMMANDS = {
    "gen": cmd_gen,
    "apply": cmd_apply,
    "fit": cmd_fit,
    "verify": cmd_verify,
    "moments": cmd_moments,
    "replay": cmd_replay,
}


# ------------------------------------------------------------------ output


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _render_cell(v) -> str:
    if isinstance(v, Scalar):
        return v.approx()
    return str(v)


def _table(rows: list) -> str:
    if not rows:
        return ""
    width = max(len(str(k)) for k, _ in rows)
    return "".join(f"{str(k).ljust(width)}  {_render_cell(v)}\n" for k, v in rows)


def _config(args) -> dict:
    return {key: getattr(args, key, None) for key in _CONFIG_KEYS}


def _run(args) -> tuple:
    code, report, rows = COMMANDS[args.command](args)
    full = {"schema": 1, "config": _config(args), "exit_code": code}
    full.update(report)
    return code, full, rows


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="awlab", description="Exact Askey-Wilson operator calculus toolkit.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--t", default="1/2", help="lattice parameter t = q^(1/2), 0 < t < 1 (default 1/2)")
    p.add_argument("--n", type=int, default=8, help="largest index N (default 8)")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--params", help="CSV of scalars: four AW parameters, or a,b,c,d,e of a Pearson pair")
    p.add_argument("--variant", choices=[v.value for v in HermiteVariant])
    p.add_argument("--a", help="parameter of the special-aw family (default 1/3)")
    p.add_argument("--check", choices=CHECKS)
    p.add_argument("--relation", choices=RELATIONS)
    p.add_argument("--input", help="TTRR JSON, or a saved report for replay")
    p.add_argument("--output", help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--op", choices=("dq", "sq"), help="operator for apply (default dq)")
    p.add_argument("--power", type=int, default=1, help="how many times apply runs the operator")
    p.add_argument("--poly", help="CSV of ascending coefficients for apply")
    p.add_argument("--k", type=int, help="moment truncation for the moments command (default 2N+1)")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.n < 1:
        print("awlab: --n must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    if args.trials < 0:
        print("awlab: --trials must be >= 0", file=sys.stderr)
        return EXIT_INPUT
    try:
        code, report, rows = _run(args)
    except InputError as exc:
        print(f"awlab: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (FamilyError, StructureError, IndexError) as exc:
        print(f"awlab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if args.format == "table":
        text = _table(rows)
    else:
        text = _dumps(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
