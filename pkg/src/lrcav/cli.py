"""Command-line surface: bounds | curves | construct | verify | shorten.

Owns the on-disk formats: JSON code artifacts (format_version "1") and
the CSV curve table with header
``delta,upper_new,upper_tbf,lower_expander,lower_concat,rate_cap``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List

from . import analysis, bounds, constructions, shortening
from .galois import BaseField, FieldTower
from .linalg import Matrix, rref

FORMAT_VERSION = "1"


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# artifact serialization
# ---------------------------------------------------------------------------

def artifact_from_linear(code: constructions.LinearCode, kind: str,
                         provenance: dict) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "kind": kind,
        "field": {"w": code.field.w, "m": 1,
                  "modulus": code.field.modulus, "ext_modulus": None},
        "n": code.n, "k": code.k,
        "r": code.claimed_r, "t": code.claimed_t,
        "matrices": {"parity": [list(row) for row in code.parity.data]},
        "provenance": provenance,
    }


def artifact_from_composite(code: constructions.CompositeCode, kind: str,
                            r, t, provenance: dict) -> dict:
    tower = code.tower
    doc = {
        "format_version": FORMAT_VERSION,
        "kind": kind,
        "field": {"w": tower.base.w, "m": tower.m,
                  "modulus": tower.base.modulus,
                  "ext_modulus": list(tower.ext_modulus)},
        "n": code.n, "k": code.k,
        "r": r, "t": t,
        "matrices": {"outer_map": [list(row) for row in code.outer_map.data]},
        "params": {"n_G": code.n_g},
        "provenance": provenance,
    }
    if kind == "concat":
        doc["params"].update(blocks=code.blocks, n_I=code.inner_n, k_I=code.inner_k)
    if kind == "expander":
        doc["matrices"]["parity"] = provenance.get("parity")
    return doc


def save_artifact(doc: dict, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_artifact(path: str):
    """Returns (doc, code) where code is a LinearCode or CompositeCode."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot load artifact: {exc}")
    if doc.get("format_version") != FORMAT_VERSION:
        raise InputError("unsupported artifact format version")
    kind = doc.get("kind")
    f = doc["field"]
    if kind in ("wzl", "raw"):
        base = BaseField(f["w"])
        parity = Matrix.from_rows(base, doc["matrices"]["parity"], doc["n"])
        code = constructions.LinearCode.from_parity(base, parity,
                                                    doc.get("r"), doc.get("t"))
        return doc, code
    if kind == "concat":
        tower = FieldTower(BaseField(f["w"]), f["m"], f["ext_modulus"])
        code = constructions.assemble_concatenated(
            tower, doc["r"], doc["t"], doc["params"]["blocks"], doc["k"])
        return doc, code
    if kind == "expander":
        tower = FieldTower(BaseField(f["w"]), f["m"], f["ext_modulus"])
        parity = Matrix.from_rows(tower.base, doc["matrices"]["parity"], doc["n"])
        code = constructions.assemble_expander_code(tower, parity, doc["k"])
        return doc, code
    raise InputError(f"unknown artifact kind {kind!r}")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_bounds(args) -> int:
    n, k, r, t, q = args.n, args.k, args.r, args.t, args.q
    if t < 1:
        raise InputError("availability bounds need t >= 1")
    print(f"bounds for [n={n}, k={k}] with locality r={r}, availability t={t}, q={q}")
    rows = [
        ("wang_rawat", "Wang-Rawat distance bound",
         bounds.wang_rawat_distance(n, k, r, t)),
        ("tbf", "Tamo-Barg-Frolov distance bound",
         bounds.tbf_distance(n, k, r, t)),
        ("yaakobi", "Yaakobi bound (Singleton oracle)",
         bounds.yaakobi_distance(n, k, r, t, q)),
    ]
    if r >= 2 and k >= 2:
        rows.append(("shortening_singleton", "shortening bound, Singleton form",
                     bounds.shortening_singleton_distance(n, k, r)))
        sb = shortening.availability_shortening_bounds(n, k, 1, r, q)
        rows.append(("shortening_sweep", "shortening bound, oracle sweep",
                     sb.d_upper))
    cap = bounds.rate_cap(r, t)
    rows.append(("rate_cap_k", "rate-product cap on k", f"{cap} * n = {float(cap) * n:.3f}"))
    for name, label, val in rows:
        print(f"  {name:22s} {label:38s} {val}")
    return 0


def cmd_curves(args) -> int:
    rows = bounds.rate_curves(args.r, args.t, args.grid)
    lines = ["delta,upper_new,upper_tbf,lower_expander,lower_concat,rate_cap"]
    for row in rows:
        lines.append(",".join(f"{v:.12g}" for v in (
            row.delta, row.upper_new, row.upper_tbf, row.lower_expander,
            row.lower_concat, row.rate_cap)))
    try:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise InputError(f"cannot write curves CSV: {exc}")
    cross = bounds.concat_expander_crossover(rows)
    if cross is None:
        print("no concat/expander crossover on the grid")
    else:
        print(f"concat/expander crossover near delta = {cross:.6g}")
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_construct(args) -> int:
    prov = {"seed": getattr(args, "seed", None)}
    if args.subkind == "wzl":
        code = constructions.build_wzl(args.r, args.t)
        prov["parameters"] = {"r": args.r, "t": args.t}
        doc = artifact_from_linear(code, "wzl", prov)
    elif args.subkind == "concat":
        k = args.k
        if k is None:
            if args.d is None:
                raise InputError("concat needs --k or a target --d")
            n_i = constructions.build_wzl(args.r, args.t).n
            k = analysis.concatenated_dimension(args.blocks * n_i, args.d,
                                                args.r, args.t)
        k_i = constructions.build_wzl(args.r, args.t).k
        m = args.m if args.m is not None else args.blocks * k_i
        tower = FieldTower(BaseField(1), m)
        code = constructions.assemble_concatenated(tower, args.r, args.t,
                                                   args.blocks, k)
        prov["parameters"] = {"r": args.r, "t": args.t, "blocks": args.blocks,
                              "d": args.d, "k": k, "m": m}
        doc = artifact_from_composite(code, "concat", args.r, args.t, prov)
    elif args.subkind == "expander":
        g = constructions.sample_biregular(args.n, args.t, args.r + 1, args.seed,
                                           min_girth=args.min_girth)
        base = BaseField(args.w)
        parity = constructions.build_expander_parity(g, base, args.seed + 1)
        n_g = args.n - rref(parity)[1]
        m = args.m if args.m is not None else n_g
        k = args.k if args.k is not None else max(n_g // 2, 1)
        tower = FieldTower(base, m)
        code = constructions.assemble_expander_code(tower, parity, k)
        prov["parameters"] = {"n": args.n, "r": args.r, "t": args.t,
                              "w": args.w, "k": k, "m": m}
        prov["parity"] = [list(row) for row in parity.data]
        doc = artifact_from_composite(code, "expander", args.r, args.t, prov)
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown construct kind {args.subkind!r}")
    save_artifact(doc, args.out)
    print(f"wrote {doc['kind']} artifact n={doc['n']} k={doc['k']} to {args.out}")
    return 0


def cmd_verify(args) -> int:
    doc, code = load_artifact(args.code)
    report = {"artifact": args.code, "kind": doc["kind"]}
    failed = False
    if args.distance:
        if isinstance(code, constructions.LinearCode):
            d = analysis.min_distance(code)
            report["distance"] = d
            if doc.get("t") is not None and d != doc["t"] + 1 and doc["kind"] == "wzl":
                failed = True
        else:
            raise InputError("--distance applies to linear-code artifacts")
    if args.availability:
        if not isinstance(code, constructions.LinearCode):
            raise InputError("--availability applies to linear-code artifacts")
        rep = analysis.verify_availability(code, doc["r"], doc["t"])
        report["availability"] = {
            "pass": rep.ok,
            "witness_sets": {str(i): [sorted(s) for s in v]
                             for i, v in rep.recovering_sets.items()},
            "failed_coordinates": rep.failed_coordinates,
        }
        failed |= not rep.ok
    if args.erasures is not None:
        if args.seed is None:
            raise InputError("--erasures requires --seed")
        if isinstance(code, constructions.CompositeCode):
            stats = analysis.erasure_monte_carlo(code, args.erasures,
                                                 args.trials, args.seed)
            report["erasures"] = {
                "e": args.erasures, "trials": stats.trials,
                "successes": stats.successes,
                "success_rate": stats.success_rate,
                "min_survivor_rank": stats.min_survivor_rank,
                "adversarial_success": stats.adversarial_success,
                "seed": stats.seed,
            }
            failed |= stats.successes != stats.trials
            if stats.adversarial_success is False:
                failed = True
        else:
            import random as _random
            rng = _random.Random(args.seed)
            ok = 0
            for _ in range(args.trials):
                erased = rng.sample(range(code.n), args.erasures)
                ok += analysis.erasure_correctable(code, erased)
            report["erasures"] = {"e": args.erasures, "trials": args.trials,
                                  "successes": ok, "seed": args.seed}
            failed |= ok != args.trials
    print(json.dumps(report, indent=1, sort_keys=True))
    return 1 if failed else 0


def cmd_shorten(args) -> int:
    doc, code = load_artifact(args.code)
    if not isinstance(code, constructions.LinearCode):
        raise InputError("shorten applies to linear-code artifacts")
    checks = shortening.enumerate_local_checks(code, args.r)
    result = shortening.build_shortening_set(checks, args.s, code.n, args.r)
    cl = sorted(shortening.closure(code, result.I))
    d = analysis.min_distance(code)
    table = []
    for s in range(1, code.n - code.k + 1):
        try:
            res = shortening.build_shortening_set(checks, s, code.n, args.r)
        except ValueError:
            break
        table.append({"s": s, "size_I": len(res.I),
                      "size_Cl": len(shortening.closure(code, res.I)),
                      "k_bound_cap": 1 + (args.r - 1) * s,
                      "cl_floor": 1 + args.r * s})
    sb = shortening.availability_shortening_bounds(code.n, code.k, d, args.r,
                                                   code.field.q) \
        if args.r >= 2 else None
    out = {
        "I": result.I, "Cl_I": cl, "s": result.s,
        "s1": result.s1, "j": result.j,
        "per_s": table,
        "bounds": None if sb is None else
            {"k_upper": sb.k_upper, "d_upper": sb.d_upper},
    }
    print(json.dumps(out, indent=1, sort_keys=True))
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lrcav",
                                description="locally recoverable codes with availability")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", help="evaluate distance/rate bounds")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--r", type=int, required=True)
    b.add_argument("--t", type=int, required=True)
    b.add_argument("--q", type=int, default=2)
    b.set_defaults(func=cmd_bounds)

    c = sub.add_parser("curves", help="emit rate-vs-distance curves CSV")
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--t", type=int, required=True)
    c.add_argument("--grid", type=int, default=200)
    c.add_argument("--out", required=True)
    c.set_defaults(func=cmd_curves)

    k = sub.add_parser("construct", help="build a code artifact")
    ks = k.add_subparsers(dest="subkind", required=True)
    kw = ks.add_parser("wzl")
    kw.add_argument("--r", type=int, required=True)
    kw.add_argument("--t", type=int, required=True)
    kw.add_argument("--out", required=True)
    kc = ks.add_parser("concat")
    kc.add_argument("--r", type=int, required=True)
    kc.add_argument("--t", type=int, required=True)
    kc.add_argument("--blocks", type=int, required=True)
    kc.add_argument("--m", type=int)
    kc.add_argument("--d", type=int)
    kc.add_argument("--k", type=int)
    kc.add_argument("--out", required=True)
    ke = ks.add_parser("expander")
    ke.add_argument("--n", type=int, required=True)
    ke.add_argument("--r", type=int, required=True)
    ke.add_argument("--t", type=int, required=True)
    ke.add_argument("--w", type=int, required=True)
    ke.add_argument("--m", type=int)
    ke.add_argument("--k", type=int)
    ke.add_argument("--min-girth", type=int, choices=(4, 6), default=6,
                    help="6 rejects 4-cycles; 4 only rejects parallel edges")
    ke.add_argument("--seed", type=int, required=True)
    ke.add_argument("--out", required=True)
    k.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="verify a code artifact")
    v.add_argument("--code", required=True)
    v.add_argument("--distance", action="store_true")
    v.add_argument("--availability", action="store_true")
    v.add_argument("--erasures", type=int)
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--seed", type=int)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("shorten", help="run the shortening-set construction")
    s.add_argument("--code", required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--s", type=int, required=True)
    s.set_defaults(func=cmd_shorten)
    return p


def main(argv: List[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
