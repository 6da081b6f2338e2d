"""Command-line interface.

Subcommands: classify, report, match, count, verify.  Output is a JSON
envelope {"status", "elapsed_ms", "payload"} by default, or plain text
with --ascii.  Exit codes: 0 ok, 1 verification failure, 2 usage/parse
error, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from .classify import classify, witness_nonlci
from .diagrams import essential_set, inclusion_level, rothe_diagram
from .ideals import BudgetError, kl_ideal_generators, minimal_generators
from .localclass import local_class_product, oracle_class
from .patterns import (
    IntervalPattern,
    MarkedMeshPattern,
    contains_marked_mesh,
    interval_embeds,
)
from .permutations import format_perm, identity, parse_perm
from .symfuncs import cohomology_presentation
from .verify import SUITES, run_suite


class CliError(Exception):
    def __init__(self, code: str, message: str, exit_code: int):
        super().__init__(message)
        self.code = code
        self.exit_code = exit_code


def _parse(text: str):
    try:
        return parse_perm(text)
    except ValueError as exc:
        raise CliError("E_PARSE", str(exc), 2) from exc


def _require_lci(w):
    if not classify(w).lci:
        raise CliError(
            "E_NOT_LCI",
            f"{format_perm(w)} is outside the classified lci family",
            2,
        )


# ---------------------------------------------------------------------------
# payload builders


def _payload_classify(args) -> dict:
    w = _parse(args.perm)
    rep = classify(w)
    payload = rep.to_json()
    if not rep.lci:
        wit = witness_nonlci(w)
        payload["nonlci_witness"] = wit.to_json() if wit else None
    return payload


def _diagram_ascii(w) -> str:
    n = len(w)
    diagram = rothe_diagram(w)
    ess = {(b.p, b.q) for b in essential_set(w)}
    lines = []
    for p in range(1, n + 1):
        cells = []
        for q in range(1, n + 1):
            if w[q - 1] == p:
                cells.append(" . ")
            elif (p, q) in ess:
                cells.append("[E]")
            elif (p, q) in diagram:
                cells.append("[ ]")
            else:
                cells.append("   ")
        lines.append("".join(cells))
    return "\n".join(lines)


def _payload_diagram(w) -> dict:
    ess = essential_set(w)
    return {
        "perm": format_perm(w),
        "n": len(w),
        "inclusion_level": inclusion_level(w),
        "diagram": [list(b) for b in sorted(rothe_diagram(w))],
        "essential": [
            {
                "p": b.p,
                "q": b.q,
                "rank": b.rank,
                "conditions": sorted(b.conditions),
                "stratum": b.stratum,
            }
            for b in ess
        ],
    }


def _payload_ideal(args) -> dict:
    w = _parse(args.perm)
    if args.minimal:
        _require_lci(w)
        gens = minimal_generators(w)
    else:
        v = _parse(args.v) if args.v else identity(len(w))
        if len(v) != len(w):
            raise CliError("E_PARSE", "v and w have different sizes", 2)
        gens = kl_ideal_generators(v, w)
    out = gens.to_json()
    out["perm"] = format_perm(w)
    out["count"] = len(gens)
    return out


_ORACLE_BOUND = {"cohomology": 7, "K": 6}


def _payload_localclass(args) -> dict:
    w = _parse(args.perm)
    _require_lci(w)
    n = len(w)
    coh = local_class_product(w, "cohomology")
    kpair = local_class_product(w, "K")
    payload = {
        "perm": format_perm(w),
        "cohomology": str(coh),
        "K": {"num": str(kpair.num), "den": str(kpair.den)},
    }
    if args.oracle:
        for theory in ("cohomology", "K"):
            if n > _ORACLE_BOUND[theory]:
                raise BudgetError(
                    f"divided-difference oracle capped at n = "
                    f"{_ORACLE_BOUND[theory]} for {theory}"
                )
        ocoh = oracle_class(w, "cohomology")
        ok = oracle_class(w, "K")
        payload["oracle"] = {
            "cohomology": str(ocoh),
            "K": {"num": str(ok.num), "den": str(ok.den)},
        }
        payload["verdict"] = (
            "equal" if (ocoh == coh and ok == kpair) else "different"
        )
    return payload


def _payload_cohomology(args) -> dict:
    w = _parse(args.perm)
    _require_lci(w)
    gens = cohomology_presentation(w)
    return {
        "perm": format_perm(w),
        "count": len(gens),
        "generators": [
            {
                "poly": str(poly),
                "origin": {"kind": tag[0], "box": list(tag[1]), "index": tag[2]},
            }
            for poly, tag in gens
        ],
    }


def _payload_report(args) -> dict:
    if args.what == "diagram":
        return _payload_diagram(_parse(args.perm))
    if args.what == "ideal":
        return _payload_ideal(args)
    if args.what == "localclass":
        return _payload_localclass(args)
    return _payload_cohomology(args)


def _payload_match(args) -> dict:
    host = _parse(args.host)
    if args.pattern:
        try:
            data = json.loads(args.pattern)
        except json.JSONDecodeError:
            data = None
        if not isinstance(data, dict):
            # bare permutation text = classical pattern
            data = {"perm": list(_parse(args.pattern)), "constraints": []}
        try:
            mmp = MarkedMeshPattern.from_json(data)
        except (KeyError, TypeError, ValueError) as exc:
            raise CliError("E_PARSE", f"bad pattern: {exc}", 2) from exc
        emb = contains_marked_mesh(host, mmp)
        return {
            "host": format_perm(host),
            "pattern": mmp.to_json(),
            "embedding": list(emb) if emb else None,
        }
    try:
        data = json.loads(args.interval)
        ip = IntervalPattern.from_json(data)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise CliError("E_PARSE", f"bad interval: {exc}", 2) from exc
    emb = interval_embeds(host, ip)
    return {
        "host": format_perm(host),
        "interval": ip.to_json(),
        "embedding": list(emb) if emb else None,
    }


def _payload_count(args) -> dict:
    payload = run_suite("counting", args.max_n, jobs=args.jobs, seed=args.seed)
    return {
        "max_n": args.max_n,
        "counts": payload["counts"],
        "slab_counts": payload["slab_counts"],
    }


# ---------------------------------------------------------------------------
# ascii rendering


def _ascii(args, payload) -> str:
    cmd = args.cmd
    lines = []
    if cmd == "classify":
        lines.append(f"permutation {payload['perm']}")
        for k in ("smooth", "factorial", "dbi", "lci", "matrix_schubert_lci"):
            mark = "yes" if payload[k] else "no"
            cert = payload["certificates"].get(k)
            extra = ""
            if not payload[k] and cert:
                extra = f"  (contains {cert['pattern']} at {','.join(map(str, cert['positions']))})"
            lines.append(f"  {k:22s} {mark}{extra}")
        wit = payload.get("nonlci_witness")
        if wit:
            lines.append(
                f"  witness: [{wit['u']}] <= [{wit['v']}] from {wit['source']}"
                f" at {','.join(map(str, wit['positions']))}"
            )
    elif cmd == "report" and args.what == "diagram":
        lines.append(_diagram_ascii(_parse(args.perm)))
        lines.append(f"inclusion level: {payload['inclusion_level']}")
        for b in payload["essential"]:
            lines.append(
                f"  essential ({b['p']},{b['q']}) rank {b['rank']} "
                f"{b['stratum']} conditions {','.join(b['conditions']) or '-'}"
            )
    elif cmd == "report" and args.what == "ideal":
        lines.append(f"{payload['count']} generators ({payload['provenance']})")
        for g in payload["generators"]:
            rows = ",".join(map(str, g["rows"]))
            cols = ",".join(map(str, g["cols"]))
            lines.append(f"  d[{{{rows}}},{{{cols}}}] = {g['poly']}")
    elif cmd == "report" and args.what == "localclass":
        lines.append(f"cohomology: {payload['cohomology']}")
        lines.append(f"K: ({payload['K']['num']}) / ({payload['K']['den']})")
        if "verdict" in payload:
            lines.append(f"oracle verdict: {payload['verdict']}")
    elif cmd == "report":
        lines.append(f"{payload['count']} presentation generators")
        for g in payload["generators"]:
            o = g["origin"]
            lines.append(
                f"  [{o['kind']} {tuple(o['box'])} #{o['index']}] {g['poly']}"
            )
    elif cmd == "match":
        emb = payload["embedding"]
        lines.append(
            "no occurrence" if emb is None else f"occurrence at {','.join(map(str, emb))}"
        )
    elif cmd == "count":
        for n, tally in payload["counts"].items():
            lines.append(
                f"n={n}: "
                + " ".join(f"{k}={v}" for k, v in tally.items())
            )
        lines.append(
            "slabs: "
            + " ".join(f"{n}:{c}" for n, c in payload["slab_counts"].items())
        )
    elif cmd == "verify":
        lines.append(
            f"suite {payload['suite']} max_n={payload['max_n']} "
            f"total={payload['total']} failures={len(payload['failures'])}"
        )
        for f in payload["failures"]:
            lines.append(f"  FAIL {f}")
        if "verdict" in payload:
            lines.append(f"  {payload['verdict']}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="schublci",
        description="Singularity classification of Schubert varieties "
        "via permutation patterns, diagrams, ideals and local classes.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--ascii", action="store_true", help="plain text output")
        p.add_argument("--json", action="store_true", help="JSON output (default)")

    p = sub.add_parser("classify", help="singularity flags for a permutation")
    p.add_argument("perm")
    common(p)

    p = sub.add_parser("report", help="diagram / ideal / class reports")
    p.add_argument("perm")
    p.add_argument(
        "what", choices=["diagram", "ideal", "localclass", "cohomology"]
    )
    p.add_argument("--minimal", action="store_true", help="minimal generators")
    p.add_argument("--v", help="base-point permutation for the generic matrix")
    p.add_argument("--oracle", action="store_true", help="cross-check classes")
    common(p)

    p = sub.add_parser("match", help="match a pattern against a host")
    p.add_argument("host")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pattern", help="marked mesh pattern JSON or bare perm")
    g.add_argument("--interval", help='interval JSON {"u":...,"v":...}')
    common(p)

    p = sub.add_parser("count", help="class counts per n")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=list(SUITES))
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    common(p)

    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    start = time.monotonic()
    try:
        if args.cmd == "classify":
            payload = _payload_classify(args)
        elif args.cmd == "report":
            payload = _payload_report(args)
        elif args.cmd == "match":
            payload = _payload_match(args)
        elif args.cmd == "count":
            payload = _payload_count(args)
        else:
            payload = run_suite(
                args.suite, args.max_n, jobs=args.jobs, seed=args.seed
            )
    except CliError as exc:
        print(
            json.dumps(
                {"status": "error", "code": exc.code, "message": str(exc)}
            )
        )
        return exc.exit_code
    except BudgetError as exc:
        print(
            json.dumps(
                {"status": "error", "code": "E_BUDGET", "message": str(exc)}
            )
        )
        return 3
    except ValueError as exc:
        print(
            json.dumps(
                {"status": "error", "code": "E_USAGE", "message": str(exc)}
            )
        )
        return 2

    elapsed_ms = int((time.monotonic() - start) * 1000)
    if args.ascii:
        print(_ascii(args, payload))
    else:
        print(
            json.dumps(
                {"status": "ok", "elapsed_ms": elapsed_ms, "payload": payload}
            )
        )
    if args.cmd == "verify" and payload["failures"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
