"""Command-line reports: ``lieboson build|classify|tensor|tables|chains|spectrum|fock``.

Every command builds a plain JSON-able payload first and renders it either as
JSON or as text, so both formats carry the same content.  Exit codes: 0 on
success, 2 on usage errors, 3 when a verification fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from fractions import Fraction

from .casimir import HamiltonianSpec, label_count_report, model_operator, spectrum
from .errors import LieBosonError
from .fock import assign_half_integer, diagonalize, fock_matrix
from .models import MODEL_NAMES, build, chains, tensor_host
from .sl2 import class_representatives, jordan_triple, wdd
from .tables import TABLES, check_table
from .tensors import decompose_adjoint

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 2, 3

_DEFINING_SIZE = {"u2": 2, "u2u2": 4, "u3": 3, "u4": 4}


class VerificationFailed(Exception):
    def __init__(self, report):
        super().__init__("verification failed")
        self.report = report


def _frac(x: Fraction) -> str:
    return str(x)


# ---------------------------------------------------------------------------
# payloads
# ---------------------------------------------------------------------------

def cmd_build(args) -> dict:
    algebra, spec = build(args.model)
    levi = algebra.levi_decomposition()
    return {
        "dimension": algebra.dim,
        "radical": [algebra.describe(v) for v in levi.radical],
        "levi_dimension": len(levi.levi),
        "levi": [algebra.describe(v) for v in levi.levi],
        "generators": [{"name": n, "operator": g.to_text()} for n, g in spec.generators.items()],
        "jacobi_residuals": len(algebra.jacobi_residuals()),
        "lattice": spec.lattice_json(),
    }


def cmd_classify(args) -> dict:
    _, spec = build(args.model)
    n = _DEFINING_SIZE[args.model]
    own = {}
    for name, J in spec.jsets.items():
        own.setdefault(str(wdd(J.triple(), spec.modes)), []).append(name)
    classes = []
    for lam, _, d in class_representatives(n):
        key = str(d)
        if args.model == "u2u2" and key not in own:
            continue  # only the classes met inside su(2)+su(2)
        rep = jordan_triple(lam, spec.modes)
        classes.append({
            "wdd": list(d.labels),
            "text": key,
            "partition": list(lam),
            "model_jsets": own.get(key, []),
            "representative": {"x": rep.x.to_text(), "y": rep.y.to_text(), "h": rep.h.to_text()},
        })
    return {"defining_dimension": n, "classes": classes}


def cmd_tensor(args) -> dict:
    host_full, spec = build(args.model)
    if args.jset not in spec.jsets:
        raise _usage(f"model {args.model} has J-sets {', '.join(spec.jsets)}")
    J = spec.jsets[args.jset]
    host = tensor_host(args.model)
    multiplets = decompose_adjoint(host, J, naming=host_full)
    counts = Counter(m.rank for m in multiplets)
    return {
        "jset": args.jset,
        "wdd": list(wdd(J.triple(), spec.modes).labels),
        "host_dimension": host.dim,
        "signature": [_frac(m.rank) for m in multiplets],
        "counts": {_frac(k): v for k, v in sorted(counts.items())},
        "multiplets": [
            {"rank": _frac(m.rank), "components": len(m.components), "spinor": m.is_spinor,
             "labels": list(m.labels)}
            for m in multiplets
        ],
    }


def cmd_tables(args) -> dict:
    keys = list(TABLES) if args.table == "all" else [args.table]
    out = []
    for key in keys:
        res = check_table(key)
        out.append({
            "table": key,
            "wdd": list(res.wdd.labels),
            "jset": res.jset_source,
            "signature": [_frac(m.rank) for m in res.decomposition],
            "rows": [
                {"name": r.name, "rank": _frac(r.rank), "ok": r.ok, "failures": r.failures,
                 "replacement": list(r.replacement.labels) if r.replacement else None}
                for r in res.rows
            ],
        })
    payload = {"tables": out}
    if any(not r["ok"] for t in out for r in t["rows"]):
        raise VerificationFailed(payload)
    return payload


def cmd_chains(args) -> dict:
    _, spec = build(args.model)
    found = chains(spec)
    return {
        "root": spec.root,
        "count": len(found),
        "chains": [{"nodes": list(c.nodes), "labels": list(c.labels)} for c in found],
    }


def cmd_spectrum(args) -> dict:
    h = HamiltonianSpec(args.alpha, args.beta, args.gamma, args.delta)
    rows = spectrum(h, args.N)
    return {
        "hamiltonian": {k: _frac(getattr(h, k)) for k in ("alpha", "beta", "gamma", "delta")},
        "N": args.N,
        "levels": [{"N": lab.N, "t": lab.t, "u": lab.u, "w": lab.w, "E": _frac(e)} for lab, e in rows],
        "counts": label_count_report(args.N),
    }


def cmd_fock(args) -> dict:
    _, spec = build(args.model)
    try:
        op = model_operator(args.model, args.op)
    except KeyError as exc:
        raise _usage(str(exc.args[0])) from None
    M = fock_matrix(op, spec.modes, args.N)
    eig = diagonalize(M)
    levels = []
    for value in eig:
        v = round(value, 10) + 0.0
        if levels and abs(levels[-1]["value"] - v) < 1e-8:
            levels[-1]["multiplicity"] += 1
            continue
        entry = {"value": v, "multiplicity": 1}
        if args.op != "N":
            w = assign_half_integer(v)
            entry["j"] = None if w is None else str(Fraction(w).limit_denominator(2))
        levels.append(entry)
    return {"operator": args.op, "N": args.N, "dimension": len(eig),
            "eigenvalues": [round(x, 10) + 0.0 for x in eig], "levels": levels}


# ---------------------------------------------------------------------------
# text rendering
# ---------------------------------------------------------------------------

def _text(echo: str, command: str, r: dict) -> str:
    lines = []
    head = f"lieboson {echo}"
    lines.append(head)
    lines.append("=" * len(head))
    if command == "build":
        lines.append(f"dimension {r['dimension']}, Levi part {r['levi_dimension']}, Jacobi residuals {r['jacobi_residuals']}")
        lines.append("radical: " + ", ".join(f"<{x}>" for x in r["radical"]))
        lines.append("generators:")
        lines += [f"  {g['name']:>4} = {g['operator']}" for g in r["generators"]]
        lines.append("lattice:")
        for node in r["lattice"]["nodes"]:
            tag = f" {_wdd_text(node['wdd'])}" if node["wdd"] else ""
            if node["semisimple"]:
                kind = "semisimple"
            elif node["sheet"] == "semisimple":
                kind = "abelian (semisimple sheet)"
            else:
                kind = "non-semisimple"
            lines.append(f"  {node['name']:<10} dim {node['dim']:>2} {kind}{tag}")
        for e in r["lattice"]["edges"]:
            lines.append(f"  {e['parent']} > {e['child']} ({e['status']})")
    elif command == "classify":
        n = len(r["classes"])
        lines.append(f"{n} class{'es' if n != 1 else ''} in sl({r['defining_dimension']})")
        for c in r["classes"]:
            own = ", ".join(c["model_jsets"]) or "-"
            lines.append(f"  {c['text']:<9} partition {c['partition']}  J-sets: {own}")
            lines.append(f"      x = {c['representative']['x']}")
    elif command == "tensor":
        lines.append(f"J-set {r['jset']} {_wdd_text(r['wdd'])} on a {r['host_dimension']}-dim host")
        lines.append("signature {" + ", ".join(r["signature"]) + "}")
        for m in r["multiplets"]:
            flag = " spinor" if m["spinor"] else ""
            lines.append(f"  rank {m['rank']} ({m['components']} components){flag}")
            lines += [f"      {lab}" for lab in m["labels"]]
    elif command == "tables":
        for t in r["tables"]:
            lines.append(f"su(4) under {_wdd_text(t['wdd'])}: J-set from {t['jset']}")
            for row in t["rows"]:
                status = "ok" if row["ok"] else "FAIL " + "; ".join(row["failures"][:3])
                lines.append(f"  {row['name']:<8} rank {row['rank']:<4} {status}")
                if row["replacement"]:
                    lines.append("      verified: (" + ", ".join(row["replacement"]) + ")")
    elif command == "chains":
        lines.append(f"{r['count']} chains from {r['root']}")
        for c in r["chains"]:
            label = f"  [{' '.join(x for x in c['labels'] if x)}]" if c["labels"] else ""
            lines.append("  " + " > ".join(c["nodes"]) + label)
    elif command == "spectrum":
        h = r["hamiltonian"]
        lines.append(f"alpha={h['alpha']} beta={h['beta']} gamma={h['gamma']} delta={h['delta']}  N={r['N']}")
        lines.append(f"  {'N':>3} {'t':>3} {'u':>3} {'w':>3}  E")
        lines += [f"  {x['N']:>3} {x['t']:>3} {x['u']:>3} {x['w']:>3}  {x['E']}" for x in r["levels"]]
        c = r["counts"]
        lines.append(f"labels {c['labels']}, sum(2w+1) {c['weighted']}, Fock dimension {c['fock']}")
    elif command == "fock":
        lines.append(f"{r['operator']} on the N={r['N']} sector (dimension {r['dimension']})")
        for lv in r["levels"]:
            extra = f"  j={lv['j']}" if lv.get("j") else ""
            lines.append(f"  {lv['value']:>12.6f}  x{lv['multiplicity']}{extra}")
    return "\n".join(lines) + "\n"


def _wdd_text(labels) -> str:
    return "[" + " ".join(map(str, labels)) + "]"


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

class _Usage(Exception):
    pass


def _usage(msg: str) -> _Usage:
    return _Usage(msg)


def _parser() -> argparse.ArgumentParser:
    default_format = os.environ.get("LIEBOSON_FORMAT", "text")
    if default_format not in ("text", "json"):
        default_format = "text"
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=default_format)

    p = argparse.ArgumentParser(prog="lieboson", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    for name, helptext in (("build", "generators, radical, Levi part, lattice"),
                           ("classify", "A1 classes with diagrams and representatives"),
                           ("chains", "maximal subalgebra chains")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("model", choices=MODEL_NAMES)

    s = sub.add_parser("tensor", parents=[common], help="tensor content relative to a J-set")
    s.add_argument("model", choices=MODEL_NAMES)
    s.add_argument("--jset", required=True)

    s = sub.add_parser("tables", parents=[common], help="verify the published su(4) tensor decompositions")
    s.add_argument("table", nargs="?", default="all", choices=("all", *TABLES))

    s = sub.add_parser("spectrum", parents=[common], help="energies from the Casimir formula")
    for coef in ("alpha", "beta", "gamma", "delta"):
        s.add_argument(f"--{coef}", type=Fraction, default=Fraction(0))
    s.add_argument("--N", type=int, required=True)

    s = sub.add_parser("fock", parents=[common], help="numerical eigenvalues on an N-boson sector")
    s.add_argument("model", choices=MODEL_NAMES)
    s.add_argument("--op", required=True, choices=("N", "L2", "W2", "J2"))
    s.add_argument("--N", type=int, required=True)
    return p


COMMANDS = {
    "build": cmd_build,
    "classify": cmd_classify,
    "tensor": cmd_tensor,
    "tables": cmd_tables,
    "chains": cmd_chains,
    "spectrum": cmd_spectrum,
    "fock": cmd_fock,
}


def render(echo: str, command: str, model: str | None, payload: dict, fmt: str) -> str:
    if fmt == "json":
        doc = {"command": command, "echo": echo, "model": model, "format": fmt, "results": payload}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    return _text(echo, command, payload)


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(argv)
    echo = " ".join(a for a in argv if not a.startswith("--format") and a not in ("text", "json"))
    if getattr(args, "N", 0) is not None and getattr(args, "N", 0) < 0:
        parser.error("--N must be non-negative")
    model = getattr(args, "model", None)
    try:
        payload = COMMANDS[args.command](args)
        code = EXIT_OK
    except VerificationFailed as exc:
        payload, code = exc.report, EXIT_VERIFY
    except _Usage as exc:
        print(f"lieboson: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LieBosonError as exc:
        print(f"lieboson: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    sys.stdout.write(render(echo, args.command, model, payload, args.format))
    if code == EXIT_VERIFY:
        print("lieboson: some printed rows fail verification; verified replacements shown", file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
