"""Command-line interface.

Commands: check, info, radical, envelope, decompose, examples.
Exit codes: 0 success/decided, 1 not a Bol algebra or verification
failure, 2 undecided/uncertified result, 3 input error.  All numbers in
any output are exact fraction strings; there are no floats.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from bolalg.catalog import catalog, catalog_names
from bolalg.core import center, check_axioms, ideal_closure, is_ideal
from bolalg.decompose import decompose_semisimple, structure_report
from bolalg.envelope import envelope
from bolalg.errors import BolError, DocumentError, FatalInconsistency, PreconditionViolation
from bolalg.fileio import emit_bol_document, emit_lie_document, parse_bol_document
from bolalg.forms import compare_trace_vs_envelope, envelope_form, invariance_check, trace_form
from bolalg.linalg import basis_vec, full_space, rank, span
from bolalg.radical import DEFAULT_SEED, radical
from bolalg.series import bol_derived_series, lts_derived_series
from bolalg.lie import lie_is_solvable

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_UNDECIDED = 2
EXIT_INPUT = 3


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None
    return parse_bol_document(text)


def _vec_strs(v) -> list[str]:
    return [str(c) for c in v]


def _subspace_json(S) -> dict:
    return {"dim": S.dim, "basis": [_vec_strs(row) for row in S.basis]}


def _gram_strs(g) -> list[list[str]]:
    return [[str(c) for c in row] for row in g]


def _print(data: dict, as_json: bool, lines) -> None:
    if as_json:
        print(json.dumps(data, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_check(args) -> int:
    B, name = _load(args.file)
    report = check_axioms(B)
    data = {
        "name": name,
        "dim": B.n,
        "pass": report.ok,
        "identities": {
            c.name: {
                "ok": c.ok,
                "witness": list(c.witness) if c.witness else None,
                "defect": _vec_strs(c.defect) if c.defect else None,
                "failures": c.failures,
            }
            for c in report.identities
        },
    }
    lines = [f"{name}: dimension {B.n}"]
    for c in report.identities:
        if c.ok:
            lines.append(f"  {c.name}: ok")
        else:
            lines.append(
                f"  {c.name}: FAIL at basis tuple {c.witness}, defect {_vec_strs(c.defect)}"
                f" ({c.failures} failing tuples)"
            )
    lines.append("PASS" if report.ok else "FAIL")
    _print(data, args.json, lines)
    return EXIT_OK if report.ok else EXIT_FAIL


def _require_bol(args):
    B, name = _load(args.file)
    report = check_axioms(B)
    if not report.ok:
        bad = ", ".join(c.name for c in report.identities if not c.ok)
        print(f"{name}: not a Bol algebra (identities {bad} fail); run `bol check` for witnesses", file=sys.stderr)
        return None, name
    return B, name


def cmd_info(args) -> int:
    B, name = _require_bol(args)
    if B is None:
        return EXIT_FAIL
    full = full_space(B.n)
    c = center(B)
    lts = lts_derived_series(B, full)
    bol = bol_derived_series(B, full)
    tf = trace_form(B)
    ef = envelope_form(B)
    cmp_forms = compare_trace_vs_envelope(B)
    inv = invariance_check(B, ef if args.form == "env" else tf, args.invariance)
    closures = []
    for i in range(B.n):
        cl = ideal_closure(B, span([basis_vec(i, B.n)], B.n))
        closures.append({"generator": B.labels[i], "dim": cl.dim, "is_ideal": is_ideal(B, cl, args.ideal_mode)})
    data = {
        "name": name,
        "dim": B.n,
        "center": _subspace_json(c),
        "series": {
            "lts": {"dims": [s.dim for s in lts.chain], "solvable": lts.solvable},
            "bol": {"dims": [s.dim for s in bol.chain], "solvable": bol.solvable},
        },
        "solvable": bol.solvable,
        "form_trace": _gram_strs(tf.gram),
        "form_envelope": _gram_strs(ef.gram),
        "forms_equal": cmp_forms.equal,
        "form_ranks": {"trace": rank(tf.gram), "envelope": rank(ef.gram)},
        "invariance": {"form": args.form, "variant": args.invariance, "ok": inv.ok},
        "ideal_closures": closures,
        "ideal_mode": args.ideal_mode,
    }
    lines = [
        f"{name}: dimension {B.n}",
        f"  center: dim {c.dim}" + (f", basis {[_vec_strs(r) for r in c.basis]}" if c.dim else ""),
        f"  ternary derived series dims: {[s.dim for s in lts.chain]} (reaches zero: {lts.solvable})",
        f"  full derived series dims:    {[s.dim for s in bol.chain]} (solvable: {bol.solvable})",
        f"  Killing-Ricci (trace form):    {_gram_strs(tf.gram)} rank {rank(tf.gram)}",
        f"  Killing-Ricci (envelope form): {_gram_strs(ef.gram)} rank {rank(ef.gram)}",
        f"  forms agree entrywise: {cmp_forms.equal}",
        f"  invariance of {args.form} form ({args.invariance} variant): {inv.ok}",
        f"  basis-vector ideal closures ({args.ideal_mode}): "
        + ", ".join(f"{x['generator']}->dim {x['dim']}" for x in closures),
    ]
    _print(data, args.json, lines)
    return EXIT_OK


def cmd_radical(args) -> int:
    B, name = _require_bol(args)
    if B is None:
        return EXIT_FAIL
    cert = radical(B, form_kind=args.form)
    data = {
        "name": name,
        "decided": cert.decided,
        "strategy": cert.strategy,
        "radical": _subspace_json(cert.radical) if cert.radical is not None else None,
        "checks": {
            "is_ideal": cert.is_ideal_ok,
            "solvable": cert.solvable_ok,
            "quotient_semisimple": cert.quotient_semisimple_ok,
        },
        "strategies": [
            {
                "strategy": s.strategy,
                "candidate_dim": s.candidate.dim if s.candidate is not None else None,
                "is_ideal": s.is_ideal_ok,
                "solvable": s.solvable_ok,
                "quotient_semisimple": s.quotient_semisimple_ok,
                "error": s.error,
            }
            for s in cert.details
        ],
        "form": args.form,
    }
    lines = [f"{name}: radical " + ("decided" if cert.decided else "UNDECIDED")]
    if cert.radical is not None:
        lines.append(f"  dim {cert.radical.dim}, basis {[_vec_strs(r) for r in cert.radical.basis]}")
        lines.append(f"  strategy: {cert.strategy}")
    for s in cert.details:
        stat = "error: " + s.error if s.error else (
            f"candidate dim {s.candidate.dim}, ideal={s.is_ideal_ok}, solvable={s.solvable_ok},"
            f" quotient-semisimple={s.quotient_semisimple_ok}"
        )
        lines.append(f"  [{s.strategy}] {stat}")
    _print(data, args.json, lines)
    return EXIT_OK if cert.decided else EXIT_UNDECIDED


def cmd_envelope(args) -> int:
    B, name = _require_bol(args)
    if B is None:
        return EXIT_FAIL
    try:
        E = envelope(B)
    except FatalInconsistency as exc:
        print(f"{name}: envelope construction rejected: {exc}", file=sys.stderr)
        return EXIT_FAIL
    rep = structure_report(B, seed=args.seed)
    data = {
        "name": name,
        "b_dim": E.b_dim,
        "h_dim": len(E.h_basis),
        "total_dim": E.total_dim,
        "verified": {"jacobi": True, "projection": True, "recovery": True},
        "lie_solvable": lie_is_solvable(E.lie),
        "structure": {
            "lie_solvable": rep.lie_solvable,
            "beta_orthogonal_to_triple_span": rep.beta_orthogonal_to_triple_span,
            "item1_biconditional": rep.item1_biconditional,
            "lie_semisimple": rep.lie_semisimple,
            "beta_nondegenerate": rep.beta_nondegenerate,
            "item2_biconditional": rep.item2_biconditional,
            "component_dims": list(rep.component_dims),
            "triple_span_is_everything": rep.triple_span_is_everything,
            "note": rep.note,
        },
        "seed": args.seed,
    }
    lines = [
        f"{name}: envelope has dimension {E.total_dim} = {E.b_dim} + {len(E.h_basis)}",
        "  verified: Jacobi, projection, recovery (exhaustive basis sweeps)",
        f"  Lie-solvable: {data['lie_solvable']}, Lie-semisimple: {rep.lie_semisimple}",
        f"  base orthogonal to triple span: {rep.beta_orthogonal_to_triple_span}"
        f" (matches solvability: {rep.item1_biconditional})",
        f"  Killing-Ricci nondegenerate: {rep.beta_nondegenerate}"
        f" (matches semisimplicity: {rep.item2_biconditional})",
    ]
    if rep.decomposition_ran:
        lines.append(f"  simple components: {list(rep.component_dims)} (certified: {rep.decomposition_certified})")
    if args.emit:
        Path(args.emit).write_text(emit_lie_document(E.lie, f"{name}.envelope", env=E), encoding="utf-8")
        lines.append(f"  wrote {args.emit}")
        data["emitted"] = args.emit
    _print(data, args.json, lines)
    return EXIT_OK


def cmd_decompose(args) -> int:
    B, name = _require_bol(args)
    if B is None:
        return EXIT_FAIL
    beta = envelope_form(B) if args.form == "env" else trace_form(B)
    try:
        dec = decompose_semisimple(B, beta, args.invariance, seed=args.seed)
    except PreconditionViolation as exc:
        print(f"{name}: decomposition preconditions fail: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    data = {
        "name": name,
        "certified": dec.certified,
        "components": [
            {"dim": c.n, "embedding": _subspace_json(e)} for c, e in zip(dec.components, dec.embeddings)
        ],
        "orthogonality": [[bool(x) for x in row] for row in dec.orthogonality],
        "notes": list(dec.notes),
        "seed": args.seed,
    }
    lines = [f"{name}: {len(dec.components)} component(s), certified: {dec.certified}"]
    for c, e in zip(dec.components, dec.embeddings):
        lines.append(f"  dim {c.n}: basis {[_vec_strs(r) for r in e.basis]}")
    lines.append(f"  pairwise orthogonal: {all(all(r) for r in dec.orthogonality)}")
    for note in dec.notes:
        lines.append(f"  note: {note}")
    _print(data, args.json, lines)
    return EXIT_OK if dec.certified else EXIT_UNDECIDED


def cmd_examples(args) -> int:
    try:
        B = catalog(args.name)
    except BolError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    text = emit_bol_document(B, args.name)
    if args.emit:
        Path(args.emit).write_text(text, encoding="utf-8")
        print(f"wrote {args.emit}")
    else:
        print(text, end="")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bol",
        description="Exact computer algebra for finite-dimensional Bol algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, file_arg=True):
        if file_arg:
            p.add_argument("file", help="Bol algebra JSON file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--emit", metavar="PATH", default=None, help="write an output document here")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized searches")
        p.add_argument("--form", choices=("env", "prop1"), default="env", help="which Killing-Ricci construction to use")
        p.add_argument("--invariance", choices=("skew", "paper"), default="skew", help="ternary invariance variant")
        p.add_argument("--ideal-mode", choices=("def2", "def3"), default="def2", help="ideal test used in reports")

    common(sub.add_parser("check", help="verify the defining identities"))
    common(sub.add_parser("info", help="center, derived series, forms"))
    common(sub.add_parser("radical", help="radical with certificates"))
    common(sub.add_parser("envelope", help="construct and verify the enveloping Lie algebra"))
    common(sub.add_parser("decompose", help="split into orthogonal simple ideals"))
    ex = sub.add_parser("examples", help="emit a catalog algebra")
    ex.add_argument("name", help=f"one of: {', '.join(catalog_names())}")
    common(ex, file_arg=False)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "check": cmd_check,
        "info": cmd_info,
        "radical": cmd_radical,
        "envelope": cmd_envelope,
        "decompose": cmd_decompose,
        "examples": cmd_examples,
    }
    try:
        return handlers[args.command](args)
    except DocumentError as exc:
        field = f" (at {exc.field})" if exc.field else ""
        print(f"input error{field}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FatalInconsistency as exc:
        print(f"fatal inconsistency: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except BolError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
