"""Command line front end: validate, convert, generate, roundtrip and report."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import algebra, catalog, dblcat, fincat, folding, pseudo, xmod
from .codec import dump, parse_document
from .iso import IsoWitness, check_witness, iso_search
from .report import FoldboxError, InvalidInput, ValidationReport

EXIT_OK, EXIT_VIOLATIONS, EXIT_STRUCTURAL, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class Target:
    name: str
    kind: str = ""
    verdict: str = "ok"
    lines: list[str] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    errors: list[dict] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)

    def absorb(self, r: ValidationReport) -> None:
        self.violations += [{"tag": v.tag, "where": [str(w) for w in v.where], "text": v.render()}
                            for v in r.violations]
        self.errors += [{"tag": e.tag, "where": [str(w) for w in e.where], "text": e.render()} for e in r.errors]
        if r.errors:
            self.verdict = "error"
        elif r.violations and self.verdict == "ok":
            self.verdict = "violations"

    def fail(self, exc: Exception) -> None:
        tag = getattr(exc, "tag", type(exc).__name__.upper())
        self.errors.append({"tag": tag, "where": [str(w) for w in getattr(exc, "where", ())], "text": str(exc)})
        rep = getattr(exc, "report", None)
        if rep is not None:
            self.absorb(rep)
        self.verdict = "error"


@dataclass
class RunReport:
    command: list[str]
    targets: list[Target] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def exit_status(self) -> int:
        if any(t.verdict == "error" for t in self.targets):
            return EXIT_STRUCTURAL
        if any(t.verdict == "violations" for t in self.targets):
            return EXIT_VIOLATIONS
        return EXIT_OK


def emit_report(r: RunReport, fmt: str = "text") -> str:
    if fmt == "structured":
        body = {
            "command": r.command,
            "exit_status": r.exit_status,
            "targets": [{"target": t.name, "kind": t.kind, "verdict": t.verdict, "notes": t.lines,
                         "violations": t.violations, "errors": t.errors, "counts": t.counts} for t in r.targets],
        }
        return json.dumps(body, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    out = []
    for t in r.targets:
        head = f"{t.name} [{t.kind}]" if t.kind else t.name
        if t.counts:
            head += " " + " ".join(f"{k}={v}" for k, v in sorted(t.counts.items()))
        out.append(head)
        out += [f"  {line}" for line in t.lines]
        out += [f"  error {e['text']}" for e in t.errors]
        out += [f"  violation {v['text']}" for v in t.violations]
        if t.verdict == "ok":
            out.append("  OK")
    out.append(f"exit {r.exit_status} ({r.seconds:.2f}s)")
    return "\n".join(out) + "\n"


# helpers


def counts(kind: str, v) -> dict[str, int]:
    if isinstance(v, dblcat.DoubleCategory):
        return {"objects": len(v.objects), "horizontal": len(v.hmor), "vertical": len(v.vmor),
                "squares": len(v.squares)}
    if isinstance(v, fincat.FinCategory):
        return {"objects": len(v.objects), "morphisms": len(v.morphisms)}
    if isinstance(v, fincat.FinGroup):
        return {"elements": len(v.elements)}
    if isinstance(v, fincat.TwoCategory):
        return {"objects": len(v.objects), "one_cells": len(v.one_cells), "two_cells": len(v.two_cells)}
    if isinstance(v, xmod.CrossedModule):
        return {"H": len(v.H.elements), "G": len(v.G.elements)}
    if isinstance(v, xmod.TwoGroup):
        return counts("two_category", v.cat)
    if isinstance(v, (folding.Folding, folding.Holonomy, folding.ConnectionPair)):
        base = v.base if hasattr(v, "base") else v.holonomy.base
        return counts("double_category", base)
    if isinstance(v, algebra.ICatAlgebra):
        return {"I_objects": len(v.base.objects), "objects": len(v.pair_of_obj), "morphisms": len(v.pair_of_mor)}
    if isinstance(v, algebra.TwoFunctorUnderI):
        return {"I_morphisms": len(v.base.morphisms), **counts("two_category", v.target)}
    return {}


def load(path: str):
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return parse_document(data)


def write_doc(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def resolve_group(args) -> fincat.FinGroup:
    if args.group:
        try:
            return fincat.named_group(args.group)
        except (KeyError, InvalidInput):
            raise UsageError(f"unknown group {args.group!r}") from None
    if args.order:
        if args.order < 1:
            raise UsageError("--order must be positive")
        return fincat.cyclic_group(args.order)
    raise UsageError("need --group, --order or an input file")


# conversions: (source kind, target kind) -> function


def _double_group_to(f: folding.Folding):
    return xmod.double_group_convert("to_xmod_under_group", (f.base, f))


CONVERSIONS = {
    ("folding", "connection_pair"): folding.connection_from_folding,
    ("folded_double", "connection_pair"): folding.connection_from_folding,
    ("connection_pair", "folding"): folding.folding_from_connection,
    ("connection_pair", "thin_structure"): folding.connection_to_thin,
    ("thin_structure", "connection_pair"): folding.thin_to_connection,
    ("crossed_module", "two_group"): xmod.two_group_from_xmod,
    ("two_group", "crossed_module"): xmod.xmod_from_two_group,
    ("two_functor_under_i", "icat_algebra"): algebra.reconstruct_X,
    ("icat_algebra", "two_functor_under_i"): algebra.functor_K,
    ("two_functor_under_i", "folded_double"): lambda z: algebra.functor_M(z)[1],
    ("icat_algebra", "folded_double"): lambda x: algebra.functor_J(x)[1],
    ("folded_double", "two_functor_under_i"): lambda f: algebra.functor_L(f.base, f),
    ("folding", "two_functor_under_i"): lambda f: algebra.functor_L(f.base, f),
    ("xmod_under_group", "folded_double"): lambda u: xmod.double_group_convert("from_xmod_under_group", u)[1],
    ("folded_double", "xmod_under_group"): _double_group_to,
    ("folding", "xmod_under_group"): _double_group_to,
    ("double_category", "pseudo_double"): pseudo.strict_as_pseudo,
}


# round trips: theorem -> (accepted kinds, function returning a note or raising)


def _iso_note(a, b, witness=None) -> tuple[bool, str]:
    if witness is not None:
        ok = check_witness(a, b, witness)
        return ok, "isomorphic round trip (explicit witness verified)" if ok else "explicit witness failed"
    res = iso_search(a, b)
    if isinstance(res, IsoWitness):
        return True, "isomorphic round trip (witness found and verified)"
    return False, f"round trip not isomorphic: {res}"


def rt_fold_connection(kind, v):
    if kind in ("folding", "folded_double"):
        back = folding.folding_from_connection(folding.connection_from_folding(v))
        return back == v, "identity round trip" if back == v else "folding changed"
    back = folding.connection_from_folding(folding.folding_from_connection(v))
    return back == v, "identity round trip" if back == v else "connection pair changed"


def rt_thin(kind, v):
    if kind == "connection_pair":
        back = folding.thin_to_connection(folding.connection_to_thin(v))
    else:
        back = folding.connection_to_thin(folding.thin_to_connection(v))
    return back == v, "identity round trip" if back == v else "changed"


def rt_yz(kind, v):
    if kind == "two_functor_under_i":
        d, fold = algebra.functor_M(v)
        back = algebra.functor_L(d, fold)
        return back == v, "identity round trip" if back == v else "L(M(z)) differs from z"
    folding.validate_fold("folding", v).require()
    return check_yz_note(v)


def check_yz_note(fold):
    ok = algebra.check_yz(fold.base, fold)
    return ok, "isomorphic round trip (explicit witness verified)" if ok else "witness failed"


def rt_xz(kind, v):
    if kind == "two_functor_under_i":
        back = algebra.functor_K(algebra.reconstruct_X(v))
        return back == v, "identity round trip" if back == v else "K(X(z)) differs from z"
    back = algebra.reconstruct_X(algebra.functor_K(v))
    return _iso_note(v, back, algebra.algebra_witness(v))


def rt_xy(kind, v):
    j = algebra.functor_J(v)[1]
    m = algebra.functor_M(algebra.functor_K(v))[1]
    return j == m, "J(x) equals M(K(x))" if j == m else "J(x) differs from M(K(x))"


def rt_xmod_two_group(kind, v):
    if kind == "crossed_module":
        back = xmod.xmod_from_two_group(xmod.two_group_from_xmod(v))
        return _iso_note(v, back, xmod.xmod_roundtrip_witness(v))
    back = xmod.two_group_from_xmod(xmod.xmod_from_two_group(v))
    return _iso_note(v, back, xmod.two_group_roundtrip_witness(v))


def rt_special_extension(kind, v):
    if kind == "xmod_under_group":
        fold = xmod.double_group_convert("from_xmod_under_group", v)[1]
        back = _double_group_to(fold)
        return _iso_note(v, back)
    back = xmod.double_group_convert("from_xmod_under_group", _double_group_to(v))[1]
    return _iso_note(v.base, back.base)


def rt_homotopy(kind, v):
    sigma = xmod.homotopy_transform("nu_to_sigma", v)
    back = xmod.homotopy_transform("sigma_to_nu", sigma, (v.src, v.tgt))
    return back == v, "identity round trip" if back == v else "homotopy changed"


THEOREMS = {
    "fold_connection": (("folding", "folded_double", "connection_pair"), rt_fold_connection),
    "thin": (("connection_pair", "thin_structure"), rt_thin),
    "YZ": (("two_functor_under_i", "folding", "folded_double"), rt_yz),
    "XZ": (("two_functor_under_i", "icat_algebra"), rt_xz),
    "XY": (("icat_algebra",), rt_xy),
    "BrownSpencer": (("crossed_module", "two_group"), rt_xmod_two_group),
    "specialextension": (("xmod_under_group", "folded_double", "folding"), rt_special_extension),
    "homotopy": (("homotopy",), rt_homotopy),
}
THEOREM_ALIASES = {k.lower(): k for k in THEOREMS} | {"brown_spencer": "BrownSpencer",
                                                      "special_extension": "specialextension",
                                                      "foldconnection": "fold_connection"}


GENERATORS = ("commutative_squares", "quintets", "h_embed", "v_embed", "adjunctions")


# commands


def _inputs(args) -> list[str]:
    files = list(args.files)
    if args.infile:
        files.insert(0, args.infile)
    return files


def cmd_validate(args, rep: RunReport) -> None:
    files = _inputs(args)
    if not files:
        raise UsageError("validate needs at least one file")
    for path in files:
        t = Target(path)
        rep.targets.append(t)
        try:
            doc = load(path)
            t.kind = doc.kind
            if args.kind and args.kind != doc.kind:
                raise UsageError(f"{path} holds a {doc.kind}, not a {args.kind}")
            t.counts = counts(doc.kind, doc.value)
            t.absorb(catalog.validate(doc.kind, doc.value, cap=args.cap))
        except UsageError:
            raise
        except (FoldboxError, KeyError, TypeError, AttributeError) as e:
            t.fail(e)


def cmd_convert(args, rep: RunReport) -> None:
    files = _inputs(args)
    if len(files) != 1 or not args.kind:
        raise UsageError("convert needs --kind TARGET and exactly one file")
    t = Target(files[0])
    rep.targets.append(t)
    try:
        doc = load(files[0])
        fn = CONVERSIONS.get((doc.kind, args.kind))
        if fn is None:
            raise UsageError(f"no conversion from {doc.kind} to {args.kind}")
        catalog.validate(doc.kind, doc.value, cap=args.cap).require()
        out = fn(doc.value)
        t.kind = args.kind
        t.counts = counts(args.kind, out)
        t.lines.append(f"converted {doc.kind} -> {args.kind}")
        t.absorb(catalog.validate(args.kind, out, cap=args.cap))
        write_doc(dump(args.kind, out, source=files[0]), args.out)
    except UsageError:
        raise
    except FoldboxError as e:
        t.fail(e)


def cmd_generate(args, rep: RunReport) -> None:
    if args.kind not in GENERATORS:
        raise UsageError(f"--kind must be one of {', '.join(GENERATORS)}")
    files = _inputs(args)
    t = Target(files[0] if files else (args.group or f"C{args.order}"))
    rep.targets.append(t)
    try:
        if files:
            base = load(files[0]).value
            if isinstance(base, fincat.FinGroupoid):
                base = base.as_category()
        else:
            bg = fincat.group_to_one_object_groupoid(resolve_group(args)).as_category()
            base = bg if args.kind == "commutative_squares" else fincat.locally_discrete(bg)
        d = dblcat.generate(args.kind, base)
        t.kind = "double_category"
        t.counts = counts("double_category", d)
        t.lines.append(f"generated {args.kind}")
        write_doc(dump("double_category", d, generator=args.kind), args.out)
    except UsageError:
        raise
    except FoldboxError as e:
        t.fail(e)


def cmd_roundtrip(args, rep: RunReport) -> None:
    if not args.theorem:
        raise UsageError(f"roundtrip needs --theorem, one of {', '.join(THEOREMS)}")
    name = THEOREM_ALIASES.get(args.theorem.lower(), args.theorem)
    if name not in THEOREMS:
        raise UsageError(f"unknown theorem {args.theorem!r}; choose from {', '.join(THEOREMS)}")
    kinds, fn = THEOREMS[name]
    files = _inputs(args)
    if not files:
        raise UsageError("roundtrip needs --in FILE")
    for path in files:
        t = Target(path)
        rep.targets.append(t)
        try:
            doc = load(path)
            t.kind = doc.kind
            if doc.kind not in kinds:
                raise UsageError(f"theorem {name} takes {', '.join(kinds)}, not {doc.kind}")
            catalog.validate(doc.kind, doc.value, cap=args.cap).require()
            ok, note = fn(doc.kind, doc.value)
            t.lines.append(f"theorem {name}: {note}")
            if not ok:
                t.verdict = "violations"
                t.violations.append({"tag": "ROUNDTRIP_MISMATCH", "where": [name], "text": note})
        except UsageError:
            raise
        except FoldboxError as e:
            t.fail(e)


def cmd_report(args, rep: RunReport) -> None:
    files = _inputs(args)
    if not files:
        raise UsageError("report needs at least one file")
    for path in files:
        t = Target(path)
        rep.targets.append(t)
        try:
            doc = load(path)
            t.kind = doc.kind
            t.counts = counts(doc.kind, doc.value)
            for k, v in sorted(doc.metadata.items()):
                t.lines.append(f"{k}: {v}")
            r = catalog.validate(doc.kind, doc.value, cap=args.cap)
            t.lines.append(f"tags: {', '.join(sorted(r.tags())) or 'none'}")
            t.absorb(r)
        except FoldboxError as e:
            t.fail(e)


COMMANDS = {"validate": cmd_validate, "convert": cmd_convert, "generate": cmd_generate,
            "roundtrip": cmd_roundtrip, "report": cmd_report}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="foldbox", description="Validate and convert finite double categories and friends.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("files", nargs="*")
    p.add_argument("--kind")
    p.add_argument("--theorem")
    p.add_argument("--group")
    p.add_argument("--order", type=int)
    p.add_argument("--cap", type=int)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--out")
    p.add_argument("--in", dest="infile")
    return p


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    rep = RunReport(argv)
    start = time.perf_counter()
    try:
        args = build_parser().parse_intermixed_args(argv)
        if args.cap is not None and args.cap < 1:
            raise UsageError("--cap must be positive")
        COMMANDS[args.command](args, rep)
    except UsageError as e:
        print(f"foldbox: {e}", file=sys.stderr)
        return EXIT_USAGE
    rep.seconds = time.perf_counter() - start
    text = emit_report(rep, args.format)
    # the document goes to stdout when there is no --out, so the report moves to stderr
    doc_on_stdout = args.command in ("convert", "generate") and not args.out
    (sys.stderr if doc_on_stdout else sys.stdout).write(text)
    return rep.exit_status


if __name__ == "__main__":
    sys.exit(main())
