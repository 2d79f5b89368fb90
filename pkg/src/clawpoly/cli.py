"""Command-line surface.

Subcommands: vrep, hrep, transform, verify, witness, stats. Every command
prints one final report record to stdout (the only place wall time ever
appears) and writes any artifact files with byte-identical content across
reruns of the same invocation.

Exit codes: 0 pass, 1 verification failure (a counterexample file is
written), 2 usage or precondition error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time

from .coordchange import from_prime_coords, to_prime_coords
from .engine import (
    f_vector,
    equal_polytopes,
    hull_from_vertices,
    vertices_from_inequalities,
)
from .errors import (
    ClawpolyError,
    ConfigurationError,
    FileFormatError,
    ResourceCapError,
)
from .fileio import (
    format_hfile,
    format_vfile,
    parse_vfile,
    read_text,
    record_line,
    to_json,
    write_text,
)
from .groups import Z2Z2, element, parse_group
from .halfspaces import MODEL_BUILDERS, kimura3_system, model_system
from .matrices import Matrix
from .rationals import is_integral
from .suites import run_interior_suite, run_isomorphism_suite, run_pseudo_facet_suite
from .vertices import Labeling, VertexSet, generate_vertices
from .witness import InteriorWitness, check_containment, interior_witness, violation_witness

log = logging.getLogger("clawpoly.cli")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="clawpoly",
        description="Exact V/H representations of claw-tree model polytopes.",
    )
    p.add_argument("-v", "--verbose", action="store_true", help="log engine progress")
    sub = p.add_subparsers(dest="command", required=True)

    vrep = sub.add_parser("vrep", help="write the vertex set of a model polytope")
    vrep.add_argument("--group", default="z2z2", help="group string, e.g. z2, z2z2, z3xz4")
    vrep.add_argument("--leaves", type=int, required=True, metavar="M")
    vrep.add_argument("--format", choices=["cdd-ext", "records", "json"], default="cdd-ext")
    vrep.add_argument("--out", help="output path (default: vrep_<group>_m<M>.<ext>)")
    vrep.add_argument("--allow-large", action="store_true", help="lift the generation cap")
    vrep.set_defaults(func=cmd_vrep)

    hrep = sub.add_parser("hrep", help="write the inequality system of a model")
    hrep.add_argument("--model", choices=sorted(MODEL_BUILDERS), required=True)
    hrep.add_argument("--leaves", type=int, required=True, metavar="M")
    hrep.add_argument("--format", choices=["cdd-ine", "records", "json"], default="cdd-ine")
    hrep.add_argument("--out")
    hrep.set_defaults(func=cmd_hrep)

    tr = sub.add_parser("transform", help="convert a point file between coordinate systems")
    tr.add_argument("--in", dest="infile", required=True, help="input .ext point file")
    tr.add_argument(
        "--inverse", action="store_true", help="prime to standard instead of standard to prime"
    )
    tr.add_argument("--format", choices=["cdd-ext", "records", "json"], default="cdd-ext")
    tr.add_argument("--out")
    tr.set_defaults(func=cmd_transform)

    ver = sub.add_parser("verify", help="run a verification task")
    ver.add_argument("task", choices=["containment", "equality", "integrality", "theorems"])
    ver.add_argument("--leaves", type=int, required=True, metavar="M")
    ver.add_argument("--samples", type=int, default=1000)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--out-dir", default=".", help="where counterexample files go")
    ver.add_argument("--max-dim", type=int, default=None, help="override the engine cap")
    ver.set_defaults(func=cmd_verify)

    wit = sub.add_parser("witness", help="produce an explicit certificate")
    wit.add_argument("kind", choices=["violation", "interior"])
    wit.add_argument("--labeling", help='leaf labeling, e.g. "10,01,11" (violation)')
    wit.add_argument("--group", default="z2z2")
    wit.add_argument("--point", help="single-point .ext file (interior)")
    wit.add_argument("--out", help="also write the certificate records to this path")
    wit.set_defaults(func=cmd_witness)

    st = sub.add_parser("stats", help="counts and derived facts for one m")
    st.add_argument("--leaves", type=int, required=True, metavar="M")
    st.add_argument("--f-vector", action="store_true", dest="fvector")
    st.add_argument("--max-dim", type=int, default=None)
    st.add_argument("--out")
    st.set_defaults(func=cmd_stats)
    return p


def _emit(pairs, started) -> None:
    wall = time.perf_counter() - started
    print(record_line(list(pairs) + [("wall", f"{wall:.3f}s")]))


def _default_out(stem: str, fmt: str) -> str:
    ext = {"cdd-ext": "ext", "cdd-ine": "ine", "records": "records", "json": "json"}[fmt]
    return f"{stem}.{ext}"


# --- vrep / hrep / transform --------------------------------------------------

def _vertexset_records(vs: VertexSet, head_pairs) -> str:
    lines = [record_line(head_pairs + [("count", len(vs.points))])]
    for i, pt in enumerate(vs.points):
        lines.append(record_line([("point", i), ("coords", pt)]))
    return "\n".join(lines) + "\n"


def _vertexset_json(vs: VertexSet, meta: dict) -> str:
    return to_json(dict(meta, shape=list(vs.shape), points=[list(p) for p in vs.points]))


def cmd_vrep(args) -> int:
    started = time.perf_counter()
    spec = parse_group(args.group)
    vs = generate_vertices(spec, args.leaves, allow_large=args.allow_large)
    head = [("command", "vrep"), ("group", spec.name()), ("leaves", args.leaves)]
    if args.format == "cdd-ext":
        content = format_vfile(vs)
    elif args.format == "records":
        content = _vertexset_records(vs, head + [("dimension", vs.dimension)])
    else:
        content = _vertexset_json(
            vs, {"command": "vrep", "group": spec.name(), "leaves": args.leaves}
        )
    out = args.out or _default_out(f"vrep_{spec.name()}_m{args.leaves}", args.format)
    write_text(out, content)
    _emit(head + [("count", len(vs.points)), ("outcome", "pass"), ("file", out)], started)
    return 0


def cmd_hrep(args) -> int:
    started = time.perf_counter()
    sys_ = model_system(args.model, args.leaves)
    head = [("command", "hrep"), ("model", args.model), ("leaves", args.leaves)]
    if args.format == "cdd-ine":
        content = format_hfile(sys_)
    elif args.format == "records":
        lines = [
            record_line(
                head + [("dimension", sys_.dimension), ("count", len(sys_.inequalities))]
            )
        ]
        for q in sys_.inequalities:
            lines.append("inequality " + q.describe() + " coeffs=" + ",".join(str(c) for c in q.coeffs))
        content = "\n".join(lines) + "\n"
    else:
        content = to_json(
            {
                "command": "hrep",
                "model": args.model,
                "leaves": args.leaves,
                "dimension": sys_.dimension,
                "inequalities": [
                    {"id": q.id, "family": q.describe(), "coeffs": list(q.coeffs), "rhs": q.rhs}
                    for q in sys_.inequalities
                ],
            }
        )
    out = args.out or _default_out(f"hrep_{args.model}_m{args.leaves}", args.format)
    write_text(out, content)
    _emit(
        head + [("count", len(sys_.inequalities)), ("outcome", "pass"), ("file", out)],
        started,
    )
    return 0


def _points_as_matrices(vs: VertexSet):
    if len(vs.shape) == 2:
        return vs.matrices()
    if vs.dimension % 3:
        raise FileFormatError(
            f"point file dimension {vs.dimension} is not a 3-row matrix layout"
        )
    m = vs.dimension // 3
    return [Matrix.from_flat(p, 3, m) for p in vs.points]


def cmd_transform(args) -> int:
    started = time.perf_counter()
    vs = parse_vfile(read_text(args.infile))
    mats = _points_as_matrices(vs)
    fn = from_prime_coords if args.inverse else to_prime_coords
    images = [fn(mat) for mat in mats]
    m = images[0].ncols if images else vs.dimension // 3
    out_vs = VertexSet(
        dimension=vs.dimension,
        shape=(3, m),
        points=tuple(im.flatten() for im in images),
    )
    direction = "prime-to-standard" if args.inverse else "standard-to-prime"
    head = [("command", "transform"), ("direction", direction)]
    if args.format == "cdd-ext":
        content = format_vfile(out_vs)
    elif args.format == "records":
        content = _vertexset_records(out_vs, head + [("dimension", out_vs.dimension)])
    else:
        content = _vertexset_json(out_vs, {"command": "transform", "direction": direction})
    stem, _, _ = os.path.basename(args.infile).rpartition(".")
    suffix = "standard" if args.inverse else "prime"
    out = args.out or _default_out(f"{stem or args.infile}_{suffix}", args.format)
    write_text(out, content)
    _emit(head + [("count", len(images)), ("outcome", "pass"), ("file", out)], started)
    return 0


# --- verify -------------------------------------------------------------------

def _write_counterexamples(args, task, lines) -> str:
    os.makedirs(args.out_dir, exist_ok=True)
    path = os.path.join(args.out_dir, f"counterexample_{task}_m{args.leaves}.records")
    write_text(path, "\n".join(lines) + "\n")
    return path


def _verify_containment(args, head, started) -> int:
    rep = check_containment(args.leaves)
    pairs = head + [("checked", rep.checked), ("violations", len(rep.failures))]
    if rep.passed:
        _emit(pairs + [("outcome", "pass")], started)
        return 0
    lines = [
        record_line([("counterexample", "containment"), ("point", pt), ("violated", vid)])
        for pt, vid in rep.failures
    ]
    path = _write_counterexamples(args, "containment", lines)
    _emit(pairs + [("outcome", "fail"), ("file", path)], started)
    return 1


def _verify_equality(args, head, started) -> int:
    sys_ = kimura3_system(args.leaves)
    vd = vertices_from_inequalities(sys_, max_dim=args.max_dim)
    kv = generate_vertices(Z2Z2, args.leaves)
    rep = equal_polytopes(vd, kv)
    pairs = head + [("engine_vertices", rep.checked_a), ("generated_vertices", rep.checked_b)]
    if rep.equal:
        _emit(pairs + [("outcome", "pass")], started)
        return 0
    lines = [
        record_line([("counterexample", "equality"), ("side", "engine-only"), ("point", pt)])
        for pt in rep.only_a
    ] + [
        record_line([("counterexample", "equality"), ("side", "generated-only"), ("point", pt)])
        for pt in rep.only_b
    ]
    path = _write_counterexamples(args, "equality", lines)
    _emit(pairs + [("outcome", "fail"), ("file", path)], started)
    return 1


def _verify_integrality(args, head, started) -> int:
    bad = []
    counts = []
    for model in ("kimura3", "kimura3-prime"):
        vs = vertices_from_inequalities(model_system(model, args.leaves), max_dim=args.max_dim)
        counts.append((model.replace("-", "_") + "_vertices", len(vs.points)))
        for pt in vs.points:
            if not all(is_integral(x) for x in pt):
                bad.append((model, pt))
    pairs = head + counts + [("violations", len(bad))]
    if not bad:
        _emit(pairs + [("outcome", "pass")], started)
        return 0
    lines = [
        record_line([("counterexample", "integrality"), ("model", model), ("point", pt)])
        for model, pt in bad
    ]
    path = _write_counterexamples(args, "integrality", lines)
    _emit(pairs + [("outcome", "fail"), ("file", path)], started)
    return 1


def _verify_theorems(args, head, started) -> int:
    m = args.leaves
    n = args.samples
    iso = run_isomorphism_suite(m, n, seed=args.seed)
    pf = run_pseudo_facet_suite(m, n, seed=args.seed)
    iw = run_interior_suite(m, n, seed=args.seed)
    failures = []
    for suite_name, rep in (("isomorphism", iso), ("pseudo_facet", pf), ("interior", iw)):
        for failure in rep.failures:
            failures.append((suite_name, failure))
    pairs = head + [
        ("samples", n),
        ("roundtrips", iso.roundtrip_checked),
        ("memberships", iso.membership_checked),
        ("pseudo_facet_samples", pf.samples),
        ("cycle_configs", pf.cycle_configs),
        ("interior_nonintegral", iw.nonintegral),
        ("violations", len(failures)),
    ]
    if not failures:
        _emit(pairs + [("outcome", "pass")], started)
        return 0
    lines = [
        f"counterexample=theorems suite={s} detail={repr(f).replace(' ', '')}"
        for s, f in failures
    ]
    path = _write_counterexamples(args, "theorems", lines)
    _emit(pairs + [("outcome", "fail"), ("file", path)], started)
    return 1


def cmd_verify(args) -> int:
    started = time.perf_counter()
    head = [("command", "verify"), ("task", args.task), ("leaves", args.leaves)]
    runner = {
        "containment": _verify_containment,
        "equality": _verify_equality,
        "integrality": _verify_integrality,
        "theorems": _verify_theorems,
    }[args.task]
    return runner(args, head, started)


# --- witness ------------------------------------------------------------------

def _parse_labeling(spec, text: str) -> Labeling:
    width = len(spec.orders)
    elements = []
    for token in text.split(","):
        token = token.strip()
        if len(token) != width or not token.isdigit():
            raise ConfigurationError(
                f"labeling token {token!r} is not {width} digits for group {spec.name()}"
            )
        elements.append(element(spec, tuple(int(ch) for ch in token)))
    return Labeling(spec, tuple(elements))


def cmd_witness(args) -> int:
    started = time.perf_counter()
    if args.kind == "violation":
        if not args.labeling:
            raise ConfigurationError("witness violation needs --labeling")
        lab = _parse_labeling(parse_group(args.group), args.labeling)
        w = violation_witness(lab)
        if w is None:
            pairs = [
                ("command", "witness"),
                ("kind", "violation"),
                ("consistent", True),
                ("outcome", "pass"),
            ]
            content = record_line(pairs)
        else:
            pairs = [
                ("command", "witness"),
                ("kind", "violation"),
                ("consistent", False),
                ("subset", w.subset),
                ("row_pair", w.row_pair),
                ("inequality", w.inequality_id),
                ("lhs", w.lhs),
                ("rhs", w.rhs),
                ("outcome", "pass"),
            ]
            content = record_line(pairs)
        if args.out:
            write_text(args.out, content + "\n")
            pairs = pairs + [("file", args.out)]
        _emit(pairs, started)
        return 0
    if not args.point:
        raise ConfigurationError("witness interior needs --point FILE")
    vs = parse_vfile(read_text(args.point))
    if len(vs.points) != 1:
        raise FileFormatError(f"expected exactly one point, found {len(vs.points)}")
    mat = _points_as_matrices(vs)[0]
    wit = interior_witness(mat)
    if isinstance(wit, InteriorWitness):
        pairs = [
            ("command", "witness"),
            ("kind", "segment-interior"),
            ("epsilon", wit.epsilon),
            ("direction", wit.direction),
            ("outcome", "pass"),
        ]
        content = record_line(pairs)
        if args.out:
            write_text(args.out, content + "\n")
            pairs = pairs + [("file", args.out)]
        _emit(pairs, started)
        return 0
    pairs = [
        ("command", "witness"),
        ("kind", "segment-interior"),
        ("reason", wit.reason.replace(" ", "-")),
        ("outcome", "fail"),
    ]
    if args.out:
        write_text(args.out, record_line(pairs) + "\n")
        pairs = pairs + [("file", args.out)]
    _emit(pairs, started)
    return 1


# --- stats --------------------------------------------------------------------

def cmd_stats(args) -> int:
    started = time.perf_counter()
    m = args.leaves
    sys_std = model_system("kimura3", m)
    sys_pri = model_system("kimura3-prime", m)
    sys_bin = model_system("binary", m)
    vs = generate_vertices(Z2Z2, m)
    pairs = [
        ("command", "stats"),
        ("leaves", m),
        ("vertices", len(vs.points)),
        ("kimura3_inequalities", len(sys_std.inequalities)),
        ("kimura3_prime_inequalities", len(sys_pri.inequalities)),
        ("binary_inequalities", len(sys_bin.inequalities)),
    ]
    outcome = "pass"
    cap = args.max_dim if args.max_dim is not None else None
    try:
        hull = hull_from_vertices(vs) if _under_cap(sys_std.dimension, cap) else None
    except ResourceCapError:
        hull = None
    if hull is None:
        outcome = "partial"
        pairs.append(("facets", "skipped-by-cap"))
    else:
        pairs.append(("facets", len(hull.facets)))
        if args.fvector:
            if m == 3:
                fv = f_vector(hull)
                pairs.append(("f_vector", fv.counts))
                if not fv.complete:
                    outcome = "partial"
            else:
                outcome = "partial"
                pairs.append(("f_vector", "m3-only"))
    pairs.append(("outcome", outcome))
    if args.out:
        write_text(args.out, record_line(pairs) + "\n")
        pairs = pairs + [("file", args.out)]
    _emit(pairs, started)
    return 0


def _under_cap(dim, cap) -> bool:
    if cap is None:
        raw = os.environ.get("CLAWPOLY_MAX_DIM")
        cap = int(raw) if raw and raw.lstrip("-").isdigit() else 12
    return dim <= cap


# --- entry --------------------------------------------------------------------

def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    if args.verbose:
        logging.basicConfig(level=logging.INFO, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except ResourceCapError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except ClawpolyError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
