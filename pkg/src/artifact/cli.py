"""Command line front end: build categories from documents, inspect
nerves and cut/fold operators, compute homology, run verification
suites, and compare the globular homology theories side by side.

Subcommands
-----------
``build``      closure summary for a document; ``--export`` re-emits it
``homology``   one theory (``--theory``) up to ``--max-degree``
``nerve``      cell counts, thin counts and grading of a nerve
``map``        corner-cut and folding inspection tables
``verify``     named exhaustive law suites (exit 1 on any violation)
``compare``    all globular theories side by side with checked
               comparison chain maps

Documents are file paths, ``corpus:NAME`` references, or bare names of
bundled corpus documents (``cube3.doc``).  Every report embeds the
truncation level and element cap used.  All numbers are exact
integers and the output is deterministic.

Exit codes: 0 success; 1 a violation or counterexample was found;
2 malformed input or an invalid request; 3 element cap exceeded.
"""

import argparse
import json
import sys

from .category import (
    DEFAULT_ELEMENT_CAP,
    CategoryError,
    ExplosionError,
    iso_check,
)
from .complexes import (
    THEORIES,
    build_theory,
    comparison_diagram,
    corner_chain_map,
    state_pairs,
    thin_cycle_report,
)
from .cutmaps import CutError, corner_embedding, fold, is_folded_simplex
from .documents import (
    DocumentError,
    build_document,
    corpus_names,
    export_document,
    load_document,
    parse_chain,
    parse_document,
)
from .homology import ComplexInvariantError, HomologyError
from .nerves import NerveError, corner_nerve, globular_nerve

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_CAP = 3

# element-basis theories admit chains of category elements directly
ELEMENT_THEORIES = ("old-gl", "formal-gl", "formal-minus", "formal-plus")

# corner nerves grow much faster than the globular one; the verify and
# compare subcommands cap their depth independently of --truncation
CORNER_DEPTH_CAP = 2

SUITES = (
    "simplicial-identities",
    "cut-axioms",
    "complex-laws",
    "thin-cycles",
    "round-trip",
    "all",
)


class CliError(Exception):
    """An invalid request that argparse cannot catch."""


# ---------------------------------------------------------------------------
# shared plumbing
# ---------------------------------------------------------------------------


def _load(args):
    return load_document(args.document, element_cap=args.element_cap)


def _base_report(args, cat, command):
    return {
        "command": command,
        "document": args.document,
        "category": cat.name,
        "truncation": args.truncation,
        "element_cap": args.element_cap,
    }


def _header(args, cat):
    return [
        "document: %s  (category %s)" % (args.document, cat.name),
        "truncation D=%d, element cap %d" % (args.truncation, args.element_cap),
    ]


def _emit(args, report, lines):
    if args.format == "structured":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def _state_namer(cat):
    """Prefer the document-facing generator label over the canonical one."""
    pref = {x: lbl for lbl, x in cat.generators}

    def name(v):
        return pref.get(v, cat.label(v))

    return name


def _grade_label(name, grade):
    if isinstance(grade, tuple):
        return ",".join(name(v) for v in grade)
    return name(grade)


# ---------------------------------------------------------------------------
# build
# ---------------------------------------------------------------------------


def cmd_build(args):
    cat = _load(args)
    by_dim = {d: len(cat.by_dim(d)) for d in range(cat.maxdim + 1)}
    report = _base_report(args, cat, "build")
    report.update(
        {
            "states": len(cat.states()),
            "elements_by_dimension": {str(d): n for d, n in by_dim.items()},
            "total_elements": sum(by_dim.values()),
            "max_dimension": cat.maxdim,
            "compositions": len(cat.comp),
        }
    )
    if args.export:
        text = export_document(cat)
        report["export"] = text
        # keep the output re-ingestable: nothing but the document itself
        return EXIT_OK, report, [text.rstrip("\n")]
    lines = _header(args, cat)
    for d in range(cat.maxdim + 1):
        lines.append("dimension %d: %d elements" % (d, by_dim[d]))
    lines.append("total %d elements, %d stored compositions" % (sum(by_dim.values()), len(cat.comp)))
    return EXIT_OK, report, lines


# ---------------------------------------------------------------------------
# homology
# ---------------------------------------------------------------------------


def cmd_homology(args):
    cat = _load(args)
    cc = build_theory(
        cat, args.theory, truncation=args.truncation, degree0=args.degree0
    )
    top = cc.top if cc.top is not None else cat.maxdim
    max_degree = args.max_degree if args.max_degree is not None else top
    if cc.top is not None and max_degree > cc.top:
        raise CliError(
            "degree %d outside the truncated range 0..%d; raise --truncation"
            % (max_degree, cc.top)
        )
    report = _base_report(args, cat, "homology")
    report["theory"] = args.theory
    report["max_degree"] = max_degree
    groups = {}
    lines = _header(args, cat)
    lines.append("theory %s" % args.theory)
    for k in range(max_degree + 1):
        g = cc.homology(k)
        groups[str(k)] = g.to_json()
        lines.append("H_%d = %s" % (k, g))
    report["homology"] = groups
    if args.class_chain is not None:
        if args.theory not in ELEMENT_THEORIES:
            raise CliError(
                "--class-chain needs an element-basis theory (%s)"
                % ", ".join(ELEMENT_THEORIES)
            )
        dim, chain = parse_chain(cat, args.class_chain)
        pos = {lab: i for i, lab in enumerate(cc.generators.get(dim, ()))}
        try:
            vector = {pos[cat.label(x)]: c for x, c in chain.items()}
        except KeyError as exc:
            raise CliError(
                "chain term %s has no basis column at degree %d" % (exc, dim)
            )
        verdict = cc.class_of(dim, vector)
        report["chain"] = {
            "text": args.class_chain,
            "degree": dim,
            "class": verdict,
        }
        lines.append("chain at degree %d: %s" % (dim, verdict))
    return EXIT_OK, report, lines


# ---------------------------------------------------------------------------
# nerve
# ---------------------------------------------------------------------------


def _sign_of(kind):
    return "-" if kind == "minus" else "+"


def _build_nerve(cat, kind, depth):
    if kind == "gl":
        return globular_nerve(cat, depth)
    return corner_nerve(cat, _sign_of(kind), depth)


def cmd_nerve(args):
    cat = _load(args)
    nv = _build_nerve(cat, args.kind, args.truncation)
    report = _base_report(args, cat, "nerve")
    report["kind"] = args.kind
    report["augmentation_basis"] = len(nv.minus_one)
    sizes = {}
    thin = {}
    for n in range(nv.D + 1):
        sizes[str(n)] = nv.size(n)
        thin[str(n)] = sum(1 for f in nv.thin[n] if f)
    report["sizes"] = sizes
    report["thin"] = thin
    namer = _state_namer(cat)
    grades = sorted(_grade_label(namer, g) for g in nv.grade_keys())
    report["grades"] = grades
    lines = _header(args, cat)
    lines.append("%s nerve, augmentation basis %d" % (args.kind, len(nv.minus_one)))
    for n in range(nv.D + 1):
        lines.append(
            "degree %d: %d cells (%d thin)" % (n, nv.size(n), int(thin[str(n)]))
        )
    lines.append("grades: %s" % ", ".join(grades))
    if args.grade is not None:
        wanted = args.grade
        match = None
        for g in nv.grade_keys():
            if _grade_label(namer, g) == wanted:
                match = g
                break
        if match is None:
            raise CliError(
                "unknown grade %r (available: %s)" % (wanted, ", ".join(grades))
            )
        comp = nv.component(match)
        comp_sizes = {str(n): comp.size(n) for n in range(nv.D + 1)}
        report["component"] = {"grade": wanted, "sizes": comp_sizes}
        lines.append("component %s:" % wanted)
        for n in range(nv.D + 1):
            lines.append("  degree %d: %d cells" % (n, comp.size(n)))
    return EXIT_OK, report, lines


# ---------------------------------------------------------------------------
# map (cut and fold inspection)
# ---------------------------------------------------------------------------


def cmd_map(args):
    cat = _load(args)
    report = _base_report(args, cat, "map")
    report["kind"] = args.kind
    lines = _header(args, cat)
    if args.kind == "fold":
        nv = globular_nerve(cat, args.truncation)
        rows = []
        top_dim = min(cat.maxdim, args.truncation + 1)
        for d in range(1, top_dim + 1):
            for x in cat.by_dim(d):
                table = fold(cat, x)
                idx = nv.index_of(d - 1, table)
                rows.append(
                    {
                        "element": cat.label(x),
                        "dimension": d,
                        "simplex": nv.labels(d - 1)[idx],
                        "folded_form": bool(is_folded_simplex(d - 1, table)),
                    }
                )
        report["folds"] = rows
        lines.append("element folding into the globular nerve:")
        for r in rows:
            lines.append(
                "  %s (dim %d) -> %s%s"
                % (
                    r["element"],
                    r["dimension"],
                    r["simplex"],
                    "" if r["folded_form"] else "  [not in folded form]",
                )
            )
        code = EXIT_OK if all(r["folded_form"] for r in rows) else EXIT_VIOLATION
        return code, report, lines
    sign = _sign_of(args.kind)
    nv = globular_nerve(cat, args.truncation)
    cn = corner_nerve(cat, sign, args.truncation)
    rows = []
    defined = 0
    total = 0
    for n in range(nv.D + 1):
        for j in range(nv.size(n)):
            total += 1
            label = nv.labels(n)[j]
            try:
                cube = corner_embedding(cat, n, nv.cells[n][j], sign)
            except CutError as exc:
                rows.append(
                    {
                        "degree": n,
                        "cell": label,
                        "image": None,
                        "reason": str(exc),
                    }
                )
                continue
            defined += 1
            ci = cn.index_of(n, cube)
            rows.append({"degree": n, "cell": label, "image": cn.labels(n)[ci]})
    report["cells"] = rows
    report["defined"] = defined
    report["total"] = total
    lines.append(
        "corner cut %s: defined on %d of %d globular cells" % (sign, defined, total)
    )
    for r in rows:
        if r["image"] is None:
            lines.append("  deg %d  %s -> undefined" % (r["degree"], r["cell"]))
        else:
            lines.append("  deg %d  %s -> %s" % (r["degree"], r["cell"], r["image"]))
    return EXIT_OK, report, lines


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _simplicial_violations(nv, name):
    """First violation of each face/degeneracy/augmentation law family."""
    out = []
    D = nv.D
    for n in range(2, D + 1):
        for j in range(nv.size(n)):
            for jj in range(n + 1):
                for i in range(jj):
                    a = nv.face_table(n - 1, nv.cells[n - 1][nv.face(n, jj, j)], i)
                    b = nv.face_table(n - 1, nv.cells[n - 1][nv.face(n, i, j)], jj - 1)
                    if a != b:
                        out.append(
                            "%s: face law fails at degree %d cell %d (i=%d, j=%d)"
                            % (name, n, j, i, jj)
                        )
                        return out
    for n in range(0, D - 1):
        for j in range(nv.size(n)):
            for jj in range(n + 1):
                for i in range(jj + 1):
                    a = nv.degen_table(n + 1, nv.cells[n + 1][nv.degen(n, jj, j)], i)
                    b = nv.degen_table(n + 1, nv.cells[n + 1][nv.degen(n, i, j)], jj + 1)
                    if a != b:
                        out.append(
                            "%s: degeneracy law fails at degree %d cell %d (i=%d, j=%d)"
                            % (name, n, j, i, jj)
                        )
                        return out
    for n in range(0, D):
        for j in range(nv.size(n)):
            t = nv.cells[n][j]
            for jj in range(n + 1):
                sjt = nv.cells[n + 1][nv.degen(n, jj, j)]
                for i in range(n + 2):
                    got = nv.face_table(n + 1, sjt, i)
                    if i == jj or i == jj + 1:
                        want = t
                    elif i < jj:
                        want = nv.degen_table(
                            n - 1, nv.cells[n - 1][nv.face(n, i, j)], jj - 1
                        )
                    else:
                        want = nv.degen_table(
                            n - 1, nv.cells[n - 1][nv.face(n, i - 1, j)], jj
                        )
                    if got != want:
                        out.append(
                            "%s: mixed face/degeneracy law fails at degree %d cell %d"
                            % (name, n, j)
                        )
                        return out
    for j in range(nv.size(1)):
        if nv.aug[nv.face(1, 0, j)] != nv.aug[nv.face(1, 1, j)]:
            out.append("%s: augmentation differs across a 1-cell boundary" % name)
            return out
    return out


def _suite_simplicial(cat, truncation):
    checks = []
    nerves = [("globular", globular_nerve(cat, truncation))]
    corner_depth = min(truncation, CORNER_DEPTH_CAP)
    for sign in ("-", "+"):
        nerves.append(
            ("corner %s (D=%d)" % (sign, corner_depth), corner_nerve(cat, sign, corner_depth))
        )
    for name, nv in nerves:
        bad = _simplicial_violations(nv, name)
        checks.append(
            {
                "name": "identities on the %s nerve" % name,
                "status": "violation" if bad else "ok",
                "detail": "; ".join(bad) if bad else "all face/degeneracy/augmentation laws hold",
            }
        )
    return checks


def _suite_cut_axioms(cat, truncation):
    checks = []
    corner_depth = min(truncation, CORNER_DEPTH_CAP)
    builds = [
        ("globular", globular_nerve(cat, truncation)),
        ("corner - (D=%d)" % corner_depth, corner_nerve(cat, "-", corner_depth)),
        ("corner + (D=%d)" % corner_depth, corner_nerve(cat, "+", corner_depth)),
    ]
    arrows = set(cat.by_dim(1))
    pairs = set(state_pairs(cat))
    states = set(cat.states())
    for name, nv in builds:
        basis = set(nv.minus_one)
        want = pairs if name == "globular" else states
        ok = basis == want
        checks.append(
            {
                "name": "augmentation basis of the %s nerve" % name,
                "status": "ok" if ok else "violation",
                "detail": "matches the state data" if ok else "augmentation basis mismatch",
            }
        )
        # globular cells evaluate into the path category; corner cells
        # evaluate into the category itself
        if nv.to_parent is not None:
            evs = [nv.to_parent[nv._ev(0, t)] for t in nv.cells[0]]
        else:
            evs = [nv._ev(0, t) for t in nv.cells[0]]
        ok = len(evs) == len(set(evs)) and set(evs) == arrows
        checks.append(
            {
                "name": "degree-0 cells of the %s nerve are the arrows" % name,
                "status": "ok" if ok else "violation",
                "detail": "bijective evaluation" if ok else "evaluation not bijective onto the arrows",
            }
        )
        bad = None
        for n in range(nv.D):
            for j in range(nv.size(n)):
                want_ev = nv._ev(n, nv.cells[n][j])
                for i in range(n + 1):
                    got = nv._ev(n + 1, nv.cells[n + 1][nv.degen(n, i, j)])
                    if got != want_ev:
                        bad = "degree %d cell %d degeneracy %d" % (n, j, i)
                        break
                if bad:
                    break
            if bad:
                break
        checks.append(
            {
                "name": "evaluation constant on degeneracies (%s nerve)" % name,
                "status": "violation" if bad else "ok",
                "detail": bad or "ev(degenerate cell) = ev(cell) everywhere",
            }
        )
    nv = builds[0][1]
    bad = None
    for d in range(2, min(cat.maxdim, truncation + 1) + 1):
        for x in cat.by_dim(d):
            table = fold(cat, x)
            m = d - 1
            last = nv.to_parent[nv._ev(m - 1, nv.face_table(m, table, m))]
            prev = nv.to_parent[nv._ev(m - 1, nv.face_table(m, table, m - 1))]
            if {last, prev} != {cat.source(x, d - 1), cat.target(x, d - 1)}:
                bad = "element %s" % cat.label(x)
                break
        if bad:
            break
    checks.append(
        {
            "name": "folding boundary evaluation",
            "status": "violation" if bad else "ok",
            "detail": bad
            or "the last two faces of every folded element evaluate to its source and target",
        }
    )
    return checks


def _suite_complex_laws(cat, truncation):
    checks = []
    corner_depth = min(truncation, CORNER_DEPTH_CAP)
    for theory in THEORIES:
        nerve_based = not (theory == "old-gl" or theory.startswith("formal-"))
        corner = nerve_based and not theory.endswith("gl")
        depth = corner_depth if corner else truncation
        try:
            build_theory(cat, theory, truncation=depth)
        except ComplexInvariantError as exc:
            checks.append(
                {
                    "name": "chain-complex laws: %s" % theory,
                    "status": "violation",
                    "detail": str(exc),
                }
            )
            continue
        detail = "d*d = 0 and relations are closed"
        if corner:
            detail += " (D=%d)" % depth
        checks.append(
            {"name": "chain-complex laws: %s" % theory, "status": "ok", "detail": detail}
        )
    return checks


def _suite_thin_cycles(cat, truncation):
    nv = globular_nerve(cat, truncation)
    checks = []
    for row in thin_cycle_report(nv):
        ok = row["thin_cycles"] == row["boundaries"]
        checks.append(
            {
                "name": "thin cycles bound at degree %d" % row["degree"],
                "status": "ok" if ok else "violation",
                "detail": "%d thin-supported cycles, %d of them boundaries"
                % (row["thin_cycles"], row["boundaries"]),
            }
        )
    if not checks:
        checks.append(
            {
                "name": "thin cycles bound",
                "status": "ok",
                "detail": "no degrees with thin cells",
            }
        )
    return checks


def _suite_round_trip(cat, truncation):
    text = export_document(cat)
    rebuilt = build_document(parse_document(text, source="<export>"))
    ok = iso_check(cat, rebuilt) is not None
    return [
        {
            "name": "build/export/re-ingest round trip",
            "status": "ok" if ok else "violation",
            "detail": "rebuilt category is isomorphic"
            if ok
            else "rebuilt category is NOT isomorphic",
        }
    ]


SUITE_RUNNERS = {
    "simplicial-identities": _suite_simplicial,
    "cut-axioms": _suite_cut_axioms,
    "complex-laws": _suite_complex_laws,
    "thin-cycles": _suite_thin_cycles,
    "round-trip": _suite_round_trip,
}


def cmd_verify(args):
    cat = _load(args)
    names = list(SUITE_RUNNERS) if args.suite == "all" else [args.suite]
    checks = []
    for name in names:
        checks.extend(SUITE_RUNNERS[name](cat, args.truncation))
    violations = sum(1 for c in checks if c["status"] != "ok")
    report = _base_report(args, cat, "verify")
    report["suite"] = args.suite
    report["corner_truncation"] = min(args.truncation, CORNER_DEPTH_CAP)
    report["checks"] = checks
    report["violations"] = violations
    lines = _header(args, cat)
    lines.append("suite %s (corner nerves capped at D=%d)" % (args.suite, report["corner_truncation"]))
    for c in checks:
        tag = "ok " if c["status"] == "ok" else "FAIL"
        lines.append("%s %s — %s" % (tag, c["name"], c["detail"]))
    lines.append(
        "%d checks, %d violations" % (len(checks), violations)
    )
    code = EXIT_OK if violations == 0 else EXIT_VIOLATION
    return code, report, lines


# ---------------------------------------------------------------------------
# compare
# ---------------------------------------------------------------------------

COMPARE_ORDER = ("old-gl", "formal-gl", "gl", "normalized-gl", "reduced-gl")
REPORTED_MAPS = ("formal-to-reduced", "gl-to-reduced")


def cmd_compare(args):
    cat = _load(args)
    report = _base_report(args, cat, "compare")
    lines = _header(args, cat)
    violations = []
    try:
        diagram = comparison_diagram(cat, truncation=args.truncation, check=True)
    except ComplexInvariantError as exc:
        report["violations"] = [str(exc)]
        return EXIT_VIOLATION, report, lines + ["FAIL %s" % exc]
    complexes = diagram["complexes"]
    row_top = min(args.truncation, cat.maxdim)
    if args.max_degree is not None:
        row_top = min(row_top, args.max_degree)
    table = {}
    for name in COMPARE_ORDER:
        cc = complexes[name]
        table[name] = {str(k): cc.homology(k).to_json() for k in range(row_top + 1)}
    report["homology"] = table
    report["checked_maps"] = sorted(diagram["maps"])
    widths = [max(len(n), 12) for n in COMPARE_ORDER]
    lines.append("homology side by side (degrees 0..%d):" % row_top)
    head = "degree  " + "  ".join(n.ljust(w) for n, w in zip(COMPARE_ORDER, widths))
    lines.append(head)
    for k in range(row_top + 1):
        cells = []
        for name, w in zip(COMPARE_ORDER, widths):
            g = complexes[name].homology(k)
            cells.append(str(g).ljust(w))
        lines.append("%-6d  %s" % (k, "  ".join(cells)))
    lines.append(
        "checked comparison chain maps: %s" % ", ".join(sorted(diagram["maps"]))
    )
    induced = []
    for name in REPORTED_MAPS:
        cm = diagram["maps"][name]
        for k in range(row_top + 1):
            induced.append(cm.induced_report(k))
    report["induced"] = induced
    lines.append("induced maps on homology (reported, not asserted):")
    for r in induced:
        lines.append(
            "  %s at degree %d: %s -> %s, injective=%s surjective=%s iso=%s"
            % (
                r["map"],
                r["degree"],
                r["source"],
                r["target"],
                r["injective"],
                r["surjective"],
                r["isomorphism"],
            )
        )
    corner_depth = min(args.truncation, CORNER_DEPTH_CAP)
    report["corner_truncation"] = corner_depth
    try:
        corner_chain_map(cat, "-", truncation=corner_depth, check=True)
        lines.append(
            "corner cut -: chain map to the branching corner complex (D=%d) checked"
            % corner_depth
        )
        report["corner_minus_chain_map"] = True
    except ComplexInvariantError as exc:
        violations.append(str(exc))
        report["corner_minus_chain_map"] = False
        lines.append("FAIL corner cut -: %s" % exc)
    report["violations"] = violations
    code = EXIT_OK if not violations else EXIT_VIOLATION
    return code, report, lines


# ---------------------------------------------------------------------------
# argument parsing and entry point
# ---------------------------------------------------------------------------


def _parser():
    parser = argparse.ArgumentParser(
        prog="artifact",
        description=__doc__.splitlines()[0],
        epilog="bundled documents: " + ", ".join(corpus_names()),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("document", help="file path, corpus:NAME, or bundled name")
        p.add_argument(
            "--format",
            choices=("human", "structured"),
            default="human",
            help="human table or machine-readable JSON",
        )
        p.add_argument(
            "--truncation",
            type=int,
            default=4,
            metavar="D",
            help="nerve depth (default 4)",
        )
        p.add_argument(
            "--element-cap",
            type=int,
            default=DEFAULT_ELEMENT_CAP,
            metavar="N",
            help="abort closure beyond N elements",
        )

    p = sub.add_parser("build", help="build a category and summarize it")
    common(p)
    p.add_argument(
        "--export",
        action="store_true",
        help="re-emit the category as a presentation document",
    )
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("homology", help="homology groups of one theory")
    common(p)
    p.add_argument("--theory", choices=THEORIES, default="gl")
    p.add_argument("--max-degree", type=int, default=None, metavar="K")
    p.add_argument(
        "--degree0",
        choices=("tensor", "sum"),
        default="tensor",
        help="degree-0 convention of the element-pair theory",
    )
    p.add_argument(
        "--class-chain",
        default=None,
        metavar="CHAIN",
        help="classify an integer chain of elements (element-basis theories)",
    )
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("nerve", help="cell counts and grading of a nerve")
    common(p)
    p.add_argument("--kind", choices=("gl", "minus", "plus"), default="gl")
    p.add_argument(
        "--grade",
        default=None,
        metavar="A,B",
        help="show one graded component (state pair for gl, state otherwise)",
    )
    p.set_defaults(func=cmd_nerve)

    p = sub.add_parser("map", help="corner cut and folding inspection")
    common(p)
    p.add_argument("--kind", choices=("fold", "minus", "plus"), default="fold")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", help="run a named law suite")
    common(p)
    p.add_argument("--suite", choices=SUITES, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", help="globular theories side by side")
    common(p)
    p.add_argument("--max-degree", type=int, default=None, metavar="K")
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv=None):
    parser = _parser()
    args = parser.parse_args(argv)
    if args.truncation < 0:
        print("input error: --truncation must be non-negative", file=sys.stderr)
        return EXIT_INPUT
    if args.element_cap < 1:
        print("input error: --element-cap must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        code, report, lines = args.func(args)
    except ExplosionError as exc:
        print("resource cap: %s" % exc, file=sys.stderr)
        return EXIT_CAP
    except ComplexInvariantError as exc:
        print("counterexample: %s" % exc, file=sys.stderr)
        return EXIT_VIOLATION
    except (CliError, DocumentError, CategoryError, NerveError, CutError, HomologyError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    _emit(args, report, lines)
    return code


if __name__ == "__main__":
    sys.exit(main())
