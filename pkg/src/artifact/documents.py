"""Reading and writing category documents.

A document is plain text describing one category.  Lines starting with
``#`` and blank lines are ignored; every other line is ``key: rest``.
The first meaningful line must give the kind.  Schemas by kind:

    kind: cube            kind: graph
    dimension: 2          name: left
    name: cube2           vertices: a b c
                          edge: u a b

    kind: simplex         kind: presentation
    dimension: 2          name: triangle
                          generator: p 0
    kind: globe           generator: u 1 p q
    dimension: 3          generator: X 3 (A *1 B) C

    kind: semicubical
    name: square
    cell: v-- 0
    cell: e-0 1
    face: e-0 1 - v--     # cell, axis (1-based), sign, boundary cell

``name`` is optional for the three numbered kinds.  Sources and targets
of presentation generators are expressions: a generator label, or
``(EXPR *p EXPR)`` for a composition at level p.  The same expression
grammar serves chain syntax, e.g. ``(A *1 B) - A - B`` with optional
integer coefficients before each term.

``load_document`` accepts a filesystem path or ``corpus:NAME`` for one
of the bundled examples.
"""

from __future__ import annotations

import os

from .category import CategoryError, evaluate_expression
from .schemes import (
    cube_category,
    globe_category,
    graph_category,
    presentation_category,
    semicubical_category,
    simplex_category,
)

CORPUS_DIR = os.path.join(os.path.dirname(__file__), "corpus")
DOCUMENT_SUFFIX = ".doc"


class DocumentError(Exception):
    """A malformed document; the message carries source and line."""


def _err(source, lineno, message):
    where = source if lineno is None else "%s, line %d" % (source, lineno)
    return DocumentError("%s: %s" % (where, message))


# ---------------------------------------------------------------------------
# expression and chain grammar
# ---------------------------------------------------------------------------


def tokenize_expression(text):
    """Split into '(', ')', '*p', '+'/'-' operators, ints and labels."""
    out = []
    buf = []

    def flush():
        if buf:
            out.append("".join(buf))
            del buf[:]

    for ch in text:
        if ch in "()":
            flush()
            out.append(ch)
        elif ch.isspace():
            flush()
        else:
            buf.append(ch)
    flush()
    return out


class _ExprParser:
    def __init__(self, tokens, source, lineno):
        self.tokens = tokens
        self.i = 0
        self.source = source
        self.lineno = lineno

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise _err(self.source, self.lineno, "unexpected end of expression")
        self.i += 1
        return tok

    def parse_expr(self):
        tok = self.next()
        if tok == "(":
            left = self.parse_expr()
            op = self.next()
            if not (op.startswith("*") and op[1:].isdigit()):
                raise _err(
                    self.source, self.lineno,
                    "expected a composition operator '*<level>', got %r" % op,
                )
            right = self.parse_expr()
            closing = self.next()
            if closing != ")":
                raise _err(self.source, self.lineno, "expected ')', got %r" % closing)
            return ("comp", left, int(op[1:]), right)
        # '+' and '-' are valid labels here (cube vertices); chains
        # treat them as operators before ever reaching this parser
        if tok == ")" or (tok.startswith("*") and tok[1:].isdigit()):
            raise _err(self.source, self.lineno, "expected an element, got %r" % tok)
        return ("gen", tok)


def parse_expression_tree(text, source="<expr>", lineno=None):
    """One expression; returns a ('gen', label)/('comp', l, p, r) tree."""
    p = _ExprParser(tokenize_expression(text), source, lineno)
    tree = p.parse_expr()
    if p.peek() is not None:
        raise _err(source, lineno, "trailing tokens after expression: %r" % p.peek())
    return tree


def element_of_expression(cat, text, source="<expr>", lineno=None):
    """Evaluate one expression inside a category."""
    tree = parse_expression_tree(text, source, lineno)
    try:
        return evaluate_expression(cat, tree)
    except (CategoryError, KeyError) as exc:
        raise _err(source, lineno, "cannot evaluate %r: %s" % (text, exc))


def parse_chain(cat, text, source="<chain>"):
    """An integer combination of elements: [int] EXPR (+|- [int] EXPR)*.

    Returns (dimension, {element: coefficient}); every term must have
    the same dimension.  A standalone '+' or '-' between terms is an
    operator; at most one is consumed per term, so an element literally
    labeled '-' or '+' can still appear as a term by writing an
    explicit sign in front of it (e.g. "+ -").
    """
    tokens = tokenize_expression(text)
    p = _ExprParser(tokens, source, None)
    chain = {}
    dim = None
    sign = 1
    first = True
    while p.peek() is not None:
        tok = p.peek()
        if tok in ("+", "-"):
            p.next()
            sign = 1 if tok == "+" else -1
        elif not first:
            raise _err(source, None, "expected '+' or '-', got %r" % tok)
        # signs always come from the separating operators, so a
        # coefficient is a bare integer (labels may start with '-')
        coeff = 1
        tok = p.peek()
        if tok is not None and tok.isdigit():
            coeff = int(p.next())
        tree = p.parse_expr()
        try:
            x = evaluate_expression(cat, tree)
        except (CategoryError, KeyError) as exc:
            raise _err(source, None, "cannot evaluate a chain term: %s" % exc)
        if dim is None:
            dim = cat.dims[x]
        elif cat.dims[x] != dim:
            raise _err(
                source, None,
                "mixed dimensions in chain (%d and %d)" % (dim, cat.dims[x]),
            )
        chain[x] = chain.get(x, 0) + sign * coeff
        sign = 1
        first = False
    if dim is None:
        raise _err(source, None, "empty chain")
    return dim, {x: c for x, c in chain.items() if c}


# ---------------------------------------------------------------------------
# document parsing
# ---------------------------------------------------------------------------

KINDS = ("cube", "simplex", "globe", "graph", "presentation", "semicubical")


def parse_document(text, source="<document>"):
    """Parse a document into a plain dict; raises DocumentError."""
    doc = {"kind": None, "name": None, "source": source}
    vertices = []
    edges = []
    generators = []
    cells = []
    faces = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise _err(source, lineno, "expected 'key: value', got %r" % line)
        key, rest = line.split(":", 1)
        key = key.strip()
        rest = rest.split("#", 1)[0].strip()
        if doc["kind"] is None and key != "kind":
            raise _err(source, lineno, "the first entry must be 'kind:'")
        if key == "kind":
            if doc["kind"] is not None:
                raise _err(source, lineno, "duplicate 'kind:' entry")
            if rest not in KINDS:
                raise _err(
                    source, lineno,
                    "unknown kind %r (expected one of %s)" % (rest, ", ".join(KINDS)),
                )
            doc["kind"] = rest
        elif key == "name":
            doc["name"] = rest
        elif key == "dimension":
            if doc["kind"] not in ("cube", "simplex", "globe"):
                raise _err(source, lineno, "'dimension:' only applies to cube/simplex/globe")
            if not rest.isdigit():
                raise _err(source, lineno, "dimension must be a non-negative integer")
            doc["dimension"] = int(rest)
        elif key == "vertices":
            if doc["kind"] != "graph":
                raise _err(source, lineno, "'vertices:' only applies to graphs")
            vertices.extend(rest.split())
        elif key == "edge":
            if doc["kind"] != "graph":
                raise _err(source, lineno, "'edge:' only applies to graphs")
            parts = rest.split()
            if len(parts) != 3:
                raise _err(source, lineno, "edge needs 'LABEL SRC TGT'")
            edges.append(tuple(parts))
        elif key == "generator":
            if doc["kind"] != "presentation":
                raise _err(source, lineno, "'generator:' only applies to presentations")
            parts = rest.split(None, 2)
            if len(parts) < 2 or not parts[1].isdigit():
                raise _err(source, lineno, "generator needs 'LABEL DIM [SRC TGT]'")
            label, d = parts[0], int(parts[1])
            if d == 0:
                if len(parts) > 2:
                    raise _err(source, lineno, "a 0-generator takes no boundary")
                generators.append((label, 0, None, None))
            else:
                if len(parts) != 3:
                    raise _err(source, lineno, "a positive generator needs SRC and TGT")
                exprs = _split_two_expressions(parts[2], source, lineno)
                src = parse_expression_tree(exprs[0], source, lineno)
                tgt = parse_expression_tree(exprs[1], source, lineno)
                generators.append((label, d, src, tgt))
        elif key == "cell":
            if doc["kind"] != "semicubical":
                raise _err(source, lineno, "'cell:' only applies to semicubical documents")
            parts = rest.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise _err(source, lineno, "cell needs 'LABEL DIM'")
            cells.append((parts[0], int(parts[1])))
        elif key == "face":
            if doc["kind"] != "semicubical":
                raise _err(source, lineno, "'face:' only applies to semicubical documents")
            parts = rest.split()
            if len(parts) != 4 or not parts[1].isdigit() or parts[2] not in "-+":
                raise _err(source, lineno, "face needs 'CELL AXIS SIGN CELL'")
            faces[(parts[0], int(parts[1]), parts[2])] = parts[3]
        else:
            raise _err(source, lineno, "unknown entry %r" % key)
    if doc["kind"] is None:
        raise _err(source, None, "empty document")
    if doc["kind"] in ("cube", "simplex", "globe"):
        if "dimension" not in doc:
            raise _err(source, None, "missing 'dimension:' entry")
    elif doc["kind"] == "graph":
        doc["vertices"] = vertices
        doc["edges"] = edges
    elif doc["kind"] == "presentation":
        doc["generators"] = generators
    else:
        doc["cells"] = cells
        doc["faces"] = faces
    return doc


def _split_two_expressions(text, source, lineno):
    """Split 'EXPR EXPR' respecting parentheses."""
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise _err(source, lineno, "unbalanced ')'")
        elif ch.isspace() and depth == 0:
            left, right = text[:i], text[i:].strip()
            if right:
                return left, right
    raise _err(source, lineno, "expected two expressions, got %r" % text)


def build_document(doc, element_cap=None):
    """Build the category a parsed document describes."""
    kind = doc["kind"]
    kwargs = {}
    if element_cap is not None:
        kwargs["element_cap"] = element_cap
    try:
        if kind == "cube":
            cat = cube_category(doc["dimension"], **kwargs)
        elif kind == "simplex":
            cat = simplex_category(doc["dimension"], **kwargs)
        elif kind == "globe":
            cat = globe_category(doc["dimension"], **kwargs)
        elif kind == "graph":
            cat = graph_category(
                doc["name"] or "graph", doc["vertices"], doc["edges"], **kwargs
            )
        elif kind == "presentation":
            cat = presentation_category(
                doc["name"] or "presentation", doc["generators"], **kwargs
            )
        else:
            cat = semicubical_category(
                doc["name"] or "semicubical", doc["cells"], doc["faces"], **kwargs
            )
    except CategoryError as exc:
        raise _err(doc.get("source", "<document>"), None, str(exc))
    if doc["name"]:
        cat.name = doc["name"]
    return cat


def load_document(target, element_cap=None):
    """Build from a file path or a ``corpus:NAME`` reference.

    A bare name that is not a local file falls back to the bundled
    corpus, so ``cube3.doc`` works from any directory.
    """
    if target.startswith("corpus:"):
        path = corpus_path(target[len("corpus:"):])
    else:
        path = target
        if not os.path.exists(path):
            stem = os.path.basename(target)
            if stem.endswith(DOCUMENT_SUFFIX):
                stem = stem[: -len(DOCUMENT_SUFFIX)]
            bundled = os.path.join(CORPUS_DIR, stem + DOCUMENT_SUFFIX)
            if os.path.exists(bundled):
                path = bundled
    try:
        with open(path, "r") as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError("cannot read %s: %s" % (path, exc))
    return build_document(parse_document(text, source=path), element_cap=element_cap)


def corpus_names():
    return sorted(
        fn[: -len(DOCUMENT_SUFFIX)]
        for fn in os.listdir(CORPUS_DIR)
        if fn.endswith(DOCUMENT_SUFFIX)
    )


def corpus_path(name):
    path = os.path.join(CORPUS_DIR, name + DOCUMENT_SUFFIX)
    if not os.path.exists(path):
        raise DocumentError(
            "no bundled document %r (have: %s)" % (name, ", ".join(corpus_names()))
        )
    return path


# ---------------------------------------------------------------------------
# export (round-trip support)
# ---------------------------------------------------------------------------


def _safe_label(label, used):
    """Rewrite a label into the document charset, unique within `used`."""
    safe = "".join("-" if ch.isspace() else ch for ch in label)
    safe = safe.replace("(", "").replace(")", "")
    if not safe or (safe.startswith("*") and safe[1:].isdigit()):
        safe = "x" + safe
    base, k = safe, 2
    while safe in used:
        safe = "%s~%d" % (base, k)
        k += 1
    used.add(safe)
    return safe


def export_document(cat):
    """Any built category as a presentation document (re-ingestable).

    Labels are rewritten into the document charset when needed (no
    whitespace or parentheses), so the output always re-parses; the
    rebuilt category is isomorphic to `cat`, not label-identical.
    """
    used = set()
    names = {}
    for label, x in cat.generators:
        names[x] = _safe_label(label, used)

    def text(x):
        der = cat.derivations[x]
        if der[0] == "gen":
            return names[x]
        _, a, p, b = der
        return "(%s *%d %s)" % (text(a), p, text(b))

    lines = ["kind: presentation", "name: %s" % cat.name]
    for _label, x in cat.generators:
        d = cat.dims[x]
        if d == 0:
            lines.append("generator: %s 0" % names[x])
        else:
            s, t = cat.bnds[x][d - 1]
            lines.append(
                "generator: %s %d %s %s" % (names[x], d, text(s), text(t))
            )
    return "\n".join(lines) + "\n"
