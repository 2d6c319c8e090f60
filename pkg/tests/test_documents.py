"""Document parsing, the bundled corpus, and round-tripping."""

import pytest

from artifact.category import iso_check
from artifact.documents import (
    DocumentError,
    build_document,
    corpus_names,
    export_document,
    load_document,
    parse_chain,
    parse_document,
    parse_expression_tree,
)
from artifact.schemes import cube_category, globe_category, simplex_category


def test_corpus_is_complete():
    assert corpus_names() == [
        "cube1", "cube2", "cube3",
        "false-cycle",
        "globe1", "globe2", "globe3", "globe4",
        "golden-triangle",
        "semicubical-square",
        "simplex1", "simplex2", "simplex3",
        "subdivision-left", "subdivision-right", "subdivision-v",
        "two-squares",
    ]


def test_corpus_matches_direct_builds():
    for n in (1, 2, 3):
        assert iso_check(load_document("corpus:cube%d" % n), cube_category(n))
        assert iso_check(load_document("corpus:simplex%d" % n), simplex_category(n))
    for n in (1, 2, 3, 4):
        assert iso_check(load_document("corpus:globe%d" % n), globe_category(n))
    assert iso_check(load_document("corpus:semicubical-square"), cube_category(2))


def test_corpus_all_build():
    for name in corpus_names():
        cat = load_document("corpus:" + name)
        assert len(cat) > 0


def test_round_trip_through_export():
    for name in corpus_names():
        cat = load_document("corpus:" + name)
        again = build_document(parse_document(export_document(cat), source=name))
        assert iso_check(cat, again) is not None


def test_expressions():
    assert parse_expression_tree("A") == ("gen", "A")
    assert parse_expression_tree("(A *1 B)") == ("comp", ("gen", "A"), 1, ("gen", "B"))
    nested = parse_expression_tree("((-00 *0 0++) *1 (-0- *0 0+0))")
    assert nested[0] == "comp" and nested[2] == 1
    with pytest.raises(DocumentError):
        parse_expression_tree("(A *x B)")
    with pytest.raises(DocumentError):
        parse_expression_tree("(A *1 B")
    with pytest.raises(DocumentError):
        parse_expression_tree("A B")


def test_parse_chain_on_the_cube():
    cat = load_document("corpus:cube3")
    dim, chain = parse_chain(
        cat,
        "((-00 *0 0++) *1 (-0- *0 0+0)) - (-00 *0 0++) - (-0- *0 0+0)",
    )
    assert dim == 2
    assert sorted(chain.values()) == [-1, -1, 1]
    dim2, chain2 = parse_chain(cat, "2 -00 + 3 0+0 - -00")
    assert dim2 == 2
    faces = cat.element_by_faces
    assert chain2 == {faces(["-00"]): 1, faces(["0+0"]): 3}
    with pytest.raises(DocumentError):
        parse_chain(cat, "-00 + 000")
    with pytest.raises(DocumentError):
        parse_chain(cat, "")


def test_located_parse_errors():
    with pytest.raises(DocumentError) as e:
        parse_document("kind: cub\n", source="bad.doc")
    assert "bad.doc, line 1" in str(e.value)
    with pytest.raises(DocumentError) as e:
        parse_document("kind: graph\nedge: u a\n", source="bad.doc")
    assert "line 2" in str(e.value)
    with pytest.raises(DocumentError) as e:
        parse_document("name: x\n", source="bad.doc")
    assert "first entry" in str(e.value)
    with pytest.raises(DocumentError) as e:
        parse_document("kind: presentation\ngenerator: A 2 u\n", source="p.doc")
    assert "two expressions" in str(e.value)


def test_build_errors_are_documented():
    doc = parse_document(
        "kind: graph\nvertices: a b\nedge: u a b\nedge: v b a\n", source="cyc.doc"
    )
    with pytest.raises(DocumentError) as e:
        build_document(doc)
    assert "cyc.doc" in str(e.value)
    with pytest.raises(DocumentError):
        load_document("corpus:no-such-document")
    with pytest.raises(DocumentError):
        load_document("/nonexistent/path.doc")


def test_chain_on_mixed_dimensions_is_rejected():
    cat = load_document("corpus:golden-triangle")
    dim, chain = parse_chain(cat, "(A *1 B) - A - B")
    assert dim == 2 and len(chain) == 3
    with pytest.raises(DocumentError):
        parse_chain(cat, "A - u")
