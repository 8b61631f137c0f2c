import pytest

from partbase.acceptance import fixture_path
from partbase.core import CodeSet
from partbase.dispatch import dispatch_alt_witness, dispatch_sym_witness
from partbase.witnessfile import (ParseError, WitnessFile, load, parse, parse_codeset_text,
                                  parse_provenance, serialize)


@pytest.mark.parametrize("a,b,alt", [(11, 4, False), (8, 3, True), (7, 2, True), (5, 3, False)])
def test_round_trip_is_byte_identical(a, b, alt):
    cert = (dispatch_alt_witness if alt else dispatch_sym_witness)(a, b)
    text = serialize(WitnessFile.from_certificate(cert))
    assert serialize(parse(text)) == text


def test_fixture_round_trip():
    text = fixture_path().read_text()
    assert serialize(parse(text)) == text


def test_one_based_fixture():
    text = (fixture_path().parent / "alt_8_3_onebased.witness").read_text()
    w = parse(text, index_base=1)
    assert w.partitions == parse(fixture_path().read_text()).partitions
    with pytest.raises(ParseError):
        parse(text)


def test_provenance_parsing():
    p = parse_provenance("complement(a'=5,kappa=3,from=search_fallback)")
    assert p.name == "complement" and dict(p.params) == {"a'": 5, "kappa": 3, "from": "search_fallback"}
    assert str(p) == "complement(a'=5,kappa=3,from=search_fallback)"
    assert str(parse_provenance("paper_8_3_triple")) == "paper_8_3_triple"


def _lines():
    return fixture_path().read_text().split("\n")


def test_parse_error_positions():
    lines = _lines()
    bad = lines[:]
    bad[9] = bad[9].replace("7", "x", 1)
    with pytest.raises(ParseError) as exc:
        parse("\n".join(bad))
    assert exc.value.line == 10 and exc.value.column > 1

    bad = lines[:]
    bad[3] = "group: dihedral"
    with pytest.raises(ParseError) as exc:
        parse("\n".join(bad))
    assert (exc.value.line, exc.value.column) == (4, 8)

    with pytest.raises(ParseError) as exc:
        parse("hello\n")
    assert exc.value.line == 1


def test_inconsistent_codeset_block():
    lines = _lines()
    start = lines.index("codeset:") + 1
    lines[start], lines[start + 1] = "2 2 2", lines[start + 1]
    with pytest.raises(ParseError) as exc:
        parse("\n".join(lines))
    assert exc.value.line == start + 1


def test_bare_codeset_text():
    N = parse_codeset_text("0 0\n0 1 # comment\n\n1 0\n1 1\n")
    assert isinstance(N, CodeSet) and len(N) == 4 and N.b == 2
    assert isinstance(load("0 1\n1 0\n"), CodeSet)
    with pytest.raises(ParseError) as exc:
        parse_codeset_text("0 1\n0 1 1\n")
    assert exc.value.line == 2
