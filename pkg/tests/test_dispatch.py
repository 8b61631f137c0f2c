import pytest

from partbase import constructions as C
from partbase import dispatch
from partbase.core import UNAVAILABLE, VERIFIED, DomainError, WitnessCertificate
from partbase.formulas import base_size_alt, base_size_sym
from partbase.verifier import is_alt_base, is_sym_base


def test_11_4_uses_complement_of_5():
    cert = dispatch.dispatch_sym_witness(11, 4)
    assert cert.verified and cert.size == 3
    assert cert.provenance.name == C.COMPLEMENT
    assert dict(cert.provenance.params)["a'"] == 5 and dict(cert.provenance.params)["kappa"] == 3


def test_1000_10_is_main_case():
    cert = dispatch.dispatch_sym_witness(1000, 10)
    assert cert.verified and cert.size == 5
    assert str(cert.provenance) == "cor_maincase(b=10,l=3,k=1,r=0)"


def test_3_2_searches():
    cert = dispatch.dispatch_sym_witness(3, 2)
    assert cert.verified and cert.size == 4 and cert.provenance.name == C.SEARCH
    assert all(p.n == 6 for p in cert.partitions)


def test_unfaithful():
    with pytest.raises(DomainError):
        dispatch.dispatch_sym_witness(2, 2)
    with pytest.raises(DomainError):
        dispatch.dispatch_alt_witness(2, 2)


def test_alt_8_3_is_published_triple():
    cert = dispatch.dispatch_alt_witness(8, 3)
    assert cert.verified and cert.provenance.name == C.PAPER_8_3
    assert list(cert.partitions) == C.paper_8_3_partitions()


def test_alt_7_2():
    cert = dispatch.dispatch_alt_witness(7, 2)
    assert cert.verified and cert.size == 4 and cert.provenance.name == C.ALT_B2_MINUS1


def test_alt_5_7_search():
    cert = dispatch.dispatch_alt_witness(5, 7)
    assert cert.verified and cert.size == 2 and cert.provenance.name == C.SEARCH
    assert cert.partitions[0].n == 35


def test_alt_63_4_uses_adjusted_narrow_case():
    cert = dispatch.dispatch_alt_witness(63, 4)
    assert cert.verified and cert.size == 4 and cert.provenance.name == C.ALT_BK_NARROW


@pytest.mark.parametrize("a,b", [(9, 3), (26, 3), (24, 5), (14, 2), (30, 2), (7, 9), (3, 3), (4, 4)])
def test_alt_sizes(a, b):
    cert = dispatch.dispatch_alt_witness(a, b)
    assert cert.verified and cert.size == base_size_alt(a, b).value
    assert is_alt_base(list(cert.partitions))


def test_widths_on_a_grid():
    for b in range(2, 7):
        for a in range(2, 40):
            if (a, b) == (2, 2):
                continue
            cert = dispatch.dispatch_sym_witness(a, b)
            assert cert.verified and cert.size == base_size_sym(a, b).value
            assert cert.codeset().width == cert.size


def test_exhausted_search_gives_unavailable(monkeypatch):
    def fail(a, b, size, group, cfg):
        return WitnessCertificate(dispatch.Params(a, b), group, (), dispatch.Provenance(C.SEARCH),
                                  UNAVAILABLE, expected_size=size, detail="budget spent")

    monkeypatch.setattr(dispatch, "search_witness", fail)
    dispatch._sym_code.cache_clear()
    try:
        cert = dispatch.dispatch_sym_witness(13, 4, search_budget=7)
        assert cert.status == UNAVAILABLE and cert.size == 3 and not cert.partitions
        assert "(3,4)" in cert.detail
    finally:
        dispatch._sym_code.cache_clear()


def test_certificates_reverify():
    for a, b in [(13, 4), (26, 3), (80, 5), (17, 2), (62, 2)]:
        cert = dispatch.dispatch_sym_witness(a, b)
        assert cert.status == VERIFIED and is_sym_base(list(cert.partitions))
