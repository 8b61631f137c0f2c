"""Pick a construction for each (a, b) and certify its output.

The case split follows how the base sizes are proved: write
``a = k b^l + r`` with ``l = floor(log_b a)`` and choose the corollary whose
hypotheses fit, falling back to the complement trick near the next power of
``b`` and to randomized search where no construction is available.
"""

from __future__ import annotations

import functools
import logging

from . import constructions as C
from .core import (ALT, SYM, UNAVAILABLE, VERIFIED, REFUTED, CodeSet, DomainError, Params,
                   Provenance, WitnessCertificate, codeset_to_partitions, partitions_to_codeset)
from .formulas import alt_drop_k, base_size_alt, base_size_sym, floor_log
from .search import SearchConfig, search_witness
from .verifier import is_base

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 5000

# b^l <= 4 leaves only b in {3, 4} with l = 1; these are handled one by one.
_SMALL_MAINCASE = {(6, 3), (6, 4), (8, 4), (10, 4), (12, 4)}
_SMALL_COR_SMALL = {(8, 3), (15, 4)}
_SMALL_SEARCH = {(4, 3), (5, 3), (7, 3), (5, 4), (7, 4), (9, 4)}
_SMALL_COMPLEMENT = {(11, 4): 5, (13, 4): 3, (14, 4): 2}


class _Unavailable(Exception):
    def __init__(self, cert: WitnessCertificate):
        super().__init__(cert.detail)
        self.cert = cert


def _prov(name: str, **params) -> Provenance:
    return Provenance(name, tuple(params.items()))


def _searched(a: int, b: int, group: str, cfg: SearchConfig) -> tuple[CodeSet, Provenance]:
    size = (base_size_alt if group == ALT else base_size_sym)(a, b).value
    cert = search_witness(a, b, size, group, cfg)
    if not cert.verified:
        raise _Unavailable(cert)
    return cert.codeset(), cert.provenance


def _complement(a1: int, b: int, kappa: int, cfg: SearchConfig, inner=None) -> tuple[CodeSet, Provenance]:
    N1, inner_prov = inner if inner is not None else _sym_code(a1, b, cfg)
    N2 = C.construct_complement(N1, kappa)
    return N2, _prov(C.COMPLEMENT, **{"a'": a1, "kappa": kappa, "from": inner_prov.name})


@functools.lru_cache(maxsize=None)
def _sym_code(a: int, b: int, cfg: SearchConfig) -> tuple[CodeSet, Provenance]:
    if (a, b) == (2, 2):
        raise DomainError("(2,2): the action is not faithful")
    if b == 2:
        return _sym_code_b2(a, cfg)
    if a <= b:
        return _searched(a, b, SYM, cfg)
    l = floor_log(b, a)
    q = b ** l
    k, r = divmod(a, q)
    if q <= 4:
        if (a, b) in _SMALL_MAINCASE:
            return C.construct_maincase(b, l, k, r), _prov(C.MAINCASE, b=b, l=l, k=k, r=r)
        if (a, b) in _SMALL_COR_SMALL:
            return C.construct_small(b, 2, a), _prov(C.SMALL, b=b, l=2, a=a)
        if (a, b) in _SMALL_SEARCH:
            return _searched(a, b, SYM, cfg)
        if (a, b) in _SMALL_COMPLEMENT:
            return _complement(_SMALL_COMPLEMENT[a, b], b, 3, cfg)
        raise AssertionError(f"small case ({a},{b}) not covered")
    if k != b - 1:
        if r == 1:
            return C.construct_r1(b, l, k), _prov(C.R1, b=b, l=l, k=k)
        if r == q - 1:
            k1 = b - k - 1
            inner = (C.construct_r1(b, l, k1), _prov(C.R1, b=b, l=l, k=k1))
            return _complement(k1 * q + 1, b, l + 2, cfg, inner)
        return C.construct_maincase(b, l, k, r), _prov(C.MAINCASE, b=b, l=l, k=k, r=r)
    top = q * b
    if r == 0:
        return C.construct_maincase(b, l, k, 0), _prov(C.MAINCASE, b=b, l=l, k=k, r=0)
    if a <= top - 3:
        a1 = top - a
        inner = (C.construct_small(b, l, a1), _prov(C.SMALL, b=b, l=l, a=a1))
        return _complement(a1, b, l + 2, cfg, inner)
    if a == top - 1:
        return C.construct_small(b, l + 1, a), _prov(C.SMALL, b=b, l=l + 1, a=a)
    return _complement(2, b, l + 2, cfg)


def _sym_code_b2(a: int, cfg: SearchConfig) -> tuple[CodeSet, Provenance]:
    if a in (3, 4):
        return _searched(a, 2, SYM, cfg)
    i = floor_log(2, a)
    r = a - 2 ** i
    if r == 0:
        return C.construct_b2_power(i), _prov(C.B2_POWER, i=i)
    if r == 2 ** i - 1:
        return C.construct_b2_power_minus1(i + 1), _prov(C.B2_POWER_MINUS1, i=i + 1)
    if r == 2 ** i - 2:
        return C.construct_b2_rminus2(i), _prov(C.B2_RMINUS2, i=i)
    return _complement(2 ** (i + 1) - a, 2, i + 2, cfg)


def _certify(a: int, b: int, group: str, N: CodeSet, prov: Provenance, expected: int) -> WitnessCertificate:
    ps = tuple(codeset_to_partitions(N))
    verdict = is_base(list(ps), group)
    if len(ps) != expected:
        raise AssertionError(f"{prov} produced {len(ps)} partitions, expected {expected}")
    if verdict:
        return WitnessCertificate(Params(a, b), group, ps, prov, VERIFIED, expected_size=expected)
    log.error("construction %s for (%d,%d) failed verification", prov, a, b)
    return WitnessCertificate(Params(a, b), group, ps, prov, REFUTED, refutation=verdict.point_perm,
                              expected_size=expected, detail=verdict.reason)


def _unavailable(a: int, b: int, group: str, exc: _Unavailable, expected: int) -> WitnessCertificate:
    c = exc.cert
    return WitnessCertificate(Params(a, b), group, (), c.provenance, UNAVAILABLE,
                              expected_size=expected,
                              detail=f"search for ({c.params.a},{c.params.b}) {c.group}: {c.detail}")


def dispatch_sym_witness(a: int, b: int, search_budget: int = DEFAULT_BUDGET,
                         seed: int = 0, workers: int = 1) -> WitnessCertificate:
    """A verified Sym witness with exactly ``base_size_sym(a, b)`` partitions.

    When a search fallback runs out of budget the certificate has status
    ``witness-unavailable`` and no partitions.
    """
    answer = base_size_sym(a, b)
    if answer.undefined:
        raise DomainError("(2,2): the action is not faithful")
    cfg = SearchConfig(seed=seed, budget=search_budget, workers=workers)
    try:
        N, prov = _sym_code(a, b, cfg)
    except _Unavailable as exc:
        return _unavailable(a, b, SYM, exc, answer.value)
    return _certify(a, b, SYM, N, prov, answer.value)


def _alt_code(a: int, b: int, cfg: SearchConfig) -> tuple[CodeSet, Provenance]:
    alt, sym = base_size_alt(a, b), base_size_sym(a, b)
    if alt.value == sym.value:
        return _sym_code(a, b, cfg)
    k = alt_drop_k(a, b)
    if alt.rule.startswith("Thm2(3)"):
        if (b, k) == (3, 2):
            return partitions_to_codeset(C.paper_8_3_partitions()), _prov(C.PAPER_8_3)
        return C.construct_alt_bk_minus1(b, k), _prov(C.alt_bk_minus1_variant(b, k), b=b, k=k)
    if alt.rule.startswith("Thm2(4)") and k >= 3:
        variant = "minus1" if a == 2 ** k - 1 else "minus2"
        name = C.ALT_B2_MINUS1 if variant == "minus1" else C.ALT_B2_MINUS2
        return C.construct_alt_b2(k, variant), _prov(name, k=k)
    return _searched(a, b, ALT, cfg)


def dispatch_alt_witness(a: int, b: int, search_budget: int = DEFAULT_BUDGET,
                         seed: int = 0, workers: int = 1) -> WitnessCertificate:
    answer = base_size_alt(a, b)
    if answer.undefined:
        raise DomainError("(2,2): the action is not faithful")
    cfg = SearchConfig(seed=seed, budget=search_budget, workers=workers)
    try:
        N, prov = _alt_code(a, b, cfg)
    except _Unavailable as exc:
        return _unavailable(a, b, ALT, exc, answer.value)
    if prov.name == C.PAPER_8_3:
        # keep the published point labelling rather than a relabelled copy
        ps = tuple(C.paper_8_3_partitions())
        ok = is_base(list(ps), ALT)
        return WitnessCertificate(Params(a, b), ALT, ps, prov, VERIFIED if ok else REFUTED,
                                  expected_size=answer.value)
    return _certify(a, b, ALT, N, prov, answer.value)


def dispatch_witness(a: int, b: int, group: str, **kw) -> WitnessCertificate:
    if group == SYM:
        return dispatch_sym_witness(a, b, **kw)
    if group == ALT:
        return dispatch_alt_witness(a, b, **kw)
    raise ValueError(f"unknown group {group!r}")
