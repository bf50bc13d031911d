"""Narrated walk-throughs and the self-test over the bundled fixtures."""

from __future__ import annotations

from .algebraic import optimal_value
from .chains import (
    Report,
    ScopeError,
    complete_to_maclane,
    complete_to_mlv,
    completeness_check,
    convert_sdc_okutsu,
    family_check,
    limit_augment,
    maclane_to_complete,
    mlv_to_complete,
    monic_sweep,
    sdc_to_complete,
    validate_okutsu,
    validate_sdc,
)
from .fixtures import CATALOG, get_fixture
from .values import format_value

SWEEP = (0, 1, -1, 2)


def _vals(xs) -> str:
    return "(" + ", ".join(format_value(x) for x in xs) + ")"


def _complete_lines(rep: Report, L, label: str):
    rep.info(label, str(L))
    for e in L.entries:
        rep.info(f"  Q = {e.poly}", f"w = {format_value(e.value)}, eps = {format_value(e.eps)}")


def demo_A() -> Report:
    fx = get_fixture("A")
    rep = Report(f"demo A: {fx.description}")
    chain = fx.maclane
    rep.info("MacLane chain", str(chain.valuation()))
    L = maclane_to_complete(chain)
    _complete_lines(rep, L, "complete set")
    mlv = complete_to_mlv(L)
    rep.info("MLV chain", ", ".join(f"{s.tag}({s.phi}, {format_value(s.gamma)})" for s in mlv.steps))
    L2 = mlv_to_complete(mlv)
    back = complete_to_maclane(L2)
    rep.add("complete-set -> MLV -> complete-set", L2.same_as(L), "anchors, tags and caches agree")
    rep.add("MacLane -> complete-set -> MacLane", complete_to_maclane(L) == chain,
            f"(phi_i, gamma_i) = {_pairs(chain)}")
    rep.add("full loop", back == chain, "MacLane -> complete -> MLV -> complete -> MacLane")
    return rep


def _pairs(chain) -> str:
    return ", ".join(f"({phi}, {format_value(g)})" for phi, g in zip(chain.keys(), chain.weights()))


def demo_B() -> Report:
    fx = get_fixture("B")
    rep = Report(f"demo B: {fx.description}")
    sdc = fx.sdc
    rep.info("distinguished chain", f"{sdc}, gaps {_vals(sdc.gaps)}")
    frame = convert_sdc_okutsu(sdc)
    rep.info("Okutsu frame", f"{frame}, m = {tuple(frame.m)}, mu = {_vals(frame.mu)}")
    rep.add("frame back to chain", convert_sdc_okutsu(frame) == sdc, "relabelling is invertible")
    L = sdc_to_complete(sdc, None, fx.delta)
    _complete_lines(rep, L, f"complete set for delta = {format_value(fx.delta)}")
    eps = [e.eps for e in L.entries]
    rep.add("eps strictly increasing", all(a < b for a, b in zip(eps, eps[1:])), _vals(eps))
    rep.add("eps(Q_i-1) = gap_i", tuple(eps[:-1]) == sdc.gaps, _vals(sdc.gaps))
    opt = [optimal_value(fx.theta, fx.delta, e.poly) for e in L.entries]
    rep.add("eps = optimal value on anchors", opt == eps, _vals(opt))
    return rep


def demo_FAM_NONESS() -> Report:
    fx = get_fixture("FAM-NONESS")
    W = fx.family
    rep = family_check(W)
    rep.title = f"demo FAM-NONESS: {rep.title}"
    verdict = rep.checks.pop()
    try:
        limit_augment(W, W.unstable_witness, W.member(W.indices[-1])[1] + 1)
    except ScopeError as exc:
        rep.add("limit_augment refused", True, str(exc))
    else:
        rep.add("limit_augment refused", False, "limit augmentation was accepted")
    rep.checks.append(verdict)
    rep.summary = verdict.detail
    return rep


DEMOS = {"A": demo_A, "B": demo_B, "FAM-NONESS": demo_FAM_NONESS}


def _chain_checks(rep: Report, fx):
    if fx.maclane is not None:
        L = maclane_to_complete(fx.maclane)
        rep.add(f"{fx.name}: MacLane round trip", complete_to_maclane(L) == fx.maclane, _pairs(fx.maclane))
        rep.add(f"{fx.name}: MLV round trip", mlv_to_complete(complete_to_mlv(L)).same_as(L), str(L))
        samples = monic_sweep(fx.field, 3, SWEEP)
        rep.extend(completeness_check(L, L.target, samples), f"{fx.name}: ")
    if fx.sdc is not None:
        L = sdc_to_complete(fx.sdc, None, fx.delta)
        eps = [e.eps for e in L.entries]
        rep.add(f"{fx.name}: eps(Q_i-1) = gap_i", tuple(eps[:-1]) == fx.sdc.gaps, _vals(eps))
        a = validate_sdc(fx.sdc, fx.candidates)
        b = validate_okutsu(convert_sdc_okutsu(fx.sdc), None, fx.candidates)
        rep.add(f"{fx.name}: validate_sdc", a.ok, f"{len(a.checks)} checks")
        rep.add(f"{fx.name}: validate_okutsu", b.ok, f"{len(b.checks)} checks")
    if fx.family is not None:
        rep.extend(family_check(fx.family), f"{fx.name}: ")
    if fx.mlv is not None:
        L = mlv_to_complete(fx.mlv)
        rep.add(f"{fx.name}: MLV round trip", complete_to_mlv(L) == fx.mlv, str(L))
    for note in fx.notes:
        if "not multiplicative" in note or "distinguished only relative" in note:
            rep.info(f"{fx.name}: known limitation", note)


def selftest() -> Report:
    rep = Report(f"selftest over {len(CATALOG)} bundled fixtures")
    for name in CATALOG:
        _chain_checks(rep, get_fixture(name))
    return rep
