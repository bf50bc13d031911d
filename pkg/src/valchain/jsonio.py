"""JSON encodings of values, polynomials, valuations, algebraic elements,
candidate sets, families, chains and reports.

Decoders raise :class:`SchemaError` carrying a JSON path such as
``$.steps[1].phi``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .algebraic import AlgebraicElement, CandidateSet, MinimalPairValuation
from .chains import (
    Block,
    CompleteSet,
    ContinuousFamily,
    DistinguishedChain,
    LimitAugmentation,
    LimitStep,
    MLVChain,
    OkutsuFrame,
    OptimalMacLaneChain,
    OrdinaryStep,
)
from .groundfield import Polynomial, field_from_json, polynomial_from_json, polynomial_to_json
from .valuations import (
    InductiveValuation,
    MinimalValuation,
    PairValuation,
    TruncationValuation,
)
from .values import INF, value_from_json, value_to_json


class SchemaError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _get(obj, key, path, kind=None):
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object")
    if key not in obj:
        raise SchemaError(path, f"missing key {key!r}")
    val = obj[key]
    if kind is not None and not isinstance(val, kind):
        raise SchemaError(f"{path}.{key}", f"expected {kind.__name__}")
    return val


def _wrap(path, fn, *args):
    try:
        return fn(*args)
    except SchemaError:
        raise
    except (ValueError, TypeError, KeyError, ArithmeticError) as exc:
        raise SchemaError(path, str(exc)) from exc


# ---------------------------------------------------------------------------
# leaves


def poly_to(f: Polynomial):
    return polynomial_to_json(f)


def poly_from(obj, path="$", field=None) -> Polynomial:
    if isinstance(obj, str):
        if field is None:
            raise SchemaError(path, "polynomial literal needs an enclosing field")
        return _wrap(path, Polynomial.parse, obj, field)
    return _wrap(path, polynomial_from_json, obj, field)


def value_from(obj, path="$"):
    return _wrap(path, value_from_json, obj)


def rational_from(obj, path="$") -> Fraction:
    v = value_from(obj, path)
    if v is INF or not isinstance(v, Fraction):
        raise SchemaError(path, "expected a finite rational")
    return v


def field_from(obj, path="$"):
    return _wrap(path, field_from_json, obj)


def algebraic_to(a: AlgebraicElement):
    return {"minpoly": poly_to(a.minpoly), "certificate": a.certificate}


def algebraic_from(obj, path="$", field=None) -> AlgebraicElement:
    F = poly_from(_get(obj, "minpoly", path), f"{path}.minpoly", field)
    cert = obj.get("certificate") if isinstance(obj, dict) else None
    if cert is None:
        return _wrap(path, AlgebraicElement.of, F)
    return _wrap(path, AlgebraicElement, F, cert)


def candidates_to(cands):
    return {"kind": "candidates", "elements": [algebraic_to(a) for a in cands]}


def candidates_from(obj, path="$") -> CandidateSet:
    if isinstance(obj, list):
        elems, epath = obj, path
    else:
        elems, epath = _get(obj, "elements", path, list), f"{path}.elements"
    field = None
    if isinstance(obj, dict) and "field" in obj:
        field = field_from(obj["field"], f"{path}.field")
    out = [algebraic_from(e, f"{epath}[{i}]", field) for i, e in enumerate(elems)]
    return _wrap(path, CandidateSet, tuple(out))


# ---------------------------------------------------------------------------
# valuations


def valuation_to(w):
    if isinstance(w, PairValuation):
        return {"kind": "pair", "field": w.field.to_json(),
                "center": w.field.format_element(w.center), "gamma": value_to_json(w.gamma)}
    if isinstance(w, MinimalValuation):
        return {"kind": "minimal", "field": w.field.to_json()}
    if isinstance(w, InductiveValuation):
        return {"kind": "inductive", "base": valuation_to(w.base), "optimal": w.optimal,
                "steps": [{"phi": poly_to(phi), "gamma": value_to_json(g)} for phi, g in w.steps]}
    if isinstance(w, TruncationValuation):
        return {"kind": "truncation", "base": valuation_to(w.base), "truncator": poly_to(w.truncator)}
    if isinstance(w, MinimalPairValuation):
        return {"kind": "minimal-pair", "theta": algebraic_to(w.theta), "delta": value_to_json(w.delta)}
    if isinstance(w, LimitAugmentation):
        return {"kind": "limit", "family": family_to(w.family), "Q": poly_to(w.Q),
                "gamma": value_to_json(w.gamma)}
    raise TypeError(f"no JSON encoding for {type(w).__name__}")


def valuation_from(obj, path="$"):
    kind = _get(obj, "kind", path, str)
    if kind == "pair":
        field = field_from(_get(obj, "field", path), f"{path}.field")
        center = _wrap(f"{path}.center", field.parse_element, str(_get(obj, "center", path)))
        return _wrap(path, PairValuation, field, center, rational_from(_get(obj, "gamma", path), f"{path}.gamma"))
    if kind == "minimal":
        return MinimalValuation(field_from(_get(obj, "field", path), f"{path}.field"))
    if kind == "inductive":
        base = valuation_from(_get(obj, "base", path), f"{path}.base")
        steps = []
        for i, st in enumerate(_get(obj, "steps", path, list)):
            p = f"{path}.steps[{i}]"
            steps.append((poly_from(_get(st, "phi", p), f"{p}.phi", base.field),
                          value_from(_get(st, "gamma", p), f"{p}.gamma")))
        return _wrap(path, InductiveValuation, base, tuple(steps), bool(obj.get("optimal", False)))
    if kind == "truncation":
        base = valuation_from(_get(obj, "base", path), f"{path}.base")
        Q = poly_from(_get(obj, "truncator", path), f"{path}.truncator", base.field)
        return TruncationValuation(base, Q)
    if kind == "minimal-pair":
        theta = algebraic_from(_get(obj, "theta", path), f"{path}.theta")
        return _wrap(path, MinimalPairValuation, theta, rational_from(_get(obj, "delta", path), f"{path}.delta"))
    if kind == "limit":
        from .chains import limit_augment
        W = family_from(_get(obj, "family", path), f"{path}.family")
        Q = poly_from(_get(obj, "Q", path), f"{path}.Q", W.field)
        return _wrap(path, limit_augment, W, Q, value_from(_get(obj, "gamma", path), f"{path}.gamma"))
    raise SchemaError(f"{path}.kind", f"unknown valuation kind {kind!r}")


# ---------------------------------------------------------------------------
# families and chains


def family_to(W: ContinuousFamily):
    out = {
        "kind": "family",
        "name": W.name,
        "base": valuation_to(W.base),
        "first_index": W.first,
        "horizon": W.horizon,
        "stable_degree": W.stable_degree,
        "m_inf": value_to_json(W.m_inf) if W.m_inf is INF else W.m_inf,
        "stabilization_index": W.i0,
        "members": [{"chi": poly_to(chi), "gamma": value_to_json(g)} for chi, g in W.members()],
    }
    if W.unstable_witness is not None:
        out["unstable_witness"] = poly_to(W.unstable_witness)
    if W.limit_key is not None:
        out["limit_key"] = poly_to(W.limit_key)
        out["limit_gamma"] = value_to_json(W.limit_gamma)
    if W.notes:
        out["notes"] = W.notes
    return out


def family_from(obj, path="$", horizon=None) -> ContinuousFamily:
    base = valuation_from(_get(obj, "base", path), f"{path}.base")
    field = base.field
    members = []
    for i, m in enumerate(_get(obj, "members", path, list)):
        p = f"{path}.members[{i}]"
        members.append((poly_from(_get(m, "chi", p), f"{p}.chi", field),
                        value_from(_get(m, "gamma", p), f"{p}.gamma")))
    m_inf = obj.get("m_inf")
    m_inf = INF if m_inf in ("inf", None) else int(m_inf)
    H = horizon if horizon is not None else int(obj.get("horizon", len(members)))
    if H > len(members):
        raise SchemaError(f"{path}.members", f"horizon {H} exceeds the {len(members)} listed members")

    def opt_poly(key):
        return poly_from(obj[key], f"{path}.{key}", field) if obj.get(key) is not None else None

    limit_gamma = value_from(obj["limit_gamma"], f"{path}.limit_gamma") if "limit_gamma" in obj else None
    return ContinuousFamily(
        base, tuple(members), int(_get(obj, "stable_degree", path)), m_inf, H,
        int(obj.get("first_index", 1)), obj.get("stabilization_index"),
        opt_poly("unstable_witness"), opt_poly("limit_key"), limit_gamma,
        str(obj.get("name", "")), str(obj.get("notes", "")),
    )


def _steps_to(steps):
    return [{"phi": poly_to(phi), "gamma": value_to_json(g)} for phi, g in steps]


def chain_to(x):
    if isinstance(x, OptimalMacLaneChain):
        return {"kind": "maclane", "field": x.field.to_json(),
                "center": x.field.format_element(x.center), "gamma0": value_to_json(x.gamma0),
                "steps": _steps_to(x.steps)}
    if isinstance(x, MLVChain):
        steps = []
        for s in x.steps:
            d = {"type": s.tag, "phi": poly_to(s.phi), "gamma": value_to_json(s.gamma)}
            if isinstance(s, LimitStep):
                d["family"] = family_to(s.family)
            steps.append(d)
        return {"kind": "mlv", "field": x.field.to_json(),
                "center": x.field.format_element(x.center), "gamma0": value_to_json(x.gamma0),
                "steps": steps}
    if isinstance(x, CompleteSet):
        return {
            "kind": "complete-set",
            "target": valuation_to(x.target),
            "blocks": [{"anchor": poly_to(b.anchor),
                        "family": None if b.family is None else family_to(b.family)} for b in x.blocks],
            "entries": [
                {"poly": poly_to(e.poly), "value": value_to_json(e.value), "eps": value_to_json(e.eps),
                 "block": e.block, "anchor": e.anchor, "limit": e.limit, "psi": e.psi}
                for e in x.entries
            ],
        }
    if isinstance(x, DistinguishedChain):
        return {"kind": "sdc", "field": x.field.to_json(),
                "chain": [algebraic_to(a) for a in x.elements],
                "gaps": [value_to_json(g) for g in x.gaps]}
    if isinstance(x, OkutsuFrame):
        return {"kind": "okutsu", "field": x.field.to_json(), "target": algebraic_to(x.target),
                "frame": [algebraic_to(a) for a in x.frame],
                "m": list(x.m), "mu": [value_to_json(m) for m in x.mu]}
    if isinstance(x, ContinuousFamily):
        return family_to(x)
    raise TypeError(f"no chain encoding for {type(x).__name__}")


def chain_from(obj, path="$"):
    """Decode any chain-like document; cached fields are recomputed, then compared."""
    kind = _get(obj, "kind", path, str)
    if kind in ("maclane", "mlv"):
        field = field_from(_get(obj, "field", path), f"{path}.field")
        center = _wrap(f"{path}.center", field.parse_element, str(_get(obj, "center", path)))
        gamma0 = rational_from(_get(obj, "gamma0", path), f"{path}.gamma0")
        steps = []
        for i, st in enumerate(_get(obj, "steps", path, list)):
            p = f"{path}.steps[{i}]"
            phi = poly_from(_get(st, "phi", p), f"{p}.phi", field)
            g = value_from(_get(st, "gamma", p), f"{p}.gamma")
            if kind == "maclane":
                steps.append((phi, g))
            elif st.get("type", "ordinary") == "ordinary":
                steps.append(OrdinaryStep(phi, g))
            elif st.get("type") == "limit":
                steps.append(LimitStep(family_from(_get(st, "family", p), f"{p}.family"), phi, g))
            else:
                raise SchemaError(f"{p}.type", f"unknown step type {st.get('type')!r}")
        cls = OptimalMacLaneChain if kind == "maclane" else MLVChain
        return _wrap(path, cls, field, center, gamma0, tuple(steps))
    if kind == "complete-set":
        target = valuation_from(_get(obj, "target", path), f"{path}.target")
        blocks = []
        for i, b in enumerate(_get(obj, "blocks", path, list)):
            p = f"{path}.blocks[{i}]"
            fam = b.get("family") if isinstance(b, dict) else None
            blocks.append(Block(poly_from(_get(b, "anchor", p), f"{p}.anchor", target.field),
                                None if fam is None else family_from(fam, f"{p}.family")))
        L = _wrap(path, CompleteSet, target, blocks)
        if "entries" in obj and chain_to(L)["entries"] != obj["entries"]:
            raise SchemaError(f"{path}.entries", "cached entries disagree with recomputation")
        return L
    if kind == "sdc":
        field = field_from(obj["field"], f"{path}.field") if "field" in obj else None
        elems = [algebraic_from(a, f"{path}.chain[{i}]", field)
                 for i, a in enumerate(_get(obj, "chain", path, list))]
        sdc = _wrap(path, DistinguishedChain, tuple(elems))
        if "gaps" in obj and [value_to_json(g) for g in sdc.gaps] != obj["gaps"]:
            raise SchemaError(f"{path}.gaps", "cached gaps disagree with recomputation")
        return sdc
    if kind == "okutsu":
        field = field_from(obj["field"], f"{path}.field") if "field" in obj else None
        target = algebraic_from(_get(obj, "target", path), f"{path}.target", field)
        frame = [algebraic_from(a, f"{path}.frame[{i}]", field)
                 for i, a in enumerate(_get(obj, "frame", path, list))]
        fr = _wrap(path, OkutsuFrame, target, tuple(frame))
        if "mu" in obj and [value_to_json(m) for m in fr.mu] != obj["mu"]:
            raise SchemaError(f"{path}.mu", "cached mu disagree with recomputation")
        return fr
    if kind == "family":
        return family_from(obj, path)
    raise SchemaError(f"{path}.kind", f"unknown chain kind {kind!r}")


# ---------------------------------------------------------------------------
# files


def load_json(path) -> object:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise SchemaError(str(p), f"cannot read file: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(str(p), f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
