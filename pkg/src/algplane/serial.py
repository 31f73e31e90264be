"""JSON encodings for numbers, points, curves and reports.

Rationals are written as ``"p/q"`` strings (``"p"`` when integral) and floats
as JSON numbers, whose ``repr`` is the shortest round-trip decimal.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra2d import A2, AlgebraKind, Mat2, is_exact, to_fraction, INFINITY
from .errors import ContractError
from .exactlin import RootSet
from .grassmann import MembershipReport, Plane5, ComplexPlane5
from .proj_plane import PointA
from .ruled import CurveA, GeneratorFoci, SampleReport, SurfaceReport

SCHEMA = "1"


def scalar(v):
    if v is INFINITY:
        return "inf"
    if isinstance(v, bool):
        return v
    if is_exact(v):
        f = Fraction(v)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    return float(v)


def parse_scalar(v, exact: bool = True):
    if isinstance(v, str):
        f = to_fraction(v)
        return f if exact else float(f)
    if isinstance(v, bool):
        raise ContractError("booleans are not scalars")
    if isinstance(v, (int, float)):
        return to_fraction(str(v)) if exact else float(v)
    raise ContractError(f"not a scalar: {v!r}")


def vector(v) -> list:
    return [scalar(x) for x in v]


def a2(a: A2, with_kind: bool = True) -> dict:
    out = {"x": scalar(a.x), "y": scalar(a.y)}
    if with_kind:
        out["kind"] = a.kind.value
    return out


def parse_a2(d, kind: AlgebraKind | None = None, exact: bool = True) -> A2:
    if isinstance(d, str):
        parts = d.split(",")
        if len(parts) != 2 or kind is None:
            raise ContractError(f"cannot parse algebra element {d!r}")
        return A2(kind, parse_scalar(parts[0], exact), parse_scalar(parts[1], exact))
    if not isinstance(d, dict) or "x" not in d or "y" not in d:
        raise ContractError(f"cannot parse algebra element {d!r}")
    k = AlgebraKind.parse(d["kind"]) if "kind" in d else kind
    if k is None:
        raise ContractError("algebra element without a kind")
    if kind is not None and k is not kind:
        raise ContractError(f"expected a {kind.value} number, got {k.value}")
    return A2(k, parse_scalar(d["x"], exact), parse_scalar(d["y"], exact))


def mat2(m: Mat2) -> list:
    return [vector(r) for r in m.rows()]


def point(p: PointA) -> dict:
    return {"kind": p.kind.value, "coords": [a2(c) for c in p.coords]}


def parse_point(d, exact: bool = True) -> PointA:
    kind = AlgebraKind.parse(d["kind"])
    return PointA(kind, tuple(parse_a2(c, kind, exact) for c in d["coords"]))


def curve(c: CurveA) -> dict:
    out = {
        "kind": c.kind.value,
        "degree": c.degree,
        "coeffs": {"F1": [a2(x) for x in c.f1], "F2": [a2(x) for x in c.f2]},
    }
    one = A2.one(c.kind)
    if c.f0 != (one,):
        out["coeffs"]["F0"] = [a2(x) for x in c.f0]
    return out


def parse_curve(d, exact: bool = True) -> CurveA:
    try:
        kind = AlgebraKind.parse(d["kind"])
        coeffs = d["coeffs"]
        f1 = tuple(parse_a2(x, kind, exact) for x in coeffs["F1"])
        f2 = tuple(parse_a2(x, kind, exact) for x in coeffs["F2"])
        f0 = tuple(parse_a2(x, kind, exact) for x in coeffs.get("F0", [{"x": "1", "y": "0"}]))
    except (KeyError, TypeError) as exc:
        raise ContractError(f"malformed curve JSON: {exc}") from None
    c = CurveA(kind, f0, f1, f2)
    if "degree" in d and int(d["degree"]) < c.degree:
        raise ContractError(f"curve has degree {c.degree} > declared {d['degree']}")
    return c


def roots(r: RootSet) -> dict:
    return {
        "real": [{"root": scalar(x), "multiplicity": m} for x, m in r.real],
        "complex": [
            {"re": scalar(re), "im": scalar(im), "multiplicity": m} for re, im, m in r.complex_pairs
        ],
    }


def plane(p: Plane5) -> dict:
    return {"name": p.name, "basis": [vector(v) for v in p.vectors]}


def complex_plane(p: ComplexPlane5) -> dict:
    return {
        "name": p.name,
        "basis": [{"re": vector(re), "im": vector(im)} for re, im in p.vectors],
    }


def membership_report(r: MembershipReport) -> dict:
    return {
        "kind": r.kind.value,
        "samples": r.samples,
        "class": r.cls.value,
        "checks": r.checks,
        "failures": [
            {
                "point": point(f.point),
                "focus": vector(f.focus),
                "plane": f.plane,
                "residual": scalar(f.residual),
            }
            for f in r.failures
        ],
    }


def foci(g: GeneratorFoci) -> dict:
    return {
        "polynomial": vector(g.polynomial),
        "roots": roots(g.roots),
        "discriminant": None if g.discriminant is None else scalar(g.discriminant),
        "closed_form_agrees": g.agree,
    }


def sample(s: SampleReport) -> dict:
    return {
        "index": list(s.index),
        "z": [scalar(s.z.x), scalar(s.z.y)],
        "rank": s.rank,
        "gauss_rank": s.gauss_rank,
        "smooth": s.smooth,
        "lambda_roots": None if s.foci is None else foci(s.foci),
        "memberships": {k: scalar(v) for k, v in sorted(s.memberships.items())},
        "focal_curve_ranks": dict(sorted(s.focal_curve_ranks.items())),
        "class": s.cls.value,
        "degenerate": s.degenerate,
    }


def surface_report(r: SurfaceReport) -> dict:
    curves = {}
    for name, pts in sorted(r.focal_curves.items()):
        curves[name] = [
            {
                "index": list(p["index"]),
                "s": scalar(p["s"]),
                "point": vector(p["point"]),
                "plane_coords": vector(p["plane_coords"]),
            }
            for p in pts
        ]
    return {
        "kind": r.kind.value,
        "classification": r.cls.value,
        "expected": r.expected.value,
        "degenerate_fraction": r.degenerate_fraction,
        "per_sample": [sample(s) for s in r.samples],
        "focal_curves": curves,
    }


def dumps(obj) -> str:
    """Canonical report text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
