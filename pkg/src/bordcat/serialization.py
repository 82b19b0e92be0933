"""JSON serialization for manifolds, amplitudes, and run reports.

Manifold files carry the triangulation with integer vertex ids, orientation
signs, named boundary components, and an optional skeleton spec.  Reports
carry exact cyclotomic value strings alongside float approximations so they
stay both machine-checkable and human-auditable.
"""

from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction

from .complexes import SimplicialComplex
from .cyclotomic import Amplitude
from .groups import FinAbGroup
from .manifolds import SkeletonPair, TriangulatedManifold


def parse_group(text: str) -> FinAbGroup:
    """Parse a coefficient-group spec such as ``Z2``, ``Z2xZ4``, ``Z3 x Z3``."""
    parts = [p.strip() for p in re.split(r"[x*]", text.replace("×", "x")) if p.strip()]
    factors = []
    for p in parts:
        m = re.fullmatch(r"[Zz]_?(\d+)", p)
        if not m:
            raise ValueError(f"cannot parse group factor {p!r} in {text!r}")
        n = int(m.group(1))
        if n < 1:
            raise ValueError(f"group factor must be positive in {text!r}")
        if n > 1:
            factors.append(n)
    return FinAbGroup.from_factors(factors)


def group_name(factors) -> str:
    """``Z2 x Z4`` style name from invariant factors (``0`` if trivial)."""
    fs = tuple(factors)
    if not fs:
        return "0"
    return " x ".join(f"Z{n}" for n in fs)


def parse_s(text: str) -> Fraction:
    value = Fraction(text)
    if value not in (Fraction(0), Fraction(1), Fraction(1, 2)):
        raise ValueError("the boundary-weight exponent s must be 0, 1, or 1/2")
    return value


# ---------------------------------------------------------------------------
# amplitudes


def amplitude_to_strings(a: Amplitude) -> dict:
    """Exact string form plus a float approximation."""
    z = a.approx()
    return {
        "exact": str(a),
        "order": a.order,
        "float": z.real if abs(z.imag) < 1e-12 else [z.real, z.imag],
    }


def parse_amplitude(text: str) -> Amplitude:
    """Inverse of ``str(Amplitude)`` (rational, or sum of ``c*zN^k`` terms)."""
    text = text.strip()
    if "z" not in text:
        return Amplitude.rational(Fraction(text))
    total = None
    for term in text.split("+"):
        m = re.fullmatch(r"\s*(-?[\d/]+)\*z(\d+)\^(\d+)\s*", term)
        if not m:
            raise ValueError(f"cannot parse amplitude term {term!r}")
        c, n, k = Fraction(m.group(1)), int(m.group(2)), int(m.group(3))
        coeffs = [Fraction(0)] * n
        coeffs[k % n] = c
        piece = Amplitude(n, tuple(coeffs))
        total = piece if total is None else total + piece
    return total


# ---------------------------------------------------------------------------
# manifold files


def manifold_to_file(
    manifold: TriangulatedManifold, skeleton: dict | None = None
) -> dict:
    """Serialize to a JSON-ready dict with integer vertex ids."""
    verts = list(manifold.complex.vertices)
    index = {v: i for i, v in enumerate(verts)}
    tops = manifold.complex.n_simplices(manifold.dimension)
    doc = {
        "dimension": manifold.dimension,
        "vertices": len(verts),
        "top_simplices": [[index[v] for v in t] for t in tops],
        "orientation": [manifold.orientation[t] for t in tops],
        "boundary": {
            f"component_{i}": sorted(
                [index[v] for v in s]
                for s in comp
                if len(s) == manifold.dimension
            )
            for i, comp in enumerate(manifold.boundary_components)
        },
    }
    if skeleton is not None:
        doc["skeleton"] = dict(skeleton)
    return doc


def manifold_from_file(doc: dict) -> TriangulatedManifold:
    """Parse and validate a manifold file; raises on inconsistent data."""
    dim = int(doc["dimension"])
    n = int(doc["vertices"])
    tops = [tuple(t) for t in doc["top_simplices"]]
    for t in tops:
        if not all(0 <= v < n for v in t):
            raise ValueError(f"vertex id out of range in top simplex {t}")
    cx = SimplicialComplex.from_maximal(range(n), tops)
    manifold = TriangulatedManifold(cx, dim)
    signs = doc.get("orientation")
    if signs is not None and len(signs) != len(tops):
        raise ValueError("orientation sign list does not match the top simplices")
    boundary = doc.get("boundary")
    if boundary is not None:
        stated = sorted(
            frozenset(tuple(sorted(s)) for s in comp) for comp in boundary.values()
        )
        actual = sorted(
            frozenset(tuple(sorted(s)) for s in comp if len(s) == dim)
            for comp in manifold.boundary_components
        )
        if stated != actual:
            raise ValueError("stated boundary components do not match the complex")
    return manifold


def skeleton_from_file(manifold: TriangulatedManifold, doc: dict) -> SkeletonPair:
    spec = doc.get("skeleton") or {}
    q = int(spec.get("q", 0))
    sk = SkeletonPair(manifold, q)
    if spec.get("source", "triangulation") == "dual":
        sk = sk.dual()
    return sk


# ---------------------------------------------------------------------------
# run reports


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, default=str)


def report_to_csv(report: dict) -> str:
    """Flatten a run report into key,value CSV rows (checks one per row)."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["key", "value"])

    def walk(prefix: str, node):
        if isinstance(node, dict):
            for k, v in node.items():
                walk(f"{prefix}.{k}" if prefix else str(k), v)
        elif isinstance(node, (list, tuple)):
            for i, v in enumerate(node):
                walk(f"{prefix}[{i}]", v)
        else:
            writer.writerow([prefix, node])

    walk("", report)
    return buf.getvalue()
