"""Named verification suites over the fixture library.

Each suite runs a batch of exact checks (exact sequences, gluing/counting
identities, functor axioms, gauging values, dual-symmetry identities) and
returns a :class:`bordcat.theory.FunctorReport` listing per-check results.
The command-line ``verify`` subcommand surfaces these directly.
"""

from __future__ import annotations

from fractions import Fraction

from .bordisms import (
    BoundaryEmbedding,
    DecoratedBordism,
    DecoratedObject,
    bordism_union,
    compose,
    enumerate_backgrounds,
    identity_bordism,
    make_object,
    object_union,
    skeleton_change,
    symmetry_cylinder,
)
from .cohomology import (
    cohomology,
    cohomology_order,
    forget_relative,
    induced_pullback,
    long_exact_sequence_check,
)
from .complexes import SimplicialComplex, SimplicialMap, SimplicialPair, disjoint_union
from .cyclotomic import Amplitude
from .fixtures import circle_object, dual_circle_object, fixture_set
from .gauging import (
    GaugedTheory,
    all_labels,
    delta_identity_check,
    double_gauge_check,
    gauge,
    gauged_closed_value,
    naive_value,
    projector,
    trivial_label,
)
from .groups import FinAbGroup, pontryagin_dual
from .manifolds import SkeletonPair, TriangulatedManifold, glue, library
from .theory import FunctorReport, LinearMap, ScaledTheory, trivial_theory, verify_functor


def _z2() -> FinAbGroup:
    return FinAbGroup.cyclic(2)


def _model_complex(model) -> SimplicialComplex:
    """The skeleton-model subcomplex (a set of subdivision simplices) as a
    standalone complex."""
    verts = sorted({v for s in model for v in s}, key=repr)
    return SimplicialComplex.from_maximal(verts, model)


# ---------------------------------------------------------------------------
# exact sequences (boundary pair and cylinder splitting)


def sequences_suite(coeff: FinAbGroup | None = None) -> FunctorReport:
    """The four-term boundary-pair sequence and the cylinder splitting count."""
    G = coeff or _z2()
    report = FunctorReport()

    cases = [
        ("circle", 0, {(0,)}),
        ("torus2", 0, None),
        ("torus2", 1, None),
    ]
    for name, q, kept in cases:
        sk = SkeletonPair(library(name), q, kept=kept)
        les = long_exact_sequence_check(sk.background_pair(), sk.dual_model, q, G)
        report.add(
            f"boundary-pair sequence exact on {name} (q={q})",
            les.passed,
            les.failure or f"orders {les.orders}",
        )

    # cylinder splitting: |H^{q+1}(Sigma x I, ends)| = |H^{q+1}(Sigma, model)| * |H^q(complement model)|
    for name, q in (("circle", 0), ("torus2", 0), ("torus2", 1), ("sphere2", 0), ("genus2", 0)):
        sk = SkeletonPair(library(name), q)
        cyl_order = _cylinder_ends_order(sk, G)
        rel_order = cohomology_order(sk.background_pair(), q + 1, G)
        comp_order = cohomology_order(
            SimplicialPair.absolute(_model_complex(sk.dual_model)), q, G
        )
        ok = cyl_order == rel_order * comp_order
        report.add(
            f"cylinder splitting count on {name} (q={q})",
            ok,
            f"{cyl_order} vs {rel_order}*{comp_order}",
        )

    # the one-point-skeleton circle pins the count at 4
    sk1 = SkeletonPair(library("circle"), 0, kept={(0,)})
    val = _cylinder_ends_order(sk1, G)
    report.add("one-point-skeleton circle cylinder count", val == 4, f"got {val}")
    return report


def _cylinder_ends_order(sk: SkeletonPair, G: FinAbGroup) -> int:
    """|H^{q+1}| of the cylinder on sk's base, relative to the skeleton
    models transported into both ends."""
    from .complexes import subdivision_of
    from .manifolds import prism_complex

    prism = prism_complex(sk.base.complex)
    sd = subdivision_of(prism)
    rank = prism.vertex_rank
    w = set()
    for layer in (0, 1):
        for s in sk.dual_model:
            image = tuple(
                tuple(sorted(((v, layer) for v in carrier), key=rank))
                for carrier in s
            )
            w.add(tuple(sorted(image, key=sd.complex.vertex_rank)))
    return cohomology_order(SimplicialPair.make(sd.complex, w), sk.q + 1, G)


# ---------------------------------------------------------------------------
# gluing two annuli into the torus (cut counting)


def torus_from_annuli(coeff: FinAbGroup | None = None):
    """Two annulus bordisms whose composite closes up into a torus.

    Returns (earlier, later): ``earlier`` is the 4-vertex annulus as a
    bordism (empty) -> (circle u circle); ``later`` is a double-length
    annulus as (circle u circle) -> (empty), with one cut circle attached
    through a rotation so the glued complex stays simplicial.
    """
    G = coeff or _z2()
    n = 4
    c = circle_object(G, n=n)
    u = object_union(c, c)
    ann = library("annulus4")

    vmap_out = {}
    for v in range(n):
        vmap_out[(0, v)] = (v, 0)
        vmap_out[(1, v)] = (v, 1)
    emb_out = BoundaryEmbedding(u, vmap_out, (0, 1))
    earlier = DecoratedBordism(ann, G, 0, None, emb_out)

    # double annulus: two prisms glued end to end
    dbl, va, vb = glue(
        ann, ann, _layer_of(ann, 1), _layer_of(ann, 0),
        {(v, 1): (v, 0) for v in range(n)},
    )
    vmap_in = {}
    for v in range(n):
        vmap_in[(0, v)] = va[(v, 0)]
        vmap_in[(1, v)] = vb[((v + 1) % n, 1)]  # rotation keeps the gluing simplicial
    comps = tuple(range(len(dbl.boundary_components)))
    emb_in = BoundaryEmbedding(u, vmap_in, comps)
    later = DecoratedBordism(dbl, G, 0, emb_in, None)
    return earlier, later


def _layer_of(ann: TriangulatedManifold, layer: int) -> int:
    for i, comp in enumerate(ann.boundary_components):
        if all(v[1] == layer for s in comp for v in s):
            return i
    raise ValueError("no boundary component at that layer")


def eta_counting_suite(coeff: FinAbGroup | None = None, cap: int = 10**6) -> FunctorReport:
    """Counting checks for the torus glued from two annuli along two circles.

    Verifies: the glued manifold is a torus; each pair of piece backgrounds
    agreeing on the cut extends to exactly one cut-relative glued class;
    every absolute torus class is reached; and the measured kernel of the
    "forget the cut" map matches the alternating product of cohomology
    orders.
    """
    G = coeff or _z2()
    report = FunctorReport()
    earlier, later = torus_from_annuli(G)
    cut = earlier.outgoing.obj

    match = {
        earlier.outgoing.vertex_map[v]: later.incoming.vertex_map[v]
        for v in cut.manifold.complex.vertices
    }
    glued, vmap_e, vmap_l = glue(
        earlier.manifold,
        later.manifold,
        earlier.outgoing.components,
        later.incoming.components,
        match,
    )
    chi = glued.euler_characteristic()
    h1 = cohomology_order(SimplicialPair.absolute(glued.complex), 1, G)
    is_torus = glued.is_closed and chi == 0 and h1 == 4 and glued._is_connected()
    report.add("glued manifold is a torus", is_torus, f"chi={chi}, |H^1|={h1}")

    # cut-relative cohomology of the glued torus
    from .complexes import subdivision_of

    sd = subdivision_of(glued.complex)
    rank = glued.complex.vertex_rank
    w_cut = set()
    for s in cut.skeleton.dual_model:
        image = tuple(
            tuple(sorted((vmap_e[earlier.outgoing.vertex_map[v]] for v in carrier), key=rank))
            for carrier in s
        )
        w_cut.add(tuple(sorted(image, key=sd.complex.vertex_rank)))
    glued_pair = SimplicialPair.make(sd.complex, w_cut)
    glued_group = cohomology(glued_pair, 1, G)

    def piece_pull(piece: DecoratedBordism, vmap: dict):
        sd_map = {
            s: tuple(sorted((vmap[v] for v in s), key=rank))
            for s in piece.subdivision.complex.vertices
        }
        f = SimplicialMap(piece.pair, glued_pair, sd_map)
        return induced_pullback(f, 1, G)

    pull_e = piece_pull(earlier, vmap_e)
    pull_l = piece_pull(later, vmap_l)
    cut_e = earlier.boundary_pullback(earlier.outgoing)
    cut_l = later.boundary_pullback(later.incoming)

    group_e = earlier.background_group()
    group_l = later.background_group()
    by_restriction: dict = {}
    for Bb in glued_group.classes(cap=cap):
        key = (pull_e(Bb).raw, pull_l(Bb).raw)
        by_restriction.setdefault(key, []).append(Bb)

    matching = 0
    unique = True
    eta = forget_relative(glued_pair, 1, G)
    reached = set()
    for Be in group_e.classes(cap=cap):
        cut_class_e = cut_e(Be).raw
        for Bl in group_l.classes(cap=cap):
            if cut_l(Bl).raw != cut_class_e:
                continue
            matching += 1
            lifts = by_restriction.get((Be.raw, Bl.raw), [])
            if len(lifts) != 1:
                unique = False
            for Bb in lifts:
                reached.add(eta(Bb).raw)
    report.add(
        "unique glued class per matching pair",
        unique and matching > 0,
        f"{matching} matching pairs",
    )
    absolute = cohomology(SimplicialPair.absolute(sd.complex), 1, G)
    report.add(
        "every torus class arises from a gluing",
        reached == {c.raw for c in absolute.classes()},
        f"{len(reached)} of {absolute.order} classes reached",
    )

    # |Ker eta| against the alternating product of lower-degree orders
    measured = len(eta.kernel_raws())
    q = 0
    formula = Fraction(1)
    sigma_hat = _model_complex(cut.skeleton.dual_model)
    for i in range(q + 1):
        sign = (-1) ** (q - i)
        num = cohomology_order(SimplicialPair.absolute(sigma_hat), i, G)
        num *= cohomology_order(glued_pair, i, G)
        den = cohomology_order(SimplicialPair.absolute(sd.complex), i, G)
        formula *= Fraction(num, den) ** sign
    report.add(
        "kernel of the cut-forgetting map matches the counting formula",
        Fraction(measured) == formula,
        f"measured {measured}, formula {formula}",
    )

    # the engine's own composition agrees end to end
    composite = compose(later, earlier)
    report.add(
        "engine composition closes the torus",
        composite.manifold.is_closed
        and composite.manifold.euler_characteristic() == 0,
        "",
    )
    return report


# ---------------------------------------------------------------------------
# skeleton-change cylinders (existence iff the absolute classes agree)


def skeleton_change_suite(coeff: FinAbGroup | None = None) -> FunctorReport:
    """Existence table of skeleton-change cylinders on the circle."""
    report = FunctorReport()
    for G in (coeff,) if coeff else (FinAbGroup.cyclic(2), FinAbGroup.cyclic(3)):
        base = library("circle")
        skA = SkeletonPair(base, 0, kept={(0,)})
        skB = SkeletonPair(base, 0, kept={(0,), (1,)})
        gA = forget_relative(skA.background_pair(), 1, G)
        gB = forget_relative(skB.background_pair(), 1, G)
        sym_order = cohomology_order(
            SimplicialPair.absolute(skA.subdivision.complex), 0, G
        )
        ok = True
        detail = ""
        for bA in gA.source.classes():
            for bB in gB.source.classes():
                objA = DecoratedObject(skA, G, bA)
                objB = DecoratedObject(skB, G, bB)
                found, count = skeleton_change(objA, objB)
                exists = found is not None
                should = gA(bA).raw == gB(bB).raw
                if exists != should or (exists and count != sym_order):
                    ok = False
                    detail = (
                        f"b={bA.raw}, b'={bB.raw}: exists={exists}, "
                        f"expected={should}, count={count}"
                    )
                    break
            if not ok:
                break
        report.add(f"skeleton-change table over {G}", ok, detail)
    return report


# ---------------------------------------------------------------------------
# functor axioms


def axioms_suite(coeff: FinAbGroup | None = None) -> FunctorReport:
    """Functor axioms for the trivial theory, its gauging, and a negative
    control that must fail."""
    G = coeff or _z2()
    report = FunctorReport()

    fx = fixture_set(G, dual=False)
    Z = trivial_theory(0, G)
    rep = verify_functor(
        Z,
        objects=fx["objects"],
        composable_pairs=fx["composable_pairs"],
        union_pairs=fx["union_pairs"],
        symmetry_objects=fx["symmetry_objects"],
    )
    report.add("trivial theory functor axioms", rep.passed, "; ".join(n for n, _ in rep.failures))

    fxd = fixture_set(G, dual=True)
    Zg = gauge(Z)
    repg = verify_functor(
        Zg,
        objects=fxd["objects"],
        composable_pairs=fxd["composable_pairs"],
        union_pairs=fxd["union_pairs"],
        symmetry_objects=fxd["symmetry_objects"],
    )
    report.add("gauged theory functor axioms", repg.passed, "; ".join(n for n, _ in repg.failures))

    bad = ScaledTheory(Z, 2)
    obj = fx["object"]
    ident = identity_bordism(obj)
    broken = verify_functor(bad, composable_pairs=[(ident, ident)])
    report.add("doubled theory fails composition (negative control)", not broken.passed)
    return report


def gauged_state_suite(coeff: FinAbGroup | None = None) -> FunctorReport:
    """Projector decomposition and the trace identity of the gauged theory."""
    G = coeff or _z2()
    report = FunctorReport()
    Z = trivial_theory(0, G)
    Zg = gauge(Z)
    obj = dual_circle_object(G)
    sym = obj.symmetry_group()
    labels = list(all_labels(sym))
    projs = [projector(Zg, obj, lab) for lab in labels]
    ident = LinearMap.identity(Zg.state_labels(obj))

    total = projs[0]
    for p in projs[1:]:
        total = total + p
    report.add("projectors sum to the identity", total.same_matrix(ident))
    report.add(
        "projectors idempotent",
        all((p @ p).same_matrix(p) for p in projs),
    )
    report.add(
        "distinct projectors orthogonal",
        all(
            (projs[i] @ projs[j]).same_matrix(LinearMap.zero(ident.source, ident.target))
            for i in range(len(projs))
            for j in range(len(projs))
            if i != j
        ),
    )

    dim = len(Zg.state_labels(obj))
    torus_value = gauged_closed_value(Z, library("torus2"), 0)
    ok = torus_value.as_rational() == dim == G.order
    report.add(
        "trace identity: torus value = state dimension = |G|",
        ok,
        f"value {torus_value}, dim {dim}, |G| {G.order}",
    )

    # the naive identity cylinder equals the trivial-character projector
    pobj = circle_object(G)
    ident_shell = identity_bordism(pobj)
    naive = naive_value(Z, ident_shell)
    p0 = projector(Z, pobj, trivial_label(pobj.symmetry_group()))
    report.add("naive identity cylinder equals the trivial projector", naive.same_matrix(p0))
    report.add("naive identity cylinder idempotent", (naive @ naive).same_matrix(naive))
    return report


# ---------------------------------------------------------------------------
# gauged value tables, dual-symmetry identities


def gauging_suite(coeff: FinAbGroup | None = None) -> FunctorReport:
    """Closed gauged partition values against their exact expectations."""
    report = FunctorReport()
    table = [
        ("torus2", 0, FinAbGroup.cyclic(2), Fraction(2)),
        ("sphere2", 0, FinAbGroup.cyclic(2), Fraction(1, 2)),
        ("torus3", 0, FinAbGroup.cyclic(2), Fraction(4)),
        ("torus3", 1, FinAbGroup.cyclic(2), Fraction(2)),
        ("sphere3", 1, FinAbGroup.cyclic(2), Fraction(2)),
        ("torus2", 0, FinAbGroup.cyclic(3), Fraction(3)),
        ("torus2", 0, FinAbGroup.cyclic(4), Fraction(4)),
        ("torus2", 0, FinAbGroup.from_factors((2, 2)), Fraction(4)),
    ]
    if coeff is not None:
        table = [row for row in table if row[2] == coeff]
    for name, q, G, expect in table:
        value = gauged_closed_value(trivial_theory(q, G), library(name), q)
        ok = value == Amplitude.rational(expect)
        report.add(
            f"gauged value of {name} (q={q}, {G})",
            ok,
            f"{value} vs {expect}",
        )
    return report


def refined_suite(coeff: FinAbGroup | None = None) -> FunctorReport:
    """Refined closed values over all dual backgrounds of the torus."""
    G = coeff or _z2()
    report = FunctorReport()
    Z = trivial_theory(0, G)
    Zg = gauge(Z)
    t2 = library("torus2")
    dual = pontryagin_dual(G)
    dual_group = cohomology(SimplicialPair.absolute(t2.complex), 1, dual)
    ok = True
    detail = ""
    for A in dual_group.classes():
        value = Zg.closed_value(t2, A)
        expect = (
            Amplitude.rational(G.order) if A.is_zero() else Amplitude.zero()
        )
        if value != expect:
            ok = False
            detail = f"A={A.raw}: {value}"
            break
    report.add(
        f"refined torus values vanish except at zero ({dual_group.order} backgrounds)",
        ok,
        detail,
    )
    return report


def delta_suite(
    coeff: FinAbGroup | None = None, names=("torus2", "sphere2"), q: int = 0
) -> FunctorReport:
    """The character-sum delta identity over all background pairs."""
    G = coeff or _z2()
    report = FunctorReport()
    for name in names:
        m = library(name)
        group = cohomology(SimplicialPair.absolute(m.complex), q + 1, G)
        ok = True
        detail = ""
        for B in group.classes():
            for Bp in group.classes():
                rep = delta_identity_check(m, q, G, B, Bp)
                if not rep.passed:
                    ok = False
                    detail = f"B={B.raw}, B'={Bp.raw}: sum {rep.measured_sum}"
                    break
            if not ok:
                break
        report.add(f"delta identity on {name} ({group.order}^2 pairs)", ok, detail)
    return report


def double_gauge_suite(coeff: FinAbGroup | None = None) -> FunctorReport:
    """Double gauging against the invertible-theory value, with union
    multiplicativity."""
    G = coeff or _z2()
    report = FunctorReport()
    Z = trivial_theory(0, G)
    expectations = {"torus2": Fraction(1), "sphere2": Fraction(1, 4)}
    kappas = {}
    for name, expect in expectations.items():
        rep = double_gauge_check(Z, library(name), 0)
        kappas[name] = rep.kappa
        ok = rep.double_gauged_value == Amplitude.rational(expect) and (
            rep.matches_alternating or rep.matches_reciprocal
        )
        report.add(
            f"double gauging on {name}",
            ok,
            f"value {rep.double_gauged_value}, kappa {rep.kappa}",
        )

    union, _, _ = disjoint_union(
        library("torus2").complex, library("sphere2").complex
    )
    both = TriangulatedManifold(union, 2)
    rep = double_gauge_check(Z, both, 0)
    ok = rep.kappa == kappas["torus2"] * kappas["sphere2"]
    report.add(
        "kappa multiplicative under disjoint union",
        ok,
        f"{rep.kappa} vs {kappas['torus2']} * {kappas['sphere2']}",
    )
    return report


# ---------------------------------------------------------------------------
# suite registry for the command line


SUITES = {
    "axioms": axioms_suite,
    "sequences": sequences_suite,
    "gluing": eta_counting_suite,
    "skeleton-change": skeleton_change_suite,
    "states": gauged_state_suite,
    "gauging": gauging_suite,
    "refined": refined_suite,
    "delta": delta_suite,
    "double-gauge": double_gauge_suite,
}


def run_suite(name: str, coeff: FinAbGroup | None = None) -> FunctorReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {sorted(SUITES)}")
    return SUITES[name](coeff)
