"""Curve invariants from a saturated ideal: Hilbert data, the deficiency
(Hartshorne-Rao) module, second cohomology, hyperplane sections, planar
subcurves, and the extremality verdict.

Cohomology is extracted by graded duality on the minimal free resolution:
the deficiency module is the cokernel of the transposed last map, second
cohomology the middle homology of the dual complex, both presented as
finitely presented modules whose Hilbert functions reduce to standard
monomial counts.  Everything cross-asserts against the Riemann-Roch
identity h_C(j) - p_C(j) = -h1(j) + h2(j).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .construct import NonExtremalWitness
from .formulas import (
    CurveSpec,
    bound_profile,
    expected_annihilator_degrees,
    expected_betti,
    expected_gin,
    expected_rao_hf,
    max_genus,
    rao_structure_excluded,
)
from .gin import gin as compute_gin
from .ideals import Ideal, change_coordinates, ideal_from_monomials, is_saturated, quotient, saturate
from .modules import GraphBasis, PresentedModule, free_resolution_from_gb
from .oracle import fraction_rank
from .report import CurveReport
from .ring import PolyRing, Polynomial, binom


class NotACurveError(ValueError):
    """The ideal does not define a one-dimensional scheme."""


class DegenerateCurveError(ValueError):
    """The ideal contains a linear form."""


class InternalCheckError(AssertionError):
    """A proven identity failed: upstream bug, not a property of the input."""


# ---------------------------------------------------------------------------
# Hilbert data


@dataclass(frozen=True)
class HilbertTable:
    window: tuple
    dims: tuple
    degree: int
    genus: int
    regularity: int

    def at(self, j):
        lo, hi = self.window
        if not lo <= j <= hi:
            raise IndexError(f"degree {j} outside the window")
        return self.dims[j - lo]

    def polynomial_value(self, j):
        return self.degree * j - self.genus + 1


def detect_hilbert_polynomial(I: Ideal):
    """(leading coefficient, constant term) of the Hilbert polynomial,
    requiring agreement on max(3, nvars) consecutive values past the
    regularity; raises NotACurveError when the function is not eventually
    linear."""
    lead = I.initial_ideal()
    reg = I.resolution().regularity()
    agree = max(3, I.ring.nvars)
    start = max(reg + 1, 1)
    values = [lead.quotient_dim(j) for j in range(start, start + agree + 1)]
    diffs = [b - a for a, b in zip(values, values[1:])]
    if any(d != diffs[0] for d in diffs):
        raise NotACurveError("Hilbert function is not eventually linear")
    d = diffs[0]
    c = values[0] - d * start
    return d, c


def hilbert_table(I: Ideal, window=None) -> HilbertTable:
    """Hilbert function of the quotient over a window, plus the detected
    degree and genus; errors unless the quotient has dimension two."""
    d, c = detect_hilbert_polynomial(I)
    if d <= 0:
        raise NotACurveError(
            "quotient dimension below two: the ideal does not define a curve"
        )
    g = 1 - c
    if window is None:
        from .formulas import default_window

        window = default_window(I.ring.n, d, g) if d >= 2 else (0, 5)
    lo, hi = window
    lead = I.initial_ideal()
    dims = tuple(lead.quotient_dim(j) for j in range(lo, hi + 1))
    return HilbertTable(
        window=(lo, hi),
        dims=dims,
        degree=d,
        genus=g,
        regularity=I.resolution().regularity(),
    )


# ---------------------------------------------------------------------------
# duality


def _dual_presentation_of_coker(res, ring, level):
    """Presentation of coker(Hom(F_{level-1}, R) -> Hom(F_level, R))."""
    gen_degrees = [-w for w in res.twists[level]]
    rank_prev = len(res.twists[level - 1])
    rank_here = len(res.twists[level])
    relations = []
    for r in range(rank_prev):
        rel = [res.mats[level - 1][c][r] for c in range(rank_here)]
        relations.append(rel)
    return PresentedModule(ring, gen_degrees, relations)


class DualCohomology:
    """Ext modules at the last two homological positions of R/I; the second
    cohomology side is built lazily since many callers only need h1."""

    def __init__(self, I: Ideal):
        self.ideal = I
        self.ring = I.ring
        res = I.resolution()
        n = self.ring.n
        if res.length > n:
            raise InternalCheckError(
                "resolution longer than the ambient dimension for a saturated curve"
            )
        if res.length < n - 1:
            raise NotACurveError("projective dimension too small for a curve quotient")
        self.res = res
        self.acm = res.length == n - 1
        self._h2_dual = None
        if self.acm:
            self.rao_dual = PresentedModule(self.ring, [], [])
        else:
            self.rao_dual = _dual_presentation_of_coker(res, self.ring, n)
            if not self.rao_dual.is_finite_length():
                raise InternalCheckError("deficiency module is not of finite length")

    @property
    def h2_dual(self) -> PresentedModule:
        if self._h2_dual is None:
            res, ring, n = self.res, self.ring, self.ring.n
            if self.acm:
                self._h2_dual = _dual_presentation_of_coker(res, ring, n - 1)
            else:
                # kernel of the transposed last map, then mod out the image
                rank_n = len(res.twists[n])
                rank_prev = len(res.twists[n - 1])
                target_twists = [-w for w in res.twists[n]]
                source_twists = [-w for w in res.twists[n - 1]]
                cols = []
                for r in range(rank_prev):
                    cols.append([res.mats[n - 1][c][r] for c in range(rank_n)])
                graph = GraphBasis(cols, target_twists, ring)
                kernel = graph.kernel_generators()
                kdegs = []
                for vec in kernel:
                    deg = None
                    for s, p in enumerate(vec):
                        if p:
                            deg = p.degree() + source_twists[s]
                            break
                    kdegs.append(deg if deg is not None else 0)
                kgraph = GraphBasis(kernel, source_twists, ring)
                relations = list(kgraph.kernel_generators())
                rank_prev2 = len(res.twists[n - 2])
                for s in range(rank_prev2):
                    img = [res.mats[n - 2][r][s] for r in range(rank_prev)]
                    lifted = kgraph.lift(img)
                    if lifted is None:
                        raise InternalCheckError("dual complex image missed the kernel")
                    relations.append(lifted)
                self._h2_dual = PresentedModule(ring, kdegs, relations)
        return self._h2_dual

    def h1_value(self, j: int) -> int:
        return self.rao_dual.hf(-j - self.ring.nvars)

    def h2_value(self, j: int) -> int:
        return self.h2_dual.hf(-j - self.ring.nvars)


@dataclass
class FiniteLengthModule:
    """Per-degree dimensions with multiplication matrices between them."""

    window: tuple
    dims: dict
    mult: dict  # (var, j) -> matrix taking degree j to j+1 (rows: target)
    generator_count: int
    generator_degrees: list
    annihilator_degrees: list | None

    def dim(self, j):
        return self.dims.get(j, 0)

    def multiplication_commutes(self) -> bool:
        degrees = sorted(self.dims)
        nv = max((v for v, _ in self.mult), default=-1) + 1
        for j in degrees:
            for v in range(nv):
                for w in range(v + 1, nv):
                    a = _mat_mul(self.mult[(w, j + 1)], self.mult[(v, j)])
                    b = _mat_mul(self.mult[(v, j + 1)], self.mult[(w, j)])
                    if a != b:
                        return False
        return True


def _mat_mul(A, B):
    if not B:
        return []
    if not A:
        return [[] for _ in range(0)]
    cols_b = len(B[0]) if B else 0
    inner = len(B)
    out = []
    for r in range(len(A)):
        row = []
        for c in range(cols_b):
            row.append(sum((A[r][k] * B[k][c] for k in range(inner)), Fraction(0)))
        out.append(row)
    return out


def _transpose(m):
    if not m:
        return []
    return [[m[r][c] for r in range(len(m))] for c in range(len(m[0]))]


def deficiency_module(I: Ideal, window=None, dual: DualCohomology | None = None) -> FiniteLengthModule:
    """The Hartshorne-Rao module from the dual complex: dimensions over the
    window, multiplication maps, generator data, and (for cyclic modules)
    the minimal generator degrees of the annihilator."""
    if dual is None:
        dual = DualCohomology(I)
    ring = I.ring
    nvars = ring.nvars
    if window is None:
        ht = hilbert_table(I)
        from .formulas import default_window

        window = default_window(ring.n, ht.degree, ht.genus)
    lo, hi = window[0] - 2, window[1] + 2
    dims = {}
    for j in range(lo, hi + 1):
        v = dual.rao_dual.hf(-j - nvars)
        if v:
            dims[j] = v
    if dims and (min(dims) <= lo or max(dims) >= hi):
        raise InternalCheckError("deficiency module support leaks out of the window")
    mult = {}
    for j in range(lo, hi):
        e_next = -(j + 1) - nvars
        for v in range(nvars):
            # x_v on the dual module at degree e_next has target degree
            # e_next + 1 = -j - nvars; transpose to act on the module itself
            mult[(v, j)] = _transpose(dual.rao_dual.mult_matrix(v, e_next))
    gen_count = 0
    gen_degrees = []
    for j in range(lo, hi + 1):
        dj = dims.get(j, 0)
        if not dj:
            continue
        prev = dims.get(j - 1, 0)
        if not prev:
            fresh = dj
        else:
            rows = []
            for r in range(dj):
                row = []
                for v in range(nvars):
                    row.extend(mult[(v, j - 1)][r])
                rows.append(row)
            fresh = dj - fraction_rank(rows)
        gen_count += fresh
        gen_degrees.extend([j] * fresh)
    ann = None
    if gen_count <= 1 and dims:
        ann = _annihilator_degrees(dims, mult, nvars)
    return FiniteLengthModule(
        window=window,
        dims=dims,
        mult=mult,
        generator_count=gen_count,
        generator_degrees=gen_degrees,
        annihilator_degrees=ann,
    )


def _annihilator_degrees(dims, mult, nvars):
    """Minimal generator degrees of the annihilator of a cyclic module,
    read off the first Koszul homology of the module."""
    j0 = min(dims)
    top = max(dims)
    out = []
    for t in range(j0 + 1, top + 3):
        dim_prev = dims.get(t - 1, 0)
        dim_here = dims.get(t, 0)
        if not dim_prev:
            continue
        # kernel of the combined multiplication into degree t
        rows = []
        for r in range(dim_here):
            row = []
            for v in range(nvars):
                row.extend(mult[(v, t - 1)][r])
            rows.append(row)
        ncols = nvars * dim_prev
        rank_a = fraction_rank(rows) if rows else 0
        ker_dim = ncols - rank_a
        # image of the Koszul two-form map
        dim_prev2 = dims.get(t - 2, 0)
        b_cols = []
        for v in range(nvars):
            for w in range(v + 1, nvars):
                for b in range(dim_prev2):
                    col = [Fraction(0)] * ncols
                    for r in range(dim_prev):
                        col[v * dim_prev + r] += mult[(w, t - 2)][r][b]
                        col[w * dim_prev + r] -= mult[(v, t - 2)][r][b]
                    b_cols.append(col)
        rank_b = fraction_rank(b_cols) if b_cols else 0
        h1 = ker_dim - rank_b
        if h1 < 0:
            raise InternalCheckError("negative Koszul homology dimension")
        out.extend([t - j0] * h1)
    return sorted(out)


def h2_table(I: Ideal, window, dual: DualCohomology | None = None, hilbert=None):
    """Second cohomology over the window, with the Riemann-Roch identity
    asserted at every degree."""
    if dual is None:
        dual = DualCohomology(I)
    if hilbert is None:
        hilbert = hilbert_table(I, window=window)
    lo, hi = window
    values = []
    for j in range(lo, hi + 1):
        h2 = dual.h2_value(j)
        h1 = dual.h1_value(j)
        lhs = hilbert.at(j) - hilbert.polynomial_value(j)
        if lhs != -h1 + h2:
            raise InternalCheckError(
                f"Riemann-Roch identity failed at degree {j}: "
                f"{lhs} != -{h1} + {h2}"
            )
        values.append(h2)
    return values


# ---------------------------------------------------------------------------
# hyperplane sections and planar subcurves


def _mix(*parts) -> int:
    h = 0x9E3779B97F4A7C15
    for p in parts:
        h ^= (p + 0x9E3779B97F4A7C15 + (h << 6) + (h >> 2)) & 0xFFFFFFFFFFFFFFFF
    return h & 0x7FFFFFFFFFFFFFFF


def _divide_out_last_variable(gb_polys, ring: PolyRing):
    """Divide each basis element by its maximal last-variable power.

    For a reduced revlex basis of a homogeneous ideal this yields generators
    of the saturation with respect to the last variable; iterating with a
    fresh basis reaches the fixed point."""
    out = []
    last = ring.nvars - 1
    for p in gb_polys:
        k = min(m[last] for m, _ in p.terms)
        if k:
            shift = tuple(-k if i == last else 0 for i in range(ring.nvars))
            p = Polynomial(ring, [(tuple(e + s for e, s in zip(m, shift)), c) for m, c in p.terms])
        out.append(p)
    return out


def saturate_by_last_variable(gens, ring: PolyRing) -> "GroebnerBasis":
    """Reduced basis of (J : x_last^infty) via the revlex division trick."""
    from .groebner import buchberger

    gb = buchberger(gens, ring)
    for _ in range(ring.nvars + 2):
        divided = _divide_out_last_variable(list(gb.polys), ring)
        if divided == list(gb.polys):
            return gb
        gb = buchberger(divided, ring)
    raise AssertionError("last-variable saturation failed to stabilize")


def _kernel_basis_matrix(coeffs, rng):
    """Invertible matrix whose first columns span the hyperplane of the
    given linear functional, with seeded generic entries."""
    nv = len(coeffs)
    pivot = max(i for i, c in enumerate(coeffs) if c)
    cols = []
    for i in range(nv):
        if i == pivot:
            continue
        col = [Fraction(0)] * nv
        col[i] = Fraction(1)
        col[pivot] = Fraction(-coeffs[i], coeffs[pivot])
        cols.append(col)
    # generic unimodular mixing inside the hyperplane
    mixed = []
    for _ in range(nv - 1):
        weights = [rng.randint(-20, 20) for _ in cols]
        mixed.append([sum(w * c[r] for w, c in zip(weights, cols)) for r in range(nv)])
    last = [Fraction(rng.randint(-20, 20)) for _ in range(nv)]
    matrix = [[mixed[j][i] for j in range(nv - 1)] + [last[i]] for i in range(nv)]
    return matrix


def hyperplane_section(I: Ideal, seed: int = 0, form: Polynomial | None = None, max_draws: int = 12):
    """Section by a (general) hyperplane: the saturated image ideal in one
    fewer variable and its Hilbert values through degree + 1.

    The hyperplane is moved to {x_n = 0} by a seeded generic coordinate
    change, the last variable is dropped, and the image is saturated with
    the last remaining variable (generic inside the hyperplane).  Draws are
    rejected while the cut fails the non-zerodivisor Hilbert test
    h(R/(I+l))_j = h_C(j) - h_C(j-1) in low degrees."""
    from .groebner import buchberger

    ring = I.ring
    ht = hilbert_table(I)
    reg = I.resolution().regularity()
    target = PolyRing(ring.nvars - 1, ring.field)
    hvals = [I.initial_ideal().quotient_dim(j) for j in range(reg + 3)]
    for attempt in range(max_draws):
        rng = random.Random(_mix(seed, attempt, 77))
        if form is not None:
            coeffs = [form.coefficient(ring.var_mono(i)) for i in range(ring.nvars)]
            if form.degree() != 1 or not any(coeffs):
                raise ValueError("the section form must be a nonzero linear form")
            matrix = _kernel_basis_matrix(coeffs, rng)
        else:
            matrix = _random_invertible_matrix(ring.nvars, rng)
        transformed = [g.substitute_linear(matrix) for g in I.gens]
        cut = []
        for g in transformed:
            terms = [(m[:-1], c) for m, c in g.terms if m[-1] == 0]
            p = Polynomial(target, terms)
            if p:
                cut.append(p)
        if not cut:
            continue
        cut_dims = buchberger(cut, target).initial_ideal()
        ok = all(
            cut_dims.quotient_dim(j) == hvals[j] - (hvals[j - 1] if j else 0)
            for j in range(reg + 3)
        )
        if not ok:
            if form is not None:
                raise ValueError("the given form is a zero divisor on the curve")
            continue
        gb = saturate_by_last_variable(cut, target)
        section = Ideal(target, list(gb.polys))
        section._gb = gb
        lead = gb.initial_ideal()
        values = [lead.quotient_dim(j) for j in range(0, ht.degree + 2)]
        return section, values, matrix
    raise ValueError("exhausted draws without a non-zerodivisor hyperplane")


def _random_invertible_matrix(nv: int, rng: random.Random, bound: int = 20):
    from .ideals import _det

    for _ in range(100):
        matrix = [[rng.randint(-bound, bound) for _ in range(nv)] for _ in range(nv)]
        if _det(matrix):
            return matrix
    raise AssertionError("failed to draw an invertible matrix")


def general_section_values(I: Ideal, seed: int = 0):
    """Hilbert values of the general hyperplane section: two independent
    draws must agree (a third breaks ties), guarding against a special
    hyperplane slipping past the non-zerodivisor test."""
    first = hyperplane_section(I, seed=_mix(seed, 0, 101))[1]
    second = hyperplane_section(I, seed=_mix(seed, 1, 101))[1]
    if first == second:
        return first
    third = hyperplane_section(I, seed=_mix(seed, 2, 101))[1]
    if third in (first, second):
        return third
    raise ValueError("hyperplane section values failed to stabilize over three draws")


def planar_subcurve_check(I: Ideal, plane_forms) -> bool:
    """True when the curve meets the given plane in a one-dimensional scheme
    of degree one less than the curve's."""
    ring = I.ring
    forms = list(plane_forms)
    if len(forms) != ring.n - 2:
        raise ValueError(f"a plane in P^{ring.n} needs {ring.n - 2} linear forms")
    rows = []
    for f in forms:
        if f.degree() != 1:
            raise ValueError("plane forms must be linear")
        rows.append([Fraction(f.coefficient(ring.var_mono(i))) for i in range(ring.nvars)])
    if fraction_rank(rows) < len(forms):
        raise ValueError("dependent plane forms")
    d = hilbert_table(I).degree
    J = saturate(Ideal(ring, list(I.gens) + forms))
    if not J.gens:
        return False
    try:
        lead_coeff, _ = detect_hilbert_polynomial(J)
    except NotACurveError:
        return False
    return lead_coeff == d - 1


# ---------------------------------------------------------------------------
# the extremality verdict


def verify_extremal(
    I: Ideal,
    seed: int = 0,
    gin_check: bool = True,
    betti_check: bool = True,
    section_check: bool = True,
    planar_check: bool = True,
) -> CurveReport:
    """Full computed-versus-expected report for a saturated curve ideal."""
    ring = I.ring
    if getattr(ring.field, "p", 0):
        raise ValueError("verdicts are computed over the rationals")
    if I.dim_piece(1) != 0:
        raise DegenerateCurveError("the ideal contains a linear form")
    if not is_saturated(I):
        raise ValueError("the ideal is not saturated")
    ht_probe = hilbert_table(I)
    n, d, g = ring.n, ht_probe.degree, ht_probe.genus
    if g > max_genus(n, d):
        raise InternalCheckError("genus exceeds the proven bound")
    spec = CurveSpec(n, d, g)
    a = spec.a
    warnings = []
    profile = bound_profile(n, d, g)
    window = profile.window
    lo, hi = window
    ht = hilbert_table(I, window=window)

    dual = DualCohomology(I)
    rao = deficiency_module(I, window=window, dual=dual)
    h1 = [rao.dim(j) for j in range(lo, hi + 1)]
    h1_expected = list(profile.h1)
    for j, (got, bound) in enumerate(zip(h1, h1_expected), start=lo):
        if got > bound:
            raise InternalCheckError(
                f"h1 exceeds the proven bound at degree {j}: {got} > {bound}"
            )
    h1_matches = [x == y for x, y in zip(h1, h1_expected)]
    first_fail = None
    for j, ok in zip(range(lo, hi + 1), h1_matches):
        if not ok:
            first_fail = j
            break
    extremal = all(h1_matches)

    h2 = h2_table(I, window, dual=dual, hilbert=ht)
    h2_expected = list(profile.h2)
    h2_checked = extremal and d >= 3
    if d == 2:
        warnings.append("degree 2: the h2 bound is undefined for j < 0 and unchecked there")
    h2_match = None
    if h2_checked:
        h2_match = all(x == y for x, y in zip(h2, h2_expected))
    elif extremal and d == 2:
        h2_match = all(
            x == y for x, y in zip(h2, h2_expected) if y is not None
        )

    gin_block = dict(
        gin_checked=False,
        gin_monomials=None,
        gin_expected=None,
        gin_alternate=None,
        gin_match=None,
        gin_seeds=None,
        gin_entry_bound=None,
    )
    gin_result = None
    if gin_check and d >= 3:
        gin_result = compute_gin(I, seed=_mix(seed, 5))
        from .ring import format_mono

        exp = expected_gin(spec)
        alternate = None
        if d == 3 and a >= 1 and n >= 4:
            alternate = expected_gin(spec, "d3-alternate")
            warnings.append(
                "d=3, a>=1, n>=4: the gin is matched against the two-ideal set"
            )
        if gin_result.ideal == exp:
            match = "primary"
        elif alternate is not None and gin_result.ideal == alternate:
            match = "alternate"
        else:
            match = "mismatch"
        gin_block = dict(
            gin_checked=True,
            gin_monomials=[format_mono(m) for m in gin_result.ideal.gens],
            gin_expected=[format_mono(m) for m in exp.gens],
            gin_alternate=(
                [format_mono(m) for m in alternate.gens] if alternate else None
            ),
            gin_match=match,
            gin_seeds=gin_result.seeds,
            gin_entry_bound=gin_result.entry_bound,
        )

    betti_block = dict(
        betti_checked=False,
        betti=None,
        betti_expected=None,
        betti_gin=None,
        betti_match=None,
        betti_gin_match=None,
    )
    if betti_check and (d >= 5 or (d == 4 and a >= 1)):
        table = I.resolution().betti_table()
        exp_table = expected_betti(spec)
        if gin_result is not None:
            gin_ideal = ideal_from_monomials(ring, gin_result.ideal)
        else:
            gin_ideal = ideal_from_monomials(ring, expected_gin(spec))
        gin_table = gin_ideal.resolution().betti_table()
        betti_block = dict(
            betti_checked=True,
            betti=table,
            betti_expected=exp_table,
            betti_gin=gin_table,
            betti_match=table == exp_table,
            betti_gin_match=table == gin_table,
        )
        if a == 0:
            warnings.append(
                "a=0: the closed-form top twist follows the stable-ideal formula"
            )

    rao_expected = None
    rao_match = None
    ann_expected = None
    ann_match = None
    if d >= 3 and not rao_structure_excluded(spec):
        rao_expected = [expected_rao_hf(spec, j) for j in range(lo, hi + 1)]
        rao_match = rao_expected == [rao.dim(j) for j in range(lo, hi + 1)]
        ann_expected = expected_annihilator_degrees(spec)
        ann_match = rao.annihilator_degrees == ann_expected
    elif rao_structure_excluded(spec):
        warnings.append(
            "d=3, a>0, n>=4: the Rao-module structure statement does not apply"
        )

    section_values = None
    section_expected = None
    section_match = None
    section_seed = None
    if section_check and d >= 3:
        section_seed = _mix(seed, 9)
        values = general_section_values(I, seed=section_seed)
        section_values = values[1 : d + 2]
        section_expected = [min(j + 2, d) for j in range(1, d + 2)]
        section_match = section_values == section_expected

    planar_checked = False
    planar_verdict = None
    if planar_check and (d >= 5 or (d == 4 and a >= 1)):
        plane = [ring.gen(i) for i in range(3, ring.nvars)]
        planar_verdict = planar_subcurve_check(I, plane)
        planar_checked = True

    return CurveReport(
        n=n,
        d=d,
        g=g,
        a=a,
        window=window,
        hilbert_dims=list(ht.dims),
        regularity=ht.regularity,
        h1=h1,
        h1_expected=h1_expected,
        h1_matches=h1_matches,
        first_h1_failure=first_fail,
        h2=h2,
        h2_expected=h2_expected,
        h2_checked=h2_checked,
        h2_match=h2_match,
        rao_dims=[rao.dim(j) for j in range(lo, hi + 1)],
        rao_expected=rao_expected,
        rao_match=rao_match,
        rao_generator_count=rao.generator_count,
        rao_generator_degrees=rao.generator_degrees,
        rao_cyclic=rao.generator_count <= 1,
        annihilator_degrees=rao.annihilator_degrees,
        annihilator_expected=ann_expected,
        annihilator_match=ann_match,
        section_values=section_values,
        section_expected=section_expected,
        section_match=section_match,
        section_seed=section_seed,
        planar_checked=planar_checked,
        planar_verdict=planar_verdict,
        verdict="extremal" if extremal else "not_extremal",
        seed=seed,
        warnings=warnings,
        **gin_block,
        **betti_block,
    )


def constructed_curve_probe(I: Ideal):
    """Light analysis for randomized construction outputs: h1 against the
    bound over the window, plus the detected numerical type."""
    ht = hilbert_table(I)
    n, d, g = I.ring.n, ht.degree, ht.genus
    profile = bound_profile(n, d, g)
    lo, hi = profile.window
    dual = DualCohomology(I)
    h1 = [dual.h1_value(j) for j in range(lo, hi + 1)]
    for j, (got, bound) in enumerate(zip(h1, profile.h1), start=lo):
        if got > bound:
            raise InternalCheckError(
                f"h1 exceeds the proven bound at degree {j}: {got} > {bound}"
            )
    return {
        "n": n,
        "d": d,
        "g": g,
        "window": (lo, hi),
        "h1": h1,
        "h1_bound": list(profile.h1),
        "nondegenerate": I.dim_piece(1) == 0,
    }
