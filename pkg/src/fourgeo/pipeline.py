"""End-to-end builders for the positive-signature family, with self-checks.

The construction chains four stages, each runnable symbolically (invariants
as polynomials in n) or numerically (n a concrete integer >= 2):

  cover block      blow up n^4 lattice points of the 4-torus, then take the
                   n^3-fold cover branched with index n over the four
                   disjoint families of tori (the named branch preset);
                   yields c2 = n^7 and c1^2 = 3n^7 - 4n^5.
  gluing surface   resolve the n^3 intersections of two transverse regular
                   fibers of the cover block: genus 3n^5 - 3n^4 + n^3 + 1,
                   square 2n^3.
  K3 block         blow up 2n^3 - 2 points on a section of E(2), then do
                   fibered knot surgery so a surface of the gluing genus and
                   square -2n^3 appears: c2 = 2n^3 + 22, c1^2 = -2n^3 + 2.
  glued family     the fiber sum of the two blocks along those surfaces:
                   c2 = n^7 + 12n^5 - 12n^4 + 6n^3 + 22 and
                   c1^2 = 3n^7 + 20n^5 - 24n^4 + 6n^3 + 2, so the ratio
                   c1^2/chi_h climbs to 9.

Every stage records named checks against the closed-form targets and raises
on drift; verify_formulas() collects everything without raising, including
the numeric n = 3, 4 table (where the published table's sigma entry for
n = 3, 227, contradicts its own chi_h/c2/c1^2 values; the consistent value
is 337 and the discrepancy is reported as a warning, never an error).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from . import blocks
from .algebra import (
    N,
    LaurentPoly,
    Poly,
    Scalar,
    as_scalar,
    format_decimal,
    integer_valued,
    scalar_eval,
    scalar_str,
)
from .calculus import (
    BranchData,
    ManifoldRecord,
    MarkedSurface,
    blow_up,
    bmy_report,
    branched_cover,
    declared_true,
    euler_of_union,
    fiber_sum,
    genus_from_euler,
    resolve_surfaces,
    riemann_hurwitz,
    surface_blowup,
)
from .knots import (
    SWLedger,
    distinguish_family,
    find_fibered_knot_of_genus,
    knot_surgery,
    nonfibered_nonmonic_family,
    torus_knot,
    FamilyReport,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    expected: str
    got: str
    passed: bool
    note: str = ""


@dataclass(frozen=True)
class FiberData:
    """Euler characteristics of the fibration pieces of the cover block."""

    regular_euler: Scalar
    regular_genus: Scalar
    singular_euler: Scalar
    sphere_cover_euler: Scalar


@dataclass(frozen=True)
class PipelineReport:
    manifold: ManifoldRecord
    checks: tuple[CheckResult, ...] = ()
    fiber_data: FiberData | None = None
    intersections: Scalar | None = None
    surface: MarkedSurface | None = None


def _check(name: str, expected, got, note: str = "") -> CheckResult:
    if isinstance(expected, (bool, str)) or isinstance(got, (bool, str)):
        return CheckResult(name, str(expected), str(got), expected == got, note)
    expected = as_scalar(expected)
    got = as_scalar(got)
    return CheckResult(name, scalar_str(expected), scalar_str(got), expected == got, note)


def _assert_checks(checks: list[CheckResult]) -> None:
    bad = [c for c in checks if not c.passed]
    if bad:
        lines = ", ".join(f"{c.name}: expected {c.expected}, got {c.got}" for c in bad)
        raise RuntimeError(f"construction drift: {lines}")


def parameter(n: int | None) -> Scalar:
    """The construction parameter: the polynomial n (symbolic mode) or a
    concrete integer n >= 2."""
    if n is None:
        return N
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"construction parameter must be an integer, got {n!r}")
    if n < 2:
        raise ValueError(
            f"construction parameter must be >= 2 (n = {n} degenerates: "
            "the lattice and branch data collapse)"
        )
    return Fraction(n)


def branch_preset(v: Scalar) -> BranchData:
    """Branch data of the four disjoint torus families through the n^4
    blown-up lattice points: degree n^3, index n, e_branch 0, K.D = 4n^4,
    D^2 = -4n^4 (4n^2 proper transforms, each through n^2 points)."""
    return BranchData(
        degree=v**3, index=v, e_branch=0, k_dot_d=4 * v**4, d_sq=-(4 * v**4)
    )


def build_cover_block(n: int | None = None) -> PipelineReport:
    """Branched-cover block over the blown-up 4-torus, with fiber data."""
    v = parameter(n)
    blown = blow_up(blocks.torus4(), v**4)
    cover = branched_cover(blown, branch_preset(v))

    regular_euler = riemann_hurwitz(0, 3 * v**2, v**3, v)
    regular_genus = genus_from_euler(regular_euler)
    sphere_cover_euler = riemann_hurwitz(2, 4, v**3, v)
    # Singular fiber: n^2 covered exceptional spheres plus n^2 torus
    # transforms, glued at n^4 points.
    singular_euler = euler_of_union([v**2 * sphere_cover_euler, v**2 * 0], v**4)

    checks = [
        _check("cover block: c2", v**7, cover.c2),
        _check("cover block: c1^2", 3 * v**7 - 4 * v**5, cover.c1sq),
        _check("cover block: sigma", (v**7 - 4 * v**5) / 3, cover.sigma),
        _check("cover block: chi_h", (v**7 - v**5) / 3, cover.chi_h),
        _check("regular fiber: euler", -3 * v**5 + 3 * v**4, regular_euler),
        _check(
            "regular fiber: genus",
            1 + Fraction(3, 2) * v**5 - Fraction(3, 2) * v**4,
            regular_genus,
        ),
        _check("singular fiber: euler", -2 * v**5 + 3 * v**4, singular_euler),
        _check("covered exceptional sphere: euler", -2 * v**3 + 4 * v**2, sphere_cover_euler),
    ]
    _assert_checks(checks)

    manifold = cover.with_surface(
        "fiber", MarkedSurface(regular_genus, 0, "regular fiber")
    )
    return PipelineReport(
        manifold=manifold,
        checks=tuple(checks),
        fiber_data=FiberData(regular_euler, regular_genus, singular_euler, sphere_cover_euler),
        intersections=v**3,
    )


def gluing_genus(v: Scalar) -> Scalar:
    return 3 * v**5 - 3 * v**4 + v**3 + 1


def build_gluing_surface(n: int | None = None) -> MarkedSurface:
    """Resolution of two transverse regular fibers of the cover block
    (n^3 intersection points): genus 3n^5 - 3n^4 + n^3 + 1, square 2n^3."""
    v = parameter(n)
    fiber = build_cover_block(n).manifold.surface("fiber")
    surface = resolve_surfaces(fiber, fiber, v**3, name="gluing surface")
    checks = [
        _check("gluing surface: genus", gluing_genus(v), surface.genus),
        _check("gluing surface: self-intersection", 2 * v**3, surface.self_int),
    ]
    _assert_checks(checks)
    return surface


def build_k3_block(n: int | None = None) -> PipelineReport:
    """Blown-up, knot-surgered K3 block carrying the mirror gluing surface.

    Blowing up 2n^3 - 2 points on a section leaves a sphere of square
    -2n^3; knot surgery along a regular fiber with a fibered knot of the
    gluing genus turns that sphere into a surface of genus 3n^5-3n^4+n^3+1
    and square -2n^3, while (e, sigma) stay at (2n^3+22, -2n^3-14).
    """
    v = parameter(n)
    k = 2 * v**3 - 2
    record = blow_up(blocks.k3_elliptic(), k)
    section = surface_blowup(record.surface("section"), k)
    record = record.with_surface("section", section)

    g = gluing_genus(v)
    knot = find_fibered_knot_of_genus(g if isinstance(g, Poly) else int(g))
    record = knot_surgery(record, knot, torus="fiber", sum_target="section")
    record = replace(
        record,
        simply_connected=declared_true(
            "K3 blow-up is simply connected and knot surgery preserves pi_1"
        ),
    )

    glued = record.surface("section")
    checks = [
        _check("K3 block: c2", 2 * v**3 + 22, record.c2),
        _check("K3 block: c1^2", -2 * v**3 + 2, record.c1sq),
        _check("K3 block: chi_h", 2, record.chi_h),
        _check("K3 block: sigma", -2 * v**3 - 14, record.sigma),
        _check("K3 block surface: genus", gluing_genus(v), glued.genus),
        _check("K3 block surface: self-intersection", -2 * v**3, glued.self_int),
    ]
    _assert_checks(checks)
    return PipelineReport(manifold=record, checks=tuple(checks), surface=glued)


def family_targets(v: Scalar) -> dict[str, Scalar]:
    """Closed-form invariants of the glued family."""
    return {
        "c2": v**7 + 12 * v**5 - 12 * v**4 + 6 * v**3 + 22,
        "c1sq": 3 * v**7 + 20 * v**5 - 24 * v**4 + 6 * v**3 + 2,
        "chi_h": (v**7 + 8 * v**5) / 3 - 3 * v**4 + v**3 + 2,
        "sigma": (v**7 - 4 * v**5) / 3 - 2 * v**3 - 14,
    }


def build_family(n: int | None = None) -> PipelineReport:
    """The glued family: cover block fiber-summed with the K3 block along
    surfaces of genus 3n^5 - 3n^4 + n^3 + 1 and squares +-2n^3."""
    v = parameter(n)
    cover = build_cover_block(n)
    gluing = build_gluing_surface(n)
    k3 = build_k3_block(n)

    glued = fiber_sum(
        cover.manifold,
        gluing,
        k3.manifold,
        k3.manifold.surface("section"),
        pi1_surjection="gluing surface carries pi_1 onto the cover block "
        "(it is a resolved union of fibers of both fibrations)",
        complement_trivial="complement of the glued surface in the K3 block "
        "is simply connected",
    )

    targets = family_targets(v)
    checks = [
        _check("glued family: c2", targets["c2"], glued.c2),
        _check("glued family: c1^2", targets["c1sq"], glued.c1sq),
        _check("glued family: chi_h", targets["chi_h"], glued.chi_h),
        _check("glued family: sigma", targets["sigma"], glued.sigma),
        _check(
            "fiber sum consistency: c1^2 gain is 8(g-1)",
            8 * (gluing.genus - 1),
            glued.c1sq - cover.manifold.c1sq - k3.manifold.c1sq,
        ),
    ]
    _assert_checks(checks)
    return PipelineReport(
        manifold=glued,
        checks=cover.checks + k3.checks + tuple(checks),
        fiber_data=cover.fiber_data,
        intersections=cover.intersections,
        surface=gluing,
    )


_SIGMA_TABLE_NOTE = (
    "warning: the published table prints sigma = 227 for n = 3, which is "
    "inconsistent with its own chi_h/c2/c1^2 values; (c1^2 - 2*c2)/3 and the "
    "closed-form sigma both give 337"
)


def verify_formulas(n_max: int = 50) -> list[CheckResult]:
    """Re-derive every closed-form statement about the construction and
    report each comparison; failures are collected, never raised."""
    checks: list[CheckResult] = []

    def guard(name: str, fn) -> None:
        try:
            fn()
        except Exception as err:  # a drifting build is a reported failure
            checks.append(CheckResult(name, "no error", f"{type(err).__name__}: {err}", False))

    # Symbolic identities (the stage builders re-check their own formulas).
    guard("cover block build", lambda: checks.extend(build_cover_block().checks))
    guard(
        "gluing surface build",
        lambda: checks.append(
            _check(
                "gluing surface: genus and square",
                scalar_str(gluing_genus(N)) + " / " + scalar_str(2 * N**3),
                (lambda s: scalar_str(s.genus) + " / " + scalar_str(s.self_int))(
                    build_gluing_surface()
                ),
            )
        ),
    )
    guard("fiber intersections", lambda: checks.append(
        _check("fiber intersections", N**3, build_cover_block().intersections)
    ))
    guard("K3 block build", lambda: checks.extend(build_k3_block().checks))

    symbolic = None

    def run_symbolic():
        nonlocal symbolic
        symbolic = build_family()
        checks.extend(symbolic.checks)

    guard("glued family build", run_symbolic)
    if symbolic is None:
        return checks

    man = symbolic.manifold
    checks.append(
        _check(
            "chi_h integer-valued: cover block",
            True,
            integer_valued(build_cover_block().manifold.chi_h),
        )
    )
    checks.append(_check("chi_h integer-valued: glued family", True, integer_valued(man.chi_h)))

    limit = bmy_report(man)
    checks.append(_check("limit of c1^2/chi_h", Fraction(9), limit.ratio))
    checks.append(
        CheckResult(
            "asymptotic side of the 9*chi_h line",
            "below",
            limit.side,
            limit.side == "below",
        )
    )

    # Numeric tables for the two smallest positive-signature members.
    table = {
        3: {"chi_h": 1163, "c1sq": 9641, "c2": 4315, "sigma": 337},
        4: {"chi_h": 7490, "c1sq": 63874, "c2": 26006, "sigma": 3954},
    }
    for n, row in table.items():
        built = build_family(n).manifold
        for key, expected in row.items():
            value = {"chi_h": built.chi_h, "c1sq": built.c1sq, "c2": built.c2, "sigma": built.sigma}[key]
            note = _SIGMA_TABLE_NOTE if (n, key) == (3, "sigma") else ""
            checks.append(_check(f"table n={n}: {key}", expected, value, note))

    # Scan n = 2..n_max: numeric/symbolic agreement, integrality, signature
    # sign, and the climb of the ratio toward 9.
    sym = man.invariants()
    previous_ratio = None
    increasing = True
    all_below = True
    integral = True
    agree = True
    sign_ok = True
    for n in range(2, n_max + 1):
        built = build_family(n).manifold
        for key, value in built.invariants().items():
            if scalar_eval(sym[key], n) != value:
                agree = False
        if as_scalar(built.chi_h).denominator != 1:
            integral = False
        if (built.sigma > 0) != (n >= 3):
            sign_ok = False
        report = bmy_report(built)
        if report.gap <= 0:
            all_below = False
        if previous_ratio is not None and report.ratio <= previous_ratio:
            if n >= 4:  # monotonicity claim starts at n = 3
                increasing = False
        previous_ratio = report.ratio

    checks.append(_check(f"numeric equals symbolic, n = 2..{n_max}", True, agree))
    checks.append(_check(f"chi_h integral, n = 2..{n_max}", True, integral))
    checks.append(
        _check("sigma at n=2", -30, build_family(2).manifold.sigma)
    )
    checks.append(
        _check(f"sigma > 0 exactly when n >= 3 (n = 2..{n_max})", True, sign_ok)
    )
    checks.append(_check(f"below the 9*chi_h line for n = 2..{n_max}", True, all_below))
    checks.append(_check(f"ratio strictly increasing, n = 3..{n_max}", True, increasing))
    if n_max >= 50:
        r50 = bmy_report(build_family(50).manifold).ratio
        checks.append(
            CheckResult(
                "ratio at n=50 exceeds 8.99",
                "> 8.99",
                format_decimal(r50),
                r50 > Fraction(899, 100),
            )
        )
    return checks


@dataclass(frozen=True)
class ExoticReport:
    """Distinct smooth structures on one member of the glued family."""

    n: int
    base: ManifoldRecord
    family: FamilyReport
    symplectic_count: int
    non_symplectic_count: int


def exotic_family(n: int, count: int) -> ExoticReport:
    """Surger the n-th glued manifold along `count` torus knots and `count`
    twist knots; all 2*count ledgers must be pairwise distinct, the torus
    half monic (symplectic candidates), the twist half non-monic.

    The surgeries run along the square-zero torus in the K3-block complement
    that the construction never touches; the fresh ledger relative to that
    class is declared nonzero and normalized to 1.
    """
    if not isinstance(count, int) or count < 1:
        raise ValueError(f"count must be a positive integer, got {count}")
    base = build_family(n).manifold
    base = replace(
        base,
        sw=SWLedger(
            LaurentPoly.one(),
            provenance=(
                "ledger relative to the surviving square-zero torus in the "
                "K3-block complement (assumed intact through the construction); "
                "nonzero for the symplectic base, normalized to 1",
            ),
        ),
    )
    base = base.with_surface(
        "surviving torus", MarkedSurface(1, 0, "torus in the K3-block complement")
    )
    knots = [torus_knot(2, 2 * k + 1) for k in range(1, count + 1)]
    knots += nonfibered_nonmonic_family(count)
    family = distinguish_family(base, knots, torus="surviving torus")
    return ExoticReport(
        n,
        base,
        family,
        symplectic_count=len(family.symplectic()),
        non_symplectic_count=len(family.non_symplectic()),
    )
