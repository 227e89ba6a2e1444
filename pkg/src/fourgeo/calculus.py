"""Surgery calculus on 4-manifold records.

A ManifoldRecord carries the Euler characteristic e and signature sigma as
exact Scalars (rational numbers or polynomials in the parameter n); every
other characteristic number is derived:

    c1^2  = 3*sigma + 2*e        (Hirzebruch signature formula)
    chi_h = (sigma + e) / 4      (holomorphic Euler characteristic)
    c2    = e

The operations below (blow-up, branched cover, surface resolution, fiber
sum, ...) are pure functions from records to records.  Records are immutable;
each operation appends a one-line descriptor to the provenance log.

Fundamental-group information is never computed.  Simple-connectivity (and
the symplectic property) are *declared* tri-state attributes carrying the
textual justification supplied by whoever asserted them.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence

from .algebra import (
    Poly,
    Scalar,
    as_scalar,
    divide_exact,
    integer_valued,
    scalar_str,
)

if TYPE_CHECKING:
    from .knots import SWLedger

#: Sample range used to sanity-check symbolic count arguments (the working
#: range of the constructions starts at n = 2).
_SYMBOLIC_SAMPLE = range(2, 11)


@dataclass(frozen=True)
class Declared:
    """Tri-state attribute: asserted true/false with a reason, or unknown."""

    value: bool | None = None
    reason: str = ""

    def is_true(self) -> bool:
        return self.value is True

    def is_false(self) -> bool:
        return self.value is False

    def __str__(self):
        if self.value is None:
            return "unknown"
        word = "yes" if self.value else "no"
        return f"{word} ({self.reason})" if self.reason else word


UNKNOWN = Declared()


def declared_true(reason: str) -> Declared:
    return Declared(True, reason)


def declared_false(reason: str) -> Declared:
    return Declared(False, reason)


@dataclass(frozen=True)
class MarkedSurface:
    """An embedded-surface descriptor: genus and self-intersection."""

    genus: Scalar
    self_int: Scalar
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "genus", as_scalar(self.genus))
        object.__setattr__(self, "self_int", as_scalar(self.self_int))
        g = self.genus
        if isinstance(g, Fraction) and (g.denominator != 1 or g < 0):
            raise ValueError(f"surface genus must be a nonnegative integer, got {g}")

    def euler(self) -> Scalar:
        return 2 - 2 * self.genus

    def __str__(self):
        label = f"{self.name}: " if self.name else ""
        return f"{label}genus {scalar_str(self.genus)}, self-intersection {scalar_str(self.self_int)}"


@dataclass(frozen=True)
class BranchData:
    """Aggregate branch-divisor data for a cyclic branched cover.

    The divisor components are assumed smooth and pairwise disjoint; only
    the totals enter the characteristic-number formulas:

      degree    cover degree d
      index     branching index m along the divisor (m divides d)
      e_branch  Euler characteristic of the total branch divisor
      k_dot_d   canonical class of the base dotted with the divisor
      d_sq      total self-intersection of the divisor
    """

    degree: Scalar
    index: Scalar
    e_branch: Scalar
    k_dot_d: Scalar
    d_sq: Scalar

    def __post_init__(self):
        for f in ("degree", "index", "e_branch", "k_dot_d", "d_sq"):
            object.__setattr__(self, f, as_scalar(getattr(self, f)))
        _require_count(self.degree, "cover degree", positive=True)
        _require_count(self.index, "branching index", positive=True)


@dataclass(frozen=True)
class ManifoldRecord:
    """A closed oriented 4-manifold, tracked through (e, sigma) plus flags."""

    e: Scalar
    sigma: Scalar
    simply_connected: Declared = UNKNOWN
    symplectic: Declared = UNKNOWN
    almost_complex: bool = False
    surfaces: tuple[tuple[str, MarkedSurface], ...] = ()
    sw: "SWLedger | None" = None
    log: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "e", as_scalar(self.e))
        object.__setattr__(self, "sigma", as_scalar(self.sigma))
        if self.almost_complex and not integer_valued(self.chi_h):
            raise ValueError(
                f"almost-complex record with non-integral chi_h = {scalar_str(self.chi_h)}"
            )

    @property
    def c2(self) -> Scalar:
        return self.e

    @property
    def c1sq(self) -> Scalar:
        return 3 * self.sigma + 2 * self.e

    @property
    def chi_h(self) -> Scalar:
        return (self.sigma + self.e) / 4

    def surface(self, name: str) -> MarkedSurface:
        for key, s in self.surfaces:
            if key == name:
                return s
        raise KeyError(f"no marked surface named {name!r} on this record")

    def has_surface(self, name: str) -> bool:
        return any(key == name for key, _ in self.surfaces)

    def with_surface(self, name: str, s: MarkedSurface) -> "ManifoldRecord":
        kept = tuple((k, v) for k, v in self.surfaces if k != name)
        return replace(self, surfaces=kept + ((name, s),))

    def with_log(self, entry: str) -> "ManifoldRecord":
        return replace(self, log=self.log + (entry,))

    def invariants(self) -> dict[str, Scalar]:
        return {
            "e": self.e,
            "sigma": self.sigma,
            "c2": self.c2,
            "c1sq": self.c1sq,
            "chi_h": self.chi_h,
        }


def make_manifold(e, sigma) -> ManifoldRecord:
    """Record with the given (e, sigma); everything else starts unknown."""
    e = as_scalar(e)
    sigma = as_scalar(sigma)
    return ManifoldRecord(
        e, sigma, log=(f"manifold(e={scalar_str(e)}, sigma={scalar_str(sigma)})",)
    )


def _require_count(k: Scalar, what: str, positive: bool = False) -> None:
    """Validate a point/sheet count: a (non)negative integer at numeric n.

    Symbolic counts are required to be integer-valued with the right sign on
    the working range n >= 2 (sampled) and a nonneg leading coefficient.
    """
    bound = 1 if positive else 0
    if isinstance(k, Fraction):
        if k.denominator != 1 or k < bound:
            kind = "positive" if positive else "nonnegative"
            raise ValueError(f"{what} must be a {kind} integer, got {k}")
        return
    if not integer_valued(k):
        raise ValueError(f"{what} must be integer-valued, got {scalar_str(k)}")
    if k.leading_coefficient < 0 or any(k(j) < bound for j in _SYMBOLIC_SAMPLE):
        kind = "positive" if positive else "nonnegative"
        raise ValueError(f"{what} must be {kind} for n >= 2, got {scalar_str(k)}")


def _sheet_count(degree: Scalar, index: Scalar) -> Scalar:
    """d/m, the sheets meeting over the branch divisor; m must divide d."""
    sheets = divide_exact(degree, index)
    bad = sheets.denominator != 1 if isinstance(sheets, Fraction) else not integer_valued(sheets)
    if bad:
        raise ValueError(
            f"branching index {scalar_str(index)} does not divide degree {scalar_str(degree)}"
        )
    return sheets


def blow_up(record: ManifoldRecord, k) -> ManifoldRecord:
    """Blow up k points: e -> e + k, sigma -> sigma - k (so c1^2 drops by k).

    Marked surfaces are carried along unchanged; a surface passing through
    blown-up points must be updated separately with surface_blowup.
    """
    k = as_scalar(k)
    _require_count(k, "blow-up count")
    out = replace(record, e=record.e + k, sigma=record.sigma - k)
    return out.with_log(f"blow_up(k={scalar_str(k)})")


def surface_blowup(s: MarkedSurface, points) -> MarkedSurface:
    """Proper transform of a surface through the given number of blown-up
    points: genus unchanged, self-intersection drops by the point count."""
    points = as_scalar(points)
    _require_count(points, "blown-up point count")
    return MarkedSurface(s.genus, s.self_int - points, s.name)


def branched_cover(record: ManifoldRecord, branch: BranchData) -> ManifoldRecord:
    """Cyclic degree-d cover branched with index m over a disjoint divisor.

    With lambda = 1 - 1/m and aggregate divisor data (e_branch, K.D, D^2):

        e'    = d*(e - e_branch) + (d/m)*e_branch
        c1^2' = d*(c1^2 + 2*lambda*K.D + lambda^2*D^2)

    and sigma' is recovered from (e', c1^2') via sigma = (c1^2 - 2e)/3.
    The result is flagged almost-complex; non-integral sigma' or chi_h'
    means the branch data was inconsistent.
    """
    d, m = branch.degree, branch.index
    sheets = _sheet_count(d, m)  # sheets coming together over the divisor
    e_new = d * (record.e - branch.e_branch) + sheets * branch.e_branch
    # d*lambda = (m-1)*(d/m) and d*lambda^2 = (m-1)^2 * (d/m)/m, both exact.
    c1_new = (
        d * record.c1sq
        + 2 * (m - 1) * sheets * branch.k_dot_d
        + (m - 1) ** 2 * divide_exact(sheets * branch.d_sq, m)
    )
    sigma_new = (c1_new - 2 * e_new) / 3
    chi_new = (sigma_new + e_new) / 4
    if isinstance(sigma_new, Fraction):
        consistent = sigma_new.denominator == 1 and chi_new.denominator == 1
    else:
        consistent = integer_valued(sigma_new) and integer_valued(chi_new)
    if not consistent:
        raise ValueError(
            "inconsistent branch data: cover has sigma = "
            f"{scalar_str(sigma_new)}, chi_h = {scalar_str(chi_new)}"
        )
    out = ManifoldRecord(
        e_new,
        sigma_new,
        simply_connected=UNKNOWN,
        symplectic=record.symplectic,
        almost_complex=True,
        log=record.log,
    )
    return out.with_log(
        f"branched_cover(degree={scalar_str(d)}, index={scalar_str(m)}, "
        f"e_branch={scalar_str(branch.e_branch)}, K.D={scalar_str(branch.k_dot_d)}, "
        f"D^2={scalar_str(branch.d_sq)})"
    )


def riemann_hurwitz(e_base, branch_points, degree, index) -> Scalar:
    """Euler characteristic of a degree-d cover of a curve, branched with
    index m over the given number of points: d*(e - b) + (d/m)*b."""
    e_base = as_scalar(e_base)
    b = as_scalar(branch_points)
    d = as_scalar(degree)
    m = as_scalar(index)
    return d * (e_base - b) + _sheet_count(d, m) * b


def euler_of_union(component_eulers: Sequence, intersection_points) -> Scalar:
    """Euler characteristic of a union glued at transverse double points:
    sum of the components minus the number of intersection points."""
    total: Scalar = Fraction(0)
    for e in component_eulers:
        total = total + as_scalar(e)
    return total - as_scalar(intersection_points)


def genus_from_euler(e) -> Scalar:
    """Genus of a closed orientable surface from its Euler characteristic."""
    e = as_scalar(e)
    g = 1 - e / 2
    if isinstance(e, Fraction):
        if e.denominator != 1 or int(e) % 2 != 0:
            raise ValueError(f"genus undefined: Euler characteristic {e} is not an even integer")
        if e > 2:
            raise ValueError(f"genus undefined: Euler characteristic {e} exceeds 2")
    elif not integer_valued(g):
        raise ValueError(
            f"genus undefined: Euler characteristic {scalar_str(e)} is odd at some integers"
        )
    return g


def resolve_surfaces(s1: MarkedSurface, s2: MarkedSurface, k, name: str = "") -> MarkedSurface:
    """Resolve k transverse positive intersections of two surfaces into one
    embedded surface: genus = g1 + g2 + k - 1, square = s1 + s2 + 2k."""
    k = as_scalar(k)
    if (isinstance(k, Fraction) and k <= 0) or (isinstance(k, Poly) and k.is_zero()):
        raise ValueError("resolution needs at least one intersection")
    _require_count(k, "intersection count", positive=True)
    return MarkedSurface(
        s1.genus + s2.genus + k - 1,
        s1.self_int + s2.self_int + 2 * k,
        name,
    )


def fiber_sum(
    left: ManifoldRecord,
    left_surface: MarkedSurface,
    right: ManifoldRecord,
    right_surface: MarkedSurface,
    pi1_surjection: str | None = None,
    complement_trivial: str | None = None,
) -> ManifoldRecord:
    """Symplectic (Gompf) sum along surfaces of equal genus and opposite
    self-intersection:

        e'     = e_left + e_right + 4g - 4
        sigma' = sigma_left + sigma_right   (Novikov additivity)

    The result is declared simply connected only when both justifications
    are supplied: that the gluing surface carries pi_1 onto the left record,
    and that its complement in the right record is simply connected.
    """
    if as_scalar(left_surface.genus) != as_scalar(right_surface.genus):
        raise ValueError(
            "fiber sum genus mismatch: "
            f"{scalar_str(left_surface.genus)} vs {scalar_str(right_surface.genus)}"
        )
    total_sq = left_surface.self_int + right_surface.self_int
    if as_scalar(total_sq) != 0:
        raise ValueError(
            "fiber sum squares do not cancel: "
            f"{scalar_str(left_surface.self_int)} + {scalar_str(right_surface.self_int)} != 0"
        )
    g = left_surface.genus
    if pi1_surjection and complement_trivial:
        sc = declared_true(f"{pi1_surjection}; {complement_trivial}; Seifert-Van Kampen")
    else:
        sc = UNKNOWN
    if left.symplectic.is_true() and right.symplectic.is_true():
        sympl = declared_true("Gompf sum of symplectic manifolds along symplectic surfaces")
    else:
        sympl = UNKNOWN
    out = ManifoldRecord(
        left.e + right.e + 4 * g - 4,
        left.sigma + right.sigma,
        simply_connected=sc,
        symplectic=sympl,
        almost_complex=left.almost_complex and right.almost_complex,
        log=left.log + right.log,
    )
    return out.with_log(
        f"fiber_sum(genus={scalar_str(g)}, squares "
        f"{scalar_str(left_surface.self_int)}/{scalar_str(right_surface.self_int)})"
    )


@dataclass(frozen=True)
class BmyReport:
    """Position of a record relative to the line c1^2 = 9*chi_h."""

    ratio: Fraction  # c1^2/chi_h, or the limit of that ratio in symbolic mode
    gap: Scalar  # 9*chi_h - c1^2
    side: str  # "below", "on" or "above"
    asymptotic: bool  # True when ratio/side describe the large-n limit


def bmy_report(record: ManifoldRecord) -> BmyReport:
    """Compare c1^2 against 9*chi_h.

    Numeric records report the exact ratio; symbolic records report the
    limit ratio (leading coefficient quotient) and the eventual side.
    """
    chi = record.chi_h
    c1 = record.c1sq
    gap = 9 * chi - c1
    symbolic = isinstance(chi, Poly) or isinstance(c1, Poly)
    if symbolic:
        chi_p = chi if isinstance(chi, Poly) else Poly.const(chi)
        c1_p = c1 if isinstance(c1, Poly) else Poly.const(c1)
        if chi_p.is_zero():
            raise ValueError("ratio undefined: chi_h = 0")
        ratio = c1_p.leading_coefficient / chi_p.leading_coefficient
        gap_p = gap if isinstance(gap, Poly) else Poly.const(gap)
        lead = gap_p.leading_coefficient
        side = "on" if gap_p.is_zero() else ("below" if lead > 0 else "above")
        return BmyReport(ratio, gap, side, True)
    if chi == 0:
        raise ValueError("ratio undefined: chi_h = 0")
    ratio = c1 / chi
    side = "on" if gap == 0 else ("below" if gap > 0 else "above")
    return BmyReport(ratio, gap, side, False)
