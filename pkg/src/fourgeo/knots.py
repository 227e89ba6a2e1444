"""Fibered-knot catalog, Alexander polynomials, and the knot-surgery ledger.

The Seiberg-Witten bookkeeping here is deliberately minimal: an SWLedger is
a single Laurent polynomial in t, the invariant relative to one
distinguished square-zero torus class.  Knot surgery along that torus
multiplies the ledger by Delta_K(t^2), the Fintushel-Stern rule; that is all
an "infinitely many smooth structures" argument needs, since distinct
Alexander polynomials then give pairwise-distinct ledgers.

Knots whose Alexander polynomial would be astronomically large (the genus
of the gluing surface grows like 3n^5) are carried with a concrete
descriptor but no materialized polynomial; surgery with such a knot records
the Delta factor symbolically in the ledger instead of expanding it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

from .algebra import LaurentPoly, Poly, Scalar, as_scalar, is_monic_symmetric, scalar_str
from .calculus import ManifoldRecord, MarkedSurface, UNKNOWN, declared_false

#: Largest genus for which find_fibered_knot_of_genus materializes the
#: Alexander polynomial (support size ~2g); beyond it the factor is deferred.
ALEXANDER_GENUS_CAP = 50_000


@dataclass(frozen=True)
class Knot:
    """A knot in the 3-sphere, described just closely enough for surgery:
    genus, Alexander polynomial, and whether it is fibered.

    alexander may be None for a knot whose polynomial is deliberately not
    materialized (symbolic genus, or genus above ALEXANDER_GENUS_CAP).
    """

    descriptor: str
    genus: Scalar
    alexander: LaurentPoly | None
    fibered: bool

    def __post_init__(self):
        object.__setattr__(self, "genus", as_scalar(self.genus))
        g = self.genus
        if isinstance(g, Fraction) and (g.denominator != 1 or g < 0):
            raise ValueError(f"knot genus must be a nonnegative integer, got {g}")
        a = self.alexander
        if a is not None:
            if a.is_zero():
                raise ValueError("Alexander polynomial cannot be zero")
            if not a.is_symmetric():
                raise ValueError(f"Alexander polynomial must satisfy D(t) = D(1/t): {a}")
            if a(1) not in (1, -1):
                raise ValueError(f"Alexander polynomial must have D(1) = +-1: {a}")
            if self.fibered and not is_monic_symmetric(a):
                raise ValueError(f"fibered knot needs a monic Alexander polynomial: {a}")

    def is_trivial(self) -> bool:
        return self.alexander is not None and self.alexander == LaurentPoly.one()


def _divide_by_t_power_minus_1(coeffs: list[int], k: int) -> list[int]:
    # Exact dense division by (t^k - 1).  With D = Q*(t^k - 1) the
    # coefficients satisfy d[j] = q[j-k] - q[j], so q[j-k] = d[j] + q[j]
    # walking j downward; the k lowest coefficients must then cancel.
    deg = len(coeffs) - 1
    if deg < k:
        raise ValueError("not divisible by t^k - 1")
    quotient = [0] * (deg - k + 1)
    for j in range(deg, k - 1, -1):
        quotient[j - k] = coeffs[j] + (quotient[j] if j <= deg - k else 0)
    if any(coeffs[j] + quotient[j] != 0 for j in range(min(k, len(quotient)))):
        raise ValueError("not divisible by t^k - 1")
    if any(coeffs[j] != 0 for j in range(len(quotient), k)):
        raise ValueError("not divisible by t^k - 1")
    return quotient


def torus_knot_alexander(p: int, q: int) -> LaurentPoly:
    """Alexander polynomial of the (p, q) torus knot, symmetric form.

    Computed by exact division, (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)),
    then recentered so that D(t) = D(1/t).
    """
    numerator = [0] * (p * q + 2)
    numerator[p * q + 1] = 1
    numerator[p * q] = -1
    numerator[1] = -1
    numerator[0] = 1
    quotient = _divide_by_t_power_minus_1(numerator, p)
    quotient = _divide_by_t_power_minus_1(quotient, q)
    genus = (p - 1) * (q - 1) // 2
    return LaurentPoly({e - genus: c for e, c in enumerate(quotient) if c})


def torus_knot(p: int, q: int) -> Knot:
    """The (p, q) torus knot: fibered, genus (p-1)(q-1)/2."""
    if not (isinstance(p, int) and isinstance(q, int)) or p < 2 or q < 2:
        raise ValueError(f"torus knot parameters must be integers >= 2, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise ValueError(f"not a knot: gcd({p}, {q}) != 1")
    genus = (p - 1) * (q - 1) // 2
    return Knot(f"torus({p},{q})", genus, torus_knot_alexander(p, q), fibered=True)


def unknot() -> Knot:
    return Knot("unknot", 0, LaurentPoly.one(), fibered=True)


def find_fibered_knot_of_genus(genus) -> Knot:
    """A fibered knot of the requested genus: the (2, 2g+1) torus knot.

    genus 0 returns the unknot.  A polynomial genus (symbolic construction
    parameter) or a genus above ALEXANDER_GENUS_CAP yields a knot with the
    Alexander polynomial left unmaterialized.
    """
    genus = as_scalar(genus)
    if isinstance(genus, Poly):
        return Knot(f"torus(2, 2*({scalar_str(genus)})+1)", genus, None, fibered=True)
    if genus.denominator != 1 or genus < 0:
        raise ValueError(f"knot genus must be a nonnegative integer, got {genus}")
    g = int(genus)
    if g == 0:
        return unknot()
    if g > ALEXANDER_GENUS_CAP:
        return Knot(f"torus(2,{2 * g + 1})", g, None, fibered=True)
    return torus_knot(2, 2 * g + 1)


def twist_knot(m: int) -> Knot:
    """The m-twist knot with Alexander polynomial m*t - (2m+1) + m/t;
    not fibered and not monic for m >= 2."""
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"twist parameter must be an integer >= 2, got {m}")
    alexander = LaurentPoly({1: m, 0: -(2 * m + 1), -1: m})
    return Knot(f"twist({m})", 1, alexander, fibered=False)


def nonfibered_nonmonic_family(count: int) -> list[Knot]:
    """count twist knots (m = 2 .. count+1): pairwise-distinct non-monic
    Alexander polynomials, none fibered."""
    if not isinstance(count, int) or count < 1:
        raise ValueError(f"family size must be a positive integer, got {count}")
    return [twist_knot(m) for m in range(2, count + 2)]


@dataclass(frozen=True)
class SWLedger:
    """Seiberg-Witten invariant relative to one distinguished torus class.

    value holds the materialized Laurent polynomial; deferred lists factor
    descriptions that were not expanded (the true ledger is value times all
    deferred factors, each of which is nonzero).
    """

    value: LaurentPoly
    deferred: tuple[str, ...] = ()
    provenance: tuple[str, ...] = ()

    def __str__(self):
        s = str(self.value)
        for factor in self.deferred:
            s += f" * {factor}"
        return s


def knot_surgery(
    record: ManifoldRecord,
    knot: Knot,
    torus: str = "fiber",
    sum_target: str | None = None,
) -> ManifoldRecord:
    """Fintushel-Stern knot surgery along a designated square-zero torus.

    (e, sigma) are unchanged; the ledger is multiplied by Delta_K(t^2).  The
    symplectic flag survives iff the knot is fibered; surgery along a
    non-fibered knot with non-monic Alexander polynomial is declared
    non-symplectic.  If sum_target names a marked surface, that surface
    absorbs the knot fiber: its genus grows by the knot genus (the internal
    sum used to build gluing surfaces of prescribed genus).
    """
    if record.sw is None:
        raise ValueError("knot surgery needs a Seiberg-Witten ledger on the record")
    if not record.has_surface(torus):
        raise ValueError(f"knot surgery needs a designated square-zero torus: no surface named {torus!r}")
    t = record.surface(torus)
    if as_scalar(t.genus) != 1 or as_scalar(t.self_int) != 0:
        raise ValueError(f"surgery torus must have genus 1 and square 0, got {t}")

    if knot.alexander is None:
        sw = SWLedger(
            record.sw.value,
            record.sw.deferred + (f"Delta[{knot.descriptor}](t^2)",),
            record.sw.provenance
            + (f"times Delta[{knot.descriptor}](t^2), Fintushel-Stern rule (not expanded)",),
        )
    else:
        sw = SWLedger(
            record.sw.value * knot.alexander.substitute_square(),
            record.sw.deferred,
            record.sw.provenance + (f"times Delta[{knot.descriptor}](t^2), Fintushel-Stern rule",),
        )

    if knot.fibered:
        symplectic = record.symplectic
    elif knot.alexander is not None and not is_monic_symmetric(knot.alexander):
        symplectic = declared_false(
            "knot surgery along a non-fibered knot with non-monic Alexander polynomial"
        )
    else:
        symplectic = UNKNOWN

    out = replace(record, sw=sw, symplectic=symplectic)
    if sum_target is not None:
        s = out.surface(sum_target)
        out = out.with_surface(
            sum_target, MarkedSurface(s.genus + knot.genus, s.self_int, s.name)
        )
    return out.with_log(f"knot_surgery({knot.descriptor}, torus={torus!r})")


@dataclass(frozen=True)
class FamilyEntry:
    knot: str
    sw: LaurentPoly
    monic: bool
    symplectic_candidate: bool
    note: str = ""


@dataclass(frozen=True)
class FamilyReport:
    """Outcome of surgering one base record along a list of knots."""

    entries: tuple[FamilyEntry, ...]
    pairwise_distinct: bool
    collisions: tuple[tuple[str, str], ...]

    def symplectic(self) -> list[FamilyEntry]:
        return [e for e in self.entries if e.symplectic_candidate]

    def non_symplectic(self) -> list[FamilyEntry]:
        return [e for e in self.entries if not e.symplectic_candidate]


def distinguish_family(
    base: ManifoldRecord, knots: list[Knot], torus: str = "fiber"
) -> FamilyReport:
    """Surger the base record along every knot and compare the ledgers.

    The resulting Seiberg-Witten values are compared structurally; the
    entries are partitioned into symplectic candidates (fibered knots, monic
    polynomials) and non-symplectic candidates (non-monic polynomials).
    """
    entries = []
    for knot in knots:
        if knot.alexander is None:
            raise ValueError(f"cannot compare an unexpanded Alexander polynomial: {knot.descriptor}")
        surgered = knot_surgery(base, knot, torus=torus)
        note = "trivial Alexander polynomial, no exotic pair" if knot.is_trivial() else ""
        entries.append(
            FamilyEntry(
                knot.descriptor,
                surgered.sw.value,
                monic=is_monic_symmetric(knot.alexander),
                symplectic_candidate=knot.fibered,
                note=note,
            )
        )
    collisions = []
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            if entries[i].sw == entries[j].sw:
                collisions.append((entries[i].knot, entries[j].knot))
    return FamilyReport(tuple(entries), not collisions, tuple(collisions))
