"""Standard building blocks the construction scripts start from."""

from __future__ import annotations

from .algebra import LaurentPoly
from .calculus import ManifoldRecord, MarkedSurface, declared_false, declared_true
from .knots import SWLedger


def torus4() -> ManifoldRecord:
    """The 4-torus: e = 0, sigma = 0, Kaehler, far from simply connected."""
    return ManifoldRecord(
        0,
        0,
        simply_connected=declared_false("pi_1(T^4) = Z^4"),
        symplectic=declared_true("Kaehler: product of two elliptic curves"),
        almost_complex=True,
        log=("T4",),
    )


def k3_elliptic() -> ManifoldRecord:
    """The elliptically fibered K3 surface E(2): e = 24, sigma = -16.

    Ships with its standard decorations: a regular fiber (square-zero torus,
    the class the Seiberg-Witten ledger is written against, with invariant
    normalized to 1) and a section sphere of square -2.
    """
    return ManifoldRecord(
        24,
        -16,
        simply_connected=declared_true("standard simply connected K3 surface"),
        symplectic=declared_true("Kaehler"),
        almost_complex=True,
        surfaces=(
            ("fiber", MarkedSurface(1, 0, "regular fiber")),
            ("section", MarkedSurface(0, -2, "section")),
        ),
        sw=SWLedger(
            LaurentPoly.one(),
            provenance=("K3 invariant relative to the fiber class is 1",),
        ),
        log=("E2",),
    )


def cp2_reversed() -> ManifoldRecord:
    """CP^2 with reversed orientation: e = 3, sigma = -1 (not almost complex:
    chi_h would be 1/2)."""
    return ManifoldRecord(
        3,
        -1,
        simply_connected=declared_true("CP^2"),
        symplectic=declared_false("b_2^+ = 0"),
        almost_complex=False,
        log=("CP2BAR",),
    )
