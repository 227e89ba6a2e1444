"""Geography scans: (chi_h, c1^2) rows for the glued family, CSV and SVG.

Output is text assembled by hand so that identical inputs give byte-identical
files: LF line endings, fixed column order, exact integers (or p/q) in every
column except the 6-decimal ratio, coordinates derived by exact rational
scaling before formatting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import as_scalar, format_decimal, scalar_str
from .calculus import bmy_report
from .pipeline import build_family

CSV_HEADER = "n,e,sigma,c1sq,chi_h,ratio,bmy_gap,side"


@dataclass(frozen=True)
class GeographyRow:
    n: int
    e: Fraction
    sigma: Fraction
    c1sq: Fraction
    chi_h: Fraction
    ratio: Fraction
    gap: Fraction
    side: str

    def csv(self) -> str:
        return ",".join(
            (
                str(self.n),
                scalar_str(self.e),
                scalar_str(self.sigma),
                scalar_str(self.c1sq),
                scalar_str(self.chi_h),
                format_decimal(self.ratio),
                scalar_str(self.gap),
                self.side,
            )
        )


def scan(n_min: int, n_max: int) -> list[GeographyRow]:
    """Build the family for each n in [n_min, n_max] and collect the rows."""
    if n_min > n_max:
        raise ValueError(f"empty range: {n_min} > {n_max}")
    rows = []
    for n in range(n_min, n_max + 1):
        record = build_family(n).manifold
        report = bmy_report(record)
        rows.append(
            GeographyRow(
                n,
                as_scalar(record.e),
                as_scalar(record.sigma),
                as_scalar(record.c1sq),
                as_scalar(record.chi_h),
                report.ratio,
                as_scalar(report.gap),
                report.side,
            )
        )
    return rows


def render_csv(rows: list[GeographyRow]) -> str:
    return "\n".join([CSV_HEADER] + [row.csv() for row in rows]) + "\n"


# -- SVG scatter -------------------------------------------------------------

_WIDTH, _HEIGHT = 860, 620
_MARGIN = 70


def _fmt(x: Fraction) -> str:
    return format_decimal(x, 2)


def render_svg(rows: list[GeographyRow]) -> str:
    """Scatter of (chi_h, c1^2) with the reference lines c1^2 = 8*chi_h and
    c1^2 = 9*chi_h, linear axes from the origin, points labeled by n."""
    if not rows:
        raise ValueError("nothing to plot")
    x_max = max(row.chi_h for row in rows) * Fraction(21, 20)
    y_max = max(row.c1sq for row in rows) * Fraction(21, 20)
    x_max = max(x_max, Fraction(1))
    y_max = max(y_max, Fraction(1))
    plot_w = Fraction(_WIDTH - 2 * _MARGIN)
    plot_h = Fraction(_HEIGHT - 2 * _MARGIN)

    def px(chi: Fraction) -> Fraction:
        return _MARGIN + chi / x_max * plot_w

    def py(c1: Fraction) -> Fraction:
        return _HEIGHT - _MARGIN - c1 / y_max * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect x="{_MARGIN}" y="{_MARGIN}" width="{_WIDTH - 2 * _MARGIN}" '
        f'height="{_HEIGHT - 2 * _MARGIN}" fill="none" stroke="black"/>',
        f'<text x="{_WIDTH // 2}" y="{_HEIGHT - 20}" text-anchor="middle" '
        f'font-size="14">chi_h</text>',
        f'<text x="20" y="{_HEIGHT // 2}" text-anchor="middle" font-size="14" '
        f'transform="rotate(-90 20 {_HEIGHT // 2})">c1^2</text>',
    ]
    for slope, dash in ((8, "6,4"), (9, "")):
        # clip the ray c1^2 = slope*chi_h to the plot box
        x_end = min(x_max, y_max / slope)
        y_end = slope * x_end
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        parts.append(
            f'<line x1="{_fmt(px(Fraction(0)))}" y1="{_fmt(py(Fraction(0)))}" '
            f'x2="{_fmt(px(x_end))}" y2="{_fmt(py(y_end))}" stroke="gray"{dash_attr}/>'
        )
        parts.append(
            f'<text x="{_fmt(px(x_end) + 4)}" y="{_fmt(py(y_end) + 4)}" '
            f'font-size="12">c1^2 = {slope}*chi_h</text>'
        )
    for row in rows:
        cx, cy = _fmt(px(row.chi_h)), _fmt(py(row.c1sq))
        parts.append(f'<circle cx="{cx}" cy="{cy}" r="3" fill="black"/>')
        parts.append(
            f'<text x="{_fmt(px(row.chi_h) + 6)}" y="{_fmt(py(row.c1sq) - 6)}" '
            f'font-size="11">n={row.n}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
