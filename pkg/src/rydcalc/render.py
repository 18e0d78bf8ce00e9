"""ASCII pictures of diagrams: used roots as ●, unused as ○.

Flag diagrams are drawn on the diamond lattice of positive roots, highest
root on top; roots outside every region (the Levi part) show as '·' and a
'|' separates horizontally adjacent roots of different regions.  Isotropic
diagrams are drawn row by row as top staircase, then base.
"""

from __future__ import annotations

from .roots import TypeARoot
from .ryd import FlagRYD, IsotropicRYD

USED, UNUSED, LEVI = "●", "○", "·"

__all__ = ["render_flag", "render_isotropic", "render_two_row"]


def render_flag(ryd: FlagRYD) -> str:
    shape = ryd.shape
    n = shape.n
    used = ryd.roots()

    def region(a: int, b: int):
        i, j = shape.interval_of(a), shape.interval_of(b)
        return None if i == j else (i, j)

    lines = [f"Fl n={n} k={list(shape.k)}"]
    for h in range(n - 1, 0, -1):
        cells = [" "] * (2 * n - 3)
        for a in range(1, n - h + 1):
            b = a + h
            x = a + b - 3
            r = region(a, b)
            cells[x] = LEVI if r is None else (USED if TypeARoot(a, b) in used else UNUSED)
            if a > 1 and region(a - 1, b - 1) != r:
                cells[x - 1] = "|"
        lines.append("".join(cells).rstrip())
    for (i, j), p in ryd.parts:
        lines.append(f"  region {i},{j}: {list(p)}")
    return "\n".join(lines)


def render_isotropic(ryd: IsotropicRYD) -> str:
    family = "OG(%d,%d)" % (ryd.k, 2 * ryd.n + (1 if ryd.family == "B" else 0))
    charge = f" charge={ryd.charge}" if ryd.charge else ""
    lines = [f"{family} (base | top){charge}"]
    for i in range(ryd.k):
        stair = ryd.k - 1 - i
        top = USED * ryd.top[i] + UNUSED * (stair - ryd.top[i])
        base = USED * ryd.base[i] + UNUSED * (ryd.width - ryd.base[i])
        lines.append(f"  {top:>{ryd.k - 1}} | {base}")
    return "\n".join(lines)


def render_two_row(x) -> str:
    """A two-row shape drawn through its isotropic diagram."""
    return render_isotropic(x.to_isotropic())
