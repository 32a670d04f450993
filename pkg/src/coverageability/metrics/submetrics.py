"""Statistical operators that lift element-level values to their parent."""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .schema import Family


def apply_op(op: str, values: Sequence[float]) -> float:
    """One operator over a value list; an empty list yields 0 for every op."""
    n = len(values)
    if n == 0:
        return 0.0
    total = math.fsum(values)
    if op == "SUM":
        return total
    if op == "AVG":
        return total / n
    if op == "MIN":
        return float(min(values))
    if op == "MAX":
        return float(max(values))
    if op == "LOG":
        return math.log1p(total)
    if op == "SD":
        mean = total / n
        # population SD
        return math.sqrt(math.fsum((v - mean) ** 2 for v in values) / n)
    raise ValueError(f"unknown operator {op!r}")


def derive_submetrics(
    values: Sequence[float],
    namm: Sequence[bool],
    family: Family,
    variant: str,
    filter: str,
) -> dict[str, float]:
    """Every operator of `family` for one variant and filter.

    ``namm[i]`` tells whether element ``i`` survives the NAMM filter.
    """
    if filter == "NAMM":
        chosen = [v for v, keep in zip(values, namm) if keep]
    elif filter == "ALL":
        chosen = list(values)
    else:
        raise ValueError(f"unknown filter {filter!r}")
    out = {}
    for feat in family.features():
        if feat.variant == variant and feat.filter == filter:
            out[feat.name] = apply_op(feat.op, chosen)
    return out


def family_values(family: Family, rows: Iterable, getter) -> dict[str, float]:
    """All cells of `family`; ``getter(row, variant)`` reads one element value.

    Rows without a ``namm`` attribute always pass the NAMM filter.
    """
    rows = list(rows)
    namm = [getattr(r, "namm", True) for r in rows]
    out: dict[str, float] = {}
    for _, variant in family.variants:
        vals = [getter(r, variant) for r in rows]
        for flt in family.filters:
            out.update(derive_submetrics(vals, namm, family, variant, flt))
    return out
