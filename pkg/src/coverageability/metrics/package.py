"""Package-level lift of class and method metrics."""

from __future__ import annotations

from typing import Sequence

from ..javamodel.model import ClassDecl, PackageDecl
from .classlevel import ClassSizes
from .method import MethodMetrics
from .schema import PACKAGE_FAMILIES, PACKAGE_PLAIN
from .submetrics import family_values

# package plain metric -> class metric it sums
_SUMMED = {
    "PKNOSM": "CSNOSM",
    "PKNOSA": "CSNOSA",
    "PKNOIM": "CSNOIM",
    "PKNOIA": "CSNOIA",
    "PKNOMNAMM": "CSNOMNAMM",
    "PKNODM": "CSNODM",
    "PKNOPM": "CSNOPM",
    "PKNOPRM": "CSNOPRM",
    "PKNOPLM": "CSNOPLM",
    "PKNOAMM": "CSNOAMM",
}

_METHOD_FAMILY = {"PKCC": "CSCC", "PKNESTING": "CSNESTING"}
_CLASS_FAMILY = {"PKLOC": "CSLOC", "PKNOST": "CSNOST"}


def compute_package_metrics(
    package: PackageDecl,
    classes: Sequence[ClassDecl],
    class_values: Sequence[dict],
    sizes: Sequence[ClassSizes],
    methods: Sequence[Sequence[MethodMetrics]],
) -> dict[str, float]:
    """Aggregate the member classes of `package` (inputs are aligned per class)."""
    if not classes:
        raise ValueError(f"package {package.name!r} has no classes")
    out: dict[str, float] = {}
    pooled = [m for ms in methods for m in ms]
    for fam in PACKAGE_FAMILIES:
        if fam.base in _METHOD_FAMILY:
            src = _METHOD_FAMILY[fam.base]
            out.update(family_values(fam, pooled, lambda m, v, s=src: m.value(s, v)))
        else:
            src = _CLASS_FAMILY[fam.base]
            out.update(family_values(fam, sizes, lambda c, v, s=src: c.value(s, v)))
    for pk, cs in _SUMMED.items():
        out[pk] = float(sum(cv[cs] for cv in class_values))
    out["PKNOCS"] = float(len(classes))
    out["PKNOFL"] = float(len(package.files))
    out["PKNOI"] = float(sum(1 for c in classes if c.kind == "interface"))
    out["PKNOAC"] = float(sum(1 for c in classes if c.kind != "interface" and c.is_abstract))
    missing = set(PACKAGE_PLAIN) - set(out)
    if missing:
        raise AssertionError(f"package metrics not computed: {sorted(missing)}")
    return out
