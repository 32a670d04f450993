"""The fixed, versioned feature schema.

A feature vector is laid out as package slice, then file (lexical) slice,
then class slice. Sub-metric families expand one base metric into
``variant x filter x operator`` cells; the family's canonical cell carries
the bare base name so that the 71 base metrics are addressable directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

SCHEMA_VERSION = "cvg-schema/1"

OPS = ("SUM", "AVG", "MIN", "MAX", "LOG", "SD")
NO_MIN = ("SUM", "AVG", "MAX", "LOG", "SD")
NO_LOG = ("SUM", "AVG", "MIN", "MAX", "SD")
FILTERS = ("ALL", "NAMM")

PACKAGE, FILE, CLASS = "package", "file", "class"


@dataclass(frozen=True)
class Feature:
    name: str
    level: str
    base: str
    op: Optional[str] = None
    filter: Optional[str] = None
    variant: Optional[str] = None

    @property
    def is_base(self) -> bool:
        return self.name == self.base


@dataclass(frozen=True)
class Family:
    """One sub-metric web: every variant stem crossed with filters and ops."""

    base: str
    level: str
    variants: tuple[tuple[str, str], ...]  # (stem, variant label)
    ops: tuple[str, ...]
    filters: tuple[str, ...]
    canonical_op: str

    def features(self) -> list[Feature]:
        out = []
        for stem, variant in self.variants:
            for flt in self.filters:
                for op in self.ops:
                    name = stem
                    if op != self.canonical_op:
                        name += "_" + op
                    if flt == "NAMM":
                        name += "_NAMM"
                    out.append(Feature(name, self.level, self.base, op, flt, variant))
        return out


CC_VARIANTS = ("CC", "CC-strict", "CC-modified", "CC-essential")


def _cc(prefix: str) -> tuple[tuple[str, str], ...]:
    return (
        (prefix + "CC", "CC"),
        (prefix + "CCS", "CC-strict"),
        (prefix + "CCM", "CC-modified"),
        (prefix + "CCE", "CC-essential"),
    )


CLASS_FAMILIES = (
    Family("CSLOC", CLASS, (("CSLOC", "code"), ("CSLOCCMT", "comment"), ("CSLOCTOT", "total")), OPS, FILTERS, "SUM"),
    Family("CSNOST", CLASS, (("CSNOST", "all"), ("CSNOSTD", "declarative"), ("CSNOSTE", "executable")), OPS, FILTERS, "SUM"),
    Family("CSNOP", CLASS, (("CSNOP", ""),), NO_MIN, FILTERS, "SUM"),
    Family("CSCC", CLASS, _cc("CS"), OPS, FILTERS, "SUM"),
    Family("CSNESTING", CLASS, (("CSNESTING", ""),), ("MAX", "AVG"), FILTERS, "MAX"),
    Family("CSPATH", CLASS, (("CSPATH", ""),), NO_MIN, FILTERS, "SUM"),
    Family("CSKNOTS", CLASS, (("CSKNOTS", ""),), NO_MIN, FILTERS, "SUM"),
)

CLASS_PLAIN = (
    # size
    "CSNOSM", "CSNOSA", "CSNOIM", "CSNOIA", "CSNOM", "CSNOMNAMM", "CSNOCON",
    # cohesion and coupling
    "LOCM", "CBO", "RFC", "FANIN", "FANOUT", "DEPENDS", "DEPENDSBY", "ATFD",
    "CFNAMM", "DAC", "NOMCALL",
    # visibility
    "CSNODM", "CSNOPM", "CSNOPRM", "CSNOPLM", "CSNOAMM",
    # inheritance
    "DIT", "NOC", "NOP", "NIM", "NMO", "NOII",
)

PACKAGE_FAMILIES = (
    Family("PKLOC", PACKAGE, (("PKLOC", "code"), ("PKLOCCMT", "comment"), ("PKLOCTOT", "total")), NO_LOG, ("ALL",), "SUM"),
    Family("PKNOST", PACKAGE, (("PKNOST", "all"), ("PKNOSTD", "declarative"), ("PKNOSTE", "executable")), NO_LOG, ("ALL",), "SUM"),
    Family("PKCC", PACKAGE, _cc("PK"), OPS, FILTERS, "SUM"),
    Family("PKNESTING", PACKAGE, (("PKNESTING", ""),), ("MAX", "AVG"), FILTERS, "MAX"),
)

PACKAGE_PLAIN = (
    "PKNOSM", "PKNOSA", "PKNOIM", "PKNOIA", "PKNOMNAMM", "PKNOCS", "PKNOFL",
    "PKNODM", "PKNOPM", "PKNOPRM", "PKNOPLM", "PKNOAMM", "PKNOI", "PKNOAC",
)

LEXICAL = (
    "NOTK", "NOTKU", "NOID", "NOIDU", "NOKW", "NOKWU", "NOASS", "NOOP", "NOOPU",
    "NOSC", "NODOT", "NOREPR", "NOCJST", "NOCUJST", "NOEXST", "NONEW", "NOSUPER",
)

# class features that only make sense relative to other classes of the
# project; dropped together with the package slice in the DS3 variant
CROSS_CLASS = ("CBO", "FANIN", "FANOUT", "DEPENDS", "DEPENDSBY", "NOC")

VARIANTS = ("DS1", "DS2", "DS3", "DS4", "DS5")
DS2_K = 15


@dataclass(frozen=True)
class MetricSchema:
    version: str
    features: tuple[Feature, ...]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(f.name for f in self.features)

    def __len__(self) -> int:
        return len(self.features)

    def index(self, name: str) -> int:
        return _positions(self)[name]

    def partition(self, level: str) -> tuple[str, ...]:
        return tuple(f.name for f in self.features if f.level == level)

    def base_names(self) -> tuple[str, ...]:
        return tuple(f.name for f in self.features if f.is_base)

    def variant_columns(self, variant: str) -> tuple[str, ...]:
        """Columns of a fixed-width variant (DS2 depends on data, see the pipeline)."""
        if variant == "DS1":
            return self.names
        if variant == "DS3":
            return tuple(
                f.name for f in self.features if f.level != PACKAGE and f.name not in CROSS_CLASS
            )
        if variant == "DS4":
            return tuple(
                f.name for f in self.features if f.level == CLASS and f.name not in CROSS_CLASS
            )
        if variant == "DS5":
            return self.base_names()
        raise ValueError(f"variant {variant!r} has no fixed column set")


@lru_cache(maxsize=None)
def _positions(schema: MetricSchema) -> dict[str, int]:
    return {n: i for i, n in enumerate(schema.names)}


def _plain(names, level) -> list[Feature]:
    return [Feature(n, level, n) for n in names]


@lru_cache(maxsize=1)
def full_schema() -> MetricSchema:
    feats: list[Feature] = []
    for fam in PACKAGE_FAMILIES:
        feats += fam.features()
    feats += _plain(PACKAGE_PLAIN, PACKAGE)
    feats += _plain(LEXICAL, FILE)
    for fam in CLASS_FAMILIES:
        feats += fam.features()
    feats += _plain(CLASS_PLAIN, CLASS)
    names = [f.name for f in feats]
    if len(set(names)) != len(names):
        raise AssertionError("duplicate feature names in schema")
    return MetricSchema(SCHEMA_VERSION, tuple(feats))


def family_width(base: str) -> int:
    for fam in CLASS_FAMILIES + PACKAGE_FAMILIES:
        if fam.base == base:
            return len(fam.features())
    raise KeyError(base)
