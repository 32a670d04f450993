"""Class-level base metrics and the method-to-class sub-metric webs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from ..javamodel.model import ClassDecl, ProjectModel
from .method import MethodMetrics, count_statements, method_metrics, span_lines
from .schema import CLASS_FAMILIES, CLASS_PLAIN
from .submetrics import family_values

# families whose canonical (SUM over all methods) cell is replaced by the
# class-wide measure: lines spanned by the class, statements incl. fields
_CLASS_WIDE = ("CSLOC", "CSNOST")


@dataclass(frozen=True)
class ClassSizes:
    """Class-wide size measures, reused by the package lift."""

    loc_code: int
    loc_comment: int
    loc_total: int
    nost_decl: int
    nost_exec: int

    @property
    def nost(self) -> int:
        return self.nost_decl + self.nost_exec

    def value(self, family: str, variant: str) -> int:
        if family == "CSLOC":
            return {"code": self.loc_code, "comment": self.loc_comment, "total": self.loc_total}[variant]
        return {"all": self.nost, "declarative": self.nost_decl, "executable": self.nost_exec}[variant]


def _closure(start: str, edges: Mapping[str, frozenset]) -> set[str]:
    seen: set[str] = set()
    stack = list(edges.get(start, ()))
    while stack:
        n = stack.pop()
        if n in seen or n == start:
            continue
        seen.add(n)
        stack.extend(edges.get(n, ()))
    return seen


class ClassMetricsContext:
    """Project-wide facts shared by every class computation (dependency graph)."""

    def __init__(self, model: ProjectModel):
        self.model = model
        self.index = model.index

    @cached_property
    def fanout(self) -> dict[str, frozenset]:
        out = {}
        for qn, c in self.index.classes.items():
            f = self.index.facts[qn]
            deps = set(f.field_types | f.param_types | f.instantiated | f.receivers | f.other_types)
            deps.update(self.index.parents.get(qn, ()))
            deps.update(cs.target_class for cs in f.calls if cs.target_class)
            deps.update(owner for owner, _ in f.foreign_fields)
            deps.discard(qn)
            out[qn] = frozenset(d for d in deps if d in self.index.classes)
        return out

    @cached_property
    def fanin(self) -> dict[str, frozenset]:
        rev: dict[str, set] = {qn: set() for qn in self.index.classes}
        for src, deps in self.fanout.items():
            for d in deps:
                rev[d].add(src)
        return {k: frozenset(v) for k, v in rev.items()}

    def methods(self, cls: ClassDecl) -> list[MethodMetrics]:
        unit = self.model.file(cls.file)
        return [method_metrics(m, unit) for m in cls.callables]

    def sizes(self, cls: ClassDecl) -> ClassSizes:
        unit = self.model.file(cls.file)
        code, comment, total = span_lines(unit, cls.start_line, cls.end_line)
        decl = exe = 0
        for m in cls.callables:
            d, e = count_statements(m.body)
            decl += d
            exe += e
        # each field declaration statement is one declarative statement
        decl += len(cls.field_decls)
        for fd in cls.field_decls:
            for d in fd.declarators:
                if d.init is not None:
                    dd, ee = count_statements(d.init)
                    decl, exe = decl + dd, exe + ee
        for init in cls.initializers:
            d, e = count_statements(init.body)
            decl += d
            exe += e
        return ClassSizes(code, comment, total, decl, exe)

    def compute(self, cls: ClassDecl) -> tuple[dict[str, float], list[MethodMetrics], ClassSizes]:
        """All class-slice features of `cls`, plus the pieces the package lift reuses."""
        methods = self.methods(cls)
        sizes = self.sizes(cls)
        values: dict[str, float] = {}
        for fam in CLASS_FAMILIES:
            cells = family_values(fam, methods, lambda m, v, b=fam.base: m.value(b, v))
            if fam.base in _CLASS_WIDE:
                for stem, variant in fam.variants:
                    cells[stem] = float(sizes.value(fam.base, variant))
            values.update(cells)
        values.update(self.plain(cls))
        return values, methods, sizes

    def plain(self, cls: ClassDecl) -> dict[str, float]:
        qn = cls.qualified_name
        idx = self.index
        facts = idx.facts[qn]
        methods = cls.methods
        v: dict[str, float] = {}

        v["CSNOSM"] = sum(1 for m in methods if m.is_static)
        v["CSNOIM"] = sum(1 for m in methods if not m.is_static)
        v["CSNOSA"] = sum(1 for f in cls.fields if f.is_static)
        v["CSNOIA"] = sum(1 for f in cls.fields if not f.is_static)
        v["CSNOM"] = len(methods)
        v["CSNOMNAMM"] = sum(1 for m in methods if m.is_namm)
        v["CSNOCON"] = len(cls.constructors)
        v["CSNOAMM"] = len(methods) - v["CSNOMNAMM"]
        v["CSNOPM"] = sum(1 for m in methods if m.visibility == "public")
        v["CSNOPRM"] = sum(1 for m in methods if m.visibility == "protected")
        v["CSNOPLM"] = sum(1 for m in methods if m.visibility == "private")
        v["CSNODM"] = sum(1 for m in methods if m.visibility == "default")

        # LCOM-style: pairs sharing no own field minus pairs sharing one
        used = [facts.own_fields_used.get(m.key, frozenset()) for m in methods if m.body is not None]
        disjoint = sharing = 0
        for i in range(len(used)):
            for j in range(i + 1, len(used)):
                if used[i] & used[j]:
                    sharing += 1
                else:
                    disjoint += 1
        v["LOCM"] = max(disjoint - sharing, 0)

        v["CBO"] = len(facts.field_types | facts.param_types | facts.instantiated | facts.receivers)
        declared = {m.key for m in cls.constructors + methods}
        called = {c.target for c in facts.calls if c.target}
        v["RFC"] = len(declared | called)
        v["FANOUT"] = len(self.fanout[qn])
        v["FANIN"] = len(self.fanin[qn])
        v["DEPENDS"] = len(_closure(qn, self.fanout))
        v["DEPENDSBY"] = len(_closure(qn, self.fanin))
        v["ATFD"] = len(facts.foreign_fields)
        ancestors = idx.ancestors(qn)
        anc_set = set(ancestors)
        namm_callers = {m.key for m in cls.callables if m.is_namm}
        v["CFNAMM"] = sum(
            1
            for c in facts.calls
            if c.caller in namm_callers
            and c.target_class is not None
            and c.target_class != qn
            and c.target_class not in anc_set
        )
        v["DAC"] = len(facts.class_typed_fields)
        v["NOMCALL"] = len(facts.calls)

        v["DIT"] = self.dit(cls)
        v["NOC"] = len(idx.children.get(qn, ()))
        v["NOP"] = len(idx.parents.get(qn, ()))
        v["NOII"] = len(cls.interfaces)
        own = {(m.name, m.parameter_count) for m in methods}
        inherited: set = set()
        for a in ancestors:
            for m in idx.classes[a].methods:
                if m.visibility != "private":
                    inherited.add((m.name, m.parameter_count))
        v["NIM"] = len(inherited - own)
        v["NMO"] = len(own & inherited)
        return {k: float(v[k]) for k in CLASS_PLAIN}

    def dit(self, cls: ClassDecl) -> int:
        """Superclass edges up to the first class outside the project.

        A class with no ``extends`` still has the implicit root as parent.
        Interfaces count the longest chain of extended project interfaces.
        """
        if cls.kind == "interface":
            return self._interface_depth(cls.qualified_name, set())
        return 1 + len(self.index.superclass_chain(cls.qualified_name))

    def _interface_depth(self, qn: str, seen: set) -> int:
        seen = seen | {qn}
        depths = [
            1 + self._interface_depth(p, seen)
            for p in self.index.parents.get(qn, ())
            if p not in seen
        ]
        return max(depths, default=0)
