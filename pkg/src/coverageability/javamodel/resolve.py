"""Project-local name resolution and the symbol index.

Resolution is deliberately shallow: types are resolved through nesting,
imports and the package, variables through lexical scopes, and method calls
by name and arity along project-local ancestors. Anything that leads outside
the analysed sources is recorded as an opaque external name.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping, Optional

from . import ast
from .model import ClassDecl, FieldInfo, FileUnit, MethodDecl, freeze

log = logging.getLogger(__name__)

# pseudo-callers for code outside methods (field initializers, init blocks)
CLASS_INIT = "<clinit>"


@dataclass(frozen=True)
class CallSite:
    caller: str
    name: str
    line: int
    target: Optional[str]  # method key, when resolved inside the project
    target_class: Optional[str]  # receiver class, when project-local


@dataclass(frozen=True)
class ClassFacts:
    calls: tuple[CallSite, ...] = ()
    # per caller key: names of this class's own fields touched
    own_fields_used: Mapping[str, frozenset] = field(default_factory=dict)
    # (owner, field) pairs for fields of other classes
    foreign_fields: frozenset = frozenset()
    field_types: frozenset = frozenset()
    param_types: frozenset = frozenset()
    instantiated: frozenset = frozenset()
    receivers: frozenset = frozenset()
    other_types: frozenset = frozenset()
    external_names: frozenset = frozenset()
    # own fields whose declared type mentions a project-local class
    class_typed_fields: frozenset = frozenset()


@dataclass(frozen=True)
class SymbolIndex:
    classes: Mapping[str, ClassDecl]
    superclass: Mapping[str, Optional[str]]
    external_superclass: Mapping[str, Optional[str]]
    parents: Mapping[str, tuple[str, ...]]
    children: Mapping[str, tuple[str, ...]]
    facts: Mapping[str, ClassFacts]

    def ancestors(self, qname: str) -> list[str]:
        """All project-local ancestors, nearest first, without repeats."""
        out: list[str] = []
        seen = {qname}
        frontier = list(self.parents.get(qname, ()))
        while frontier:
            nxt = []
            for p in frontier:
                if p not in seen:
                    seen.add(p)
                    out.append(p)
                    nxt.extend(self.parents.get(p, ()))
            frontier = nxt
        return out

    def superclass_chain(self, qname: str) -> list[str]:
        chain = []
        cur = self.superclass.get(qname)
        while cur is not None and cur not in chain:
            chain.append(cur)
            cur = self.superclass.get(cur)
        return chain

    def call_targets(self, method_key: str) -> tuple[str, ...]:
        owner = method_key.split("#", 1)[0]
        facts = self.facts.get(owner)
        if facts is None:
            return ()
        return tuple(sorted({c.target for c in facts.calls if c.caller == method_key and c.target}))


class _Resolver:
    def __init__(self, classes: Mapping[str, ClassDecl], files: Mapping[str, FileUnit]):
        self.classes = classes
        self.files = files
        self._type_cache: dict[tuple[str, str], Optional[str]] = {}
        self.parents: dict[str, list[str]] = {}
        self.superclass: dict[str, Optional[str]] = {}
        self.external_superclass: dict[str, Optional[str]] = {}

    # -------------------------------------------------------------- types

    def resolve_type(self, name: str, ctx: ClassDecl) -> Optional[str]:
        key = (name, ctx.qualified_name)
        if key not in self._type_cache:
            self._type_cache[key] = self._resolve_type(name, ctx)
        return self._type_cache[key]

    def _resolve_type(self, name: str, ctx: ClassDecl) -> Optional[str]:
        if name in self.classes and "." in name:
            return name
        head, _, rest = name.partition(".")
        base = self._resolve_simple(head, ctx)
        if base is None:
            return None
        if rest:
            cand = f"{base}.{rest}"
            return cand if cand in self.classes else None
        return base

    def _resolve_simple(self, simple: str, ctx: ClassDecl) -> Optional[str]:
        # nested types of the class, its enclosing classes and their ancestors
        cur: Optional[ClassDecl] = ctx
        while cur is not None:
            if cur.name == simple:
                return cur.qualified_name
            cand = f"{cur.qualified_name}.{simple}"
            if cand in self.classes:
                return cand
            for anc in self._ancestors_raw(cur.qualified_name):
                cand = f"{anc}.{simple}"
                if cand in self.classes:
                    return cand
            cur = self.classes.get(cur.outer) if cur.outer else None
        imports = self.files[ctx.file].imports if ctx.file in self.files else ()
        for imp in imports:
            if not imp.wildcard and imp.name.rsplit(".", 1)[-1] == simple:
                return imp.name if imp.name in self.classes else None
        cand = f"{ctx.package}.{simple}" if ctx.package else simple
        if cand in self.classes:
            return cand
        for imp in imports:
            if imp.wildcard:
                cand = f"{imp.name}.{simple}"
                if cand in self.classes:
                    return cand
        return None

    def _ancestors_raw(self, qname: str) -> list[str]:
        out: list[str] = []
        frontier = list(self.parents.get(qname, ()))
        while frontier:
            p = frontier.pop(0)
            if p not in out and p != qname:
                out.append(p)
                frontier.extend(self.parents.get(p, ()))
        return out

    def ref(self, type_ref: Optional[ast.TypeRef], ctx: ClassDecl) -> Optional[str]:
        if type_ref is None or type_ref.is_primitive or type_ref.dims:
            return None
        return self.resolve_type(type_ref.name, ctx)

    def refs_in(self, type_ref: Optional[ast.TypeRef], ctx: ClassDecl, external: set) -> set[str]:
        out = set()
        if type_ref is None:
            return out
        for name in type_ref.referenced_names():
            q = self.resolve_type(name, ctx)
            if q is None:
                external.add(name)
            else:
                out.add(q)
        return out

    # ------------------------------------------------------------ hierarchy

    def link_hierarchy(self) -> None:
        for qn, c in self.classes.items():
            self.parents[qn] = []
        # resolving needs parents for inherited nested types; two passes let
        # the second see links established by the first
        for _ in range(2):
            for qn, c in sorted(self.classes.items()):
                parents = []
                sup = None
                ext = None
                if c.superclass is not None:
                    sup = self._resolve_type_no_cache(c.superclass.name, c)
                    if sup is None:
                        ext = c.superclass.name
                    else:
                        parents.append(sup)
                for itf in c.interfaces:
                    q = self._resolve_type_no_cache(itf.name, c)
                    if q is not None and q not in parents:
                        parents.append(q)
                self.parents[qn] = parents
                self.superclass[qn] = sup
                self.external_superclass[qn] = ext
        self._break_cycles()

    def _resolve_type_no_cache(self, name: str, ctx: ClassDecl) -> Optional[str]:
        q = self._resolve_type(name, ctx)
        return q if q != ctx.qualified_name else None

    def _break_cycles(self) -> None:
        # depth-first search; a back edge means a cycle, which we cut
        state: dict[str, int] = {}

        def visit(qn: str) -> None:
            state[qn] = 1
            for p in list(self.parents[qn]):
                if state.get(p) == 1:
                    log.warning("inheritance cycle through %s -> %s; link dropped", qn, p)
                    self.parents[qn].remove(p)
                    if self.superclass.get(qn) == p:
                        self.superclass[qn] = None
                elif p not in state:
                    visit(p)
            state[qn] = 2

        for qn in sorted(self.parents):
            if qn not in state:
                visit(qn)

    # -------------------------------------------------------------- members

    def find_field(self, qname: str, name: str) -> Optional[tuple[str, FieldInfo]]:
        for owner in [qname] + self._ancestors_raw(qname):
            for f in self.classes[owner].fields:
                if f.name == name:
                    return owner, f
        return None

    def find_method(self, qname: str, name: str, nargs: int, ctor: bool = False) -> Optional[MethodDecl]:
        owners = [qname] if ctor else [qname] + self._ancestors_raw(qname)
        for owner in owners:
            c = self.classes[owner]
            pool = c.constructors if ctor else c.methods
            for m in pool:
                if m.name != name and not ctor:
                    continue
                n = len(m.params)
                if n == nargs or (m.params and m.params[-1].varargs and nargs >= n - 1):
                    return m
        return None


class _FactCollector:
    """Walks one class body, recording calls, references and field uses."""

    def __init__(self, res: _Resolver, cls: ClassDecl):
        self.res = res
        self.cls = cls
        self.qn = cls.qualified_name
        self.calls: list[CallSite] = []
        self.own_fields: dict[str, set] = defaultdict(set)
        self.foreign_fields: set = set()
        self.instantiated: set = set()
        self.receivers: set = set()
        self.other_types: set = set()
        self.external: set = set()
        self.caller = CLASS_INIT
        self.scopes: list[dict[str, Optional[ast.TypeRef]]] = []

    # ------------------------------------------------------------- driving

    def collect(self) -> ClassFacts:
        c = self.cls
        field_types: set = set()
        class_typed: set = set()
        for f in c.fields:
            if c.enum_constants and f.type.name == c.name:
                continue
            refs = self.res.refs_in(f.type, c, self.external)
            if refs:
                class_typed.add(f.name)
            field_types |= refs
        param_types: set = set()
        for m in c.constructors + c.methods:
            for p in m.params:
                param_types |= self.res.refs_in(p.type, c, self.external)
            self.other_types.update(self.res.refs_in(m.return_type, c, self.external))
        for fd in c.field_decls:
            for d in fd.declarators:
                if d.init is not None:
                    self.with_scope({}, lambda d=d: self.expr(d.init))
        for ec in c.enum_constants:
            for a in ec.args:
                self.expr(a)
            if ec.body:
                self.members(ec.body)
        for init in c.initializers:
            self.with_scope({}, lambda init=init: self.stmt(init.body))
        for m in c.constructors + c.methods:
            if m.body is None:
                continue
            self.caller = m.key
            self.own_fields.setdefault(m.key, set())
            scope = {p.name: p.type for p in m.params}
            self.with_scope(scope, lambda m=m: self.stmt(m.body))
        self.caller = CLASS_INIT
        own = {k: frozenset(v) for k, v in self.own_fields.items()}
        drop = {self.qn}
        return ClassFacts(
            calls=tuple(self.calls),
            own_fields_used=freeze(own),
            foreign_fields=frozenset(self.foreign_fields),
            field_types=frozenset(field_types - drop),
            param_types=frozenset(param_types - drop),
            instantiated=frozenset(self.instantiated - drop),
            receivers=frozenset(self.receivers - drop),
            other_types=frozenset(self.other_types - drop),
            external_names=frozenset(self.external),
            class_typed_fields=frozenset(class_typed),
        )

    def with_scope(self, scope: dict, fn) -> None:
        self.scopes.append(dict(scope))
        try:
            fn()
        finally:
            self.scopes.pop()

    def declare(self, name: str, type_: Optional[ast.TypeRef]) -> None:
        if self.scopes:
            self.scopes[-1][name] = type_

    def lookup_var(self, name: str) -> tuple[bool, Optional[ast.TypeRef]]:
        for scope in reversed(self.scopes):
            if name in scope:
                return True, scope[name]
        return False, None

    def members(self, members) -> None:
        # anonymous class bodies fold into the enclosing caller
        for m in members:
            if isinstance(m, ast.MethodDeclaration) and m.body is not None:
                self.with_scope({p.name: p.type for p in m.params}, lambda m=m: self.stmt(m.body))
            elif isinstance(m, ast.FieldDeclaration):
                for d in m.declarators:
                    self.declare(d.name, m.type)
                    if d.init is not None:
                        self.expr(d.init)
            elif isinstance(m, ast.Initializer) and m.body is not None:
                self.stmt(m.body)
            elif isinstance(m, ast.TypeDeclaration):
                self.members(m.members)

    # ----------------------------------------------------------- statements

    def stmt(self, s: Optional[ast.Stmt]) -> None:
        if s is None:
            return
        if isinstance(s, ast.Block):
            self.with_scope({}, lambda: [self.stmt(x) for x in s.stmts])
        elif isinstance(s, ast.LocalVar):
            self.type_use(s.type)
            for d in s.declarators:
                self.declare(d.name, s.type)
                if d.init is not None:
                    self.expr(d.init)
        elif isinstance(s, ast.For):
            def body():
                for x in s.init:
                    self.stmt(x)
                self.expr(s.cond)
                for u in s.update:
                    self.expr(u)
                self.stmt(s.body)

            self.with_scope({}, body)
        elif isinstance(s, ast.ForEach):
            self.type_use(s.type)
            self.expr(s.iterable)
            self.with_scope({s.name: s.type}, lambda: self.stmt(s.body))
        elif isinstance(s, ast.Try):
            def body():
                for r in s.resources:
                    self.stmt(r)
                self.stmt(s.body)

            self.with_scope({}, body)
            for c in s.catches:
                for t in c.types:
                    self.type_use(t)
                self.with_scope({c.name: c.types[0]}, lambda c=c: self.stmt(c.body))
            self.stmt(s.finally_)
        elif isinstance(s, ast.Switch):
            self.expr(s.selector)
            self.switch_groups(s.groups)
        elif isinstance(s, ast.LocalClass):
            if s.decl is not None:
                self.members(s.decl.members)
        else:
            for child in s.children():
                if isinstance(child, ast.Stmt):
                    self.stmt(child)
                elif isinstance(child, ast.Expr):
                    self.expr(child)

    def switch_groups(self, groups) -> None:
        def body():
            for g in groups:
                for lab in g.labels:
                    if not isinstance(lab, ast.Name):
                        self.expr(lab)
                for x in g.body:
                    self.stmt(x)

        self.with_scope({}, body)

    def type_use(self, t: Optional[ast.TypeRef]) -> None:
        if t is not None and t.name != "var":
            self.other_types.update(self.res.refs_in(t, self.cls, self.external))

    # ---------------------------------------------------------- expressions

    def expr(self, e) -> Optional[str]:
        """Visit `e`; return the project-local class of its value, if known."""
        if e is None:
            return None
        method = getattr(self, f"e_{type(e).__name__}", None)
        if method is not None:
            return method(e)
        for child in e.children():
            if isinstance(child, ast.Expr):
                self.expr(child)
            elif isinstance(child, ast.Stmt):
                self.stmt(child)
        return None

    def e_Name(self, e: ast.Name) -> Optional[str]:
        kind, q = self.name_ref(e.name)
        return q if kind in ("var", "field", "class") else None

    def name_ref(self, name: str) -> tuple[str, Optional[str]]:
        found, type_ = self.lookup_var(name)
        if found:
            return "var", self.res.ref(type_, self.cls)
        # fields of this class, its ancestors and enclosing classes
        cur: Optional[ClassDecl] = self.cls
        while cur is not None:
            hit = self.res.find_field(cur.qualified_name, name)
            if hit is not None:
                owner, f = hit
                self.field_use(owner, f.name)
                return "field", self.res.ref(f.type, self.res.classes[owner])
            cur = self.res.classes.get(cur.outer) if cur.outer else None
        q = self.res.resolve_type(name, self.cls)
        if q is not None:
            return "class", q
        return "unknown", None

    def field_use(self, owner: str, name: str) -> None:
        if owner == self.qn:
            self.own_fields[self.caller].add(name)
        elif owner not in self.res._ancestors_raw(self.qn):
            self.foreign_fields.add((owner, name))

    def e_This(self, e: ast.This) -> Optional[str]:
        if e.qualifier:
            return self.res.resolve_type(e.qualifier, self.cls)
        return self.qn

    def e_Super(self, e: ast.Super) -> Optional[str]:
        return self.res.superclass.get(self.qn)

    def e_FieldAccess(self, e: ast.FieldAccess) -> Optional[str]:
        if isinstance(e.target, ast.This) and e.target.qualifier is None:
            hit = self.res.find_field(self.qn, e.name)
            if hit is not None:
                owner, f = hit
                self.field_use(owner, f.name)
                return self.res.ref(f.type, self.res.classes[owner])
            return None
        owner_cls = self.expr(e.target)
        if owner_cls is None:
            dotted = _dotted(e)
            if dotted:
                q = self.res.resolve_type(dotted, self.cls)
                if q is not None:
                    return q
            return None
        hit = self.res.find_field(owner_cls, e.name)
        if hit is None:
            nested = f"{owner_cls}.{e.name}"
            return nested if nested in self.res.classes else None
        owner, f = hit
        self.field_use(owner, f.name)
        return self.res.ref(f.type, self.res.classes[owner])

    def e_MethodCall(self, e: ast.MethodCall) -> Optional[str]:
        for a in e.args:
            self.expr(a)
        nargs = len(e.args)
        if e.target is None and e.name in ("this", "super"):
            owner = self.qn if e.name == "this" else self.res.superclass.get(self.qn)
            target = None
            if owner is not None:
                m = self.res.find_method(owner, owner, nargs, ctor=True)
                target = m.key if m is not None else None
            self.record_call(e, target, owner)
            return None
        if e.target is None:
            recv = None
            cur: Optional[ClassDecl] = self.cls
            while cur is not None:
                m = self.res.find_method(cur.qualified_name, e.name, nargs)
                if m is not None:
                    recv = cur.qualified_name
                    break
                cur = self.res.classes.get(cur.outer) if cur.outer else None
            if recv is None:
                self.record_call(e, None, None)
                return None
        else:
            recv = self.expr(e.target)
            if recv is None:
                self.record_call(e, None, None)
                return None
        m = self.res.find_method(recv, e.name, nargs)
        if m is None:
            self.record_call(e, None, recv)
            return None
        self.record_call(e, m.key, m.owner)
        if recv != self.qn:
            self.receivers.add(recv)
        return self.res.ref(m.return_type, self.res.classes[m.owner])

    def record_call(self, e: ast.MethodCall, target: Optional[str], target_class: Optional[str]) -> None:
        self.calls.append(CallSite(self.caller, e.name, e.line, target, target_class))

    def e_New(self, e: ast.New) -> Optional[str]:
        if e.outer is not None:
            self.expr(e.outer)
        for a in e.args:
            self.expr(a)
        q = self.res.ref(e.type, self.cls)
        if q is None and e.type is not None:
            self.external.add(e.type.name)
        for name in (e.type.referenced_names() if e.type else ()):
            if name != e.type.name:
                r = self.res.resolve_type(name, self.cls)
                if r is not None:
                    self.other_types.add(r)
        if q is not None:
            self.instantiated.add(q)
        if e.body is not None:
            self.with_scope({}, lambda: self.members(e.body))
        return q

    def e_NewArray(self, e: ast.NewArray) -> Optional[str]:
        self.type_use(e.type)
        for d in e.dims:
            self.expr(d)
        self.expr(e.init)
        return None

    def e_Cast(self, e: ast.Cast) -> Optional[str]:
        self.type_use(e.type)
        self.expr(e.expr)
        return self.res.ref(e.type, self.cls)

    def e_InstanceOf(self, e: ast.InstanceOf) -> Optional[str]:
        self.type_use(e.type)
        self.expr(e.expr)
        return None

    def e_ClassLit(self, e: ast.ClassLit) -> Optional[str]:
        self.type_use(e.type)
        return None

    def e_MethodRef(self, e: ast.MethodRef) -> Optional[str]:
        if isinstance(e.target, ast.TypeRef):
            self.type_use(e.target)
        else:
            self.expr(e.target)
        return None

    def e_Lambda(self, e: ast.Lambda) -> Optional[str]:
        scope = {p: None for p in e.params}
        if isinstance(e.body, ast.Stmt):
            self.with_scope(scope, lambda: self.stmt(e.body))
        else:
            self.with_scope(scope, lambda: self.expr(e.body))
        return None

    def e_SwitchExpr(self, e: ast.SwitchExpr) -> Optional[str]:
        self.expr(e.selector)
        self.switch_groups(e.groups)
        return None

    def e_Conditional(self, e: ast.Conditional) -> Optional[str]:
        self.expr(e.cond)
        a = self.expr(e.then)
        b = self.expr(e.other)
        return a if a == b else None

    def e_Assign(self, e: ast.Assign) -> Optional[str]:
        t = self.expr(e.target)
        self.expr(e.value)
        return t

    def e_ArrayAccess(self, e: ast.ArrayAccess) -> Optional[str]:
        self.expr(e.array)
        self.expr(e.index)
        return None


def _dotted(e: ast.Expr) -> Optional[str]:
    if isinstance(e, ast.Name):
        return e.name
    if isinstance(e, ast.FieldAccess) and e.target is not None:
        head = _dotted(e.target)
        return f"{head}.{e.name}" if head else None
    return None


def build_index(classes: list[ClassDecl], files: Mapping[str, FileUnit]) -> SymbolIndex:
    by_name = {c.qualified_name: c for c in classes}
    res = _Resolver(by_name, files)
    res.link_hierarchy()
    children: dict[str, list[str]] = {qn: [] for qn in by_name}
    for qn, ps in res.parents.items():
        for p in ps:
            children[p].append(qn)
    facts = {qn: _FactCollector(res, c).collect() for qn, c in sorted(by_name.items())}
    return SymbolIndex(
        classes=freeze(by_name),
        superclass=freeze(dict(res.superclass)),
        external_superclass=freeze(dict(res.external_superclass)),
        parents=freeze({k: tuple(v) for k, v in res.parents.items()}),
        children=freeze({k: tuple(sorted(v)) for k, v in children.items()}),
        facts=freeze(facts),
    )
