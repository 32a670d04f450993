"""Seeded generator of a small Java project with metrics known by construction.

Every source line is assembled from explicit ``(kind, lexeme)`` tokens out of
a handful of statement templates whose control-flow properties are fixed:
each template carries its own decision counts, statement counts, path count,
nesting depth and jump layout. The expected value of every feature is then
plain bookkeeping over what was emitted, so the golden table never touches
the parser or the metric code it is meant to check.
"""

from __future__ import annotations

import math
import random
import statistics
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from ..metrics.schema import (
    CLASS_FAMILIES,
    CLASS_PLAIN,
    LEXICAL,
    PACKAGE_FAMILIES,
    full_schema,
)

# token kinds, spelled as the lexer spells them
KW, ID, OP, AS, SC, DT, LT, PU = (
    "keyword", "identifier", "operator", "assignment-operator",
    "semicolon", "dot", "literal", "punctuation",
)


def K(x):
    return (KW, x)


def I(x):
    return (ID, x)


def O(x):
    return (OP, x)


def L(x):
    return (LT, str(x))


EQ = (AS, "=")
SEMI = (SC, ";")
DOT = (DT, ".")
LP, RP, LB, RB, COMMA = (PU, "("), (PU, ")"), (PU, "{"), (PU, "}"), (PU, ",")


@dataclass
class Block:
    """One statement template inside a work method."""

    lines: list  # list of token lists
    decl: int = 0
    exe: int = 0
    cc: int = 0  # if / loop / case / ternary count
    bool_ops: int = 0
    cases: int = 0
    switches: int = 0
    npath: int = 1
    nesting: int = 0
    knots: int = 0
    essential: int = 0  # added to the essential complexity of the method
    calls: int = 0
    foreign_fields: bool = False


def blk_if(n_and: int, n_or: int) -> Block:
    cond = [I("v"), O(">"), L(0)]
    for k in range(n_and):
        cond += [O("&&"), I("v"), O(">"), L(k + 1)]
    for k in range(n_or):
        cond += [O("||"), I("v"), O("=="), L(k + 7)]
    return Block(
        lines=[
            [K("if"), LP] + cond + [RP, LB],
            [I("v"), EQ, I("v"), O("+"), L(1), SEMI],
            [RB],
        ],
        exe=2, cc=1, bool_ops=n_and + n_or, npath=2 + n_and + n_or, nesting=1,
    )


def blk_for() -> Block:
    return Block(
        lines=[
            [K("for"), LP, K("int"), I("i"), EQ, L(0), SEMI, I("i"), O("<"), L(3), SEMI, I("i"), O("++"), RP, LB],
            [I("v"), EQ, I("v"), O("+"), I("i"), SEMI],
            [RB],
        ],
        decl=1, exe=2, cc=1, npath=2, nesting=1,
    )


def blk_switch(labels: int) -> Block:
    lines = [[K("switch"), LP, I("v"), RP, LB]]
    for k in range(labels):
        lines.append([K("case"), L(k + 1), O(":")])
        lines.append([I("v"), EQ, I("v"), O("+"), L(k + 2), SEMI])
        lines.append([K("break"), SEMI])
    lines.append([K("default"), O(":")])
    lines.append([I("v"), EQ, L(0), SEMI])
    lines.append([RB])
    return Block(
        lines=lines, exe=2 + 2 * labels, cc=labels, cases=labels, switches=1,
        npath=labels + 1, nesting=1,
    )


def blk_ternary() -> Block:
    return Block(
        lines=[[I("v"), EQ, I("v"), O(">"), L(2), O("?"), I("v"), O(":"), L(2), SEMI]],
        exe=1, cc=1, npath=2,
    )


def blk_nested() -> Block:
    return Block(
        lines=[
            [K("while"), LP, I("v"), O("<"), L(10), RP, LB],
            [K("if"), LP, I("v"), O(">"), L(5), RP, LB],
            [I("v"), EQ, I("v"), O("+"), L(2), SEMI],
            [RB],
            [I("v"), EQ, I("v"), O("+"), L(1), SEMI],
            [RB],
        ],
        exe=4, cc=2, npath=3, nesting=2,
    )


def blk_knot() -> Block:
    # a break out of the loop whose span crosses a later continue to its head
    return Block(
        lines=[
            [K("while"), LP, I("v"), O("<"), L(100), RP, LB],
            [K("if"), LP, I("v"), O(">"), L(50), RP, LB],
            [K("break"), SEMI],
            [RB],
            [I("v"), EQ, I("v"), O("+"), L(2), SEMI],
            [K("if"), LP, I("v"), O(">"), L(40), RP, LB],
            [K("continue"), SEMI],
            [RB],
            [I("v"), EQ, I("v"), O("+"), L(1), SEMI],
            [RB],
        ],
        exe=7, cc=3, npath=5, nesting=2, knots=1, essential=2,
    )


def blk_call(helper_field: str) -> Block:
    return Block(
        lines=[[I("v"), EQ, I("v"), O("+"), I(helper_field), DOT, I("peek"), LP, I("v"), RP, SEMI]],
        exe=1, calls=1,
    )


def blk_foreign(helper_field: str) -> Block:
    return Block(
        lines=[[I("v"), EQ, I("v"), O("+"), I(helper_field), DOT, I("shared"), SEMI]],
        exe=1, foreign_fields=True,
    )


# ------------------------------------------------------------------ records


@dataclass
class MethodRec:
    name: str
    visibility: str
    static: bool = False
    params: int = 0
    has_body: bool = True
    accessor: bool = False
    mutator: bool = False
    constructor: bool = False
    uses: frozenset = frozenset()  # own fields touched
    calls: int = 0  # call sites into the helper class
    cc: int = 1
    strict: int = 1
    modified: int = 1
    essential: int = 1
    loc_code: int = 0
    loc_comment: int = 0
    loc_total: int = 0
    decl: int = 0
    exe: int = 0
    nesting: int = 0
    npath: int = 1
    knots: int = 0

    @property
    def namm(self) -> bool:
        return not (self.accessor or self.mutator)


@dataclass
class ClassRec:
    qname: str
    name: str
    package: str
    file: str
    kind: str = "class"
    abstract: bool = False
    parent: Optional[str] = None
    interfaces: tuple = ()
    helper: Optional[str] = None
    fields: list = field(default_factory=list)  # (name, static, class_typed)
    field_decls: int = 0
    methods: list = field(default_factory=list)
    ctors: list = field(default_factory=list)
    loc_code: int = 0
    loc_comment: int = 0
    loc_total: int = 0
    field_init_stmts: int = 0
    foreign: int = 0


class _Writer:
    """Accumulates one file's lines, remembering their kind and tokens."""

    def __init__(self):
        self.lines: list[tuple[str, list]] = []  # ("code"|"comment"|"blank", tokens or text)

    @property
    def next_line(self) -> int:
        return len(self.lines) + 1

    def code(self, depth: int, toks: list) -> None:
        self.lines.append(("code", toks, depth))

    def comment(self, depth: int, text: str) -> None:
        self.lines.append(("comment", text, depth))

    def blank(self) -> None:
        self.lines.append(("blank", "", 0))

    def text(self) -> str:
        out = []
        for kind, payload, depth in self.lines:
            pad = "    " * depth
            if kind == "code":
                out.append(pad + " ".join(lex for _, lex in payload))
            elif kind == "comment":
                out.append(pad + payload)
            else:
                out.append("")
        return "\n".join(out) + "\n"

    def tokens(self) -> list:
        return [t for kind, payload, _ in self.lines if kind == "code" for t in payload]

    def span(self, start: int, end: int) -> tuple[int, int, int]:
        kinds = [self.lines[i - 1][0] for i in range(start, end + 1)]
        return kinds.count("code"), kinds.count("comment"), end - start + 1


VIS = ("public", "protected", "private", "")


@dataclass
class CorpusSpec:
    seed: int = 7
    packages: tuple = ("alpha", "beta", "gamma")
    classes_per_package: int = 10


class CorpusGenerator:
    def __init__(self, spec: CorpusSpec = CorpusSpec()):
        self.spec = spec
        self.rng = random.Random(spec.seed)
        self.classes: dict[str, ClassRec] = {}
        self.files: dict[str, _Writer] = {}
        self.order: list[str] = []

    # ------------------------------------------------------------ planning

    def plan(self) -> list[list[dict]]:
        """Decide class shapes; returns, per file, the classes it holds."""
        rng = self.rng
        files: list[list[dict]] = []
        made: list[dict] = []
        for pkg in self.spec.packages:
            iface = {"name": f"{pkg.capitalize()}Sized", "pkg": pkg, "kind": "interface"}
            files.append([iface])
            made.append(iface)
            base = {"name": f"{pkg.capitalize()}Base", "pkg": pkg, "kind": "class", "abstract": True}
            files.append([base])
            made.append(base)
            n = self.spec.classes_per_package - 2
            k = 0
            while k < n:
                group = []
                for _ in range(2 if (k % 4 == 3 and k + 1 < n) else 1):
                    c = {"name": f"{pkg.capitalize()}C{k}", "pkg": pkg, "kind": "class", "abstract": False}
                    same_pkg = [m for m in made if m["pkg"] == pkg and m["kind"] == "class"]
                    if rng.random() < 0.5 and same_pkg:
                        c["parent"] = rng.choice(same_pkg)["name"]
                    if rng.random() < 0.4:
                        c["iface"] = iface["name"]
                    group.append(c)
                    made.append(c)
                    k += 1
                files.append(group)
        # helpers: any earlier concrete class that is not an ancestor
        concrete = [m for m in made if m["kind"] == "class"]
        by_name = {m["name"]: m for m in made}
        for i, m in enumerate(concrete):
            if m.get("abstract") or i == 0 or self.rng.random() < 0.35:
                continue
            anc = set()
            cur = m.get("parent")
            while cur:
                anc.add(cur)
                cur = by_name[cur].get("parent")
            options = [
                o["name"] for o in concrete[:i]
                if o["name"] not in anc and o["name"] != m["name"] and not o.get("abstract")
            ]
            if options:
                m["helper"] = self.rng.choice(options)
        return files

    # ------------------------------------------------------------ emission

    def generate(self) -> None:
        plan = self.plan()
        by_name = {c["name"]: c for group in plan for c in group}
        for group in plan:
            pkg = group[0]["pkg"]
            path = f"{pkg}/{group[0]['name']}.java"
            w = _Writer()
            w.code(0, [K("package"), I(pkg), SEMI])
            for c in group:
                w.blank()
                if c["kind"] == "interface":
                    self.emit_interface(w, c, path)
                else:
                    self.emit_class(w, c, path, by_name, public=(c is group[0]))
            self.files[path] = w

    def emit_interface(self, w: _Writer, c: dict, path: str) -> None:
        qn = f"{c['pkg']}.{c['name']}"
        rec = ClassRec(qn, c["name"], c["pkg"], path, kind="interface", abstract=True)
        w.comment(0, f"/** Sized things of {c['pkg']}. */")
        start = w.next_line
        w.code(0, [K("public"), K("interface"), I(c["name"]), LB])
        w.code(1, [K("int"), I("size"), LP, K("int"), I("k"), RP, SEMI])
        w.code(0, [RB])
        rec.loc_code, rec.loc_comment, rec.loc_total = w.span(start, w.next_line - 1)
        rec.methods.append(MethodRec("size", "public", params=1, has_body=False))
        self._register(rec)

    def emit_class(self, w: _Writer, c: dict, path: str, by_name: dict, public: bool) -> None:
        rng = self.rng
        pkg = c["pkg"]
        qn = f"{pkg}.{c['name']}"
        rec = ClassRec(qn, c["name"], pkg, path, abstract=bool(c.get("abstract")))
        head = ([K("public")] if public else []) + ([K("abstract")] if rec.abstract else [])
        head += [K("class"), I(c["name"])]
        if c.get("parent"):
            rec.parent = f"{pkg}.{c['parent']}"
            head += [K("extends"), I(c["parent"])]
        if c.get("iface"):
            rec.interfaces = (f"{pkg}.{c['iface']}",)
            head += [K("implements"), I(c["iface"])]
        w.comment(0, f"/** Generated class {c['name']}. */")
        start = w.next_line
        w.code(0, head + [LB])

        # fields
        n_inst = rng.randint(1, 3)
        n_static = rng.randint(0, 2)
        for k in range(n_inst):
            w.code(1, [K("private"), K("int"), I(f"f{k}"), EQ, L(k), SEMI])
            rec.fields.append((f"f{k}", False, False))
        for k in range(n_static):
            w.code(1, [K("private"), K("static"), K("int"), I(f"s{k}"), EQ, L(k), SEMI])
            rec.fields.append((f"s{k}", True, False))
        w.code(1, [K("public"), K("int"), I("shared"), EQ, L(1), SEMI])
        rec.fields.append(("shared", False, False))
        if c.get("helper"):
            h = c["helper"]
            rec.helper = f"{pkg if by_name[h]['pkg'] == pkg else by_name[h]['pkg']}.{h}"
            htype = h if by_name[h]["pkg"] == pkg else None
            if htype is None:
                # fully qualified reference to another package
                type_toks = [I(by_name[h]["pkg"]), DOT, I(h)]
            else:
                type_toks = [I(h)]
            w.code(1, [K("private")] + type_toks + [I("helper"), EQ, K("new")] + type_toks + [LP, RP, SEMI])
            rec.fields.append(("helper", False, True))
        rec.field_decls = len(rec.fields)
        w.blank()

        # constructors
        for k in range(rng.randint(0, 2)):
            if k == 0:
                toks = [K("public"), I(c["name"]), LP, RP, LB, RB]
                m = MethodRec(c["name"], "public", constructor=True)
            else:
                toks = [K("public"), I(c["name"]), LP, K("int"), I("a"), RP, LB, I("f0"), EQ, I("a"), SEMI, RB]
                m = MethodRec(c["name"], "public", constructor=True, params=1, exe=1, uses=frozenset({"f0"}))
            s = w.next_line
            w.code(1, toks)
            m.loc_code, m.loc_comment, m.loc_total = w.span(s, s)
            rec.ctors.append(m)

        # accessors / mutators on instance fields
        for k in range(n_inst):
            if rng.random() < 0.6:
                s = w.next_line
                w.code(1, [K("public"), K("int"), I(f"getF{k}"), LP, RP, LB, K("return"), I(f"f{k}"), SEMI, RB])
                m = MethodRec(f"getF{k}", "public", accessor=True, exe=1, uses=frozenset({f"f{k}"}))
                m.loc_code, m.loc_comment, m.loc_total = w.span(s, s)
                rec.methods.append(m)
            if rng.random() < 0.4:
                s = w.next_line
                w.code(1, [K("public"), K("void"), I(f"setF{k}"), LP, K("int"), I("v"), RP, LB,
                           K("this"), DOT, I(f"f{k}"), EQ, I("v"), SEMI, RB])
                m = MethodRec(f"setF{k}", "public", mutator=True, params=1, exe=1, uses=frozenset({f"f{k}"}))
                m.loc_code, m.loc_comment, m.loc_total = w.span(s, s)
                rec.methods.append(m)

        # peek: every class offers it as a call target
        s = w.next_line
        w.code(1, [K("public"), K("int"), I("peek"), LP, K("int"), I("q"), RP, LB,
                   K("return"), I("q"), O("+"), L(1), SEMI, RB])
        m = MethodRec("peek", "public", params=1, exe=1)
        m.loc_code, m.loc_comment, m.loc_total = w.span(s, s)
        rec.methods.append(m)

        if rec.interfaces:
            s = w.next_line
            w.code(1, [K("public"), K("int"), I("size"), LP, K("int"), I("k"), RP, LB,
                       K("return"), I("k"), O("*"), L(2), SEMI, RB])
            m = MethodRec("size", "public", params=1, exe=1)
            m.loc_code, m.loc_comment, m.loc_total = w.span(s, s)
            rec.methods.append(m)

        if rec.abstract:
            w.code(1, [K("public"), K("abstract"), K("int"), I("area"), LP, K("int"), I("s"), RP, SEMI])
            rec.methods.append(MethodRec("area", "public", params=1, has_body=False))
        elif self._has_abstract_ancestor(rec):
            s = w.next_line
            w.code(1, [K("public"), K("int"), I("area"), LP, K("int"), I("s"), RP, LB,
                       K("return"), I("s"), O("*"), I("s"), SEMI, RB])
            m = MethodRec("area", "public", params=1, exe=1)
            m.loc_code, m.loc_comment, m.loc_total = w.span(s, s)
            rec.methods.append(m)

        if n_static and rng.random() < 0.5:
            s = w.next_line
            w.code(1, [K("static"), K("int"), I("twice"), LP, K("int"), I("t"), RP, LB,
                       K("return"), I("t"), O("*"), I("s0"), SEMI, RB])
            m = MethodRec("twice", "", static=True, params=1, exe=1, uses=frozenset({"s0"}))
            m.loc_code, m.loc_comment, m.loc_total = w.span(s, s)
            rec.methods.append(m)

        # work methods
        for j in range(rng.randint(1, 4)):
            w.blank()
            self.emit_work(w, rec, j, n_inst)

        w.code(0, [RB])
        rec.loc_code, rec.loc_comment, rec.loc_total = w.span(start, w.next_line - 1)
        self._register(rec)

    def _has_abstract_ancestor(self, rec: ClassRec) -> bool:
        cur = rec.parent
        while cur:
            if self.classes[cur].abstract:
                return True
            cur = self.classes[cur].parent
        return False

    def emit_work(self, w: _Writer, rec: ClassRec, j: int, n_inst: int) -> None:
        rng = self.rng
        vis = VIS[rng.randrange(len(VIS))]
        params = rng.randint(0, 3)
        use_field = rng.random() < 0.8
        fld = f"f{rng.randrange(n_inst)}" if use_field else None
        kinds = ["if", "for", "switch", "ternary", "nested", "knot"]
        blocks: list[Block] = []
        for _ in range(rng.randint(0, 4)):
            kind = rng.choice(kinds)
            if kind == "if":
                blocks.append(blk_if(rng.randint(0, 2), rng.randint(0, 1)))
            elif kind == "for":
                blocks.append(blk_for())
            elif kind == "switch":
                blocks.append(blk_switch(rng.randint(1, 3)))
            elif kind == "ternary":
                blocks.append(blk_ternary())
            elif kind == "nested":
                blocks.append(blk_nested())
            else:
                blocks.append(blk_knot())
        if rec.helper and rng.random() < 0.7:
            blocks.insert(rng.randint(0, len(blocks)), blk_call("helper"))
        if rec.helper and rng.random() < 0.4:
            blocks.append(blk_foreign("helper"))

        name = f"work{j}"
        if rng.random() < 0.3:
            w.comment(1, f"/** Work item {j}. */")
        sig = ([K(vis)] if vis else []) + [K("void"), I(name), LP]
        for p in range(params):
            if p:
                sig.append(COMMA)
            sig += [K("int"), I(f"p{p}")]
        sig += [RP, LB]
        s = w.next_line
        w.code(1, sig)
        w.code(2, [K("int"), I("v"), EQ, I(fld) if fld else L(0), SEMI])
        if rng.random() < 0.3:
            w.comment(2, "// keep going")
        for b in blocks:
            for toks in b.lines:
                w.code(2, toks)
        uses = set()
        if any(b.calls or b.foreign_fields for b in blocks):
            uses.add("helper")
        exe = 0
        if fld:
            w.code(2, [I(fld), EQ, I("v"), SEMI])
            uses.add(fld)
            exe += 1
        w.code(1, [RB])
        m = MethodRec(name, vis or "", params=params, uses=frozenset(uses))
        m.loc_code, m.loc_comment, m.loc_total = w.span(s, w.next_line - 1)
        m.decl = 1 + sum(b.decl for b in blocks)
        m.exe = exe + sum(b.exe for b in blocks)
        base = 1 + sum(b.cc for b in blocks)
        m.cc = base
        m.strict = base + sum(b.bool_ops for b in blocks)
        m.modified = base - sum(b.cases for b in blocks) + sum(b.switches for b in blocks)
        m.essential = 1 + sum(b.essential for b in blocks)
        m.nesting = max((b.nesting for b in blocks), default=0)
        m.npath = math.prod(b.npath for b in blocks)
        m.knots = sum(b.knots for b in blocks)
        m.calls = sum(b.calls for b in blocks)
        rec.foreign = max(rec.foreign, int(any(b.foreign_fields for b in blocks)))
        rec.methods.append(m)

    def _register(self, rec: ClassRec) -> None:
        self.classes[rec.qname] = rec
        self.order.append(rec.qname)

    # --------------------------------------------------------------- golden

    def write(self, root) -> dict[str, dict[str, float]]:
        """Write the sources under `root`; return the golden vectors by class."""
        if not self.files:
            self.generate()
        root = Path(root)
        for path, w in self.files.items():
            target = root / path
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(w.text(), encoding="utf-8")
        return self.golden()

    def sources(self) -> dict[str, str]:
        if not self.files:
            self.generate()
        return {p: w.text() for p, w in self.files.items()}

    def golden(self) -> dict[str, dict[str, float]]:
        if not self.files:
            self.generate()
        cls_vals = {qn: self._class_values(rec) for qn, rec in self.classes.items()}
        pkg_vals = {p: self._package_values(p, cls_vals) for p in self.spec.packages}
        lex = {path: _lexical(w.tokens()) for path, w in self.files.items()}
        out = {}
        for qn, rec in self.classes.items():
            merged = dict(pkg_vals[rec.package])
            merged.update(lex[rec.file])
            merged.update(cls_vals[qn])
            out[qn] = {n: float(merged[n]) for n in full_schema().names}
        return dict(sorted(out.items()))

    # per-method value per sub-metric family and variant
    @staticmethod
    def _method_value(m: MethodRec, base: str, variant: str) -> float:
        table = {
            ("CSCC", "CC"): m.cc,
            ("CSCC", "CC-strict"): m.strict,
            ("CSCC", "CC-modified"): m.modified,
            ("CSCC", "CC-essential"): m.essential,
            ("CSLOC", "code"): m.loc_code,
            ("CSLOC", "comment"): m.loc_comment,
            ("CSLOC", "total"): m.loc_total,
            ("CSNOST", "all"): m.decl + m.exe,
            ("CSNOST", "declarative"): m.decl,
            ("CSNOST", "executable"): m.exe,
            ("CSNOP", ""): m.params,
            ("CSNESTING", ""): m.nesting,
            ("CSPATH", ""): m.npath,
            ("CSKNOTS", ""): m.knots,
        }
        return table[(base, variant)]

    def _class_sizes(self, rec: ClassRec) -> dict:
        decl = sum(m.decl for m in rec.methods + rec.ctors if m.has_body) + rec.field_decls
        exe = sum(m.exe for m in rec.methods + rec.ctors if m.has_body)
        return {
            ("CSLOC", "code"): rec.loc_code,
            ("CSLOC", "comment"): rec.loc_comment,
            ("CSLOC", "total"): rec.loc_total,
            ("CSNOST", "all"): decl + exe,
            ("CSNOST", "declarative"): decl,
            ("CSNOST", "executable"): exe,
        }

    def _callables(self, rec: ClassRec) -> list[MethodRec]:
        return [m for m in rec.ctors + rec.methods if m.has_body]

    def _ancestors(self, rec: ClassRec) -> list[str]:
        out = []
        frontier = ([rec.parent] if rec.parent else []) + list(rec.interfaces)
        while frontier:
            p = frontier.pop(0)
            if p in out:
                continue
            out.append(p)
            r = self.classes[p]
            frontier += ([r.parent] if r.parent else []) + list(r.interfaces)
        return out

    def _fanout(self, qn: str) -> set:
        rec = self.classes[qn]
        deps = set(([rec.parent] if rec.parent else []) + list(rec.interfaces))
        if rec.helper:
            deps.add(rec.helper)
        return deps

    def _class_values(self, rec: ClassRec) -> dict[str, float]:
        v: dict[str, float] = {}
        callables = self._callables(rec)
        sizes = self._class_sizes(rec)
        for fam in CLASS_FAMILIES:
            for stem, variant in fam.variants:
                for flt in fam.filters:
                    chosen = [m for m in callables if flt == "ALL" or m.namm]
                    vals = [self._method_value(m, fam.base, variant) for m in chosen]
                    for op in fam.ops:
                        name = stem + ("" if op == fam.canonical_op else "_" + op)
                        name += "_NAMM" if flt == "NAMM" else ""
                        v[name] = _stat(op, vals)
                if fam.base in ("CSLOC", "CSNOST"):
                    v[stem] = sizes[(fam.base, variant)]
        methods = rec.methods
        v["CSNOSM"] = sum(m.static for m in methods)
        v["CSNOIM"] = sum(not m.static for m in methods)
        v["CSNOSA"] = sum(s for _, s, _ in rec.fields)
        v["CSNOIA"] = sum(not s for _, s, _ in rec.fields)
        v["CSNOM"] = len(methods)
        v["CSNOMNAMM"] = sum(m.namm for m in methods)
        v["CSNOCON"] = len(rec.ctors)
        v["CSNOAMM"] = len(methods) - v["CSNOMNAMM"]
        v["CSNOPM"] = sum(m.visibility == "public" for m in methods)
        v["CSNOPRM"] = sum(m.visibility == "protected" for m in methods)
        v["CSNOPLM"] = sum(m.visibility == "private" for m in methods)
        v["CSNODM"] = sum(m.visibility == "" for m in methods)
        used = [m.uses for m in methods if m.has_body]
        p = q = 0
        for i in range(len(used)):
            for j in range(i + 1, len(used)):
                if used[i] & used[j]:
                    q += 1
                else:
                    p += 1
        v["LOCM"] = max(p - q, 0)
        v["CBO"] = 1 if rec.helper else 0
        n_calls = sum(m.calls for m in methods)
        v["RFC"] = len(methods) + len(rec.ctors) + (1 if n_calls else 0)
        fan = self._fanout(rec.qname)
        v["FANOUT"] = len(fan)
        v["FANIN"] = sum(1 for other in self.classes if rec.qname in self._fanout(other))
        v["DEPENDS"] = len(_reach(rec.qname, self._fanout))
        v["DEPENDSBY"] = len(_reach(rec.qname, self._fanin))
        v["ATFD"] = rec.foreign
        v["CFNAMM"] = n_calls
        v["DAC"] = sum(t for _, _, t in rec.fields)
        v["NOMCALL"] = n_calls
        if rec.kind == "interface":
            v["DIT"] = 0
        else:
            depth, cur = 1, rec.parent
            while cur:
                depth += 1
                cur = self.classes[cur].parent
            v["DIT"] = depth
        v["NOC"] = sum(
            1 for r in self.classes.values() if r.parent == rec.qname or rec.qname in r.interfaces
        )
        v["NOP"] = (1 if rec.parent else 0) + len(rec.interfaces)
        v["NOII"] = len(rec.interfaces)
        own = {(m.name, m.params) for m in methods}
        inherited = set()
        for a in self._ancestors(rec):
            inherited |= {(m.name, m.params) for m in self.classes[a].methods if m.visibility != "private"}
        v["NIM"] = len(inherited - own)
        v["NMO"] = len(own & inherited)
        assert set(CLASS_PLAIN) <= set(v)
        return v

    def _fanin(self, qn: str) -> set:
        return {o for o in self.classes if qn in self._fanout(o)}

    def _package_values(self, pkg: str, cls_vals: dict) -> dict[str, float]:
        members = [r for r in self.classes.values() if r.package == pkg]
        pooled = [m for r in members for m in self._callables(r)]
        out: dict[str, float] = {}
        for fam in PACKAGE_FAMILIES:
            src = {"PKCC": "CSCC", "PKNESTING": "CSNESTING", "PKLOC": "CSLOC", "PKNOST": "CSNOST"}[fam.base]
            for stem, variant in fam.variants:
                for flt in fam.filters:
                    if fam.base in ("PKCC", "PKNESTING"):
                        vals = [self._method_value(m, src, variant) for m in pooled if flt == "ALL" or m.namm]
                    else:
                        vals = [self._class_sizes(r)[(src, variant)] for r in members]
                    for op in fam.ops:
                        name = stem + ("" if op == fam.canonical_op else "_" + op)
                        name += "_NAMM" if flt == "NAMM" else ""
                        out[name] = _stat(op, vals)
        for pk, cs in (
            ("PKNOSM", "CSNOSM"), ("PKNOSA", "CSNOSA"), ("PKNOIM", "CSNOIM"), ("PKNOIA", "CSNOIA"),
            ("PKNOMNAMM", "CSNOMNAMM"), ("PKNODM", "CSNODM"), ("PKNOPM", "CSNOPM"),
            ("PKNOPRM", "CSNOPRM"), ("PKNOPLM", "CSNOPLM"), ("PKNOAMM", "CSNOAMM"),
        ):
            out[pk] = sum(cls_vals[r.qname][cs] for r in members)
        out["PKNOCS"] = len(members)
        out["PKNOFL"] = len({r.file for r in members})
        out["PKNOI"] = sum(r.kind == "interface" for r in members)
        out["PKNOAC"] = sum(r.kind != "interface" and r.abstract for r in members)
        return out


def _reach(start: str, edges) -> set:
    seen: set = set()
    stack = list(edges(start))
    while stack:
        n = stack.pop()
        if n == start or n in seen:
            continue
        seen.add(n)
        stack.extend(edges(n))
    return seen


def _stat(op: str, vals: list) -> float:
    if not vals:
        return 0.0
    if op == "SUM":
        return float(sum(vals))
    if op == "AVG":
        return statistics.fmean(vals)
    if op == "MIN":
        return float(min(vals))
    if op == "MAX":
        return float(max(vals))
    if op == "LOG":
        return math.log(1 + sum(vals))
    if op == "SD":
        return statistics.pstdev(vals)
    raise ValueError(op)


def _lexical(tokens: list) -> dict[str, int]:
    kinds = [k for k, _ in tokens]
    lex = [x for _, x in tokens]
    ids = [x for k, x in tokens if k == ID]
    kws = [x for k, x in tokens if k == KW]
    ops = [x for k, x in tokens if k == OP]
    vals = {
        "NOTK": len(tokens),
        "NOTKU": len(set(lex)),
        "NOID": len(ids),
        "NOIDU": len(set(ids)),
        "NOKW": len(kws),
        "NOKWU": len(set(kws)),
        "NOASS": kinds.count(AS),
        "NOOP": len(ops),
        "NOOPU": len(set(ops)),
        "NOSC": kinds.count(SC),
        "NODOT": kinds.count(DT),
        "NOREPR": kws.count("return") + sum(ids.count(p) for p in ("print", "println", "printf")),
        "NOCJST": sum(kws.count(k) for k in ("if", "switch", "case")),
        "NOCUJST": sum(kws.count(k) for k in ("break", "continue", "goto")),
        "NOEXST": sum(kws.count(k) for k in ("try", "catch", "finally", "throw", "throws")),
        "NONEW": kws.count("new"),
        "NOSUPER": kws.count("super"),
    }
    return {n: vals[n] for n in LEXICAL}


def generate_corpus(root, seed: int = 7) -> dict[str, dict[str, float]]:
    """Write the synthetic project under `root` and return its golden metrics."""
    return CorpusGenerator(CorpusSpec(seed=seed)).write(root)
