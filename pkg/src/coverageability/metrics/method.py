"""Per-method metrics feeding the class and package sub-metric webs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..javamodel import ast
from ..javamodel.cfg import ControlFlowGraph, build_cfg, essential_complexity, knots
from ..javamodel.model import FileUnit, MethodDecl

NPATH_CAP = 10**9

_CONTROL = (
    ast.If, ast.While, ast.DoWhile, ast.For, ast.ForEach, ast.Switch, ast.Try, ast.Synchronized,
)
_DECLARATIVE = (ast.LocalVar, ast.LocalClass)


def compute_cc(cfg: ControlFlowGraph, variant: str) -> int:
    d = cfg.decisions
    cc = 1 + d["if"] + d["loop"] + d["case"] + d["catch"] + d["ternary"]
    if variant == "CC":
        return cc
    if variant == "CC-strict":
        return cc + d["and"] + d["or"]
    if variant == "CC-modified":
        return cc - d["case"] + d["switch"]
    if variant == "CC-essential":
        return min(cc, essential_complexity(cfg))
    raise ValueError(f"unknown CC variant {variant!r}")


def _sat(x: int) -> int:
    return x if x < NPATH_CAP else NPATH_CAP


def _bool_ops(e: Optional[ast.Node]) -> int:
    if e is None:
        return 0
    return sum(1 for n in e.walk() if isinstance(n, ast.Binary) and n.op in ("&&", "||"))


def _ternaries(e: Optional[ast.Node]) -> int:
    if e is None:
        return 0
    return sum(1 for n in e.walk() if isinstance(n, ast.Conditional))


def npath(s: Optional[ast.Stmt]) -> int:
    """Acyclic execution path count, saturating at ``NPATH_CAP``."""
    if s is None:
        return 1
    if isinstance(s, ast.Block):
        return _seq(s.stmts)
    if isinstance(s, ast.If):
        other = npath(s.other) if s.other is not None else 1
        return _sat(npath(s.then) + other + _bool_ops(s.cond))
    if isinstance(s, (ast.While, ast.For, ast.ForEach)):
        cond = getattr(s, "cond", None)
        return _sat(npath(s.body) + _bool_ops(cond) + 1)
    if isinstance(s, ast.DoWhile):
        return _sat(npath(s.body) + _bool_ops(s.cond) + 1)
    if isinstance(s, ast.Switch):
        total = _bool_ops(s.selector)
        for g in s.groups:
            total += _seq(g.body)
        if not any(g.is_default for g in s.groups):
            total += 1
        return _sat(total)
    if isinstance(s, ast.Try):
        total = npath(s.body) + sum(npath(c.body) for c in s.catches)
        if s.finally_ is not None:
            total *= npath(s.finally_)
        return _sat(total)
    if isinstance(s, (ast.Labeled, ast.Synchronized)):
        return npath(s.body)
    if isinstance(s, ast.LocalClass):
        return 1
    # expression-level branching: each ternary adds one path
    return _sat(1 + _ternaries(s))


def _seq(stmts) -> int:
    total = 1
    for s in stmts:
        total = _sat(total * npath(s))
    return total


def nesting(s: Optional[ast.Stmt], depth: int = 0) -> int:
    """Deepest nesting of control structures; ``else if`` stays at its level."""
    if s is None:
        return depth
    if isinstance(s, ast.Block):
        return max((nesting(x, depth) for x in s.stmts), default=depth)
    if isinstance(s, ast.If):
        inner = depth + 1
        best = nesting(s.then, inner)
        if isinstance(s.other, ast.If):
            best = max(best, nesting(s.other, depth))
        elif s.other is not None:
            best = max(best, nesting(s.other, inner))
        return best
    if isinstance(s, (ast.While, ast.DoWhile, ast.For, ast.ForEach, ast.Synchronized)):
        return nesting(s.body, depth + 1)
    if isinstance(s, ast.Labeled):
        return nesting(s.body, depth)
    if isinstance(s, ast.Switch):
        inner = depth + 1
        return max([inner] + [nesting(x, inner) for g in s.groups for x in g.body])
    if isinstance(s, ast.Try):
        inner = depth + 1
        parts = [nesting(s.body, inner)] + [nesting(c.body, inner) for c in s.catches]
        if s.finally_ is not None:
            parts.append(nesting(s.finally_, inner))
        return max(parts)
    return depth


def count_statements(node: Optional[ast.Node]) -> tuple[int, int]:
    """(declarative, executable) statement counts below `node`.

    Blocks and empty statements are punctuation, not statements.
    """
    if node is None:
        return 0, 0
    decl = exe = 0
    for n in node.walk():
        if not isinstance(n, ast.Stmt) or isinstance(n, (ast.Block, ast.Empty)):
            continue
        if isinstance(n, _DECLARATIVE):
            decl += 1
        else:
            exe += 1
    return decl, exe


@dataclass(frozen=True)
class MethodMetrics:
    key: str
    namm: bool
    cc: int
    cc_strict: int
    cc_modified: int
    cc_essential: int
    loc_code: int
    loc_comment: int
    loc_total: int
    nost_decl: int
    nost_exec: int
    params: int
    nesting: int
    npath: int
    knots: int

    @property
    def nost(self) -> int:
        return self.nost_decl + self.nost_exec

    def value(self, family: str, variant: str = "") -> int:
        return _ACCESSORS[(family, variant)](self)


_ACCESSORS = {
    ("CSCC", "CC"): lambda m: m.cc,
    ("CSCC", "CC-strict"): lambda m: m.cc_strict,
    ("CSCC", "CC-modified"): lambda m: m.cc_modified,
    ("CSCC", "CC-essential"): lambda m: m.cc_essential,
    ("CSLOC", "code"): lambda m: m.loc_code,
    ("CSLOC", "comment"): lambda m: m.loc_comment,
    ("CSLOC", "total"): lambda m: m.loc_total,
    ("CSNOST", "all"): lambda m: m.nost,
    ("CSNOST", "declarative"): lambda m: m.nost_decl,
    ("CSNOST", "executable"): lambda m: m.nost_exec,
    ("CSNOP", ""): lambda m: m.params,
    ("CSNESTING", ""): lambda m: m.nesting,
    ("CSPATH", ""): lambda m: m.npath,
    ("CSKNOTS", ""): lambda m: m.knots,
}


def span_lines(unit: FileUnit, start: int, end: int) -> tuple[int, int, int]:
    """(code, comment, total) line counts over an inclusive line span."""
    if end < start:
        return 0, 0, 0
    code = sum(1 for ln in unit.code_lines if start <= ln <= end)
    comment = sum(1 for ln in unit.comment_lines if start <= ln <= end)
    return code, comment, end - start + 1


def method_metrics(method: MethodDecl, unit: FileUnit) -> MethodMetrics:
    if method.body is None:
        raise ValueError(f"{method.key} has no body")
    cfg = build_cfg(method.body)
    cc = compute_cc(cfg, "CC")
    decl, exe = count_statements(method.body)
    code, comment, total = span_lines(unit, method.start_line, method.end_line)
    return MethodMetrics(
        key=method.key,
        namm=method.is_namm,
        cc=cc,
        cc_strict=compute_cc(cfg, "CC-strict"),
        cc_modified=compute_cc(cfg, "CC-modified"),
        cc_essential=compute_cc(cfg, "CC-essential"),
        loc_code=code,
        loc_comment=comment,
        loc_total=total,
        nost_decl=decl,
        nost_exec=exe,
        params=method.parameter_count,
        nesting=nesting(method.body),
        npath=npath(method.body),
        knots=knots(cfg),
    )
