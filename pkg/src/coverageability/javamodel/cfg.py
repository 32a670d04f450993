"""Per-method control-flow graphs and decision annotations."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import ast

DECISION_KINDS = (
    "if",
    "loop",
    "case",
    "catch",
    "ternary",
    "and",
    "or",
    "switch",
)


@dataclass(frozen=True)
class Edge:
    src: int
    dst: int
    label: str = ""
    # break / continue / early return / throw
    jump: bool = False


@dataclass(frozen=True)
class ControlFlowGraph:
    nodes: tuple[int, ...]
    edges: tuple[Edge, ...]
    entry: int
    exit: int
    # node id -> Counter of decision kinds introduced at that node
    annotations: dict = field(default_factory=dict, compare=False)
    decisions: Counter = field(default_factory=Counter, compare=False)
    # (source position, target position) of every jump, in statement order
    jumps: tuple[tuple[int, int], ...] = ()

    def successors(self, node: int) -> list[int]:
        return [e.dst for e in self.edges if e.src == node]

    @property
    def cyclomatic_number(self) -> int:
        return len(self.edges) - len(self.nodes) + 2


def count_decisions(node: ast.Node) -> Counter:
    """Decision constructs anywhere below `node`, lambdas and anonymous classes included."""
    counts: Counter = Counter()
    for n in node.walk():
        if isinstance(n, ast.If):
            counts["if"] += 1
        elif isinstance(n, (ast.While, ast.DoWhile, ast.For, ast.ForEach)):
            counts["loop"] += 1
        elif isinstance(n, (ast.Switch, ast.SwitchExpr)):
            labels = sum(len(g.labels) for g in n.groups)
            counts["case"] += labels
            if labels:
                counts["switch"] += 1
        elif isinstance(n, ast.Catch):
            counts["catch"] += 1
        elif isinstance(n, ast.Conditional):
            counts["ternary"] += 1
        elif isinstance(n, ast.Binary):
            if n.op == "&&":
                counts["and"] += 1
            elif n.op == "||":
                counts["or"] += 1
    return counts


class _Builder:
    def __init__(self) -> None:
        self.n_nodes = 0
        self.edges: list[Edge] = []
        self.entry = self.new()
        self.exit = self.new()
        self.annotations: dict[int, Counter] = {}
        # (kind, label, break node, continue node, span) per enclosing construct;
        # span records statement positions for the knot layout
        self.targets: list[tuple[str, Optional[str], int, Optional[int], dict]] = []
        self.position = 0
        # (source position, span, "start" | "end" | "exit")
        self.jumps: list[tuple[int, Optional[dict], str]] = []
        self.pending_labels: list[str] = []

    def new(self) -> int:
        n = self.n_nodes
        self.n_nodes += 1
        return n

    def edge(self, src: int, dst: int, label: str = "", jump: bool = False) -> None:
        self.edges.append(Edge(src, dst, label, jump))

    def annotate(self, node: int, expr_or_stmt: Optional[ast.Node], kind: Optional[str] = None) -> None:
        c = self.annotations.setdefault(node, Counter())
        if kind:
            c[kind] += 1
        if expr_or_stmt is not None:
            c.update(count_decisions(expr_or_stmt))

    def mark(self) -> int:
        self.position += 1
        return self.position

    def jump(self, src: int, dst: int, span: Optional[dict], where: str, label: str) -> None:
        self.edge(src, dst, label, jump=True)
        self.jumps.append((self.position, span, where))

    def push(self, kind: str, labels: list[str], brk: int, cont: Optional[int]) -> None:
        self.targets.append((kind, labels[-1] if labels else None, brk, cont, {"start": self.position}))

    def pop(self) -> None:
        self.targets.pop()[4]["end"] = self.position + 1

    # a statement takes the current node and returns the node where control
    # continues, or None if control never falls through
    def stmts(self, stmts: Iterable[ast.Stmt], cur: Optional[int]) -> Optional[int]:
        for s in stmts:
            if cur is None:
                # dead code still gets a (later pruned) node
                cur = self.new()
            cur = self.stmt(s, cur)
        return cur

    def stmt(self, s: ast.Stmt, cur: int) -> Optional[int]:
        self.mark()
        labels, self.pending_labels = self.pending_labels, []
        if isinstance(s, ast.Block):
            return self.stmts(s.stmts, cur)
        if isinstance(s, ast.If):
            cond = self.new()
            self.edge(cur, cond)
            self.annotate(cond, s.cond, "if")
            then_start = self.new()
            self.edge(cond, then_start, "true")
            then_end = self.stmt(s.then, then_start)
            after = self.new()
            if s.other is not None:
                else_start = self.new()
                self.edge(cond, else_start, "false")
                else_end = self.stmt(s.other, else_start)
                if else_end is not None:
                    self.edge(else_end, after)
            else:
                self.edge(cond, after, "false")
            if then_end is not None:
                self.edge(then_end, after)
            return after
        if isinstance(s, (ast.While, ast.For, ast.ForEach)):
            if isinstance(s, ast.For):
                for init in s.init:
                    self.annotate(cur, init)
            if isinstance(s, ast.ForEach):
                self.annotate(cur, s.iterable)
            head = self.new()
            self.edge(cur, head)
            cond_expr = s.cond if isinstance(s, (ast.While, ast.For)) else None
            self.annotate(head, cond_expr, "loop")
            after = self.new()
            body_start = self.new()
            self.edge(head, body_start, "true")
            self.edge(head, after, "false")
            self.push("loop", labels, after, head)
            body_end = self.stmt(s.body, body_start)
            self.pop()
            if isinstance(s, ast.For):
                for u in s.update:
                    self.annotate(head, u)
            if body_end is not None:
                self.edge(body_end, head)
            return after
        if isinstance(s, ast.DoWhile):
            body_start = self.new()
            self.edge(cur, body_start)
            cond = self.new()
            after = self.new()
            self.push("loop", labels, after, cond)
            body_end = self.stmt(s.body, body_start)
            self.pop()
            if body_end is not None:
                self.edge(body_end, cond)
            self.annotate(cond, s.cond, "loop")
            self.edge(cond, body_start, "true")
            self.edge(cond, after, "false")
            return after
        if isinstance(s, ast.Switch):
            sw = self.new()
            self.edge(cur, sw)
            n_labels = sum(len(g.labels) for g in s.groups)
            self.annotate(sw, s.selector)
            c = self.annotations.setdefault(sw, Counter())
            c["case"] += n_labels
            if n_labels:
                c["switch"] += 1
            for g in s.groups:
                for lab in g.labels:
                    c.update(count_decisions(lab))
            after = self.new()
            self.push("switch", labels, after, None)
            prev_end: Optional[int] = None
            has_default = False
            for g in s.groups:
                start = self.new()
                self.edge(sw, start, "default" if g.is_default and not g.labels else "case")
                has_default = has_default or g.is_default
                if prev_end is not None and not g.arrow:
                    self.edge(prev_end, start)  # fall-through
                end = self.stmts(g.body, start)
                if g.arrow:
                    if end is not None:
                        self.edge(end, after)
                    prev_end = None
                else:
                    prev_end = end
            self.pop()
            if prev_end is not None:
                self.edge(prev_end, after)
            if not has_default:
                self.edge(sw, after, "default")
            return after
        if isinstance(s, ast.Try):
            node = self.new()
            self.edge(cur, node)
            for r in s.resources:
                self.annotate(node, r)
            body_start = self.new()
            self.edge(node, body_start)
            ends = [self.stmt(s.body, body_start)]
            for catch in s.catches:
                cs = self.new()
                self.edge(node, cs, "catch")
                self.annotate(cs, None, "catch")
                ends.append(self.stmt(catch.body, cs))
            live = [e for e in ends if e is not None]
            if s.finally_ is not None:
                if not live:
                    # reached only by abrupt completion, which the graph
                    # routes straight to exit; keep its decisions
                    self.annotate(node, s.finally_)
                    return None
                fin = self.new()
                for e in live:
                    self.edge(e, fin)
                return self.stmt(s.finally_, fin)
            if not live:
                return None
            after = self.new()
            for e in live:
                self.edge(e, after)
            return after
        if isinstance(s, ast.Return) or isinstance(s, ast.Throw):
            self.annotate(cur, s.expr)
            self.jump(cur, self.exit, None, "exit", "return" if isinstance(s, ast.Return) else "throw")
            return None
        if isinstance(s, (ast.Break, ast.Continue, ast.Yield)):
            if isinstance(s, ast.Yield):
                self.annotate(cur, s.expr)
            target = self._jump_target(s)
            if target is None:
                # unmatched jump (e.g. yield in a switch expression): ignore
                return cur
            dst, span, where = target
            self.jump(cur, dst, span, where, type(s).__name__.lower())
            return None
        if isinstance(s, ast.Labeled):
            self.pending_labels = labels + [s.label]
            if isinstance(s.body, (ast.While, ast.For, ast.ForEach, ast.DoWhile, ast.Switch)):
                return self.stmt(s.body, cur)
            after = self.new()
            self.push("block", [s.label], after, None)
            end = self.stmt(s.body, cur)
            self.pop()
            if end is not None:
                self.edge(end, after)
            return after
        if isinstance(s, ast.Synchronized):
            self.annotate(cur, s.lock)
            return self.stmt(s.body, cur)
        # straight-line statement
        self.annotate(cur, s)
        return cur

    def _jump_target(self, s: ast.Stmt) -> Optional[tuple[int, dict, str]]:
        label = getattr(s, "label", None)
        for kind, lab, brk, cont, span in reversed(self.targets):
            if label is not None and lab != label:
                continue
            if isinstance(s, ast.Continue):
                if kind == "loop":
                    return cont, span, "start"
                continue
            if isinstance(s, ast.Yield):
                return None
            if label is None and kind == "block":
                continue
            return brk, span, "end"
        return None

    def finish(self, end: Optional[int]) -> ControlFlowGraph:
        if end is not None:
            self.edge(end, self.exit)
        # prune nodes unreachable from entry (dead code after jumps)
        adj: dict[int, list[int]] = {}
        for e in self.edges:
            adj.setdefault(e.src, []).append(e.dst)
        seen = {self.entry}
        stack = [self.entry]
        while stack:
            n = stack.pop()
            for m in adj.get(n, ()):
                if m not in seen:
                    seen.add(m)
                    stack.append(m)
        if self.exit not in seen:
            # every path loops forever; keep a single exit for the invariant
            seen.add(self.exit)
            self.edges.append(Edge(self.entry, self.exit, "unreachable"))
        edges = tuple(e for e in self.edges if e.src in seen and e.dst in seen)
        annotations = {n: c for n, c in self.annotations.items() if n in seen and c}
        total: Counter = Counter()
        for c in annotations.values():
            total.update(c)
        return ControlFlowGraph(
            nodes=tuple(sorted(seen)),
            edges=edges,
            entry=self.entry,
            exit=self.exit,
            annotations=annotations,
            decisions=total,
            jumps=tuple(self._jump_spans()),
        )

    def _jump_spans(self) -> list[tuple[int, int]]:
        out = []
        for src, span, where in self.jumps:
            if where == "exit":
                dst = self.position + 1
            else:
                dst = span[where]
            out.append((src, dst))
        return out


def build_cfg(body: Optional[ast.Block]) -> ControlFlowGraph:
    """Build the CFG of a method body (``None`` for an abstract method is rejected)."""
    if body is None:
        raise ValueError("abstract methods have no control-flow graph")
    b = _Builder()
    start = b.new()
    b.edge(b.entry, start)
    end = b.stmt(body, start)
    return b.finish(end)


def knots(cfg: ControlFlowGraph) -> int:
    """Pairs of jumps whose spans cross when drawn beside the statement list."""
    spans = [tuple(sorted(j)) for j in cfg.jumps]
    count = 0
    for i, (a, b) in enumerate(spans):
        for c, d in spans[i + 1 :]:
            if a < c < b < d or c < a < d < b:
                count += 1
    return count


def essential_complexity(cfg: ControlFlowGraph) -> int:
    """Cyclomatic number left after collapsing structured constructs.

    Sequences, if/else diamonds, switch fans and loops whose body has been
    collapsed reduce to single edges; whatever survives is unstructured flow.
    """
    succ: dict[int, list[int]] = {n: [] for n in cfg.nodes}
    for e in cfg.edges:
        succ[e.src].append(e.dst)
    protected = {cfg.entry, cfg.exit}

    def preds_of(n: int) -> list[int]:
        return [a for a, outs in succ.items() for b in outs if b == n]

    changed = True
    while changed:
        changed = False
        for n in list(succ):
            if n not in succ:
                continue
            # drop self loops and parallel edges
            outs = [m for m in dict.fromkeys(succ[n]) if m != n]
            if outs != succ[n]:
                succ[n] = outs
                changed = True
        for n in sorted(succ):
            if n in protected or n not in succ:
                continue
            outs = succ[n]
            preds = preds_of(n)
            if len(preds) == 1 and len(outs) == 1 and preds[0] != n:
                # a -> n -> c becomes a -> c
                a, c = preds[0], outs[0]
                succ[a] = [c if m == n else m for m in succ[a]]
                del succ[n]
                changed = True
                continue
            if len(outs) == 1:
                c = outs[0]
                if c not in protected and c != n and len(preds_of(c)) == 1:
                    # contract n -> c; n takes over c's successors
                    succ[n] = [n if m == c else m for m in succ[c]]
                    del succ[c]
                    for a in succ:
                        succ[a] = [n if m == c else m for m in succ[a]]
                    changed = True
    n_edges = sum(len(v) for v in succ.values())
    return max(1, n_edges - len(succ) + 2)
