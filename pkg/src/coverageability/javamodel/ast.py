"""Syntax tree node types produced by the Java parser.

Nodes are frozen dataclasses holding tuples, so two parses of the same text
compare equal and trees can be shared between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Iterator, Optional, Union

PRIMITIVE_TYPES = frozenset(
    ["boolean", "byte", "char", "short", "int", "long", "float", "double", "void"]
)


@dataclass(frozen=True)
class Node:
    def children(self) -> Iterator["Node"]:
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, Node):
                yield value
            elif isinstance(value, tuple):
                for item in value:
                    if isinstance(item, Node):
                        yield item
                    elif isinstance(item, tuple):
                        for sub in item:
                            if isinstance(sub, Node):
                                yield sub

    def walk(self) -> Iterator["Node"]:
        """Pre-order traversal of this node and all descendants."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(list(node.children())))


@dataclass(frozen=True)
class TypeRef(Node):
    name: str
    args: tuple["TypeRef", ...] = ()
    dims: int = 0

    @property
    def simple_name(self) -> str:
        return self.name.rsplit(".", 1)[-1]

    @property
    def is_primitive(self) -> bool:
        return self.name in PRIMITIVE_TYPES and self.dims == 0

    def referenced_names(self) -> Iterator[str]:
        """Every class name mentioned, including type arguments."""
        if self.name not in PRIMITIVE_TYPES and self.name != "?":
            yield self.name
        for arg in self.args:
            yield from arg.referenced_names()


# ---------------------------------------------------------------- expressions


@dataclass(frozen=True)
class Expr(Node):
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Name(Expr):
    name: str = ""


@dataclass(frozen=True)
class Literal(Expr):
    text: str = ""


@dataclass(frozen=True)
class This(Expr):
    qualifier: Optional[str] = None


@dataclass(frozen=True)
class Super(Expr):
    pass


@dataclass(frozen=True)
class FieldAccess(Expr):
    target: Optional[Expr] = None
    name: str = ""


@dataclass(frozen=True)
class MethodCall(Expr):
    target: Optional[Expr] = None
    name: str = ""
    args: tuple[Expr, ...] = ()


@dataclass(frozen=True)
class New(Expr):
    type: Optional[TypeRef] = None
    args: tuple[Expr, ...] = ()
    # anonymous class members fold into the enclosing method
    body: Optional[tuple["Member", ...]] = None
    outer: Optional[Expr] = None


@dataclass(frozen=True)
class NewArray(Expr):
    type: Optional[TypeRef] = None
    dims: tuple[Expr, ...] = ()
    init: Optional["ArrayInit"] = None


@dataclass(frozen=True)
class ArrayInit(Expr):
    elements: tuple[Expr, ...] = ()


@dataclass(frozen=True)
class Assign(Expr):
    op: str = "="
    target: Optional[Expr] = None
    value: Optional[Expr] = None


@dataclass(frozen=True)
class Binary(Expr):
    op: str = ""
    left: Optional[Expr] = None
    right: Optional[Expr] = None


@dataclass(frozen=True)
class Unary(Expr):
    op: str = ""
    operand: Optional[Expr] = None
    postfix: bool = False


@dataclass(frozen=True)
class Conditional(Expr):
    cond: Optional[Expr] = None
    then: Optional[Expr] = None
    other: Optional[Expr] = None


@dataclass(frozen=True)
class Cast(Expr):
    type: Optional[TypeRef] = None
    expr: Optional[Expr] = None


@dataclass(frozen=True)
class InstanceOf(Expr):
    expr: Optional[Expr] = None
    type: Optional[TypeRef] = None


@dataclass(frozen=True)
class ArrayAccess(Expr):
    array: Optional[Expr] = None
    index: Optional[Expr] = None


@dataclass(frozen=True)
class Lambda(Expr):
    params: tuple[str, ...] = ()
    body: Optional[Union[Expr, "Block"]] = None


@dataclass(frozen=True)
class MethodRef(Expr):
    target: Optional[Union[Expr, TypeRef]] = None
    name: str = ""


@dataclass(frozen=True)
class ClassLit(Expr):
    type: Optional[TypeRef] = None


@dataclass(frozen=True)
class SwitchExpr(Expr):
    selector: Optional[Expr] = None
    groups: tuple["SwitchGroup", ...] = ()


# ----------------------------------------------------------------- statements


@dataclass(frozen=True)
class Stmt(Node):
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Block(Stmt):
    stmts: tuple[Stmt, ...] = ()


@dataclass(frozen=True)
class Declarator(Node):
    name: str = ""
    dims: int = 0
    init: Optional[Expr] = None


@dataclass(frozen=True)
class LocalVar(Stmt):
    type: Optional[TypeRef] = None
    declarators: tuple[Declarator, ...] = ()


@dataclass(frozen=True)
class ExprStmt(Stmt):
    expr: Optional[Expr] = None


@dataclass(frozen=True)
class If(Stmt):
    cond: Optional[Expr] = None
    then: Optional[Stmt] = None
    other: Optional[Stmt] = None


@dataclass(frozen=True)
class While(Stmt):
    cond: Optional[Expr] = None
    body: Optional[Stmt] = None


@dataclass(frozen=True)
class DoWhile(Stmt):
    body: Optional[Stmt] = None
    cond: Optional[Expr] = None


@dataclass(frozen=True)
class For(Stmt):
    init: tuple[Stmt, ...] = ()
    cond: Optional[Expr] = None
    update: tuple[Expr, ...] = ()
    body: Optional[Stmt] = None


@dataclass(frozen=True)
class ForEach(Stmt):
    type: Optional[TypeRef] = None
    name: str = ""
    iterable: Optional[Expr] = None
    body: Optional[Stmt] = None


@dataclass(frozen=True)
class SwitchGroup(Node):
    labels: tuple[Expr, ...] = ()
    is_default: bool = False
    body: tuple[Stmt, ...] = ()
    arrow: bool = False


@dataclass(frozen=True)
class Switch(Stmt):
    selector: Optional[Expr] = None
    groups: tuple[SwitchGroup, ...] = ()


@dataclass(frozen=True)
class Catch(Node):
    types: tuple[TypeRef, ...] = ()
    name: str = ""
    body: Optional[Block] = None


@dataclass(frozen=True)
class Try(Stmt):
    resources: tuple[Stmt, ...] = ()
    body: Optional[Block] = None
    catches: tuple[Catch, ...] = ()
    finally_: Optional[Block] = None


@dataclass(frozen=True)
class Return(Stmt):
    expr: Optional[Expr] = None


@dataclass(frozen=True)
class Break(Stmt):
    label: Optional[str] = None


@dataclass(frozen=True)
class Continue(Stmt):
    label: Optional[str] = None


@dataclass(frozen=True)
class Throw(Stmt):
    expr: Optional[Expr] = None


@dataclass(frozen=True)
class Yield(Stmt):
    expr: Optional[Expr] = None


@dataclass(frozen=True)
class Labeled(Stmt):
    label: str = ""
    body: Optional[Stmt] = None


@dataclass(frozen=True)
class Synchronized(Stmt):
    lock: Optional[Expr] = None
    body: Optional[Block] = None


@dataclass(frozen=True)
class Assert(Stmt):
    cond: Optional[Expr] = None
    message: Optional[Expr] = None


@dataclass(frozen=True)
class Empty(Stmt):
    pass


@dataclass(frozen=True)
class LocalClass(Stmt):
    decl: Optional["TypeDeclaration"] = None


# --------------------------------------------------------------- declarations


@dataclass(frozen=True)
class Member(Node):
    start_line: int = field(default=0, compare=False)
    end_line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Param(Node):
    name: str = ""
    type: Optional[TypeRef] = None
    varargs: bool = False


@dataclass(frozen=True)
class FieldDeclaration(Member):
    modifiers: frozenset = frozenset()
    type: Optional[TypeRef] = None
    declarators: tuple[Declarator, ...] = ()


@dataclass(frozen=True)
class MethodDeclaration(Member):
    name: str = ""
    modifiers: frozenset = frozenset()
    return_type: Optional[TypeRef] = None
    params: tuple[Param, ...] = ()
    throws: tuple[TypeRef, ...] = ()
    body: Optional[Block] = None
    is_constructor: bool = False


@dataclass(frozen=True)
class Initializer(Member):
    static: bool = False
    body: Optional[Block] = None


@dataclass(frozen=True)
class EnumConstant(Member):
    name: str = ""
    args: tuple[Expr, ...] = ()
    body: Optional[tuple[Member, ...]] = None


@dataclass(frozen=True)
class TypeDeclaration(Member):
    kind: str = "class"  # class | interface | enum | annotation | record
    name: str = ""
    modifiers: frozenset = frozenset()
    extends: tuple[TypeRef, ...] = ()
    implements: tuple[TypeRef, ...] = ()
    members: tuple[Member, ...] = ()


@dataclass(frozen=True)
class Import(Node):
    name: str = ""
    static: bool = False
    wildcard: bool = False


@dataclass(frozen=True)
class CompilationUnit(Node):
    package: str = ""
    imports: tuple[Import, ...] = ()
    types: tuple[TypeDeclaration, ...] = ()
