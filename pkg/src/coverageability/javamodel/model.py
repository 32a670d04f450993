"""Immutable project model assembled from parsed Java files."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping, Optional

from . import ast
from .lexer import COMMENT, LexError, Token, tokenize
from .parser import ParseError, parse_tokens

log = logging.getLogger(__name__)

VISIBILITIES = ("public", "protected", "private")


def visibility_of(modifiers: frozenset) -> str:
    for vis in VISIBILITIES:
        if vis in modifiers:
            return vis
    return "default"


@dataclass(frozen=True)
class FileUnit:
    path: str
    package: str
    tokens: tuple[Token, ...] = field(repr=False)
    code_lines: frozenset = field(repr=False)
    comment_lines: frozenset = field(repr=False)
    imports: tuple[ast.Import, ...] = field(default=(), repr=False)


@dataclass(frozen=True)
class PackageDecl:
    name: str
    files: tuple[str, ...]
    classes: tuple[str, ...]


@dataclass(frozen=True)
class FieldInfo:
    name: str
    type: ast.TypeRef
    is_static: bool
    visibility: str


@dataclass(frozen=True)
class MethodDecl:
    name: str
    owner: str
    params: tuple[ast.Param, ...]
    modifiers: frozenset
    return_type: Optional[ast.TypeRef]
    body: Optional[ast.Block] = field(repr=False)
    is_constructor: bool
    is_accessor: bool
    is_mutator: bool
    start_line: int
    end_line: int

    @property
    def parameter_count(self) -> int:
        return len(self.params)

    @property
    def visibility(self) -> str:
        return visibility_of(self.modifiers)

    @property
    def is_static(self) -> bool:
        return "static" in self.modifiers

    @property
    def is_abstract(self) -> bool:
        return self.body is None

    @property
    def is_namm(self) -> bool:
        return not (self.is_accessor or self.is_mutator)

    @property
    def key(self) -> str:
        return f"{self.owner}#{self.name}/{len(self.params)}"


@dataclass(frozen=True)
class ClassDecl:
    qualified_name: str
    name: str
    kind: str
    modifiers: frozenset
    package: str
    file: str
    superclass: Optional[ast.TypeRef]
    interfaces: tuple[ast.TypeRef, ...]
    fields: tuple[FieldInfo, ...]
    methods: tuple[MethodDecl, ...]
    constructors: tuple[MethodDecl, ...]
    field_decls: tuple[ast.FieldDeclaration, ...] = field(repr=False)
    initializers: tuple[ast.Initializer, ...] = field(repr=False)
    enum_constants: tuple[ast.EnumConstant, ...] = field(repr=False)
    start_line: int = 0
    end_line: int = 0
    outer: Optional[str] = None

    @property
    def callables(self) -> tuple[MethodDecl, ...]:
        """Methods and constructors that have a body."""
        return tuple(m for m in self.constructors + self.methods if m.body is not None)

    @property
    def is_abstract(self) -> bool:
        return "abstract" in self.modifiers

    def field_names(self) -> frozenset:
        return frozenset(f.name for f in self.fields)


@dataclass(frozen=True)
class ProjectModel:
    root: str
    packages: tuple[PackageDecl, ...]
    files: tuple[FileUnit, ...]
    classes: tuple[ClassDecl, ...]
    index: "SymbolIndex"  # noqa: F821
    skipped: tuple[tuple[str, str], ...] = ()

    def cls(self, qualified_name: str) -> ClassDecl:
        return self.index.classes[qualified_name]

    def file(self, path: str) -> FileUnit:
        return self._files_by_path[path]

    def package(self, name: str) -> PackageDecl:
        return self._packages_by_name[name]

    @cached_property
    def _files_by_path(self) -> Mapping[str, FileUnit]:
        return {f.path: f for f in self.files}

    @cached_property
    def _packages_by_name(self) -> Mapping[str, PackageDecl]:
        return {p.name: p for p in self.packages}


# ------------------------------------------------------------------ building


def _line_sets(tokens: list[Token]) -> tuple[frozenset, frozenset]:
    code: set[int] = set()
    comment: set[int] = set()
    for tok in tokens:
        if tok.kind == "whitespace":
            continue
        span = range(tok.line, tok.line + tok.lexeme.count("\n") + 1)
        if tok.kind == COMMENT:
            comment.update(span)
        else:
            code.update(span)
    return frozenset(code), frozenset(comment)


def _returned_field(stmt: ast.Stmt, fields: frozenset, params: frozenset) -> bool:
    if not isinstance(stmt, ast.Return) or stmt.expr is None:
        return False
    return _field_target(stmt.expr, fields, params) is not None


def _field_target(expr: ast.Expr, fields: frozenset, params: frozenset) -> Optional[str]:
    if isinstance(expr, ast.Name) and expr.name in fields and expr.name not in params:
        return expr.name
    if isinstance(expr, ast.FieldAccess) and isinstance(expr.target, ast.This) and expr.name in fields:
        return expr.name
    return None


def classify_accessor_mutator(
    method: ast.MethodDeclaration, fields: frozenset
) -> tuple[bool, bool]:
    """Strict syntactic getter/setter detection."""
    if method.is_constructor or method.body is None:
        return False, False
    stmts = method.body.stmts
    params = frozenset(p.name for p in method.params)
    if len(stmts) == 1 and _returned_field(stmts[0], fields, params):
        return True, False
    if len(stmts) == 2 and not (isinstance(stmts[1], ast.Return) and stmts[1].expr is None):
        return False, False
    if 1 <= len(stmts) <= 2 and params:
        stmt = stmts[0]
        if isinstance(stmt, ast.ExprStmt) and isinstance(stmt.expr, ast.Assign):
            assign = stmt.expr
            if (
                assign.op == "="
                and _field_target(assign.target, fields, params) is not None
                and isinstance(assign.value, ast.Name)
                and assign.value.name in params
            ):
                return False, True
    return False, False


def _make_method(decl: ast.MethodDeclaration, owner: str, fields: frozenset) -> MethodDecl:
    accessor, mutator = classify_accessor_mutator(decl, fields)
    return MethodDecl(
        name=decl.name,
        owner=owner,
        params=decl.params,
        modifiers=decl.modifiers,
        return_type=decl.return_type,
        body=decl.body,
        is_constructor=decl.is_constructor,
        is_accessor=accessor,
        is_mutator=mutator,
        start_line=decl.start_line,
        end_line=decl.end_line,
    )


def _collect_classes(
    decl: ast.TypeDeclaration, package: str, path: str, outer: Optional[str], out: list[ClassDecl]
) -> None:
    if outer is not None:
        qname = f"{outer}.{decl.name}"
    else:
        qname = f"{package}.{decl.name}" if package else decl.name
    field_decls = tuple(m for m in decl.members if isinstance(m, ast.FieldDeclaration))
    enum_consts = tuple(m for m in decl.members if isinstance(m, ast.EnumConstant))
    fields: list[FieldInfo] = []
    for fd in field_decls:
        for d in fd.declarators:
            type_ = fd.type if not d.dims else ast.TypeRef(fd.type.name, fd.type.args, fd.type.dims + d.dims)
            fields.append(
                FieldInfo(d.name, type_, "static" in fd.modifiers, visibility_of(fd.modifiers))
            )
    for ec in enum_consts:
        fields.append(FieldInfo(ec.name, ast.TypeRef(decl.name), True, "public"))
    names = frozenset(f.name for f in fields)
    methods = []
    ctors = []
    for m in decl.members:
        if isinstance(m, ast.MethodDeclaration):
            (ctors if m.is_constructor else methods).append(_make_method(m, qname, names))
    superclass = None
    interfaces: tuple[ast.TypeRef, ...]
    if decl.kind == "interface":
        interfaces = decl.extends
    else:
        superclass = decl.extends[0] if decl.extends else None
        interfaces = decl.implements
    modifiers = decl.modifiers
    if decl.kind == "interface":
        modifiers = modifiers | {"abstract"}
    out.append(
        ClassDecl(
            qualified_name=qname,
            name=decl.name,
            kind=decl.kind,
            modifiers=modifiers,
            package=package,
            file=path,
            superclass=superclass,
            interfaces=interfaces,
            fields=tuple(fields),
            methods=tuple(methods),
            constructors=tuple(ctors),
            field_decls=field_decls,
            initializers=tuple(m for m in decl.members if isinstance(m, ast.Initializer)),
            enum_constants=enum_consts,
            start_line=decl.start_line,
            end_line=decl.end_line,
            outer=outer,
        )
    )
    for m in decl.members:
        if isinstance(m, ast.TypeDeclaration) and m.kind != "annotation":
            _collect_classes(m, package, path, qname, out)


def _parse_file(path: str, text: str) -> tuple[FileUnit, ast.CompilationUnit]:
    tokens = tokenize(text)
    unit = parse_tokens(tokens)
    code, comment = _line_sets(tokens)
    return (
        FileUnit(
            path=path,
            package=unit.package,
            tokens=tuple(tokens),
            code_lines=code,
            comment_lines=comment,
            imports=unit.imports,
        ),
        unit,
    )


def build_model(sources: Mapping[str, str], root: str = "") -> ProjectModel:
    """Build a model from a mapping of relative path to file contents."""
    from .resolve import build_index

    files: list[FileUnit] = []
    classes: list[ClassDecl] = []
    skipped: list[tuple[str, str]] = []
    seen: set[str] = set()
    for path in sorted(sources):
        try:
            unit_file, unit = _parse_file(path, sources[path])
        except (LexError, ParseError, RecursionError) as exc:
            reason = str(exc) if not isinstance(exc, RecursionError) else "nesting too deep"
            log.warning("skipping %s: %s", path, reason)
            skipped.append((path, reason))
            continue
        found: list[ClassDecl] = []
        for decl in unit.types:
            if decl.kind != "annotation":
                _collect_classes(decl, unit.package, path, None, found)
        dupes = [c.qualified_name for c in found if c.qualified_name in seen]
        if dupes:
            reason = f"duplicate class {dupes[0]}"
            log.warning("skipping %s: %s", path, reason)
            skipped.append((path, reason))
            continue
        seen.update(c.qualified_name for c in found)
        files.append(unit_file)
        classes.extend(found)
    classes.sort(key=lambda c: c.qualified_name)
    packages: dict[str, tuple[list[str], list[str]]] = {}
    for f in files:
        packages.setdefault(f.package, ([], []))[0].append(f.path)
    for c in classes:
        packages.setdefault(c.package, ([], []))[1].append(c.qualified_name)
    pkg_decls = tuple(
        PackageDecl(name, tuple(fs), tuple(cs)) for name, (fs, cs) in sorted(packages.items())
    )
    if not classes:
        log.warning("model is empty: no parseable classes under %r", root)
    index = build_index(classes, {f.path: f for f in files})
    return ProjectModel(
        root=root,
        packages=pkg_decls,
        files=tuple(files),
        classes=tuple(classes),
        index=index,
        skipped=tuple(skipped),
    )


def iter_java_files(root: Path) -> Iterable[Path]:
    for dirpath, dirnames, filenames in os.walk(root):
        dirnames.sort()
        for name in sorted(filenames):
            if name.endswith(".java"):
                yield Path(dirpath) / name


def parse_project(source_root) -> ProjectModel:
    """Parse every ``.java`` file below `source_root` into a project model."""
    root = Path(source_root)
    if not root.is_dir():
        raise NotADirectoryError(f"not a readable directory: {root}")
    sources: dict[str, str] = {}
    for path in iter_java_files(root):
        rel = path.relative_to(root).as_posix()
        try:
            sources[rel] = path.read_bytes().decode("utf-8")
        except UnicodeDecodeError:
            # tolerate legacy encodings rather than dropping the file
            sources[rel] = path.read_bytes().decode("latin-1")
    return build_model(sources, root=str(root))


def freeze(mapping: dict) -> Mapping:
    return MappingProxyType(mapping)


def dump_model(model: ProjectModel) -> str:
    """One structured text record per class, for debugging."""
    lines = []
    for c in model.classes:
        idx = model.index
        lines.append(f"[class {c.qualified_name}]")
        lines.append(f"kind = {c.kind}")
        lines.append(f"file = {c.file}")
        lines.append(f"package = {c.package or '(default)'}")
        lines.append(f"lines = {c.start_line}-{c.end_line}")
        lines.append(f"superclass = {idx.superclass.get(c.qualified_name) or idx.external_superclass.get(c.qualified_name) or ''}")
        lines.append(f"parents = {', '.join(idx.parents[c.qualified_name])}")
        lines.append(f"fields = {', '.join(f.name for f in c.fields)}")
        for m in c.constructors + c.methods:
            flags = "".join(
                [
                    "C" if m.is_constructor else "",
                    "A" if m.is_accessor else "",
                    "M" if m.is_mutator else "",
                ]
            )
            lines.append(f"method = {m.name}/{m.parameter_count} {m.visibility} {flags}".rstrip())
        lines.append("")
    for path, reason in model.skipped:
        lines.append(f"[skipped {path}]")
        lines.append(f"reason = {reason}")
        lines.append("")
    return "\n".join(lines)
