"""Recursive-descent parser for the supported Java subset.

The grammar covers packages, imports, classes, interfaces, enums, records,
fields, methods, constructors, every statement form and full expression
precedence. Annotations, generic bounds and other constructs the metrics do
not read are consumed permissively.
"""

from __future__ import annotations

from typing import Optional

from . import ast
from .lexer import (
    ASSIGNMENT,
    IDENTIFIER,
    KEYWORD,
    LITERAL,
    Token,
    code_tokens,
    tokenize,
)

MODIFIER_WORDS = frozenset(
    """public protected private static abstract final native synchronized
    transient volatile strictfp default sealed""".split()
)

_BINARY_PRECEDENCE = {
    "||": 1,
    "&&": 2,
    "|": 3,
    "^": 4,
    "&": 5,
    "==": 6,
    "!=": 6,
    "<": 7,
    ">": 7,
    "<=": 7,
    ">=": 7,
    "instanceof": 7,
    "<<": 8,
    ">>": 8,
    ">>>": 8,
    "+": 9,
    "-": 9,
    "*": 10,
    "/": 10,
    "%": 10,
}

_CAST_FOLLOWERS = frozenset(["(", "!", "~"])
_EOF = Token("eof", "", 0)


class ParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = code_tokens(tokens)
        self.pos = 0
        # a `>>` split while closing nested type arguments
        self.pending_gt = 0

    # ------------------------------------------------------------ utilities

    def peek(self, k: int = 0) -> Token:
        i = self.pos + k
        return self.toks[i] if i < len(self.toks) else _EOF

    @property
    def cur(self) -> Token:
        return self.peek()

    def at(self, *lexemes: str) -> bool:
        return self.pending_gt == 0 and self.cur.lexeme in lexemes and self.cur.kind != LITERAL

    def at_ident(self) -> bool:
        return self.cur.kind == IDENTIFIER

    def advance(self) -> Token:
        tok = self.cur
        if tok is _EOF:
            raise ParseError("unexpected end of file", self.last_line)
        self.pos += 1
        return tok

    def accept(self, lexeme: str) -> bool:
        if self.at(lexeme):
            self.pos += 1
            return True
        return False

    def expect(self, lexeme: str) -> Token:
        if not self.at(lexeme):
            raise ParseError(f"expected {lexeme!r}, found {self.cur.lexeme!r}", self.cur.line)
        return self.advance()

    def ident(self) -> str:
        if not self.at_ident():
            raise ParseError(f"expected identifier, found {self.cur.lexeme!r}", self.cur.line)
        return self.advance().lexeme

    @property
    def last_line(self) -> int:
        if not self.toks:
            return 1
        tok = self.toks[min(self.pos, len(self.toks)) - 1]
        return tok.line + tok.lexeme.count("\n")

    def prev_end_line(self) -> int:
        tok = self.toks[self.pos - 1]
        return tok.line + tok.lexeme.count("\n")

    def skip_balanced(self, open_: str, close: str) -> None:
        self.expect(open_)
        depth = 1
        while depth:
            tok = self.advance()
            if tok.lexeme == open_ and tok.kind != LITERAL:
                depth += 1
            elif tok.lexeme == close and tok.kind != LITERAL:
                depth -= 1

    def close_angle(self) -> None:
        """Consume one `>`, splitting `>>` / `>>>` when needed."""
        if self.pending_gt:
            self.pending_gt -= 1
            if self.pending_gt == 0:
                self.pos += 1
            return
        lex = self.cur.lexeme
        if lex == ">":
            self.pos += 1
        elif lex in (">>", ">>>"):
            self.pending_gt = len(lex) - 1
        else:
            raise ParseError(f"expected '>', found {lex!r}", self.cur.line)

    def skip_type_params(self) -> None:
        self.expect("<")
        depth = 1
        while depth:
            tok = self.advance()
            if tok.lexeme == "<":
                depth += 1
            elif tok.lexeme == ">":
                depth -= 1
            elif tok.lexeme == ">>":
                depth -= 2
            elif tok.lexeme == ">>>":
                depth -= 3
        if depth < 0:
            raise ParseError("unbalanced type parameters", self.cur.line)

    # ------------------------------------------------------- compilation unit

    def compilation_unit(self) -> ast.CompilationUnit:
        package = ""
        imports: list[ast.Import] = []
        self.skip_annotations()
        if self.accept("package"):
            package = self.qualified_name()
            self.expect(";")
        while self.at("import", ";"):
            if self.accept(";"):
                continue
            self.advance()
            static = self.accept("static")
            name = self.ident()
            wildcard = False
            while self.accept("."):
                if self.accept("*"):
                    wildcard = True
                    break
                name += "." + self.ident()
            self.expect(";")
            imports.append(ast.Import(name=name, static=static, wildcard=wildcard))
        types = []
        while self.cur is not _EOF:
            if self.accept(";"):
                continue
            start = self.cur.line
            mods = self.modifiers()
            if not self.at_type_decl_start():
                raise ParseError(f"expected type declaration, found {self.cur.lexeme!r}", self.cur.line)
            types.append(self.type_declaration(mods, start))
        return ast.CompilationUnit(package=package, imports=tuple(imports), types=tuple(types))

    def qualified_name(self) -> str:
        name = self.ident()
        while self.at(".") and self.peek(1).kind == IDENTIFIER:
            self.advance()
            name += "." + self.ident()
        return name

    def skip_annotations(self) -> None:
        while self.at("@") and self.peek(1).lexeme != "interface":
            self.advance()
            self.qualified_name()
            if self.at("("):
                self.skip_balanced("(", ")")

    def modifiers(self) -> frozenset:
        mods = set()
        while True:
            if self.at("@") and self.peek(1).lexeme != "interface":
                self.skip_annotations()
            elif self.cur.lexeme in MODIFIER_WORDS and self.cur.kind in (KEYWORD, IDENTIFIER):
                if self.cur.lexeme == "default" and self.peek(1).lexeme in (":", "->"):
                    break
                if self.cur.kind == IDENTIFIER and self.peek(1).kind != KEYWORD:
                    # `sealed` is contextual; a following keyword marks it a modifier
                    break
                mods.add(self.advance().lexeme)
            elif self.cur.lexeme == "non" and self.peek(1).lexeme == "-" and self.peek(2).lexeme == "sealed":
                self.pos += 3
            else:
                break
        return frozenset(mods)

    def at_type_decl_start(self) -> bool:
        lex = self.cur.lexeme
        if lex in ("class", "interface", "enum") and self.cur.kind == KEYWORD:
            return True
        if lex == "@" and self.peek(1).lexeme == "interface":
            return True
        return lex == "record" and self.peek(1).kind == IDENTIFIER and self.peek(2).lexeme in ("(", "<")

    def type_declaration(self, mods: frozenset, start_line: int) -> ast.TypeDeclaration:
        tok = self.advance()
        kind = tok.lexeme
        if kind == "@":
            self.expect("interface")
            kind = "annotation"
        name = self.ident()
        if self.at("<"):
            self.skip_type_params()
        extends: list[ast.TypeRef] = []
        implements: list[ast.TypeRef] = []
        record_fields: list[ast.Member] = []
        if kind == "record":
            self.expect("(")
            for p in self.param_list_rest():
                record_fields.append(
                    ast.FieldDeclaration(
                        start_line=tok.line,
                        end_line=tok.line,
                        modifiers=frozenset({"private", "final"}),
                        type=p.type,
                        declarators=(ast.Declarator(name=p.name),),
                    )
                )
        while True:
            if self.accept("extends"):
                extends.extend(self.type_list())
            elif self.accept("implements"):
                implements.extend(self.type_list())
            elif self.cur.lexeme == "permits" and self.at_ident():
                self.advance()
                self.type_list()
            else:
                break
        if kind == "annotation":
            self.skip_balanced("{", "}")
            members: tuple[ast.Member, ...] = ()
        else:
            members = tuple(record_fields) + self.class_body(name, kind)
        return ast.TypeDeclaration(
            start_line=start_line,
            end_line=self.prev_end_line(),
            kind=kind,
            name=name,
            modifiers=mods,
            extends=tuple(extends),
            implements=tuple(implements),
            members=members,
        )

    def type_list(self) -> list[ast.TypeRef]:
        types = [self.parse_type()]
        while self.accept(","):
            types.append(self.parse_type())
        return types

    def class_body(self, class_name: Optional[str], kind: str = "class") -> tuple[ast.Member, ...]:
        self.expect("{")
        members: list[ast.Member] = []
        if kind == "enum":
            members.extend(self.enum_constants())
        while not self.accept("}"):
            if self.cur is _EOF:
                raise ParseError("unterminated class body", self.last_line)
            if self.accept(";"):
                continue
            members.append(self.member(class_name, kind))
        return tuple(members)

    def enum_constants(self) -> list[ast.Member]:
        consts: list[ast.Member] = []
        while not self.at(";", "}"):
            self.skip_annotations()
            line = self.cur.line
            name = self.ident()
            args: tuple[ast.Expr, ...] = ()
            body = None
            if self.at("("):
                args = self.arguments()
            if self.at("{"):
                body = self.class_body(None)
            consts.append(ast.EnumConstant(start_line=line, end_line=self.prev_end_line(), name=name, args=args, body=body))
            if not self.accept(","):
                break
        self.accept(";")
        return consts

    def member(self, class_name: Optional[str], kind: str) -> ast.Member:
        start = self.cur.line
        if self.at("{"):
            body = self.block()
            return ast.Initializer(start_line=start, end_line=self.prev_end_line(), static=False, body=body)
        if self.at("static") and self.peek(1).lexeme == "{":
            self.advance()
            body = self.block()
            return ast.Initializer(start_line=start, end_line=self.prev_end_line(), static=True, body=body)
        mods = self.modifiers()
        if self.at_type_decl_start():
            return self.type_declaration(mods, start)
        if self.at("<"):
            self.skip_type_params()
        if kind == "interface":
            if "private" not in mods and "protected" not in mods:
                mods = mods | {"public"}
        # constructor, including compact record constructors
        if self.at_ident() and self.cur.lexeme == class_name and self.peek(1).lexeme in ("(", "{"):
            name = self.ident()
            params: tuple[ast.Param, ...] = ()
            if self.accept("("):
                params = tuple(self.param_list_rest())
            throws = self.throws_clause()
            body = self.block()
            return ast.MethodDeclaration(
                start_line=start,
                end_line=self.prev_end_line(),
                name=name,
                modifiers=mods,
                return_type=None,
                params=params,
                throws=throws,
                body=body,
                is_constructor=True,
            )
        type_ = self.parse_type()
        name = self.ident()
        if self.accept("("):
            params = tuple(self.param_list_rest())
            dims = 0
            while self.at("[") and self.peek(1).lexeme == "]":
                self.pos += 2
                dims += 1
            if dims:
                type_ = ast.TypeRef(type_.name, type_.args, type_.dims + dims)
            throws = self.throws_clause()
            body = None
            if self.at("{"):
                body = self.block()
            else:
                if self.accept("default"):
                    self.parse_element_value()
                self.expect(";")
            if kind == "interface" and body is None and "static" not in mods:
                mods = mods | {"abstract"}
            return ast.MethodDeclaration(
                start_line=start,
                end_line=self.prev_end_line(),
                name=name,
                modifiers=mods,
                return_type=type_,
                params=params,
                throws=throws,
                body=body,
                is_constructor=False,
            )
        declarators = [self.declarator_rest(name)]
        while self.accept(","):
            declarators.append(self.declarator_rest(self.ident()))
        self.expect(";")
        if kind == "interface":
            mods = mods | {"static", "final", "public"}
        return ast.FieldDeclaration(
            start_line=start,
            end_line=self.prev_end_line(),
            modifiers=mods,
            type=type_,
            declarators=tuple(declarators),
        )

    def parse_element_value(self) -> None:
        if self.at("{"):
            self.skip_balanced("{", "}")
        elif self.at("@"):
            self.skip_annotations()
        else:
            self.parse_expression()

    def throws_clause(self) -> tuple[ast.TypeRef, ...]:
        if self.accept("throws"):
            return tuple(self.type_list())
        return ()

    def param_list_rest(self) -> list[ast.Param]:
        params: list[ast.Param] = []
        if self.accept(")"):
            return params
        while True:
            self.modifiers()
            type_ = self.parse_type()
            varargs = self.accept("...")
            if self.at("this"):
                # receiver parameter
                self.advance()
                name = "this"
            else:
                name = self.ident()
            dims = 0
            while self.at("[") and self.peek(1).lexeme == "]":
                self.pos += 2
                dims += 1
            if varargs or dims:
                type_ = ast.TypeRef(type_.name, type_.args, type_.dims + dims + int(varargs))
            if name != "this":
                params.append(ast.Param(name=name, type=type_, varargs=varargs))
            if not self.accept(","):
                break
        self.expect(")")
        return params

    def declarator_rest(self, name: str) -> ast.Declarator:
        dims = 0
        while self.at("[") and self.peek(1).lexeme == "]":
            self.pos += 2
            dims += 1
        init = None
        if self.accept("="):
            init = self.array_init() if self.at("{") else self.parse_expression()
        return ast.Declarator(name=name, dims=dims, init=init)

    def array_init(self) -> ast.ArrayInit:
        line = self.expect("{").line
        elements = []
        while not self.accept("}"):
            elements.append(self.array_init() if self.at("{") else self.parse_expression())
            if not self.accept(","):
                self.expect("}")
                break
        return ast.ArrayInit(line=line, elements=tuple(elements))

    # ------------------------------------------------------------------ types

    def parse_type(self) -> ast.TypeRef:
        self.skip_annotations()
        tok = self.cur
        if tok.kind == KEYWORD and tok.lexeme in ast.PRIMITIVE_TYPES:
            self.advance()
            name = tok.lexeme
            args: tuple[ast.TypeRef, ...] = ()
        elif tok.lexeme == "?":
            self.advance()
            if self.accept("extends") or self.accept("super"):
                return self.parse_type()
            return ast.TypeRef("?")
        else:
            name = self.ident()
            args = ()
            if self.at("<"):
                args = self.type_args()
            while self.at(".") and self.peek(1).kind == IDENTIFIER:
                self.advance()
                self.skip_annotations()
                name += "." + self.ident()
                if self.at("<"):
                    args = self.type_args()
        dims = 0
        while self.at("[") and self.peek(1).lexeme == "]":
            self.pos += 2
            dims += 1
        return ast.TypeRef(name, args, dims)

    def type_args(self) -> tuple[ast.TypeRef, ...]:
        self.expect("<")
        args = []
        if self.pending_gt == 0 and self.cur.lexeme in (">", ">>", ">>>"):
            self.close_angle()  # diamond
            return ()
        while True:
            args.append(self.parse_type())
            while self.accept("&"):
                self.parse_type()
            if not self.accept(","):
                break
        self.close_angle()
        return tuple(args)

    def speculate(self, fn) -> bool:
        """Run `fn` and rewind; report whether it succeeded."""
        saved = (self.pos, self.pending_gt)
        try:
            return bool(fn())
        except ParseError:
            return False
        finally:
            self.pos, self.pending_gt = saved

    # ------------------------------------------------------------- statements

    def block(self) -> ast.Block:
        line = self.expect("{").line
        stmts = []
        while not self.accept("}"):
            if self.cur is _EOF:
                raise ParseError("unterminated block", line)
            stmts.append(self.statement())
        return ast.Block(line=line, stmts=tuple(stmts))

    def _looks_like_local_var(self) -> bool:
        self.modifiers()
        self.parse_type()
        if self.pending_gt:
            return False
        return self.at_ident() and self.peek(1).lexeme in ("=", ";", ",", "[", ":")

    def statement(self) -> ast.Stmt:
        tok = self.cur
        line = tok.line
        lex = tok.lexeme
        if tok.kind == KEYWORD or lex in ("{", ";"):
            if lex == "{":
                return self.block()
            if lex == ";":
                self.advance()
                return ast.Empty(line=line)
            handler = getattr(self, f"stmt_{lex}", None)
            if handler is not None:
                return handler()
        if tok.kind == IDENTIFIER:
            if self.peek(1).lexeme == ":" :
                label = self.advance().lexeme
                self.advance()
                return ast.Labeled(line=line, label=label, body=self.statement())
            if lex == "yield" and self.peek(1).lexeme not in ("=", "(", ".", "[", "++", "--", ")") and self.peek(1).kind != ASSIGNMENT:
                self.advance()
                expr = self.parse_expression()
                self.expect(";")
                return ast.Yield(line=line, expr=expr)
        if self.speculate(lambda: (self.modifiers(), self.at_type_decl_start())[1]):
            mods = self.modifiers()
            return ast.LocalClass(line=line, decl=self.type_declaration(mods, line))
        if self.speculate(self._looks_like_local_var):
            stmt = self.local_var()
            self.expect(";")
            return stmt
        expr = self.parse_expression()
        self.expect(";")
        return ast.ExprStmt(line=line, expr=expr)

    def local_var(self) -> ast.LocalVar:
        line = self.cur.line
        self.modifiers()
        type_ = self.parse_type()
        decls = [self.declarator_rest(self.ident())]
        while self.accept(","):
            decls.append(self.declarator_rest(self.ident()))
        return ast.LocalVar(line=line, type=type_, declarators=tuple(decls))

    def paren_expr(self) -> ast.Expr:
        self.expect("(")
        expr = self.parse_expression()
        self.expect(")")
        return expr

    def stmt_if(self) -> ast.Stmt:
        line = self.advance().line
        cond = self.paren_expr()
        then = self.statement()
        other = self.statement() if self.accept("else") else None
        return ast.If(line=line, cond=cond, then=then, other=other)

    def stmt_while(self) -> ast.Stmt:
        line = self.advance().line
        cond = self.paren_expr()
        return ast.While(line=line, cond=cond, body=self.statement())

    def stmt_do(self) -> ast.Stmt:
        line = self.advance().line
        body = self.statement()
        self.expect("while")
        cond = self.paren_expr()
        self.expect(";")
        return ast.DoWhile(line=line, body=body, cond=cond)

    def _looks_like_foreach(self) -> bool:
        self.modifiers()
        self.parse_type()
        self.ident()
        return self.at(":")

    def stmt_for(self) -> ast.Stmt:
        line = self.advance().line
        self.expect("(")
        if self.speculate(self._looks_like_foreach):
            self.modifiers()
            type_ = self.parse_type()
            name = self.ident()
            self.expect(":")
            iterable = self.parse_expression()
            self.expect(")")
            return ast.ForEach(line=line, type=type_, name=name, iterable=iterable, body=self.statement())
        init: list[ast.Stmt] = []
        if not self.at(";"):
            if self.speculate(self._looks_like_local_var):
                init.append(self.local_var())
            else:
                init.append(ast.ExprStmt(line=self.cur.line, expr=self.parse_expression()))
                while self.accept(","):
                    init.append(ast.ExprStmt(line=self.cur.line, expr=self.parse_expression()))
        self.expect(";")
        cond = None if self.at(";") else self.parse_expression()
        self.expect(";")
        update = []
        if not self.at(")"):
            update.append(self.parse_expression())
            while self.accept(","):
                update.append(self.parse_expression())
        self.expect(")")
        return ast.For(line=line, init=tuple(init), cond=cond, update=tuple(update), body=self.statement())

    def switch_groups(self) -> tuple[ast.SwitchGroup, ...]:
        self.expect("{")
        groups = []
        while not self.accept("}"):
            labels: list[ast.Expr] = []
            is_default = False
            arrow = False
            # consecutive `case x:` labels share one group
            while self.at("case", "default"):
                if self.advance().lexeme == "default":
                    is_default = True
                else:
                    while True:
                        if self.at("default"):
                            self.advance()
                            is_default = True
                        else:
                            labels.append(self.case_label())
                        if not self.accept(","):
                            break
                if self.accept("->"):
                    arrow = True
                    break
                self.expect(":")
            if not labels and not is_default:
                raise ParseError("expected case label", self.cur.line)
            body: list[ast.Stmt] = []
            if arrow:
                if self.at("{"):
                    body.append(self.block())
                elif self.at("throw"):
                    body.append(self.statement())
                else:
                    eline = self.cur.line
                    body.append(ast.ExprStmt(line=eline, expr=self.parse_expression()))
                    self.expect(";")
            else:
                while not self.at("case", "default", "}"):
                    body.append(self.statement())
            groups.append(ast.SwitchGroup(labels=tuple(labels), is_default=is_default, body=tuple(body), arrow=arrow))
        return tuple(groups)

    def case_label(self) -> ast.Expr:
        if self.speculate(lambda: (self.parse_type(), self.at_ident())[1] and self.peek(1).lexeme != "("):
            # type pattern: `case Foo f`
            line = self.cur.line
            type_ = self.parse_type()
            self.ident()
            label: ast.Expr = ast.ClassLit(line=line, type=type_)
        else:
            label = self.parse_ternary(allow_lambda=False)
        if self.cur.lexeme == "when" and self.at_ident():
            self.advance()
            self.parse_ternary(allow_lambda=False)
        return label

    def stmt_switch(self) -> ast.Stmt:
        line = self.advance().line
        selector = self.paren_expr()
        return ast.Switch(line=line, selector=selector, groups=self.switch_groups())

    def stmt_try(self) -> ast.Stmt:
        line = self.advance().line
        resources: list[ast.Stmt] = []
        if self.accept("("):
            while not self.accept(")"):
                if self.speculate(self._looks_like_local_var):
                    resources.append(self.local_var())
                else:
                    resources.append(ast.ExprStmt(line=self.cur.line, expr=self.parse_expression()))
                if not self.accept(";"):
                    self.expect(")")
                    break
        body = self.block()
        catches = []
        while self.at("catch"):
            self.advance()
            self.expect("(")
            self.modifiers()
            types = [self.parse_type()]
            while self.accept("|"):
                types.append(self.parse_type())
            name = self.ident()
            self.expect(")")
            catches.append(ast.Catch(types=tuple(types), name=name, body=self.block()))
        finally_ = self.block() if self.accept("finally") else None
        if not catches and finally_ is None and not resources:
            raise ParseError("try without catch or finally", line)
        return ast.Try(line=line, resources=tuple(resources), body=body, catches=tuple(catches), finally_=finally_)

    def stmt_return(self) -> ast.Stmt:
        line = self.advance().line
        expr = None if self.at(";") else self.parse_expression()
        self.expect(";")
        return ast.Return(line=line, expr=expr)

    def stmt_break(self) -> ast.Stmt:
        line = self.advance().line
        label = self.ident() if self.at_ident() else None
        self.expect(";")
        return ast.Break(line=line, label=label)

    def stmt_continue(self) -> ast.Stmt:
        line = self.advance().line
        label = self.ident() if self.at_ident() else None
        self.expect(";")
        return ast.Continue(line=line, label=label)

    def stmt_throw(self) -> ast.Stmt:
        line = self.advance().line
        expr = self.parse_expression()
        self.expect(";")
        return ast.Throw(line=line, expr=expr)

    def stmt_synchronized(self) -> ast.Stmt:
        if self.peek(1).lexeme != "(":
            return self._decl_or_expression()
        line = self.advance().line
        lock = self.paren_expr()
        return ast.Synchronized(line=line, lock=lock, body=self.block())

    def stmt_assert(self) -> ast.Stmt:
        line = self.advance().line
        cond = self.parse_expression()
        message = self.parse_expression() if self.accept(":") else None
        self.expect(";")
        return ast.Assert(line=line, cond=cond, message=message)

    def _decl_or_expression(self) -> ast.Stmt:
        line = self.cur.line
        if self.speculate(lambda: (self.modifiers(), self.at_type_decl_start())[1]):
            mods = self.modifiers()
            return ast.LocalClass(line=line, decl=self.type_declaration(mods, line))
        stmt = self.local_var()
        self.expect(";")
        return stmt

    stmt_final = _decl_or_expression
    stmt_abstract = _decl_or_expression
    stmt_static = _decl_or_expression
    stmt_class = _decl_or_expression
    stmt_interface = _decl_or_expression
    stmt_enum = _decl_or_expression

    # ------------------------------------------------------------ expressions

    def parse_expression(self) -> ast.Expr:
        if self.at_lambda():
            return self.lambda_expr()
        left = self.parse_ternary()
        if self.cur.kind == ASSIGNMENT and self.pending_gt == 0:
            op = self.advance().lexeme
            value = self.array_init() if self.at("{") else self.parse_expression()
            return ast.Assign(line=left.line, op=op, target=left, value=value)
        return left

    def at_lambda(self) -> bool:
        if self.at_ident() and self.peek(1).lexeme == "->":
            return True
        if not self.at("("):
            return False
        depth = 0
        i = self.pos
        while i < len(self.toks):
            lex = self.toks[i].lexeme
            if self.toks[i].kind != LITERAL:
                if lex == "(":
                    depth += 1
                elif lex == ")":
                    depth -= 1
                    if depth == 0:
                        return i + 1 < len(self.toks) and self.toks[i + 1].lexeme == "->"
                elif lex in (";", "{", "}"):
                    return False
            i += 1
        return False

    def lambda_expr(self) -> ast.Expr:
        line = self.cur.line
        params: list[str] = []
        if self.at_ident():
            params.append(self.advance().lexeme)
        else:
            self.expect("(")
            depth = 1
            last_ident = None
            while True:
                tok = self.advance()
                if tok.lexeme in ("(", "<", "["):
                    depth += 1
                elif tok.lexeme in (")", ">", "]"):
                    depth -= 1
                    if depth == 0:
                        break
                elif tok.lexeme == ">>":
                    depth -= 2
                elif tok.lexeme == "," and depth == 1:
                    if last_ident:
                        params.append(last_ident)
                    last_ident = None
                    continue
                if tok.kind == IDENTIFIER:
                    last_ident = tok.lexeme
            if last_ident:
                params.append(last_ident)
        self.expect("->")
        body: ast.Node = self.block() if self.at("{") else self.parse_expression()
        return ast.Lambda(line=line, params=tuple(params), body=body)

    def parse_ternary(self, allow_lambda: bool = True) -> ast.Expr:
        cond = self.parse_binary(1)
        if self.at("?"):
            self.advance()
            then = self.parse_expression() if allow_lambda else self.parse_ternary(False)
            self.expect(":")
            if allow_lambda and self.at_lambda():
                other = self.lambda_expr()
            else:
                other = self.parse_ternary(allow_lambda)
            return ast.Conditional(line=cond.line, cond=cond, then=then, other=other)
        return cond

    def parse_binary(self, min_prec: int) -> ast.Expr:
        left = self.parse_unary()
        while True:
            if self.pending_gt:
                return left
            tok = self.cur
            op = tok.lexeme
            prec = _BINARY_PRECEDENCE.get(op)
            if prec is None or prec < min_prec or tok.kind == LITERAL:
                return left
            if tok.kind not in ("operator", KEYWORD):
                return left
            self.advance()
            if op == "instanceof":
                self.accept("final")
                type_ = self.parse_type()
                if self.at_ident():
                    self.advance()  # pattern binding
                left = ast.InstanceOf(line=left.line, expr=left, type=type_)
                continue
            right = self.parse_binary(prec + 1)
            left = ast.Binary(line=left.line, op=op, left=left, right=right)

    def _looks_like_cast(self) -> bool:
        self.expect("(")
        type_ = self.parse_type()
        while self.accept("&"):
            self.parse_type()
        if self.pending_gt or not self.at(")"):
            return False
        self.advance()
        if type_.is_primitive:
            return True
        nxt = self.cur
        if nxt.kind in (IDENTIFIER, LITERAL):
            return True
        if nxt.kind == KEYWORD and nxt.lexeme in ("this", "super", "new", "switch") | ast.PRIMITIVE_TYPES:
            return True
        if nxt.lexeme in _CAST_FOLLOWERS:
            return True
        return self.at_lambda()

    def parse_unary(self) -> ast.Expr:
        tok = self.cur
        if tok.lexeme in ("++", "--", "+", "-", "!", "~") and tok.kind == "operator":
            self.advance()
            operand = self.parse_unary()
            return ast.Unary(line=tok.line, op=tok.lexeme, operand=operand)
        if self.at("(") and self.speculate(self._looks_like_cast):
            self.advance()
            type_ = self.parse_type()
            while self.accept("&"):
                self.parse_type()
            self.expect(")")
            expr = self.lambda_expr() if self.at_lambda() else self.parse_unary()
            return ast.Cast(line=tok.line, type=type_, expr=expr)
        return self.postfix(self.primary())

    def arguments(self) -> tuple[ast.Expr, ...]:
        self.expect("(")
        args = []
        if self.accept(")"):
            return ()
        while True:
            args.append(self.parse_expression())
            if not self.accept(","):
                break
        self.expect(")")
        return tuple(args)

    def primary(self) -> ast.Expr:
        tok = self.cur
        line = tok.line
        lex = tok.lexeme
        if tok.kind == LITERAL:
            self.advance()
            return ast.Literal(line=line, text=lex)
        if tok.kind == IDENTIFIER:
            self.advance()
            if self.at("("):
                return ast.MethodCall(line=line, target=None, name=lex, args=self.arguments())
            return ast.Name(line=line, name=lex)
        if lex == "(":
            self.advance()
            expr = self.parse_expression()
            self.expect(")")
            return expr
        if tok.kind == KEYWORD:
            if lex == "this":
                self.advance()
                if self.at("("):
                    return ast.MethodCall(line=line, target=None, name="this", args=self.arguments())
                return ast.This(line=line)
            if lex == "super":
                self.advance()
                if self.at("("):
                    return ast.MethodCall(line=line, target=None, name="super", args=self.arguments())
                return ast.Super(line=line)
            if lex == "new":
                return self.creator()
            if lex == "switch":
                self.advance()
                selector = self.paren_expr()
                return ast.SwitchExpr(line=line, selector=selector, groups=self.switch_groups())
            if lex in ast.PRIMITIVE_TYPES:
                type_ = self.parse_type()
                if self.accept("::"):
                    return ast.MethodRef(line=line, target=type_, name=self.advance().lexeme)
                self.expect(".")
                self.expect("class")
                return ast.ClassLit(line=line, type=type_)
        if lex == "@":
            self.skip_annotations()
            return self.primary()
        if lex == "<":
            # explicit generic invocation: <T>foo()
            self.skip_type_params()
            return self.primary()
        raise ParseError(f"unexpected token {lex!r} in expression", line)

    def creator(self) -> ast.Expr:
        line = self.expect("new").line
        if self.at("<"):
            self.skip_type_params()
        self.skip_annotations()
        tok = self.cur
        if tok.kind == KEYWORD and tok.lexeme in ast.PRIMITIVE_TYPES:
            self.advance()
            type_ = ast.TypeRef(tok.lexeme)
        else:
            name = self.ident()
            args: tuple[ast.TypeRef, ...] = ()
            if self.at("<"):
                args = self.type_args()
            while self.at(".") and self.peek(1).kind == IDENTIFIER:
                self.advance()
                self.skip_annotations()
                name += "." + self.ident()
                if self.at("<"):
                    args = self.type_args()
            type_ = ast.TypeRef(name, args)
        if self.at("["):
            dims: list[ast.Expr] = []
            ndims = 0
            while self.at("["):
                self.advance()
                if self.accept("]"):
                    ndims += 1
                    continue
                dims.append(self.parse_expression())
                self.expect("]")
                ndims += 1
            init = self.array_init() if self.at("{") else None
            return ast.NewArray(
                line=line, type=ast.TypeRef(type_.name, type_.args, ndims), dims=tuple(dims), init=init
            )
        ctor_args = self.arguments()
        body = self.class_body(None) if self.at("{") else None
        return ast.New(line=line, type=type_, args=ctor_args, body=body)

    def postfix(self, expr: ast.Expr) -> ast.Expr:
        while True:
            if self.pending_gt:
                return expr
            tok = self.cur
            lex = tok.lexeme
            if lex == "." and tok.kind != LITERAL:
                self.advance()
                if self.at("new"):
                    inner = self.creator()
                    if isinstance(inner, ast.New):
                        inner = ast.New(line=inner.line, type=inner.type, args=inner.args, body=inner.body, outer=expr)
                    expr = inner
                    continue
                if self.at("<"):
                    self.skip_type_params()
                if self.at("class"):
                    self.advance()
                    expr = ast.ClassLit(line=expr.line, type=ast.TypeRef(_expr_name(expr)))
                    continue
                if self.at("this"):
                    self.advance()
                    expr = ast.This(line=expr.line, qualifier=_expr_name(expr))
                    continue
                if self.at("super"):
                    self.advance()
                    expr = ast.Super(line=expr.line)
                    if self.at("("):
                        expr = ast.MethodCall(line=expr.line, target=None, name="super", args=self.arguments())
                    continue
                name = self.ident()
                if self.at("("):
                    expr = ast.MethodCall(line=expr.line, target=expr, name=name, args=self.arguments())
                else:
                    expr = ast.FieldAccess(line=expr.line, target=expr, name=name)
            elif lex == "[" and tok.kind != LITERAL:
                if self.peek(1).lexeme == "]":
                    # array type in expression position: Foo[].class / Foo[]::new
                    dims = 0
                    while self.at("[") and self.peek(1).lexeme == "]":
                        self.pos += 2
                        dims += 1
                    type_ = ast.TypeRef(_expr_name(expr), (), dims)
                    if self.accept("::"):
                        return ast.MethodRef(line=expr.line, target=type_, name=self.advance().lexeme)
                    self.expect(".")
                    self.expect("class")
                    expr = ast.ClassLit(line=expr.line, type=type_)
                    continue
                self.advance()
                index = self.parse_expression()
                self.expect("]")
                expr = ast.ArrayAccess(line=expr.line, array=expr, index=index)
            elif lex == "::":
                self.advance()
                if self.at("<"):
                    self.skip_type_params()
                expr = ast.MethodRef(line=expr.line, target=expr, name=self.advance().lexeme)
            elif lex in ("++", "--") and tok.kind == "operator":
                self.advance()
                expr = ast.Unary(line=expr.line, op=lex, operand=expr, postfix=True)
            elif lex == "<" and isinstance(expr, (ast.Name, ast.FieldAccess)) and self.speculate(self._generic_ref):
                # Type<Args>::method
                self.type_args()
                self.expect("::")
                expr = ast.MethodRef(line=expr.line, target=ast.TypeRef(_expr_name(expr)), name=self.advance().lexeme)
            else:
                return expr

    def _generic_ref(self) -> bool:
        self.type_args()
        return self.at("::")


def _expr_name(expr: ast.Expr) -> str:
    if isinstance(expr, ast.Name):
        return expr.name
    if isinstance(expr, ast.FieldAccess):
        return f"{_expr_name(expr.target)}.{expr.name}" if expr.target is not None else expr.name
    return "?"


def parse(text: str) -> ast.CompilationUnit:
    return Parser(tokenize(text)).compilation_unit()


def parse_tokens(tokens: list[Token]) -> ast.CompilationUnit:
    return Parser(tokens).compilation_unit()
