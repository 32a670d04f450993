"""Java front end: lexer, parser, project model, symbol index and control-flow graphs."""

from .cfg import ControlFlowGraph, build_cfg
from .lexer import LexError, Token, tokenize
from .model import ClassDecl, MethodDecl, ProjectModel, build_model, parse_project
from .parser import ParseError, parse

__all__ = [
    "ClassDecl",
    "ControlFlowGraph",
    "LexError",
    "MethodDecl",
    "ParseError",
    "ProjectModel",
    "Token",
    "build_cfg",
    "build_model",
    "parse",
    "parse_project",
    "tokenize",
]
