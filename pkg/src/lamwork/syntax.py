r"""Concrete syntax for lambda terms.

Grammar::

    term   := lambda | app
    lambda := ("\" | "λ") ident+ "." term
    app    := atom atom* [lambda]
    atom   := ident | "(" term ")"

``#`` starts a comment that runs to the end of the line.  A trailing lambda
in argument position extends as far right as possible, so ``n \x.\y.x`` is
``n (\x.\y.x)``.

A definitions file holds one ``name = term`` per line.  Unbound identifiers
that name an earlier definition are inlined at parse time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping

from .terms import Lam, NApp, NLam, NVar, Named, Term, App, Bound, Free, to_named

LAMBDA_SIGILS = ("\\", "λ")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int, origin: str = "<input>"):
        super().__init__(f"{origin}:{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column
        self.origin = origin


class UnknownName(ParseError):
    pass


@dataclass(frozen=True)
class SourceText:
    text: str
    origin: str = "<input>"


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "lambda", ".", "(", ")", "=", "eof"
    value: str
    line: int
    column: int


def _ident_start(ch: str) -> bool:
    return ch.isalpha() and ch != "λ"


def _ident_char(ch: str) -> bool:
    return (ch.isalnum() and ch != "λ") or ch in "_'"


def tokenize(text: str, origin: str = "<input>", line: int = 1) -> Iterator[Token]:
    i, col = 0, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch.isspace():
            i, col = i + 1, col + 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch in LAMBDA_SIGILS:
            yield Token("lambda", ch, line, col)
        elif ch in ".()=":
            yield Token(ch, ch, line, col)
        elif _ident_start(ch):
            j = i + 1
            while j < n and _ident_char(text[j]):
                j += 1
            yield Token("ident", text[i:j], line, col)
            col += j - i
            i = j
            continue
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col, origin)
        i, col = i + 1, col + 1
    yield Token("eof", "", line, col)


class _Parser:
    def __init__(self, src: SourceText, defs: Mapping[str, Term], strict: bool, line: int = 1):
        self.tokens = list(tokenize(src.text, src.origin, line))
        self.pos = 0
        self.origin = src.origin
        self.defs = defs
        self.strict = strict

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message: str, tok: Token | None = None, cls=ParseError) -> ParseError:
        tok = tok or self.tok
        where = "end of input" if tok.kind == "eof" else repr(tok.value)
        return cls(f"{message} at {where}", tok.line, tok.column, self.origin)

    def expect(self, kind: str) -> Token:
        tok = self.tok
        if tok.kind != kind:
            raise self.error(f"expected {kind!r}")
        self.pos += 1
        return tok

    def parse(self) -> Term:
        term = self.term([])
        if self.tok.kind != "eof":
            raise self.error("unexpected token")
        return term

    def term(self, env: list[str]) -> Term:
        if self.tok.kind == "lambda":
            return self.abstraction(env)
        head = self.atom(env)
        while True:
            if self.tok.kind in ("ident", "("):
                head = App(head, self.atom(env))
            elif self.tok.kind == "lambda":
                return App(head, self.abstraction(env))
            else:
                return head

    def abstraction(self, env: list[str]) -> Term:
        self.expect("lambda")
        names = [self.expect("ident").value]
        while self.tok.kind == "ident":
            names.append(self.tok.value)
            self.pos += 1
        self.expect(".")
        body = self.term(env + names)
        for name in reversed(names):
            body = Lam(body, name)
        return body

    def atom(self, env: list[str]) -> Term:
        tok = self.tok
        if tok.kind == "(":
            self.pos += 1
            inner = self.term(env)
            self.expect(")")
            return inner
        if tok.kind == "ident":
            self.pos += 1
            return self.reference(tok, env)
        raise self.error("expected a term")

    def reference(self, tok: Token, env: list[str]) -> Term:
        name = tok.value
        for i in range(len(env) - 1, -1, -1):
            if env[i] == name:
                return Bound(len(env) - 1 - i)
        if name in self.defs:
            return self.defs[name]
        if self.strict:
            raise self.error(f"unknown name {name!r}", tok, UnknownName)
        return Free(name)


def _as_source(src: SourceText | str) -> SourceText:
    return src if isinstance(src, SourceText) else SourceText(src)


def parse(src: SourceText | str, defs: Mapping[str, Term] | None = None) -> Term:
    """Parse one term.  Unbound identifiers found in ``defs`` are inlined."""
    return _Parser(_as_source(src), defs or {}, strict=False).parse()


_DEF_LINE = re.compile(r"^\s*([^\W\d_][\w']*)\s*=(?!=)")


def parse_program(
    src: SourceText | str, defs: Mapping[str, Term] | None = None
) -> tuple[dict[str, Term], Term | None]:
    """Parse a file of ``name = term`` lines, optionally followed by a bare term.

    Definition bodies may only mention earlier definitions (anything else
    raises UnknownName).  Lines that are not definitions are joined into a
    single main term, which may have free variables.  Returns the
    definitions (including those passed in) and the main term, or ``None``
    when there is no bare term.
    """
    src = _as_source(src)
    env: dict[str, Term] = dict(defs or {})
    main_lines: list[str] = []
    for lineno, raw in enumerate(src.text.splitlines(), start=1):
        m = _DEF_LINE.match(raw)
        if m is None:
            main_lines.append(raw)
            continue
        main_lines.append("")
        body_src = SourceText(" " * m.end() + raw[m.end():], src.origin)
        env[m.group(1)] = _Parser(body_src, env, strict=True, line=lineno).parse()
    text = "\n".join(main_lines)
    main = None
    if any(tok.kind != "eof" for tok in tokenize(text, src.origin)):
        main = _Parser(SourceText(text, src.origin), env, strict=False).parse()
    return env, main


def parse_definitions(src: SourceText | str, defs: Mapping[str, Term] | None = None) -> dict[str, Term]:
    env, main = parse_program(src, defs)
    if main is not None:
        raise ParseError("definitions file contains a bare term", 1, 1, _as_source(src).origin)
    return env


# -- printing ----------------------------------------------------------------

def _render(n: Named, sigil: str) -> str:
    match n:
        case NVar(name):
            return name
        case NLam():
            binders = []
            while isinstance(n, NLam):
                binders.append(f"{sigil}{n.name}.")
                n = n.body
            return "".join(binders) + " " + _render(n, sigil)
        case NApp():
            spine = []
            while isinstance(n, NApp):
                spine.append(n.arg)
                n = n.fun
            spine.append(n)
            spine.reverse()
            parts = [_render(p, sigil) if isinstance(p, NVar) else f"({_render(p, sigil)})" for p in spine]
            return " ".join(parts)
    raise TypeError(n)


def print_term(m: Term, mode: str = "readable", sigil: str = "\\") -> str:
    """Render ``m``.

    ``mode="canonical"`` names binders by depth alone, so two terms print
    identically exactly when they are alpha-equivalent.
    """
    if mode not in ("readable", "canonical"):
        raise ValueError(f"unknown print mode {mode!r}")
    return _render(to_named(m, canonical=mode == "canonical"), sigil)


def canonical(m: Term) -> str:
    return print_term(m, "canonical")
