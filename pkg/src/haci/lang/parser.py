"""Recursive-descent parser for the JavaScript subset.

Stops at the first syntax error and reports it as a Diagnostic. Comments
are dropped before parsing; they only matter to read-outs.
"""

from __future__ import annotations

from haci.diagnostics import Diagnostic
from haci.document import Position
from haci.lang import ast
from haci.lang.lexer import Span, Token, decode_string, scan

_ASSIGN_OPS = ("=", "+=", "-=", "*=", "/=", "%=")
_EQUALITY_OPS = ("===", "!==", "==", "!=")
_RELATIONAL_OPS = ("<", ">", "<=", ">=")
_ADDITIVE_OPS = ("+", "-")
_MULTIPLICATIVE_OPS = ("*", "/", "%")


class _ParseError(Exception):
    def __init__(self, message: str, pos: Position):
        super().__init__(message)
        self.diagnostic = Diagnostic("syntax", message, pos.line, pos.col)


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = [t for t in tokens if t.kind != "comment"]
        self.i = 0

    # -- token plumbing ---------------------------------------------------

    def peek(self, offset: int = 0) -> Token | None:
        j = self.i + offset
        return self.tokens[j] if j < len(self.tokens) else None

    def at_end(self) -> bool:
        return self.i >= len(self.tokens)

    def here(self) -> Position:
        tok = self.peek()
        if tok is not None:
            return tok.span.start
        if self.tokens:
            return self.tokens[-1].span.end
        return Position(1, 0)

    def error(self, message: str) -> _ParseError:
        return _ParseError(message, self.here())

    def advance(self) -> Token:
        if self.at_end():
            raise self.error("unexpected end of input")
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def check(self, text: str, kind: str | None = None) -> bool:
        tok = self.peek()
        return tok is not None and tok.text == text and (kind is None or tok.kind == kind)

    def match(self, text: str, kind: str | None = None) -> Token | None:
        if self.check(text, kind):
            return self.advance()
        return None

    def expect(self, text: str, kind: str | None = None) -> Token:
        tok = self.match(text, kind)
        if tok is None:
            found = self.peek()
            what = f"'{found.text}'" if found is not None else "end of input"
            raise self.error(f"expected '{text}', found {what}")
        return tok

    def expect_identifier(self, what: str) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != "identifier":
            raise self.error(f"expected {what}")
        return self.advance()

    # -- statements -------------------------------------------------------

    def parse_program(self) -> ast.Program:
        statements = []
        while not self.at_end():
            statements.append(self.statement())
        if statements:
            span = Span(statements[0].span.start, statements[-1].span.end)
        else:
            span = Span(Position(1, 0), Position(1, 0))
        return ast.Program(span, statements)

    def statement(self) -> ast.Node:
        tok = self.peek()
        assert tok is not None
        if tok.kind == "keyword":
            if tok.text == "function":
                return self.function_decl()
            if tok.text in ("let", "const", "var"):
                return self.var_decl()
            if tok.text == "if":
                return self.if_statement()
            if tok.text == "for":
                return self.for_statement()
            if tok.text == "while":
                return self.while_statement()
            if tok.text == "return":
                return self.return_statement()
            if tok.text == "else":
                raise self.error("'else' without a matching 'if'")
        return self.expression_statement()

    def function_decl(self) -> ast.FunctionDecl:
        start = self.expect("function", "keyword").span.start
        name = self.expect_identifier("function name").text
        self.expect("(")
        params: list[str] = []
        if not self.check(")"):
            params.append(self.expect_identifier("parameter name").text)
            while self.match(","):
                params.append(self.expect_identifier("parameter name").text)
        self.expect(")")
        body = self.block()
        return ast.FunctionDecl(Span(start, body.span.end), name, params, body)

    def var_decl(self) -> ast.VarDecl:
        kw = self.advance()
        name = self.expect_identifier("variable name").text
        init = None
        if self.match("="):
            init = self.expression()
        end = self.expect(";").span.end
        return ast.VarDecl(Span(kw.span.start, end), kw.text, name, init)

    def if_statement(self, chained: bool = False) -> ast.If:
        start = self.expect("if", "keyword").span.start
        self.expect("(")
        condition = self.expression()
        self.expect(")")
        then_block = self.block()
        else_branch: ast.Node | None = None
        end = then_block.span.end
        if self.match("else", "keyword"):
            if self.check("if", "keyword"):
                else_branch = self.if_statement(chained=True)
            else:
                else_branch = self.block()
            end = else_branch.span.end
        return ast.If(Span(start, end), condition, then_block, else_branch, chained=chained)

    def for_statement(self) -> ast.For:
        start = self.expect("for", "keyword").span.start
        self.expect("(")
        init: ast.Node | None = None
        if not self.check(";"):
            tok = self.peek()
            if tok is not None and tok.kind == "keyword" and tok.text in ("let", "const", "var"):
                init = self.var_decl()  # consumes the ';'
            else:
                init = self.assignment_or_expression()
                self.expect(";")
        else:
            self.expect(";")
        condition = None if self.check(";") else self.expression()
        self.expect(";")
        update = None if self.check(")") else self.assignment_or_expression()
        self.expect(")")
        body = self.block()
        return ast.For(Span(start, body.span.end), init, condition, update, body)

    def while_statement(self) -> ast.While:
        start = self.expect("while", "keyword").span.start
        self.expect("(")
        condition = self.expression()
        self.expect(")")
        body = self.block()
        return ast.While(Span(start, body.span.end), condition, body)

    def return_statement(self) -> ast.Return:
        kw = self.expect("return", "keyword")
        value = None
        if not self.check(";"):
            value = self.expression()
        end = self.expect(";").span.end
        return ast.Return(Span(kw.span.start, end), value)

    def block(self) -> ast.Block:
        start = self.expect("{").span.start
        statements = []
        while not self.check("}"):
            if self.at_end():
                raise self.error("expected '}'")
            statements.append(self.statement())
        end = self.expect("}").span.end
        return ast.Block(Span(start, end), statements)

    def expression_statement(self) -> ast.Node:
        expr = self.assignment_or_expression()
        end = self.expect(";").span.end
        if isinstance(expr, ast.Assign):
            expr.span = Span(expr.span.start, end)
            return expr
        return ast.ExprStmt(Span(expr.span.start, end), expr)

    def assignment_or_expression(self) -> ast.Node:
        expr = self.expression()
        tok = self.peek()
        if tok is not None and tok.kind == "symbol" and tok.text in _ASSIGN_OPS:
            if not isinstance(expr, (ast.Identifier, ast.Index)):
                raise _ParseError("invalid assignment target", expr.span.start)
            op = self.advance().text
            value = self.expression()
            return ast.Assign(Span(expr.span.start, value.span.end), op, expr, value)
        return expr

    # -- expressions ------------------------------------------------------

    def expression(self) -> ast.Node:
        return self.logical_or()

    def _binary_chain(self, ops: tuple[str, ...], sub) -> ast.Node:
        left = sub()
        while True:
            tok = self.peek()
            if tok is None or tok.kind != "symbol" or tok.text not in ops:
                return left
            op = self.advance().text
            right = sub()
            left = ast.Binary(Span(left.span.start, right.span.end), op, left, right)

    def logical_or(self) -> ast.Node:
        return self._binary_chain(("||",), self.logical_and)

    def logical_and(self) -> ast.Node:
        return self._binary_chain(("&&",), self.equality)

    def equality(self) -> ast.Node:
        return self._binary_chain(_EQUALITY_OPS, self.relational)

    def relational(self) -> ast.Node:
        return self._binary_chain(_RELATIONAL_OPS, self.additive)

    def additive(self) -> ast.Node:
        return self._binary_chain(_ADDITIVE_OPS, self.multiplicative)

    def multiplicative(self) -> ast.Node:
        return self._binary_chain(_MULTIPLICATIVE_OPS, self.unary)

    def unary(self) -> ast.Node:
        tok = self.peek()
        if tok is not None and tok.kind == "symbol" and tok.text in ("!", "-"):
            op = self.advance()
            operand = self.unary()
            return ast.Unary(Span(op.span.start, operand.span.end), op.text, operand)
        if tok is not None and tok.kind == "symbol" and tok.text in ("++", "--"):
            op = self.advance()
            target = self.postfix()
            if not isinstance(target, (ast.Identifier, ast.Index)):
                raise _ParseError("invalid update target", target.span.start)
            return ast.Update(Span(op.span.start, target.span.end), op.text, target, prefix=True)
        return self.postfix()

    def postfix(self) -> ast.Node:
        expr = self.primary()
        while True:
            if self.check("("):
                self.advance()
                args = []
                if not self.check(")"):
                    args.append(self.expression())
                    while self.match(","):
                        args.append(self.expression())
                end = self.expect(")").span.end
                expr = ast.Call(Span(expr.span.start, end), expr, args)
            elif self.check("["):
                self.advance()
                index = self.expression()
                end = self.expect("]").span.end
                expr = ast.Index(Span(expr.span.start, end), expr, index)
            elif self.check("."):
                self.advance()
                name_tok = self.expect_identifier("property name")
                expr = self._member(expr, name_tok)
            elif self.check("++") or self.check("--"):
                if not isinstance(expr, (ast.Identifier, ast.Index)):
                    raise _ParseError("invalid update target", expr.span.start)
                op = self.advance()
                expr = ast.Update(Span(expr.span.start, op.span.end), op.text, expr, prefix=False)
            else:
                return expr

    def _member(self, target: ast.Node, name_tok: Token) -> ast.Node:
        name = name_tok.text
        if name == "length":
            return ast.Member(Span(target.span.start, name_tok.span.end), target, "length")
        if name == "log" and isinstance(target, ast.Identifier) and target.name == "console":
            member = ast.Member(Span(target.span.start, name_tok.span.end), target, "log")
            if not self.check("("):
                raise _ParseError("console.log must be called", name_tok.span.start)
            return member
        raise _ParseError(f"unsupported property '.{name}'", name_tok.span.start)

    def primary(self) -> ast.Node:
        tok = self.peek()
        if tok is None:
            raise self.error("unexpected end of input")
        if tok.kind == "number":
            self.advance()
            return ast.Literal(tok.span, float(tok.text))
        if tok.kind == "string":
            self.advance()
            return ast.Literal(tok.span, decode_string(tok.text))
        if tok.kind == "keyword" and tok.text in ("true", "false", "null"):
            self.advance()
            value = {"true": True, "false": False, "null": None}[tok.text]
            return ast.Literal(tok.span, value)
        if tok.kind == "identifier":
            self.advance()
            return ast.Identifier(tok.span, tok.text)
        if tok.text == "(":
            self.advance()
            expr = self.expression()
            self.expect(")")
            return expr
        if tok.text == "[":
            start = self.advance().span.start
            elements = []
            if not self.check("]"):
                elements.append(self.expression())
                while self.match(","):
                    elements.append(self.expression())
            end = self.expect("]").span.end
            return ast.ArrayLiteral(Span(start, end), elements)
        raise self.error(f"unexpected token '{tok.text}'")


def parse(source_or_tokens: str | list[Token]) -> ast.Program | Diagnostic:
    """Parse source text or a token stream; the first syntax error wins."""
    if isinstance(source_or_tokens, str):
        tokens, diag = scan(source_or_tokens)
        if diag is not None:
            return diag
    else:
        tokens = source_or_tokens
    try:
        return _Parser(tokens).parse_program()
    except _ParseError as exc:
        return exc.diagnostic
