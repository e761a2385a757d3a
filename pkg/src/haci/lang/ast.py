"""AST node types for the JavaScript subset."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from haci.lang.lexer import Span

Value = Union[float, str, bool, None]


@dataclass
class Node:
    span: Span

    def children(self) -> Iterator["Node"]:
        return iter(())

    @property
    def kind(self) -> str:
        return type(self).__name__


@dataclass
class Identifier(Node):
    name: str


@dataclass
class Literal(Node):
    value: Value


@dataclass
class ArrayLiteral(Node):
    elements: list[Node]

    def children(self):
        return iter(self.elements)


@dataclass
class Index(Node):
    target: Node
    index: Node

    def children(self):
        yield self.target
        yield self.index


@dataclass
class Member(Node):
    target: Node
    name: str  # "length", or "log" on console

    def children(self):
        yield self.target


@dataclass
class Call(Node):
    callee: Node
    args: list[Node]

    def children(self):
        yield self.callee
        yield from self.args


@dataclass
class Binary(Node):
    op: str
    left: Node
    right: Node

    def children(self):
        yield self.left
        yield self.right


@dataclass
class Unary(Node):
    op: str  # "!" or "-"
    operand: Node

    def children(self):
        yield self.operand


@dataclass
class Update(Node):
    op: str  # "++" or "--"
    target: Node
    prefix: bool

    def children(self):
        yield self.target


@dataclass
class Assign(Node):
    op: str  # "=", "+=", "-=", "*=", "/=", "%="
    target: Node
    value: Node

    def children(self):
        yield self.target
        yield self.value


@dataclass
class VarDecl(Node):
    keyword: str  # let|const|var
    name: str
    init: Optional[Node]

    def children(self):
        if self.init is not None:
            yield self.init


@dataclass
class ExprStmt(Node):
    expr: Node

    def children(self):
        yield self.expr


@dataclass
class Block(Node):
    statements: list[Node]

    def children(self):
        return iter(self.statements)


@dataclass
class If(Node):
    condition: Node
    then_block: Block
    else_branch: Optional[Node]  # Block or a chained If
    chained: bool = field(default=False)  # true when this is the `if` of an `else if`

    def children(self):
        yield self.condition
        yield self.then_block
        if self.else_branch is not None:
            yield self.else_branch


@dataclass
class For(Node):
    init: Optional[Node]
    condition: Optional[Node]
    update: Optional[Node]
    body: Block

    def children(self):
        for part in (self.init, self.condition, self.update):
            if part is not None:
                yield part
        yield self.body


@dataclass
class While(Node):
    condition: Node
    body: Block

    def children(self):
        yield self.condition
        yield self.body


@dataclass
class Return(Node):
    value: Optional[Node]

    def children(self):
        if self.value is not None:
            yield self.value


@dataclass
class FunctionDecl(Node):
    name: str
    params: list[str]
    body: Block

    def children(self):
        yield self.body


@dataclass
class Program(Node):
    statements: list[Node]

    def children(self):
        return iter(self.statements)


def walk(node: Node) -> Iterator[Node]:
    """Depth-first pre-order traversal."""
    yield node
    for child in node.children():
        yield from walk(child)
