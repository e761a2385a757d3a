"""Tree-walking evaluator for the JavaScript subset.

Deterministic and sandboxed: a step budget bounds evaluation, an output
budget bounds console lines, and the first uncaught runtime error halts
the run with a positioned diagnostic.

Numbers are IEEE doubles with the host language's coercions emulated
(fmod for %, concatenation for + with a string operand), so console
output matches a real engine for the supported subset. The one deliberate
divergence is strict indexing: out-of-bounds array reads raise instead of
yielding undefined. A flag restores permissive semantics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from haci.diagnostics import Diagnostic
from haci.document import Position
from haci.lang import ast


class Undefined:
    _instance: "Undefined | None" = None

    def __new__(cls) -> "Undefined":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "undefined"


UNDEFINED = Undefined()


@dataclass
class ExecutionLimits:
    max_steps: int = 1_000_000
    max_output_lines: int = 10_000


@dataclass
class ExecutionResult:
    console_lines: list[str]
    diagnostics: list[Diagnostic]
    halted: str  # normal|error|limit


@dataclass
class Closure:
    decl: ast.FunctionDecl
    env: "Env"


class Env:
    def __init__(self, parent: "Env | None" = None, function_boundary: bool = False):
        self.parent = parent
        self.function_boundary = function_boundary
        self.values: dict[str, object] = {}
        self.consts: set[str] = set()

    def declare(self, name: str, value: object, keyword: str) -> None:
        if keyword == "var":
            env = self
            while not env.function_boundary and env.parent is not None:
                env = env.parent
            env.values[name] = value
        else:
            self.values[name] = value
            if keyword == "const":
                self.consts.add(name)

    def lookup(self, name: str) -> "Env | None":
        env: Env | None = self
        while env is not None:
            if name in env.values:
                return env
            env = env.parent
        return None


class _RuntimeError(Exception):
    def __init__(self, message: str, pos: Position):
        super().__init__(message)
        self.diagnostic = Diagnostic("runtime", message, pos.line, pos.col)


class _LimitExceeded(Exception):
    def __init__(self, pos: Position):
        self.pos = pos


class _ReturnSignal(Exception):
    def __init__(self, value: object):
        self.value = value


def format_number(v: float) -> str:
    """Number-to-string matching the reference engine for the supported
    range: integral values print without a decimal point."""
    if math.isnan(v):
        return "NaN"
    if math.isinf(v):
        return "Infinity" if v > 0 else "-Infinity"
    if v == 0:
        return "0"
    if v.is_integer() and abs(v) < 1e21:
        return str(int(v))
    text = repr(v)
    if "e" in text:
        mantissa, exponent = text.split("e")
        exponent = exponent.replace("+0", "+").replace("-0", "-")
        text = mantissa + "e" + exponent
    return text


def to_string(value: object) -> str:
    """String coercion (used by + concatenation)."""
    if isinstance(value, Undefined):
        return "undefined"
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_number(value)
    if isinstance(value, str):
        return value
    if isinstance(value, list):
        return ",".join("" if e is None or isinstance(e, Undefined) else to_string(e) for e in value)
    if isinstance(value, Closure):
        return f"function {value.decl.name}() {{ ... }}"
    return str(value)


def to_display(value: object) -> str:
    """console.log rendering: strings bare at top level, arrays inspected,
    and negative zero kept visible (string coercion folds it to "0")."""
    if isinstance(value, list):
        return _inspect(value)
    if isinstance(value, float) and value == 0 and math.copysign(1.0, value) < 0:
        return "-0"
    return to_string(value)


def _inspect(value: object) -> str:
    if isinstance(value, str):
        return "'" + value.replace("\\", "\\\\").replace("'", "\\'") + "'"
    if isinstance(value, list):
        if not value:
            return "[]"
        return "[ " + ", ".join(_inspect(e) for e in value) + " ]"
    if isinstance(value, float) and value == 0 and math.copysign(1.0, value) < 0:
        return "-0"
    return to_string(value)


def truthy(value: object) -> bool:
    if isinstance(value, Undefined) or value is None:
        return False
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        return not (value == 0 or math.isnan(value))
    if isinstance(value, str):
        return len(value) > 0
    return True


def to_number(value: object) -> float:
    if isinstance(value, bool):
        return 1.0 if value else 0.0
    if isinstance(value, float):
        return value
    if value is None:
        return 0.0
    if isinstance(value, Undefined):
        return math.nan
    if isinstance(value, str):
        text = value.strip()
        if not text:
            return 0.0
        try:
            return float(text)
        except ValueError:
            return math.nan
    if isinstance(value, list):
        return to_number(to_string(value))
    return math.nan


def loose_equals(a: object, b: object) -> bool:
    a_null = a is None or isinstance(a, Undefined)
    b_null = b is None or isinstance(b, Undefined)
    if a_null or b_null:
        return a_null and b_null
    if type(a) is type(b) or (isinstance(a, float) and isinstance(b, float)):
        return strict_equals(a, b)
    if isinstance(a, bool):
        return loose_equals(to_number(a), b)
    if isinstance(b, bool):
        return loose_equals(a, to_number(b))
    if isinstance(a, float) and isinstance(b, str):
        return a == to_number(b)
    if isinstance(a, str) and isinstance(b, float):
        return to_number(a) == b
    if isinstance(a, list):
        return loose_equals(to_string(a), b)
    if isinstance(b, list):
        return loose_equals(a, to_string(b))
    return False


def strict_equals(a: object, b: object) -> bool:
    if isinstance(a, bool) or isinstance(b, bool):
        return a is b
    if isinstance(a, float) and isinstance(b, float):
        return a == b  # NaN != NaN falls out
    if isinstance(a, str) and isinstance(b, str):
        return a == b
    if (a is None and b is None) or (isinstance(a, Undefined) and isinstance(b, Undefined)):
        return True
    return a is b  # reference identity for arrays/functions


class _Interpreter:
    def __init__(self, limits: ExecutionLimits, strict_indexing: bool):
        self.limits = limits
        self.strict_indexing = strict_indexing
        self.console: list[str] = []
        self.steps = 0

    def step(self, node: ast.Node) -> None:
        self.steps += 1
        if self.steps > self.limits.max_steps:
            raise _LimitExceeded(node.span.start)

    # -- statements -------------------------------------------------------

    def run_block(self, statements: list[ast.Node], env: Env) -> None:
        for stmt in statements:
            self.execute_stmt(stmt, env)

    def execute_stmt(self, node: ast.Node, env: Env) -> None:
        self.step(node)
        if isinstance(node, ast.FunctionDecl):
            env.declare(node.name, Closure(node, env), "let")
        elif isinstance(node, ast.VarDecl):
            value = UNDEFINED if node.init is None else self.evaluate(node.init, env)
            env.declare(node.name, value, node.keyword)
        elif isinstance(node, ast.Assign):
            self.assign(node, env)
        elif isinstance(node, ast.ExprStmt):
            self.evaluate(node.expr, env)
        elif isinstance(node, ast.Block):
            self.run_block(node.statements, Env(env))
        elif isinstance(node, ast.If):
            if truthy(self.evaluate(node.condition, env)):
                self.run_block(node.then_block.statements, Env(env))
            elif node.else_branch is not None:
                if isinstance(node.else_branch, ast.Block):
                    self.run_block(node.else_branch.statements, Env(env))
                else:
                    self.execute_stmt(node.else_branch, env)
        elif isinstance(node, ast.While):
            while truthy(self.evaluate(node.condition, env)):
                self.step(node)
                self.run_block(node.body.statements, Env(env))
        elif isinstance(node, ast.For):
            loop_env = Env(env)
            if isinstance(node.init, ast.VarDecl):
                self.execute_stmt(node.init, loop_env)
            elif node.init is not None:
                self.eval_clause(node.init, loop_env)
            while node.condition is None or truthy(self.evaluate(node.condition, loop_env)):
                self.step(node)
                self.run_block(node.body.statements, Env(loop_env))
                if node.update is not None:
                    self.eval_clause(node.update, loop_env)
        elif isinstance(node, ast.Return):
            value = UNDEFINED if node.value is None else self.evaluate(node.value, env)
            raise _ReturnSignal(value)
        else:
            raise _RuntimeError(f"cannot execute {node.kind}", node.span.start)

    def eval_clause(self, node: ast.Node, env: Env) -> None:
        """For-loop init/update clauses: bare assignments or expressions."""
        if isinstance(node, ast.Assign):
            self.assign(node, env)
        else:
            self.evaluate(node, env)

    def assign(self, node: ast.Assign, env: Env) -> None:
        if node.op == "=":
            value = self.evaluate(node.value, env)
        else:
            current = self.read_target(node.target, env)  # read before RHS, as the reference engine does
            value = self.binary_op(node.op[:-1], current, self.evaluate(node.value, env), node.span.start)
        self.write_target(node.target, value, env)

    def read_target(self, target: ast.Node, env: Env) -> object:
        return self.evaluate(target, env)

    def write_target(self, target: ast.Node, value: object, env: Env) -> None:
        if isinstance(target, ast.Identifier):
            holder = env.lookup(target.name)
            if holder is None:
                raise _RuntimeError(f"{target.name} is not defined", target.span.start)
            if target.name in holder.consts:
                raise _RuntimeError("assignment to constant variable", target.span.start)
            holder.values[target.name] = value
        elif isinstance(target, ast.Index):
            container = self.evaluate(target.target, env)
            index = self.evaluate(target.index, env)
            if not isinstance(container, list):
                raise _RuntimeError("cannot assign into a non-array value", target.span.start)
            i = int(to_number(index)) if not math.isnan(to_number(index)) else None
            if i is None or i < 0:
                raise _RuntimeError("invalid array index", target.index.span.start)
            if i >= len(container):
                container.extend([UNDEFINED] * (i + 1 - len(container)))
            container[i] = value
        else:
            raise _RuntimeError("invalid assignment target", target.span.start)

    # -- expressions ------------------------------------------------------

    def evaluate(self, node: ast.Node, env: Env) -> object:
        self.step(node)
        if isinstance(node, ast.Literal):
            return node.value
        if isinstance(node, ast.Identifier):
            holder = env.lookup(node.name)
            if holder is None:
                raise _RuntimeError(f"{node.name} is not defined", node.span.start)
            return holder.values[node.name]
        if isinstance(node, ast.ArrayLiteral):
            return [self.evaluate(e, env) for e in node.elements]
        if isinstance(node, ast.Index):
            return self.eval_index(node, env)
        if isinstance(node, ast.Member):
            return self.eval_member(node, env)
        if isinstance(node, ast.Call):
            return self.eval_call(node, env)
        if isinstance(node, ast.Binary):
            return self.eval_binary(node, env)
        if isinstance(node, ast.Unary):
            operand = self.evaluate(node.operand, env)
            if node.op == "!":
                return not truthy(operand)
            return -to_number(operand)
        if isinstance(node, ast.Update):
            return self.eval_update(node, env)
        if isinstance(node, ast.Assign):
            self.assign(node, env)
            return self.read_target(node.target, env)
        raise _RuntimeError(f"cannot evaluate {node.kind}", node.span.start)

    def eval_index(self, node: ast.Index, env: Env) -> object:
        container = self.evaluate(node.target, env)
        index = self.evaluate(node.index, env)
        if isinstance(container, list):
            n = to_number(index)
            i = int(n) if not math.isnan(n) and n == int(n) else None
            if i is None or i < 0 or i >= len(container):
                if self.strict_indexing:
                    raise _RuntimeError("index out of bounds", node.index.span.start)
                return UNDEFINED
            return container[i]
        if isinstance(container, str):
            n = to_number(index)
            i = int(n) if not math.isnan(n) and n == int(n) else None
            if i is None or i < 0 or i >= len(container):
                return UNDEFINED
            return container[i]
        if container is None or isinstance(container, Undefined):
            raise _RuntimeError(f"cannot read index of {to_string(container)}", node.target.span.start)
        return UNDEFINED

    def eval_member(self, node: ast.Member, env: Env) -> object:
        if node.name == "log":
            raise _RuntimeError("console.log must be called", node.span.start)
        target = self.evaluate(node.target, env)
        if isinstance(target, (str, list)):
            return float(len(target))
        if target is None or isinstance(target, Undefined):
            raise _RuntimeError(f"cannot read length of {to_string(target)}", node.target.span.start)
        return UNDEFINED

    def eval_call(self, node: ast.Call, env: Env) -> object:
        if isinstance(node.callee, ast.Member) and node.callee.name == "log":
            args = [self.evaluate(a, env) for a in node.args]
            line = " ".join(to_display(a) for a in args)
            self.console.append(line)
            if len(self.console) > self.limits.max_output_lines:
                raise _LimitExceeded(node.span.start)
            return UNDEFINED
        callee = self.evaluate(node.callee, env)
        if not isinstance(callee, Closure):
            name = node.callee.name if isinstance(node.callee, ast.Identifier) else "value"
            raise _RuntimeError(f"{name} is not a function", node.callee.span.start)
        args = [self.evaluate(a, env) for a in node.args]
        call_env = Env(callee.env, function_boundary=True)
        for k, param in enumerate(callee.decl.params):
            call_env.declare(param, args[k] if k < len(args) else UNDEFINED, "let")
        try:
            self.run_block(callee.decl.body.statements, call_env)
        except _ReturnSignal as signal:
            return signal.value
        return UNDEFINED

    def eval_update(self, node: ast.Update, env: Env) -> object:
        old = to_number(self.read_target(node.target, env))
        new = old + 1 if node.op == "++" else old - 1
        self.write_target(node.target, new, env)
        return new if node.prefix else old

    def eval_binary(self, node: ast.Binary, env: Env) -> object:
        if node.op == "&&":
            left = self.evaluate(node.left, env)
            return self.evaluate(node.right, env) if truthy(left) else left
        if node.op == "||":
            left = self.evaluate(node.left, env)
            return left if truthy(left) else self.evaluate(node.right, env)
        left = self.evaluate(node.left, env)
        right = self.evaluate(node.right, env)
        return self.binary_op(node.op, left, right, node.span.start)

    def binary_op(self, op: str, left: object, right: object, pos: Position) -> object:
        if op == "+":
            if isinstance(left, str) or isinstance(right, str) or isinstance(left, list) or isinstance(right, list):
                return to_string(left) + to_string(right)
            return to_number(left) + to_number(right)
        if op in ("-", "*", "/", "%"):
            a, b = to_number(left), to_number(right)
            if op == "-":
                return a - b
            if op == "*":
                return a * b
            if op == "/":
                if b == 0:
                    if a == 0 or math.isnan(a):
                        return math.nan
                    return math.inf if (a > 0) == (math.copysign(1, b) > 0) else -math.inf
                return a / b
            if b == 0 or math.isnan(a) or math.isnan(b) or math.isinf(a):
                return math.nan
            return math.fmod(a, b)
        if op in ("<", ">", "<=", ">="):
            if isinstance(left, str) and isinstance(right, str):
                a, b = left, right
            else:
                a, b = to_number(left), to_number(right)
                if math.isnan(a) or math.isnan(b):
                    return False
            return {"<": a < b, ">": a > b, "<=": a <= b, ">=": a >= b}[op]
        if op == "==":
            return loose_equals(left, right)
        if op == "!=":
            return not loose_equals(left, right)
        if op == "===":
            return strict_equals(left, right)
        if op == "!==":
            return not strict_equals(left, right)
        raise _RuntimeError(f"unsupported operator '{op}'", pos)


def execute(
    program: ast.Program,
    limits: ExecutionLimits | None = None,
    strict_indexing: bool = True,
) -> ExecutionResult:
    limits = limits or ExecutionLimits()
    if limits.max_steps <= 0 or limits.max_output_lines <= 0:
        raise ValueError("execution limits must be positive")
    interp = _Interpreter(limits, strict_indexing)
    globals_env = Env(function_boundary=True)
    globals_env.declare("undefined", UNDEFINED, "const")
    globals_env.declare("console", UNDEFINED, "const")  # only reachable via console.log calls
    try:
        interp.run_block(program.statements, globals_env)
    except _RuntimeError as exc:
        return ExecutionResult(interp.console, [exc.diagnostic], "error")
    except _ReturnSignal:
        return ExecutionResult(
            interp.console,
            [Diagnostic("runtime", "return outside a function", 1, 0)],
            "error",
        )
    except _LimitExceeded as exc:
        diag = Diagnostic("runtime", "execution limit exceeded", exc.pos.line, exc.pos.col)
        return ExecutionResult(interp.console, [diag], "limit")
    return ExecutionResult(interp.console, [], "normal")
