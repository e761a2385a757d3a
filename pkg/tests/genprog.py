"""Seeded random program generator for the supported JavaScript subset.

Programs are valid for both this package's interpreter and a reference
engine: declare-before-use, bounded loops, in-bounds indexing, and
integer-valued arithmetic (so number formatting can't diverge).

Emission records ground truth about control-structure lines, giving the
structure-facts property test an oracle that never touches the parser.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field


@dataclass
class ControlSpan:
    kind: str  # "if" | "loop"
    open_line: int
    close_line: int = -1


@dataclass
class GeneratedProgram:
    source: str
    controls: list[ControlSpan] = field(default_factory=list)


class ProgramGen:
    def __init__(self, seed: int):
        self.rng = random.Random(seed)
        self.lines: list[str] = []
        self.controls: list[ControlSpan] = []
        self.counter = 0
        self.arrays: dict[str, int] = {}  # name -> length
        self.functions: dict[str, int] = {}  # name -> arity
        self.protected: set[str] = set()  # loop counters: assigning to them could unbound a loop

    # -- emission helpers ---------------------------------------------------

    def fresh(self, prefix: str) -> str:
        self.counter += 1
        return f"{prefix}{self.counter}"

    def put(self, depth: int, text: str) -> int:
        self.lines.append("    " * depth + text)
        return len(self.lines)  # 1-based line number of what was just added

    # -- expressions ----------------------------------------------------------

    def num_expr(self, local_numbers: list[str], depth: int = 0) -> str:
        r = self.rng
        if depth >= 2 or r.random() < 0.45:
            if local_numbers and r.random() < 0.6:
                return r.choice(local_numbers)
            return str(r.randint(-9, 20))
        if self.functions and r.random() < 0.2:
            name, arity = r.choice(sorted(self.functions.items()))
            args = ", ".join(str(r.randint(0, 9)) for _ in range(arity))
            return f"{name}({args})"
        if self.arrays and r.random() < 0.2:
            name, length = r.choice(sorted(self.arrays.items()))
            if length > 0 and r.random() < 0.5:
                return f"{name}[{r.randint(0, length - 1)}]"
            return f"{name}.length"
        op = r.choice(["+", "-", "*", "%"])
        left = self.num_expr(local_numbers, depth + 1)
        right = self.num_expr(local_numbers, depth + 1)
        if op == "%":
            right = str(r.randint(1, 9))  # a zero divisor would print NaN (fine) but adds noise
        return f"({left} {op} {right})"

    def str_expr(self, local_numbers: list[str]) -> str:
        r = self.rng
        words = ["alpha", "beta", "gamma", "delta", "zig", "zag"]
        parts = [f'"{r.choice(words)}"']
        for _ in range(r.randint(0, 2)):
            if local_numbers and r.random() < 0.5:
                parts.append(r.choice(local_numbers))
            else:
                parts.append(f'"{r.choice(words)}"')
        return " + ".join(parts)

    def condition(self, local_numbers: list[str]) -> str:
        r = self.rng
        op = r.choice(["<", ">", "<=", ">=", "==", "!=", "===", "!=="])
        left = self.num_expr(local_numbers, depth=1)
        right = self.num_expr(local_numbers, depth=1)
        cond = f"{left} {op} {right}"
        if r.random() < 0.25:
            glue = r.choice(["&&", "||"])
            extra_op = r.choice(["<", ">"])
            cond = f"{cond} {glue} {self.num_expr(local_numbers, 1)} {extra_op} {self.num_expr(local_numbers, 1)}"
        return cond

    # -- statements ------------------------------------------------------------

    def statement(self, depth: int, local_numbers: list[str], budget: int) -> None:
        r = self.rng
        roll = r.random()
        if roll < 0.28 or budget <= 1:
            self.decl_or_assign(depth, local_numbers)
        elif roll < 0.45:
            self.log_statement(depth, local_numbers)
        elif roll < 0.65:
            self.if_statement(depth, local_numbers, budget)
        elif roll < 0.85:
            self.for_statement(depth, local_numbers, budget)
        else:
            self.while_statement(depth, local_numbers, budget)

    def decl_or_assign(self, depth: int, local_numbers: list[str]) -> None:
        r = self.rng
        assignable = [n for n in local_numbers if n not in self.protected]
        if assignable and r.random() < 0.4:
            name = r.choice(assignable)
            op = r.choice(["=", "+=", "-=", "*="])
            self.put(depth, f"{name} {op} {self.num_expr(local_numbers)};")
        elif r.random() < 0.15:
            name = self.fresh("a")
            values = ", ".join(str(r.randint(0, 9)) for _ in range(r.randint(1, 5)))
            self.put(depth, f"let {name} = [{values}];")
            if depth == 0:
                self.arrays[name] = values.count(",") + 1
        elif r.random() < 0.2:
            name = self.fresh("s")
            self.put(depth, f'let {name} = {self.str_expr(local_numbers)};')
        else:
            name = self.fresh("v")
            keyword = r.choice(["let", "let", "var"])
            self.put(depth, f"{keyword} {name} = {self.num_expr(local_numbers)};")
            local_numbers.append(name)

    def log_statement(self, depth: int, local_numbers: list[str]) -> None:
        r = self.rng
        choice = r.random()
        if choice < 0.55:
            args = ", ".join(self.num_expr(local_numbers) for _ in range(r.randint(1, 2)))
        elif choice < 0.8:
            args = self.str_expr(local_numbers)
        else:
            args = self.condition(local_numbers)
        self.put(depth, f"console.log({args});")

    def if_statement(self, depth: int, local_numbers: list[str], budget: int) -> None:
        r = self.rng
        span = ControlSpan("if", 0)
        span.open_line = self.put(depth, f"if ({self.condition(local_numbers)}) {{")
        self.block_body(depth + 1, list(local_numbers), budget // 2)
        if r.random() < 0.5:
            self.put(depth, "}")
            span.close_line = len(self.lines)
        else:
            self.put(depth, "} else {")
            if r.random() < 0.3:
                # a chain: the nested if belongs to the same statement
                self.lines[-1] = "    " * depth + f"}} else if ({self.condition(local_numbers)}) {{"
                self.block_body(depth + 1, list(local_numbers), budget // 2)
                self.put(depth, "} else {")
            self.block_body(depth + 1, list(local_numbers), budget // 2)
            self.put(depth, "}")
            span.close_line = len(self.lines)
        self.controls.append(span)

    def for_statement(self, depth: int, local_numbers: list[str], budget: int) -> None:
        r = self.rng
        i = self.fresh("i")
        self.protected.add(i)
        span = ControlSpan("loop", 0)
        if self.arrays and r.random() < 0.4:
            name = r.choice(sorted(self.arrays))
            span.open_line = self.put(depth, f"for (let {i} = 0; {i} < {name}.length; {i}++) {{")
            inner = list(local_numbers) + [i, f"{name}[{i}]"]
        else:
            span.open_line = self.put(depth, f"for (let {i} = 0; {i} < {r.randint(0, 5)}; {i}++) {{")
            inner = list(local_numbers) + [i]
        self.block_body(depth + 1, inner, budget // 2)
        self.put(depth, "}")
        span.close_line = len(self.lines)
        self.controls.append(span)

    def while_statement(self, depth: int, local_numbers: list[str], budget: int) -> None:
        r = self.rng
        w = self.fresh("w")
        self.protected.add(w)
        self.put(depth, f"let {w} = {r.randint(0, 5)};")
        span = ControlSpan("loop", 0)
        span.open_line = self.put(depth, f"while ({w} > 0) {{")
        self.put(depth + 1, f"{w} = {w} - 1;")
        self.block_body(depth + 1, list(local_numbers) + [w], budget // 2)
        self.put(depth, "}")
        span.close_line = len(self.lines)
        self.controls.append(span)

    def block_body(self, depth: int, local_numbers: list[str], budget: int) -> None:
        for _ in range(max(1, min(budget, self.rng.randint(1, 3)))):
            if depth >= 4:
                self.decl_or_assign(depth, local_numbers)
            else:
                self.statement(depth, local_numbers, budget)

    def function_decl(self) -> None:
        r = self.rng
        name = self.fresh("f")
        arity = r.randint(0, 2)
        params = [self.fresh("p") for _ in range(arity)]
        self.put(0, f"function {name}({', '.join(params)}) {{")
        locals_ = list(params)
        for _ in range(r.randint(1, 3)):
            self.statement(1, locals_, 2)
        self.put(1, f"return {self.num_expr(locals_)};")
        self.put(0, "}")
        self.functions[name] = arity
        if r.random() < 0.4:
            self.put(0, "")

    # -- top level ---------------------------------------------------------------

    def generate(self) -> GeneratedProgram:
        r = self.rng
        for _ in range(r.randint(0, 3)):
            self.function_decl()
        top_numbers: list[str] = []
        for _ in range(r.randint(4, 10)):
            self.statement(0, top_numbers, 4)
            if r.random() < 0.12:
                self.put(0, "")
        self.log_statement(0, top_numbers)
        return GeneratedProgram("\n".join(self.lines), self.controls)


def generate(seed: int) -> GeneratedProgram:
    return ProgramGen(seed).generate()
