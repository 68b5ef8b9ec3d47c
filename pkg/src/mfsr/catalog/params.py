"""Integer parameter expressions used by catalog templates, constraints and rank formulas.

Expressions are Python syntax restricted to integer literals, parameter names,
``+ - * // %``, comparisons (chains allowed), ``and``/``or``/``not`` and, inside
template holes only, the helper ``so(n)``.
"""

from __future__ import annotations

import ast
import itertools
import operator
import re
from collections.abc import Callable, Iterable, Mapping
from functools import cache

from mfsr.catalog.errors import ParamError

_BINOPS: dict[type[ast.operator], Callable[[int, int], int]] = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.FloorDiv: operator.floordiv,
    ast.Mod: operator.mod,
}
_CMPOPS: dict[type[ast.cmpop], Callable[[int, int], bool]] = {
    ast.Lt: operator.lt,
    ast.LtE: operator.le,
    ast.Gt: operator.gt,
    ast.GtE: operator.ge,
    ast.Eq: operator.eq,
    ast.NotEq: operator.ne,
}
_HOLE = re.compile(r"\{([^{}]+)\}")

Params = Mapping[str, int]


def so(n: int) -> str:
    """DSL text for the defining module of so(n); so(4) is written as sl(2)*sl(2)."""
    if n == 4:
        return "sl(2)*sl(2)"
    return f"so({n})"


_HELPERS: dict[str, Callable[[int], str]] = {"so": so}


@cache
def _parse(expr: str) -> ast.Expression:
    try:
        return ast.parse(expr.strip(), mode="eval")
    except SyntaxError as e:
        raise ParamError(f"cannot parse parameter expression {expr!r}: {e.msg}") from e


def _int(value: object, expr: ast.AST) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParamError(f"expected an integer in {ast.unparse(expr)!r}")
    return value


def _eval(node: ast.AST, params: Params, *, helpers: bool) -> int | bool | str:
    match node:
        case ast.Expression(body=body):
            return _eval(body, params, helpers=helpers)
        case ast.Constant(value=value) if isinstance(value, int) and not isinstance(value, bool):
            return value
        case ast.Name(id=name):
            if name not in params:
                raise ParamError(f"unknown parameter {name!r}")
            return params[name]
        case ast.BinOp(left=left, op=op, right=right) if type(op) in _BINOPS:
            a = _int(_eval(left, params, helpers=helpers), left)
            b = _int(_eval(right, params, helpers=helpers), right)
            if isinstance(op, ast.FloorDiv | ast.Mod) and b == 0:
                raise ParamError(f"division by zero in {ast.unparse(node)!r}")
            return _BINOPS[type(op)](a, b)
        case ast.UnaryOp(op=ast.USub(), operand=operand):
            return -_int(_eval(operand, params, helpers=helpers), operand)
        case ast.UnaryOp(op=ast.UAdd(), operand=operand):
            return _int(_eval(operand, params, helpers=helpers), operand)
        case ast.UnaryOp(op=ast.Not(), operand=operand):
            return not _eval(operand, params, helpers=helpers)
        case ast.Compare(left=left, ops=ops, comparators=comparators):
            current = _int(_eval(left, params, helpers=helpers), left)
            for op, right in zip(ops, comparators, strict=True):
                if type(op) not in _CMPOPS:
                    raise ParamError(f"comparison {ast.unparse(node)!r} is not allowed")
                value = _int(_eval(right, params, helpers=helpers), right)
                if not _CMPOPS[type(op)](current, value):
                    return False
                current = value
            return True
        case ast.BoolOp(op=ast.And(), values=values):
            return all(_eval(v, params, helpers=helpers) for v in values)
        case ast.BoolOp(op=ast.Or(), values=values):
            return any(_eval(v, params, helpers=helpers) for v in values)
        case ast.Call(func=ast.Name(id=name), args=[arg], keywords=[]) if helpers and name in _HELPERS:
            return _HELPERS[name](_int(_eval(arg, params, helpers=helpers), arg))
    raise ParamError(f"{ast.unparse(node)!r} is not allowed in a parameter expression")


def evaluate(expr: str, params: Params) -> int:
    """Evaluate an integer formula such as ``2*m - 2*n``.

    Raises:
        ParamError: a disallowed construct, an unknown name or a non-integer result.
    """
    tree = _parse(expr)
    return _int(_eval(tree, params, helpers=False), tree)


def holds(constraints: Iterable[str], params: Params) -> bool:
    """Return whether every constraint is true for ``params``."""
    return all(bool(_eval(_parse(c), params, helpers=False)) for c in constraints)


def expand_template(template: str, params: Params) -> str:
    """Replace each ``{expr}`` hole by its value; holes may call ``so(n)``."""

    def fill(m: re.Match[str]) -> str:
        value = _eval(_parse(m.group(1)), params, helpers=True)
        if isinstance(value, bool):
            raise ParamError(f"template hole {{{m.group(1)}}} is a condition, not a value")
        return str(value)

    return _HOLE.sub(fill, template)


def _names(expr: str) -> set[str]:
    return {
        node.id
        for node in ast.walk(_parse(expr))
        if isinstance(node, ast.Name) and node.id not in _HELPERS
    }


def parameter_names(*, templates: Iterable[str] = (), formulas: Iterable[str] = ()) -> tuple[str, ...]:
    """Collect the parameter names used in template holes and plain formulas, sorted."""
    names: set[str] = set()
    for template in templates:
        for hole in _HOLE.findall(template):
            names |= _names(hole)
    for formula in formulas:
        names |= _names(formula)
    return tuple(sorted(names))


def enumerate_params(names: Iterable[str], constraints: Iterable[str], cap: int) -> list[dict[str, int]]:
    """Return every assignment with all parameters in 0..cap satisfying the constraints.

    Assignments come out in lexicographic order of their values (names sorted).
    """
    if cap < 0:
        raise ParamError(f"parameter cap must be >= 0, got {cap}")
    keys = tuple(sorted(names))
    rules = tuple(constraints)
    out: list[dict[str, int]] = []
    for values in itertools.product(range(cap + 1), repeat=len(keys)):
        params = dict(zip(keys, values, strict=True))
        if holds(rules, params):
            out.append(params)
    return out
