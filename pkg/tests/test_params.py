"""Tests for catalog parameter expressions."""

from __future__ import annotations

import pytest

from mfsr.catalog import (
    ParamError,
    enumerate_params,
    evaluate,
    expand_template,
    holds,
    parameter_names,
    so,
)


def test_expand_template_fills_holes_and_so_helper() -> None:
    assert expand_template("sp({2*m})*{so(2*n)}", {"m": 2, "n": 2}) == "sp(4)*sl(2)*sl(2)"
    assert expand_template("sp({2*m})*{so(2*n+1)}", {"m": 3, "n": 2}) == "sp(6)*so(5)"
    assert expand_template("spin(12) ++ T(so(12))", {}) == "spin(12) ++ T(so(12))"


def test_so_helper() -> None:
    assert so(4) == "sl(2)*sl(2)"
    assert so(7) == "so(7)"


@pytest.mark.parametrize(
    ("expr", "params", "value"),
    [
        ("n", {"n": 3}, 3),
        ("2*m - 2*n", {"m": 3, "n": 1}, 4),
        ("m // 2 + m % 2", {"m": 5}, 3),
        ("-k + 1", {"k": 4}, -3),
        ("7", {}, 7),
    ],
)
def test_evaluate(expr: str, params: dict[str, int], value: int) -> None:
    assert evaluate(expr, params) == value


def test_holds_supports_chains_and_boolean_operators() -> None:
    assert holds(["2*m >= 2*n >= 4"], {"m": 2, "n": 2})
    assert not holds(["2*m >= 2*n >= 4"], {"m": 1, "n": 2})
    assert holds(["m == 2 or n != 3", "not m < 1"], {"m": 2, "n": 3})
    assert holds([], {})


def test_enumerate_params_in_lexicographic_order() -> None:
    assert enumerate_params(("m", "n"), ["m >= n >= 2"], 3) == [
        {"m": 2, "n": 2},
        {"m": 3, "n": 2},
        {"m": 3, "n": 3},
    ]
    assert enumerate_params((), [], 5) == [{}]
    assert enumerate_params(("m",), ["m >= 4"], 3) == []


def test_enumerate_params_rejects_negative_cap() -> None:
    with pytest.raises(ParamError, match="cap"):
        enumerate_params(("m",), [], -1)


def test_parameter_names_skip_helpers() -> None:
    names = parameter_names(templates=["sp({2*m})*{so(p)}"], formulas=["m", "2 <= 2*m < p"])
    assert names == ("m", "p")


@pytest.mark.parametrize(
    "expr",
    [
        "m ** 2",
        "m / 2",
        "__import__('os')",
        "m.real",
        "so(4)",
        "[m]",
        "m if m else 1",
        "m in n",
        "m >",
        "q",
        "m > 1",
        "m // 0",
    ],
)
def test_evaluate_rejects_disallowed_constructs(expr: str) -> None:
    with pytest.raises(ParamError):
        evaluate(expr, {"m": 2, "n": 3})


def test_template_hole_must_be_a_value() -> None:
    with pytest.raises(ParamError, match="condition"):
        expand_template("sp({m > 1})", {"m": 2})
