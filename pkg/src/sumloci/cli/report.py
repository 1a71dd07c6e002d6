"""
The JSON document every command prints: {"input": ..., "analysis": ..., "results": ..., "verification": ...}.

Floats are rounded to 12 significant digits and keys keep their insertion order, so identical inputs give
byte-identical output.
"""

import json
import math
from typing import Any, Optional

from pydantic import BaseModel

from ..com.quadraticform import QuadraticForm

SIGNIFICANT_DIGITS = 12

_MONOMIALS = ("x^2", "x*y", "y^2", "x", "y", "")


def rounded(value: Any) -> Any:
    """
    Rounds every float in a JSON-like structure to 12 significant digits; negative zero becomes zero.
    """
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            return None
        return float(f"{value:.{SIGNIFICANT_DIGITS}g}") + 0.0
    if isinstance(value, dict):
        return {key: rounded(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [rounded(item) for item in value]
    return value


def dump(model: BaseModel) -> dict[str, Any]:
    """
    camelCase JSON representation of a model, `_typ` included.
    """
    return model.model_dump(by_alias=True, mode="json")


def equation(form: QuadraticForm) -> str:
    """
    The zero set equation of a quadratic form, with coprime integer coefficients where possible, e.g.
    "34*x^2 + 24*x*y + 41*y^2 - 72*x - 96*y + 19 = 0".
    """
    integers = form.integer_coefficients()
    coefficients: tuple[Any, ...] = integers if integers is not None else form.coefficients
    terms: list[str] = []
    for coefficient, monomial in zip(coefficients, _MONOMIALS):
        if coefficient == 0:
            continue
        magnitude = abs(coefficient)
        if isinstance(magnitude, float):
            text = f"{magnitude:.{SIGNIFICANT_DIGITS}g}"
        else:
            text = str(magnitude)
        if monomial and text == "1":
            term = monomial
        elif monomial:
            term = f"{text}*{monomial}"
        else:
            term = text
        if not terms:
            terms.append(f"-{term}" if coefficient < 0 else term)
        else:
            terms.append(f"- {term}" if coefficient < 0 else f"+ {term}")
    return f"{' '.join(terms) if terms else '0'} = 0"


def render(
    input_: dict[str, Any],
    analysis: dict[str, Any],
    results: list[dict[str, Any]],
    verification: Optional[dict[str, Any]] = None,
) -> str:
    """
    Serializes the four sections of a report into the output document.
    """
    document = {"input": input_, "analysis": analysis, "results": results, "verification": verification}
    return json.dumps(rounded(document), indent=2, ensure_ascii=False, allow_nan=False)
