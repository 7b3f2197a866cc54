"""Verification cases and their exact JSON / table rendering."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from .padic import PadicElement
from .period import PeriodScalar


@dataclass
class Case:
    suite: str
    params: dict
    lhs: Any
    rhs: Any
    holds: bool
    info: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"suite": self.suite, "params": jsonable(self.params),
               "lhs": jsonable(self.lhs), "rhs": jsonable(self.rhs), "holds": bool(self.holds)}
        if self.info:
            out["info"] = jsonable(self.info)
        return out


def jsonable(x):
    """Exact JSON form: rationals as {"num","den"}; floats are rejected."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return {"num": x.numerator, "den": x.denominator}
    if isinstance(x, float):
        if x == math.inf:
            return "inf"
        raise TypeError("floating point values are not allowed in reports")
    if isinstance(x, (PadicElement, PeriodScalar)):
        return x.to_json()
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def emit_report(cases: Iterable[Case], fmt: str = "json") -> str:
    cases = list(cases)
    if fmt == "json":
        return dumps({"cases": [c.to_json() for c in cases]})
    if fmt != "table":
        raise ValueError(f"unknown format {fmt}")
    lines = []
    for c in cases:
        params = " ".join(f"{k}={_short(v)}" for k, v in sorted(c.params.items()))
        status = "PASS" if c.holds else "FAIL"
        lines.append(f"{status}  {c.suite:<10} {params:<40} lhs={_short(c.lhs)} rhs={_short(c.rhs)}")
    total = len(cases)
    failed = sum(not c.holds for c in cases)
    lines.append(f"{total - failed}/{total} cases hold")
    return "\n".join(lines)


def _short(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, PadicElement):
        v = x.valuation()
        return "0" if v == math.inf else f"<v={v}>"
    if isinstance(x, PeriodScalar):
        return f"<grades {x.grades}>" if x.terms else "0"
    if isinstance(x, dict):
        return "{" + ",".join(f"{k}:{_short(v)}" for k, v in sorted(x.items())) + "}"
    if isinstance(x, (list, tuple)):
        return "[" + ",".join(_short(v) for v in x) + "]"
    return str(x)


def summarize(cases: Iterable[Case]) -> dict:
    cases = list(cases)
    failures = [c for c in cases if not c.holds]
    return {"total": len(cases), "failed": len(failures),
            "first_failure": failures[0].to_json() if failures else None}
