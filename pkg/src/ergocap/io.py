"""JSON formats for instances, random variables and reports.

Instance::

    {"name": "S1", "states": 4, "map": [1, 0, 3, 2],
     "generators": [["1/2", "1/2", "0", "0"], ["0", "0", "1/2", "1/2"]]}

Random variable::

    {"values": ["1", "0", "-1/2", "0"]}

Rationals are written as reduced strings; plain JSON integers are accepted
on input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional

from .credal import Capacity
from .dynamics import FiniteSystem
from .errors import InputError
from .measure import Measure, RandomVariable, parse_rational


@dataclass(frozen=True)
class Instance:
    system: FiniteSystem
    capacity: Capacity
    name: Optional[str] = None

    @property
    def n(self) -> int:
        return self.system.n

    def to_dict(self) -> dict:
        out: dict[str, Any] = {}
        if self.name is not None:
            out["name"] = self.name
        out["states"] = self.system.n
        out["map"] = list(self.system.map)
        out["generators"] = [P.to_strings() for P in self.capacity.generators]
        return out


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _rational(value, where: str):
    try:
        return parse_rational(value)
    except InputError as exc:
        raise InputError(f"{where}: {exc}") from None


def instance_from_dict(doc: Any) -> Instance:
    if not isinstance(doc, dict):
        raise InputError("instance must be a JSON object")
    unknown = set(doc) - {"name", "states", "map", "generators"}
    if unknown:
        raise InputError(f"unknown field(s): {', '.join(sorted(unknown))}")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise InputError("name: must be a string")

    n = doc.get("states")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"states: expected a positive integer, got {n!r}")
    T = doc.get("map")
    if not isinstance(T, list):
        raise InputError("map: expected a list of integers")
    if len(T) != n:
        raise InputError(f"map: has {len(T)} entries, expected {n}")
    for i, t in enumerate(T):
        if isinstance(t, bool) or not isinstance(t, int):
            raise InputError(f"map[{i}]={t!r} is not an integer")
        if not 0 <= t < n:
            raise InputError(f"map[{i}]={t} out of range")

    gens = doc.get("generators")
    if not isinstance(gens, list) or not gens:
        raise InputError("generators: expected a nonempty list of measures")
    measures = []
    for k, row in enumerate(gens):
        if not isinstance(row, list) or len(row) != n:
            raise InputError(f"generators[{k}]: expected {n} rationals")
        masses = tuple(_rational(v, f"generators[{k}][{i}]") for i, v in enumerate(row))
        for i, m in enumerate(masses):
            if m < 0:
                raise InputError(f"generators[{k}][{i}]: negative mass {m}")
        total = sum(masses)
        if total != 1:
            raise InputError(f"generators[{k}]: masses sum to {total}, not 1")
        measures.append(Measure(masses))
    return Instance(FiniteSystem(tuple(T)), Capacity(tuple(measures)), name)


def parse_instance(text: str) -> Instance:
    return instance_from_dict(_load_json(text))


def emit_instance(inst: Instance) -> str:
    return dumps(inst.to_dict())


def parse_random_variable(text: str, n: Optional[int] = None) -> RandomVariable:
    doc = _load_json(text)
    if not isinstance(doc, dict) or not isinstance(doc.get("values"), list):
        raise InputError('random variable must be {"values": [...]}')
    vals = doc["values"]
    if n is not None and len(vals) != n:
        raise InputError(f"values: has {len(vals)} entries, expected {n}")
    return RandomVariable(tuple(_rational(v, f"values[{i}]") for i, v in enumerate(vals)))


def emit_random_variable(xi: RandomVariable) -> str:
    return json.dumps({"values": xi.to_strings()}) + "\n"


def dumps(doc: Any) -> str:
    """Stable JSON: keys keep insertion order, lists of scalars stay on one line."""
    return _format(doc, 0) + "\n"


def _format(x: Any, level: int) -> str:
    pad = "  " * (level + 1)
    if isinstance(x, dict) and x:
        items = [f"{pad}{json.dumps(k)}: {_format(v, level + 1)}" for k, v in x.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * level + "}"
    if isinstance(x, list) and any(isinstance(v, (list, dict)) for v in x):
        items = [pad + _format(v, level + 1) for v in x]
        return "[\n" + ",\n".join(items) + "\n" + "  " * level + "]"
    return json.dumps(x)
