"""Small named instances used by the tests, the search harness and the demos."""

from __future__ import annotations

from .io import Instance, instance_from_dict

_RAW = {
    # two 2-cycles, one generator concentrated on each
    "S1": {"states": 4, "map": [1, 0, 3, 2],
           "generators": [["1/2", "1/2", "0", "0"], ["0", "0", "1/2", "1/2"]]},
    # a 2-cycle and a fixed point; the core holds non-invariant members
    "S2": {"states": 3, "map": [1, 0, 2],
           "generators": [["1/2", "1/2", "0"], ["0", "0", "1"]]},
    "three-cycle": {"states": 3, "map": [1, 2, 0],
                    "generators": [["1/3", "1/3", "1/3"]]},
    "point-masses": {"states": 2, "map": [0, 1],
                     "generators": [["1", "0"], ["0", "1"]]},
    # invariant but not ergodic: the structure result fails here
    "nonergodic": {"states": 2, "map": [0, 1],
                   "generators": [["1/2", "1/2"]]},
    "noninvariant": {"states": 4, "map": [1, 0, 0, 2],
                     "generators": [["0", "0", "1/2", "1/2"]]},
    # found by `ergocap search non-two-alternating --seed 0` (index 1)
    "non-two-alternating": {"states": 4, "map": [2, 3, 0, 0],
                            "generators": [["1/3", "1/3", "0", "1/3"],
                                           ["0", "1/3", "2/3", "0"],
                                           ["1/5", "2/5", "2/5", "0"]]},
}


def fixture(name: str) -> Instance:
    doc = dict(_RAW[name])
    doc["name"] = name
    return instance_from_dict(doc)


def fixture_names() -> list[str]:
    return list(_RAW)


def fixture_pool() -> list[Instance]:
    return [fixture(name) for name in _RAW]
