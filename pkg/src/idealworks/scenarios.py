"""Named scenarios with frozen expected values, loaded from JSON fixtures.

Each fixture carries a payload (graph or ideal), optional named extra
generators, and a list of checks.  Every expected value lives in the fixture,
tagged with its source ("literature" for values stated in published work,
"computed" for values frozen from an oracle run of this package) and a note
naming the fact.  Checks with expect null are computed and reported but never
asserted.  Checks flagged slow run only when allow_slow is set.
"""

from __future__ import annotations

import json
import math
import time
from importlib import resources
from typing import Any

from .closure import (closure_extras, enumerate_intermediate_ideals,
                      integral_closure_edge_power, is_normal_edge,
                      newton_membership, symbolic_power)
from .errors import InputError
from .fields import FieldSpec
from .graphs import Graph
from .monomials import MonomialIdeal, edge_ideal
from .regularity import mixed_sum_regularity, takayama_regularity
from .simplicial import sr_complex

SCENARIO_NAMES = [
    "rigidity-c3c3-s3",
    "rigidity-c3c5-s4",
    "dim1-girth3-s0",
    "dim1-girth4-s0",
    "dk16",
    "char-dependence-s1",
    "katzman11",
    "symbolic-c3",
]


def canonical_json(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def load_fixture(name: str) -> dict:
    if name not in SCENARIO_NAMES:
        raise InputError(f"unknown scenario {name!r}; see list-scenarios")
    text = resources.files("idealworks.data").joinpath(f"{name}.json").read_text()
    return json.loads(text)


def fixture_text(name: str) -> str:
    if name not in SCENARIO_NAMES:
        raise InputError(f"unknown scenario {name!r}")
    return resources.files("idealworks.data").joinpath(f"{name}.json").read_text()


def registry() -> list[dict]:
    out = []
    for name in SCENARIO_NAMES:
        fix = load_fixture(name)
        out.append({
            "name": name,
            "kind": fix["kind"],
            "title": fix["title"],
            "checks": len([c for c in fix["checks"] if not c.get("slow")]),
            "slow_checks": len([c for c in fix["checks"] if c.get("slow")]),
        })
    return out


class _Evaluator:
    """Computes check quantities for one scenario, caching powers and closures."""

    def __init__(self, fix: dict, no_prune: bool, threads: int):
        self.fix = fix
        self.no_prune = no_prune
        self.threads = threads
        self.graph: Graph | None = None
        if fix["kind"] == "graph":
            self.graph = Graph.from_json(fix["payload"])
            self.base = edge_ideal(self.graph)
        else:
            self.base = MonomialIdeal.from_json(fix["payload"])
        self.extras = {k: tuple(v) for k, v in fix.get("extras", {}).items()}
        self._powers: dict[int, MonomialIdeal] = {}
        self._closures: dict[int, MonomialIdeal] = {}
        self._regs: dict = {}

    def power(self, s: int) -> MonomialIdeal:
        if s not in self._powers:
            self._powers[s] = self.base.power(s)
        return self._powers[s]

    def closure(self, s: int) -> MonomialIdeal:
        if self.graph is None:
            raise InputError("closure checks need a graph payload")
        if s not in self._closures:
            self._closures[s] = integral_closure_edge_power(self.graph, s)
        return self._closures[s]

    def reg(self, ideal: MonomialIdeal, field: FieldSpec, key=None) -> int:
        if key is not None and (key, field.char) in self._regs:
            return self._regs[(key, field.char)]
        value = takayama_regularity(ideal, field, no_prune=self.no_prune,
                                    threads=self.threads)[0]
        if key is not None:
            self._regs[(key, field.char)] = value
        return value

    def _skeleton(self):
        complex_ = sr_complex(self.base)
        ones = [f for f in complex_.faces() if len(f) == 2]
        return complex_, Graph.from_edges(self.base.n, ones)

    def quantity(self, check: dict) -> Any:
        q = check["quantity"]
        s = check.get("s", 1)
        field = FieldSpec.parse(check["field"]) if check.get("field") else FieldSpec(0)
        if q == "reg_power":
            return self.reg(self.power(s), field, key=("power", s))
        if q == "reg_closure":
            return self.reg(self.closure(s), field, key=("closure", s))
        if q == "reg_symbolic":
            if self.graph is None:
                raise InputError("symbolic checks need a graph payload")
            return self.reg(symbolic_power(self.graph, s), field, key=("symbolic", s))
        if q == "reg_plus_extras":
            names = check["extras"]
            gens = list(self.power(s).gens) + [self.extras[x] for x in names]
            ideal = MonomialIdeal.from_gens(self.base.n, gens)
            return self.reg(ideal, field, key=("plus", s, tuple(names)))
        if q == "reg_intermediates_distinct":
            if self.graph is None:
                raise InputError("intermediate checks need a graph payload")
            cap = check.get("cap", 64)
            seed = check.get("seed", 0)
            regs = set()
            for _, ideal in enumerate_intermediate_ideals(self.graph, s, cap, seed):
                regs.add(self.reg(ideal, field))
            return sorted(regs)
        if q == "mixed_sum_reg":
            if self.graph is None:
                raise InputError("mixed-sum checks need a graph payload")
            comps = self.graph.connected_components()
            if len(comps) != 2:
                raise InputError("mixed-sum checks need exactly two components")
            sides = []
            for comp in comps:
                sub, _ = self.graph.induced_subgraph(comp)
                ideal = edge_ideal(sub)
                sides.append([self.reg(ideal.power(j), field) for j in range(1, s + 1)])
            return mixed_sum_regularity(sides[0], sides[1], s)
        if q == "closure_extra_count":
            if self.graph is None:
                raise InputError("closure checks need a graph payload")
            return len(closure_extras(self.graph, s))
        if q == "closure_extra_gens":
            if self.graph is None:
                raise InputError("closure checks need a graph payload")
            return [list(g) for g in closure_extras(self.graph, s)]
        if q == "extras_in_closure":
            power = self.power(s)
            return all(not power.contains(v) and newton_membership(power, v)
                       for v in self.extras.values())
        if q == "complex_dim":
            return self._skeleton()[0].dim
        if q == "girth_complex":
            g = self._skeleton()[1].girth()
            return None if math.isinf(g) else int(g)
        if q == "normal":
            if self.graph is None:
                raise InputError("normality checks need a graph payload")
            return is_normal_edge(self.graph)[0]
        raise InputError(f"unknown quantity {q!r}")


def run_scenario(name: str, *, field: str | None = None, allow_slow: bool = False,
                 no_prune: bool = False, threads: int = 1) -> dict:
    """Evaluate a scenario's checks; the report never hides a mismatch."""
    fix = load_fixture(name)
    if field is not None:
        FieldSpec.parse(field)
    evaluator = _Evaluator(fix, no_prune, threads)
    t0 = time.monotonic()
    checks = []
    ok_all = True
    for check in fix["checks"]:
        entry = {k: check[k] for k in
                 ("quantity", "s", "field", "extras", "expect", "source", "note")
                 if k in check}
        if check.get("slow"):
            entry["slow"] = True
        if field is not None and check.get("field") not in (None, field):
            entry["skipped"] = True
            entry["ok"] = True
            checks.append(entry)
            continue
        if check.get("slow") and not allow_slow:
            entry["skipped"] = True
            entry["ok"] = True
            checks.append(entry)
            continue
        computed = evaluator.quantity(check)
        entry["computed"] = computed
        entry["skipped"] = False
        if check.get("expect") is None:
            entry["ok"] = True
        else:
            entry["ok"] = computed == check["expect"]
        ok_all = ok_all and entry["ok"]
        checks.append(entry)
    return {
        "scenario": name,
        "title": fix["title"],
        "pass": ok_all,
        "wall_time": round(time.monotonic() - t0, 3),
        "checks": checks,
    }
