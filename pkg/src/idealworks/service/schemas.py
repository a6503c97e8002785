"""Request and response models for the HTTP service."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field, model_validator


class GraphModel(BaseModel):
    n: int
    edges: list[list[int]]


class IdealModel(BaseModel):
    vars: int
    gens: list[list[int]]


class ComplexModel(BaseModel):
    n: int
    facets: list[list[int]]
    state: Literal["void", "empty", "facets"]


class RegRequest(BaseModel):
    graph: GraphModel | None = None
    ideal: IdealModel | None = None
    power: int = 1
    extras: list[list[int]] = Field(default_factory=list)
    field: str = "q"
    no_prune: bool = False
    threads: int = 1

    @model_validator(mode="after")
    def _one_payload(self) -> "RegRequest":
        if (self.graph is None) == (self.ideal is None):
            raise ValueError("provide exactly one of graph or ideal")
        return self


class CertificateModel(BaseModel):
    reg: int
    a: list[int]
    i: int
    face: list[int]
    hom_dim: int
    field: str


class RegResponse(BaseModel):
    reg: int
    certificate: CertificateModel
    wall_time: float


class ClosureRequest(BaseModel):
    graph: GraphModel
    power: int = 1


class WitnessModel(BaseModel):
    gen: list[int]
    cycles: list[list[int]]
    edges: list[list[int]]


class ClosureResponse(BaseModel):
    power: int
    closure: IdealModel
    extras: list[WitnessModel]
    normal: bool
    odd_cycle_pair: list[list[int]] | None


class SymbolicRequest(BaseModel):
    graph: GraphModel
    power: int = 1


class SymbolicResponse(BaseModel):
    power: int
    ideal: IdealModel


class IntermediateRequest(BaseModel):
    graph: GraphModel
    power: int = 1
    cap: int = 64
    seed: int = 0
    field: str | None = None
    threads: int = 1


class IntermediateItem(BaseModel):
    extras_index: list[int]
    ideal: IdealModel
    reg: int | None = None


class IntermediateResponse(BaseModel):
    power: int
    extras_total: int
    items: list[IntermediateItem]


class DegreeComplexRequest(BaseModel):
    ideal: IdealModel
    exponent: list[int]


class DegreeComplexResponse(BaseModel):
    complex: ComplexModel


class HomologyRequest(BaseModel):
    complex: ComplexModel
    field: str = "q"


class HomologyResponse(BaseModel):
    dims: dict[str, int]


class VerifyRequest(BaseModel):
    scenario: str
    field: str | None = None
    allow_slow: bool = False
    no_prune: bool = False
    threads: int = 1


class CheckModel(BaseModel):
    quantity: str
    s: int | None = None
    field: str | None = None
    extras: list[str] | None = None
    expect: Any = None
    source: str
    note: str
    slow: bool = False
    skipped: bool
    computed: Any = None
    ok: bool


class VerifyResponse(BaseModel):
    scenario: str
    title: str
    pass_: bool = Field(alias="pass")
    wall_time: float
    checks: list[CheckModel]

    model_config = {"populate_by_name": True}


class ScenarioInfo(BaseModel):
    name: str
    kind: str
    title: str
    checks: int
    slow_checks: int
