"""FastAPI service exposing the exact workbench over JSON."""

from __future__ import annotations

import time

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from ..closure import (closure_with_witnesses, enumerate_intermediate_ideals,
                       is_normal_edge, symbolic_power)
from ..errors import InputError
from ..fields import FieldSpec
from ..graphs import Graph
from ..monomials import MonomialIdeal, edge_ideal
from ..regularity import degree_complex, takayama_regularity
from ..scenarios import fixture_text, registry, run_scenario
from ..simplicial import SimplicialComplex
from .schemas import (CertificateModel, ClosureRequest, ClosureResponse,
                      DegreeComplexRequest, DegreeComplexResponse,
                      HomologyRequest, HomologyResponse, IntermediateItem,
                      IntermediateRequest, IntermediateResponse, RegRequest,
                      RegResponse, ScenarioInfo, SymbolicRequest,
                      SymbolicResponse, VerifyRequest, VerifyResponse,
                      WitnessModel)

app = FastAPI(title="idealworks", version="0.1.0")


@app.exception_handler(InputError)
async def input_error_handler(request: Request, exc: InputError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def _request_ideal(req: RegRequest) -> MonomialIdeal:
    if req.graph is not None:
        base = edge_ideal(Graph.from_json(req.graph.model_dump()))
    else:
        base = MonomialIdeal.from_json(req.ideal.model_dump())
    if req.power < 1:
        raise InputError("power must be >= 1")
    ideal = base.power(req.power)
    if req.extras:
        gens = list(ideal.gens) + [tuple(int(t) for t in v) for v in req.extras]
        ideal = MonomialIdeal.from_gens(ideal.n, gens)
    return ideal


@app.post("/reg", response_model=RegResponse)
def reg_endpoint(req: RegRequest) -> RegResponse:
    ideal = _request_ideal(req)
    field = FieldSpec.parse(req.field)
    t0 = time.monotonic()
    value, cert = takayama_regularity(ideal, field, no_prune=req.no_prune,
                                      threads=req.threads)
    return RegResponse(
        reg=value,
        certificate=CertificateModel(**cert.to_json(value)),
        wall_time=round(time.monotonic() - t0, 3),
    )


@app.post("/closure", response_model=ClosureResponse)
def closure_endpoint(req: ClosureRequest) -> ClosureResponse:
    graph = Graph.from_json(req.graph.model_dump())
    closed, witnesses = closure_with_witnesses(graph, req.power)
    normal, pair = is_normal_edge(graph)
    return ClosureResponse(
        power=req.power,
        closure=closed.to_json(),
        extras=[WitnessModel(gen=list(w.vec),
                             cycles=[list(c) for c in w.cycles],
                             edges=[list(e) for e in w.edges])
                for w in witnesses],
        normal=normal,
        odd_cycle_pair=[list(c) for c in pair] if pair else None,
    )


@app.post("/symbolic", response_model=SymbolicResponse)
def symbolic_endpoint(req: SymbolicRequest) -> SymbolicResponse:
    graph = Graph.from_json(req.graph.model_dump())
    ideal = symbolic_power(graph, req.power)
    return SymbolicResponse(power=req.power, ideal=ideal.to_json())


@app.post("/intermediate", response_model=IntermediateResponse)
def intermediate_endpoint(req: IntermediateRequest) -> IntermediateResponse:
    graph = Graph.from_json(req.graph.model_dump())
    field = FieldSpec.parse(req.field) if req.field else None
    items = []
    listing = enumerate_intermediate_ideals(graph, req.power, req.cap, req.seed)
    for idx, ideal in listing:
        value = None
        if field is not None:
            value = takayama_regularity(ideal, field, threads=req.threads)[0]
        items.append(IntermediateItem(extras_index=list(idx),
                                      ideal=ideal.to_json(), reg=value))
    extras_total = max((len(idx) for idx, _ in listing), default=0)
    return IntermediateResponse(power=req.power, extras_total=extras_total,
                                items=items)


@app.post("/degree-complex", response_model=DegreeComplexResponse)
def degree_complex_endpoint(req: DegreeComplexRequest) -> DegreeComplexResponse:
    ideal = MonomialIdeal.from_json(req.ideal.model_dump())
    if len(req.exponent) != ideal.n:
        raise InputError("exponent vector has wrong length")
    complex_ = degree_complex(ideal, tuple(req.exponent))
    return DegreeComplexResponse(complex=complex_.to_json())


@app.post("/homology", response_model=HomologyResponse)
def homology_endpoint(req: HomologyRequest) -> HomologyResponse:
    complex_ = SimplicialComplex.from_json(req.complex.model_dump())
    field = FieldSpec.parse(req.field)
    dims = complex_.reduced_homology_dims(field)
    return HomologyResponse(dims={str(d): h for d, h in sorted(dims.items())})


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    report = run_scenario(req.scenario, field=req.field,
                          allow_slow=req.allow_slow, no_prune=req.no_prune,
                          threads=req.threads)
    return VerifyResponse.model_validate(report)


@app.get("/scenarios", response_model=list[ScenarioInfo])
def scenarios_endpoint() -> list[ScenarioInfo]:
    return [ScenarioInfo(**row) for row in registry()]


@app.get("/scenarios/{name}")
def scenario_fixture_endpoint(name: str) -> Response:
    return Response(content=fixture_text(name), media_type="application/json")
