"""Local HTTP service exposing the prover to the web UI.

Stateless: every request carries its construction source; shared rule and
catalog data are immutable after startup, so concurrent requests need no
locking.  Binds loopback by default (see the CLI ``serve`` command).
"""
from __future__ import annotations

from typing import List, Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import data, workflow
from .diagram import detect_properties, realize
from .errors import ParseError


class ParseRequest(BaseModel):
    source: str
    seed: int = 0


class PointOut(BaseModel):
    name: str
    x: float
    y: float


class StepOut(BaseModel):
    kind: str
    defined: str
    args: List[str]


class ParseResponse(BaseModel):
    points: List[PointOut]
    steps: List[StepOut]
    goals: List[str]


class Candidate(BaseModel):
    index: int
    fact: str


class DetectResponse(BaseModel):
    candidates: List[Candidate]


class ProveRequest(BaseModel):
    source: str
    goal: Optional[str] = None  # fact text, "auto:<i>" (1-based), or None for the declared goal
    lang: str = "en"
    render: Literal["flat", "tree", "dot"] = "flat"
    structure: bool = True
    backend: Literal["gdd", "wu"] = "gdd"
    seed: int = 0


class DagNode(BaseModel):
    index: int
    fact: str
    reason: str
    antecedents: List[int]


class ProveResponse(BaseModel):
    status: Literal["proved", "not_proved", "error"]
    rendering: str = ""
    dag: List[DagNode] = Field(default_factory=list)
    ndgs: List[str] = Field(default_factory=list)
    diagnostics: str = ""


class CatalogEntryOut(BaseModel):
    id: int
    key: str
    text: str
    tooltip: Optional[str] = None


class CatalogResponse(BaseModel):
    language: str
    entries: List[CatalogEntryOut]


class RuleOut(BaseModel):
    id: str
    pattern: str
    phrase: str
    structural: bool


class RulesResponse(BaseModel):
    name: str
    version: str
    rules: List[RuleOut]


def _parse_detail(exc: ParseError) -> str:
    return str(exc)


def build_app(static_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="gddx", version="0.1.0")

    @app.post("/api/parse", response_model=ParseResponse)
    def api_parse(req: ParseRequest) -> ParseResponse:
        try:
            construction = workflow.load_construction(req.source)
            diagram = realize(construction, req.seed)
        except workflow.USAGE_ERRORS as exc:
            raise HTTPException(status_code=422, detail=_parse_detail(exc))
        except workflow.RESOURCE_ERRORS as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return ParseResponse(
            points=[
                PointOut(name=n, x=diagram.coords[n][0], y=diagram.coords[n][1])
                for n in construction.points()
            ],
            steps=[
                StepOut(kind=s.kind, defined=s.defined, args=list(s.args))
                for s in construction.steps
            ],
            goals=[str(g) for g in construction.goals],
        )

    @app.post("/api/detect", response_model=DetectResponse)
    def api_detect(req: ParseRequest) -> DetectResponse:
        try:
            construction = workflow.load_construction(req.source)
            diagram = realize(construction, req.seed)
            facts = detect_properties(diagram, construction)
        except workflow.USAGE_ERRORS as exc:
            raise HTTPException(status_code=422, detail=_parse_detail(exc))
        except workflow.RESOURCE_ERRORS as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return DetectResponse(
            candidates=[
                Candidate(index=i, fact=f"{f.pred} {' '.join(f.points)}")
                for i, f in enumerate(facts, start=1)
            ]
        )

    @app.post("/api/prove", response_model=ProveResponse)
    def api_prove(req: ProveRequest) -> ProveResponse:
        try:
            construction = workflow.load_construction(req.source)
            goal = workflow.resolve_goal(construction, req.goal, req.seed)
            outcome = workflow.run_prove(
                construction,
                goal,
                lang=req.lang,
                mode=req.render,
                structure=req.structure,
                backend=req.backend,
                seed=req.seed,
            )
        except workflow.USAGE_ERRORS as exc:
            return ProveResponse(status="error", diagnostics=_parse_detail(exc))
        except workflow.RESOURCE_ERRORS as exc:
            return ProveResponse(status="error", diagnostics=str(exc))
        dag = []
        if outcome.dag is not None:
            dag = [
                DagNode(
                    index=n.index,
                    fact=str(n.fact),
                    reason=n.reason,
                    antecedents=list(n.antecedents),
                )
                for n in outcome.dag.nodes
            ]
        return ProveResponse(
            status=outcome.status,  # type: ignore[arg-type]
            rendering=outcome.rendering,
            dag=dag,
            ndgs=outcome.ndgs,
            diagnostics=outcome.diagnostics,
        )

    @app.get("/api/i18n/{lang}", response_model=CatalogResponse)
    def api_catalog(lang: str) -> CatalogResponse:
        if lang not in data.catalog_languages():
            raise HTTPException(status_code=404, detail=f"no catalog for language {lang!r}")
        catalog = data.load_builtin_catalog(lang)
        return CatalogResponse(
            language=catalog.language,
            entries=[
                CatalogEntryOut(id=e.id, key=e.key, text=e.text, tooltip=e.tooltip)
                for e in catalog.entries
            ],
        )

    @app.get("/api/rules", response_model=RulesResponse)
    def api_rules() -> RulesResponse:
        rb = workflow.default_rulebase()
        rules = []
        for r in rb.rules:
            given = ", ".join(f"{a.pred}({','.join(a.vars)})" for a in r.antecedents)
            conclude = f"{r.consequent.pred}({','.join(r.consequent.vars)})"
            rules.append(
                RuleOut(
                    id=r.rule_id,
                    pattern=f"{given} => {conclude}",
                    phrase=r.phrase,
                    structural=r.structural,
                )
            )
        return RulesResponse(name=rb.name, version=rb.version, rules=rules)

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app
