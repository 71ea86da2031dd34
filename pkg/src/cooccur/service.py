"""HTTP facade over ingest, discovery, and the exact test.

Uploads create in-memory sessions with a TTL; all computation on a
session happens on demand, under a wall-clock budget, with scored
findings memoized per filter combination.  Responses are serialized
through :mod:`cooccur.report`, so a findings page is byte-identical to
the corresponding slice of CLI output.
"""

from __future__ import annotations

import argparse
import os
import secrets
import time
from dataclasses import dataclass, field
from fractions import Fraction

from fastapi import FastAPI, Request, Response, UploadFile
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import report
from .core import Marginals, coincidence_test
from .errors import (
    BudgetError,
    EnumerationCapError,
    InvalidInputError,
    MatrixParseError,
    TimeBudgetError,
)
from .fca import (
    DEFAULT_MAX_CONCEPTS,
    DiscoveryFilters,
    FormalContext,
    SignatureFinding,
    discover,
    extent,
)
from .ingest import DEFAULT_MAX_CELLS, FORMAT_CSV, FORMAT_TSV, parse_bytes

__all__ = ["ServiceConfig", "SessionStore", "create_app", "main"]


@dataclass
class ServiceConfig:
    """Operational limits; all overridable per deployment."""

    session_ttl: float = 3600.0
    compute_budget: float = 10.0
    max_cells: int = DEFAULT_MAX_CELLS
    max_concepts: int = DEFAULT_MAX_CONCEPTS
    cors_origins: tuple[str, ...] = ("*",)


@dataclass
class _Session:
    context: FormalContext
    created_at: float
    findings_cache: dict[tuple, list[SignatureFinding]] = field(default_factory=dict)


class SessionStore:
    """In-memory session map; expired entries are dropped on access."""

    def __init__(self, ttl: float):
        self.ttl = ttl
        self._sessions: dict[str, _Session] = {}

    def _purge(self) -> None:
        cutoff = time.monotonic() - self.ttl
        stale = [sid for sid, s in self._sessions.items() if s.created_at < cutoff]
        for sid in stale:
            del self._sessions[sid]

    def create(self, context: FormalContext) -> str:
        self._purge()
        sid = secrets.token_hex(16)
        self._sessions[sid] = _Session(context=context, created_at=time.monotonic())
        return sid

    def get(self, sid: str) -> _Session | None:
        self._purge()
        return self._sessions.get(sid)

    def __len__(self) -> int:
        self._purge()
        return len(self._sessions)


class TestRequest(BaseModel):
    n: int
    v: list[int]
    i: int
    digits: int = 2


class SelectionRequest(BaseModel):
    features: list[str]
    digits: int = 2


def _json_response(payload, status_code: int = 200) -> Response:
    # rendered here, not by FastAPI, so bodies are byte-stable
    return Response(
        content=report.render_json(payload),
        status_code=status_code,
        media_type="application/json",
    )


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    app = FastAPI(title="cooccur", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(config.cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(ttl=config.session_ttl)
    app.state.store = store
    app.state.config = config

    @app.exception_handler(MatrixParseError)
    async def _parse_error(request: Request, exc: MatrixParseError):
        detail = {"detail": str(exc)}
        if exc.row is not None:
            detail["row"] = exc.row
        if exc.column is not None:
            detail["column"] = exc.column
        return JSONResponse(status_code=400, content=detail)

    @app.exception_handler(InvalidInputError)
    async def _invalid_input(request: Request, exc: InvalidInputError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(BudgetError)
    async def _budget(request: Request, exc: BudgetError):
        # upload size refusals are "payload too large"; compute refusals
        # are "conflict with current state: tighten the filters"
        status = 413 if not isinstance(exc, (EnumerationCapError, TimeBudgetError)) else 409
        content = {"detail": str(exc), "partial": False}
        if exc.cap is not None:
            content["cap"] = exc.cap
        return JSONResponse(status_code=status, content=content)

    def _session_or_404(session_id: str) -> _Session:
        session = store.get(session_id)
        if session is None:
            raise _NotFound(session_id)
        return session

    class _NotFound(Exception):
        def __init__(self, sid: str):
            self.sid = sid

    @app.exception_handler(_NotFound)
    async def _not_found(request: Request, exc: _NotFound):
        return JSONResponse(
            status_code=404,
            content={"detail": f"unknown or expired session {exc.sid!r}"},
        )

    @app.get("/healthz")
    async def healthz():
        return _json_response({"status": "ok", "sessions": len(store)})

    @app.post("/contexts")
    async def upload_context(file: UploadFile):
        data = await file.read()
        name = file.filename or ""
        fmt = FORMAT_TSV if name.lower().endswith(".tsv") else FORMAT_CSV
        ctx = parse_bytes(data, fmt=fmt, max_cells=config.max_cells)
        sid = store.create(ctx)
        return _json_response(
            {
                "session_id": sid,
                "n": ctx.n,
                "k": ctx.k,
                "features": list(ctx.features),
                "column_sums": list(ctx.column_sums()),
            }
        )

    def _scored(session: _Session, filters: DiscoveryFilters) -> list[SignatureFinding]:
        key = (
            filters.min_extent,
            filters.max_extent,
            filters.max_intent_size,
            str(filters.p_threshold),
        )
        cached = session.findings_cache.get(key)
        if cached is None:
            deadline = time.monotonic() + config.compute_budget
            cached = discover(
                session.context,
                filters,
                max_concepts=config.max_concepts,
                deadline=deadline,
            )
            session.findings_cache[key] = cached
        return cached

    @app.get("/contexts/{session_id}/findings")
    async def get_findings(
        session_id: str,
        min_extent: int = 1,
        max_extent: int | None = None,
        max_intent: int | None = None,
        p_threshold: str = "1",
        limit: int = 100,
        offset: int = 0,
        digits: int = 2,
    ):
        session = _session_or_404(session_id)
        if limit < 1 or offset < 0:
            raise InvalidInputError(
                f"limit must be >= 1 and offset >= 0, got {limit}/{offset}"
            )
        try:
            threshold = Fraction(p_threshold)
        except (ValueError, ZeroDivisionError):
            raise InvalidInputError(
                f"p_threshold must be a probability, got {p_threshold!r}"
            ) from None
        filters = DiscoveryFilters(
            min_extent=min_extent,
            max_extent=max_extent,
            max_intent_size=max_intent,
            p_threshold=threshold,
        )
        findings = _scored(session, filters)
        page = findings[offset : offset + limit]
        ids = list(range(offset, offset + len(page)))
        payload = {
            "total": len(findings),
            "offset": offset,
            "limit": limit,
            "nodes": report.findings_json(session.context, page, digits, start=offset),
            "edges": report.findings_edges(page, ids),
        }
        return _json_response(payload)

    @app.post("/test")
    async def run_test(body: TestRequest):
        marginals = Marginals(body.n, tuple(body.v))
        result = coincidence_test(marginals, body.i)
        return _json_response(report.test_result_json(result, body.digits))

    @app.get("/contexts/{session_id}/distribution")
    async def get_distribution(
        session_id: str,
        request: Request,
        points: int | None = None,
        digits: int = 2,
    ):
        session = _session_or_404(session_id)
        raw = request.query_params.getlist("v")
        if not raw:
            raise InvalidInputError("at least one v query parameter is required")
        try:
            v = tuple(int(x) for x in raw)
        except ValueError:
            raise InvalidInputError(f"v must be integers, got {raw}") from None
        if points is not None and points < 1:
            raise InvalidInputError(f"points must be >= 1, got {points}")
        marginals = Marginals(session.context.n, v)
        deadline = time.monotonic() + config.compute_budget
        payload = report.distribution_json(
            marginals, digits=digits, points=points, deadline=deadline
        )
        return _json_response(payload)

    @app.post("/contexts/{session_id}/selection")
    async def test_selection(session_id: str, body: SelectionRequest):
        session = _session_or_404(session_id)
        if not body.features:
            raise InvalidInputError("select at least one feature")
        ctx = session.context
        positions = sorted(ctx.feature_position(f) for f in body.features)
        if len(positions) != len(set(positions)):
            raise InvalidInputError("duplicate feature in selection")
        names = [ctx.features[j] for j in positions]
        sums = ctx.column_sums()
        observed = len(extent(ctx, names))
        marginals = Marginals(ctx.n, tuple(sums[j] for j in positions))
        result = coincidence_test(marginals, observed)
        return _json_response(
            {
                "features": names,
                "observed": observed,
                "test": report.test_result_json(result, body.digits),
            }
        )

    return app


def main(argv: list[str] | None = None) -> None:
    parser = argparse.ArgumentParser(
        prog="cooccur-serve", description="Run the cooccur HTTP service."
    )
    parser.add_argument("--host", default=os.environ.get("COOCCUR_HOST", "127.0.0.1"))
    parser.add_argument(
        "--port", type=int, default=int(os.environ.get("COOCCUR_PORT", "8787"))
    )
    parser.add_argument(
        "--session-ttl",
        type=float,
        default=float(os.environ.get("COOCCUR_SESSION_TTL", "3600")),
    )
    parser.add_argument(
        "--compute-budget",
        type=float,
        default=float(os.environ.get("COOCCUR_COMPUTE_BUDGET", "10")),
    )
    parser.add_argument(
        "--max-cells",
        type=int,
        default=int(os.environ.get("COOCCUR_MAX_CELLS", str(DEFAULT_MAX_CELLS))),
    )
    parser.add_argument(
        "--max-concepts",
        type=int,
        default=int(os.environ.get("COOCCUR_MAX_CONCEPTS", str(DEFAULT_MAX_CONCEPTS))),
    )
    args = parser.parse_args(argv)
    config = ServiceConfig(
        session_ttl=args.session_ttl,
        compute_budget=args.compute_budget,
        max_cells=args.max_cells,
        max_concepts=args.max_concepts,
    )
    import uvicorn

    uvicorn.run(create_app(config), host=args.host, port=args.port)


if __name__ == "__main__":
    main()
