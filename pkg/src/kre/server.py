"""HTTP/JSON query service.

Stateless per request: all view state (navigation, filters, mode) lives
in the client, and every response is a pure function of (snapshot,
request body), serialized canonically so repeated requests return
byte-identical bodies. The snapshot is loaded before the listener
starts; concurrent reads are safe.

Endpoints:
  GET  /api/info      corpus metadata
  POST /api/matrix    QuerySpec -> MatrixView
  POST /api/timeline  QuerySpec + mode + granularity -> views array
  POST /api/tweets    QuerySpec + target + pagination -> TweetPage
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import query as q
from . import timeline
from .analytics import view_to_json
from .corpus import CorpusHandle
from .errors import QueryValidationError
from .timeutil import format_utc


def _json_response(payload, status_code: int = 200) -> Response:
    return Response(
        content=view_to_json(payload),
        status_code=status_code,
        media_type="application/json",
    )


def _validation_response(fields) -> Response:
    return _json_response({"error": "validation", "fields": list(fields)}, status_code=400)


async def _read_body(request: Request) -> dict:
    try:
        body = await request.json()
    except Exception:
        raise QueryValidationError(["body: invalid JSON"]) from None
    if body is None:
        return {}
    if not isinstance(body, dict):
        raise QueryValidationError(["body: expected a JSON object"])
    return body


def create_app(handle: Optional[CorpusHandle]) -> FastAPI:
    """Build the service around one loaded snapshot.

    With ``handle=None`` every query endpoint answers 503
    service-not-ready; /api/info still responds.
    """
    app = FastAPI(title="kre", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def not_ready() -> Response:
        return _json_response({"error": "service-not-ready"}, status_code=503)

    @app.get("/api/info")
    def info():
        if handle is None:
            return not_ready()
        time_range = None
        if handle.time_range is not None:
            time_range = {
                "start": format_utc(handle.time_range[0]),
                "end": format_utc(handle.time_range[1]),
            }
        return _json_response(
            {
                "record_count": len(handle.records),
                "time_range": time_range,
                "distinct_keywords": handle.distinct_keyword_count,
            }
        )

    @app.post("/api/matrix")
    async def matrix(request: Request):
        if handle is None:
            return not_ready()
        try:
            body = await _read_body(request)
            spec = q.parse_query_spec(body)
        except QueryValidationError as exc:
            return _validation_response(exc.fields)
        return _json_response(q.query_matrix(handle, spec))

    @app.post("/api/timeline")
    async def timeline_route(request: Request):
        if handle is None:
            return not_ready()
        try:
            body = await _read_body(request)
        except QueryValidationError as exc:
            return _validation_response(exc.fields)
        errors = []
        mode = body.get("mode")
        granularity = body.get("granularity")
        if mode not in timeline.MODES:
            errors.append(f"mode: must be one of {list(timeline.MODES)}")
        if granularity not in timeline.GRANULARITIES:
            errors.append(f"granularity: must be one of {list(timeline.GRANULARITIES)}")
        spec = None
        try:
            spec = q.parse_query_spec(body, allow_extra=("mode", "granularity"))
        except QueryValidationError as exc:
            errors.extend(exc.fields)
        if errors:
            return _validation_response(errors)
        return _json_response(q.query_timeline(handle, spec, mode, granularity))

    @app.post("/api/tweets")
    async def tweets(request: Request):
        if handle is None:
            return not_ready()
        try:
            body = await _read_body(request)
            spec = q.parse_query_spec(body, allow_extra=("target", "offset", "limit"))
            page = q.query_tweets(
                handle,
                spec,
                target=body.get("target", "all"),
                offset=body.get("offset", 0),
                limit=body.get("limit", 50),
            )
        except QueryValidationError as exc:
            return _validation_response(exc.fields)
        return _json_response(page)

    return app
