"""HTTP service: mixing, recovery, and catalog queries plus the web UI.

All JSON field names are snake_case; reflectance arrays are plain
36-element lists ordered 380 to 730 nm.  Errors use a machine-readable
`error` code: malformed requests and domain violations map to 400,
solver non-convergence to 422 (with diagnostics attached).

The catalog and solver tables are loaded once at app creation and never
mutated, so concurrent requests share them safely.
"""

from __future__ import annotations

import os
from pathlib import Path

from fastapi import FastAPI
from fastapi.encoders import jsonable_encoder
from fastapi.exceptions import RequestValidationError
from fastapi.responses import HTMLResponse, JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .catalog import nearest_entry
from .errors import CatalogError, NonConvergenceError, SpectraMixError
from .pipeline import (
    DEFAULT_ALGORITHM,
    MixRequest,
    format_hex,
    load_active_catalog,
    parse_hex,
    perform_mix,
    perform_recover,
)

__all__ = ["create_app", "UI_ENV_VAR"]

#: Environment variable naming the directory of built UI assets.
UI_ENV_VAR = "SPECTRAMIX_UI"

_FALLBACK_PAGE = """<!doctype html>
<html><head><title>spectramix</title></head>
<body style="font-family: sans-serif; max-width: 40em; margin: 3em auto;">
<h1>spectramix</h1>
<p>The web UI assets are not built. The JSON API is live:</p>
<ul>
<li><code>POST /api/mix</code></li>
<li><code>POST /api/recover</code></li>
<li><code>GET /api/catalog/nearest?hex=RRGGBB&amp;metric=lab</code></li>
<li><code>GET /api/catalog</code></li>
<li><code>GET /api/health</code></li>
</ul>
</body></html>
"""


class ColorPartBody(BaseModel):
    hex: str
    parts: float = 1.0


class MixBody(BaseModel):
    colors: list[ColorPartBody]
    algorithm: str = DEFAULT_ALGORITHM
    steps: int | None = None
    metric: str = "lab"


class RecoverBody(BaseModel):
    hex: str
    algorithm: str = DEFAULT_ALGORITHM


def _find_static_dir(explicit: str | None) -> Path | None:
    candidates = [explicit, os.environ.get(UI_ENV_VAR)]
    # source checkouts serve the sibling frontend build without flags
    repo_dist = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    candidates.append(str(repo_dist))
    for candidate in candidates:
        if candidate and Path(candidate).is_dir():
            return Path(candidate)
    return None


def _entry_payload(entry) -> dict:
    return {
        "name": entry.name,
        "hex": format_hex(entry.srgb),
        "reflectance": [float(v) for v in entry.reflectance],
        "lab": [float(entry.lab.l), float(entry.lab.a), float(entry.lab.b)],
        "gamut_clipped": entry.gamut_clipped,
    }


def create_app(catalog_path: str | None = None, static_dir: str | None = None) -> FastAPI:
    """Build the service with its catalog loaded and routes wired."""
    catalog = load_active_catalog(catalog_path)
    app = FastAPI(title="spectramix", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def _on_invalid_request(request, exc):
        return JSONResponse(
            status_code=400,
            content={"error": "invalid_request", "detail": jsonable_encoder(exc.errors())},
        )

    @app.exception_handler(SpectraMixError)
    async def _on_domain_error(request, exc):
        if isinstance(exc, NonConvergenceError):
            return JSONResponse(
                status_code=422,
                content={
                    "error": "non_convergence",
                    "detail": str(exc),
                    "diagnostics": exc.diagnostics,
                },
            )
        code = "catalog_error" if isinstance(exc, CatalogError) else "domain_error"
        return JSONResponse(status_code=400, content={"error": code, "detail": str(exc)})

    @app.post("/api/mix")
    def api_mix(body: MixBody):
        request = MixRequest(
            colors=tuple((c.hex, c.parts) for c in body.colors),
            algorithm=body.algorithm,
            steps=body.steps,
            metric=body.metric,
        )
        return perform_mix(request, catalog=catalog).as_dict()

    @app.post("/api/recover")
    def api_recover(body: RecoverBody):
        return perform_recover(body.hex, algorithm=body.algorithm).as_dict()

    @app.get("/api/catalog/nearest")
    def api_nearest(hex: str, metric: str = "lab"):
        entry = nearest_entry(parse_hex(hex), catalog, metric)
        return _entry_payload(entry)

    @app.get("/api/catalog")
    def api_catalog():
        return {
            "source": catalog.source,
            "entries": [_entry_payload(e) for e in catalog.entries],
        }

    @app.get("/api/health")
    def api_health():
        return {"status": "ok"}

    ui_dir = _find_static_dir(static_dir)
    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    else:

        @app.get("/", response_class=HTMLResponse)
        def index():
            return _FALLBACK_PAGE

    return app
