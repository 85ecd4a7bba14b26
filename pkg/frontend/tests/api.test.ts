import { describe, expect, it, vi } from "vitest";

import { ApiError, getCatalog, getNearest, postMix, postRecover } from "../src/api.js";
import type { FetchLike, MixResponse } from "../src/api.js";

function jsonResponse(status: number, payload: unknown): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "content-type": "application/json" },
  });
}

const MIX_PAYLOAD: MixResponse = {
  result_hex: "217D90",
  result_reflectance: new Array(36).fill(0.2),
  clipped: false,
  algorithm: "illss",
  inputs: [],
  path: null,
};

describe("postMix", () => {
  it("POSTs the body as JSON and returns the parsed payload", async () => {
    const fetchFn = vi.fn(async () => jsonResponse(200, MIX_PAYLOAD)) as FetchLike;
    const body = { colors: [{ hex: "FFFF00", parts: 1 }], algorithm: "illss" };

    const result = await postMix(body, fetchFn);

    expect(result.result_hex).toBe("217D90");
    expect(fetchFn).toHaveBeenCalledWith("/api/mix", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  });

  it("maps a 400 to an ApiError carrying the server's code", async () => {
    const fetchFn: FetchLike = async () =>
      jsonResponse(400, { error: "domain_error", detail: "invalid hex color 'ZZZ'" });

    const failure = await postMix({ colors: [], algorithm: "illss" }, fetchFn).catch((e) => e);

    expect(failure).toBeInstanceOf(ApiError);
    expect(failure.status).toBe(400);
    expect(failure.code).toBe("domain_error");
    expect(failure.message).toContain("invalid hex color");
  });

  it("summarizes validation-error arrays into the message", async () => {
    const fetchFn: FetchLike = async () =>
      jsonResponse(400, {
        error: "invalid_request",
        detail: [{ loc: ["body", "colors"], msg: "Field required" }],
      });

    const failure = await postMix({ colors: [], algorithm: "illss" }, fetchFn).catch((e) => e);

    expect(failure.code).toBe("invalid_request");
    expect(failure.message).toContain("Field required");
  });

  it("preserves non-convergence diagnostics from a 422", async () => {
    const fetchFn: FetchLike = async () =>
      jsonResponse(422, {
        error: "non_convergence",
        detail: "llss did not converge for FF00FF",
        diagnostics: { algorithm: "llss", hex: "FF00FF" },
      });

    const failure = await postMix({ colors: [], algorithm: "llss" }, fetchFn).catch((e) => e);

    expect(failure.status).toBe(422);
    expect(failure.diagnostics).toEqual({ algorithm: "llss", hex: "FF00FF" });
  });

  it("lets network failures bubble out unchanged", async () => {
    const fetchFn: FetchLike = async () => {
      throw new TypeError("fetch failed");
    };
    await expect(postMix({ colors: [], algorithm: "illss" }, fetchFn)).rejects.toThrow(
      TypeError,
    );
  });
});

describe("other endpoints", () => {
  it("postRecover sends hex and algorithm", async () => {
    const fetchFn = vi.fn(async () =>
      jsonResponse(200, { hex: "3264C8", round_trip_hex: "3264C8" }),
    ) as FetchLike;
    const result = await postRecover("3264C8", "llss", fetchFn);
    expect(result.round_trip_hex).toBe("3264C8");
    expect(fetchFn).toHaveBeenCalledWith("/api/recover", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ hex: "3264C8", algorithm: "llss" }),
    });
  });

  it("getNearest escapes query parameters", async () => {
    const fetchFn = vi.fn(async () =>
      jsonResponse(200, { name: "TitaniumWhite", hex: "FBFCF9" }),
    ) as FetchLike;
    await getNearest("#FFFFFF", "lab", fetchFn);
    expect(fetchFn).toHaveBeenCalledWith(
      "/api/catalog/nearest?hex=%23FFFFFF&metric=lab",
      { method: "GET" },
    );
  });

  it("getCatalog returns source and entries", async () => {
    const fetchFn: FetchLike = async () =>
      jsonResponse(200, { source: "bundled", entries: [] });
    const result = await getCatalog(fetchFn);
    expect(result.source).toBe("bundled");
  });
});
