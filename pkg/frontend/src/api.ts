// Typed client for the mixing service. The UI does no color math of its
// own: every hex and curve shown on screen comes from these payloads.

export interface ColorPart {
  hex: string;
  parts: number;
}

export interface MixRequestBody {
  colors: ColorPart[];
  algorithm: string;
  steps?: number;
  metric?: string;
}

export interface InputReport {
  hex: string;
  reflectance: number[];
  inner_iterations: number;
  outer_iterations: number;
  converged: boolean;
  matched_name: string | null;
}

export interface PathSwatch {
  parts: [number, number];
  hex: string;
  reflectance: number[];
  clipped: boolean;
}

export interface MixResponse {
  result_hex: string;
  result_reflectance: number[];
  clipped: boolean;
  algorithm: string;
  inputs: InputReport[];
  path: PathSwatch[] | null;
}

export interface RecoverResponse {
  hex: string;
  algorithm: string;
  reflectance: number[];
  inner_iterations: number;
  outer_iterations: number;
  converged: boolean;
  round_trip_hex: string;
}

export interface CatalogEntryPayload {
  name: string;
  hex: string;
  reflectance: number[];
  lab: [number, number, number];
  gamut_clipped: boolean;
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Server-reported failure: HTTP status plus the service's error payload. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly diagnostics?: unknown,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

function describeDetail(detail: unknown): string {
  if (typeof detail === "string") return detail;
  if (Array.isArray(detail)) {
    const first = detail[0];
    if (first && typeof first === "object" && "msg" in first) {
      return String((first as { msg: unknown }).msg);
    }
  }
  return "request failed";
}

async function request<T>(
  url: string,
  init: RequestInit,
  fetchFn: FetchLike,
): Promise<T> {
  const response = await fetchFn(url, init);
  const payload = await response.json();
  if (!response.ok) {
    const code = typeof payload?.error === "string" ? payload.error : "error";
    throw new ApiError(
      response.status,
      code,
      `${code}: ${describeDetail(payload?.detail)}`,
      payload?.diagnostics,
    );
  }
  return payload as T;
}

const JSON_HEADERS = { "content-type": "application/json" };

export function postMix(
  body: MixRequestBody,
  fetchFn: FetchLike = fetch,
): Promise<MixResponse> {
  return request("/api/mix", { method: "POST", headers: JSON_HEADERS, body: JSON.stringify(body) }, fetchFn);
}

export function postRecover(
  hex: string,
  algorithm: string,
  fetchFn: FetchLike = fetch,
): Promise<RecoverResponse> {
  return request(
    "/api/recover",
    { method: "POST", headers: JSON_HEADERS, body: JSON.stringify({ hex, algorithm }) },
    fetchFn,
  );
}

export function getNearest(
  hex: string,
  metric: string,
  fetchFn: FetchLike = fetch,
): Promise<CatalogEntryPayload> {
  const query = `hex=${encodeURIComponent(hex)}&metric=${encodeURIComponent(metric)}`;
  return request(`/api/catalog/nearest?${query}`, { method: "GET" }, fetchFn);
}

export function getCatalog(
  fetchFn: FetchLike = fetch,
): Promise<{ source: string; entries: CatalogEntryPayload[] }> {
  return request("/api/catalog", { method: "GET" }, fetchFn);
}
