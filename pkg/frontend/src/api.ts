import type { ApiErrorBody, Dataset, LayoutRequest, LayoutWire, ProfileResponse } from "./types.js";

/** Structural subset of window.fetch so tests can inject a fake transport. */
export type Transport = (
  url: string,
  init: { method: string; headers: Record<string, string>; body: string },
) => Promise<{ status: number; json(): Promise<unknown> }>;

export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly transport: Transport,
  ) {}

  private async post<T>(path: string, payload: unknown): Promise<T> {
    let resp;
    try {
      resp = await this.transport(`${this.baseUrl}${path}`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(payload),
      });
    } catch (err) {
      throw new ApiError("network_error", `cannot reach the layout service: ${String(err)}`);
    }
    const body = (await resp.json()) as T | ApiErrorBody;
    if (resp.status !== 200) {
      const e = body as ApiErrorBody;
      throw new ApiError(e.code ?? "error", e.message ?? `HTTP ${resp.status}`);
    }
    return body as T;
  }

  layout(request: LayoutRequest): Promise<LayoutWire> {
    return this.post<LayoutWire>("/api/layout", request);
  }

  profile(dataset: Dataset): Promise<ProfileResponse> {
    return this.post<ProfileResponse>("/api/profile", dataset);
  }

  simulateSample(request: { count?: number; categories?: number; seed?: number }): Promise<unknown> {
    return this.post<unknown>("/api/simulate-sample", request);
  }
}
