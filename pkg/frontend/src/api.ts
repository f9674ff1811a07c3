import type {
  HealthDoc,
  MaterialSummary,
  PipelineDoc,
  PredictionDoc,
  RequirementBody,
  SchemaDoc,
} from "./types.js";

/** Error body shape served by the API: {error, detail}. */
export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    public readonly detail: string,
  ) {
    super(`${code}: ${detail}`);
  }
}

async function parseOrThrow<T>(resp: Response): Promise<T> {
  if (resp.ok) {
    return (await resp.json()) as T;
  }
  let code = `HTTP${resp.status}`;
  let detail = resp.statusText;
  try {
    const body = (await resp.json()) as { error?: string; detail?: string };
    if (body.error) code = body.error;
    if (body.detail) detail = body.detail;
  } catch {
    // non-JSON error body; keep the HTTP status text
  }
  throw new ApiError(resp.status, code, detail);
}

export class Client {
  constructor(private readonly base: string = "") {}

  private url(path: string): string {
    return `${this.base}${path}`;
  }

  async health(): Promise<HealthDoc> {
    return parseOrThrow(await fetch(this.url("/api/health")));
  }

  async schema(): Promise<SchemaDoc> {
    return parseOrThrow(await fetch(this.url("/api/schema")));
  }

  async materials(classLabel?: string): Promise<MaterialSummary[]> {
    const query = classLabel ? `?class=${encodeURIComponent(classLabel)}` : "";
    return parseOrThrow(await fetch(this.url(`/api/materials${query}`)));
  }

  async classify(body: RequirementBody): Promise<PredictionDoc> {
    return parseOrThrow(
      await fetch(this.url("/api/classify"), {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
      }),
    );
  }

  async pipeline(body: RequirementBody): Promise<PipelineDoc> {
    return parseOrThrow(
      await fetch(this.url("/api/pipeline"), {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
      }),
    );
  }
}
