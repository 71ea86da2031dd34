import { FilterState, filtersToSearchParams } from "./state.js";

/** Exact probability as serialized by the service; `log10` is null only for an exact zero. */
export interface ProbabilityJson {
    decimal: string;
    log10: number | null;
    num: string;
    den: string;
}

export interface TestResultJson {
    method: string;
    n: number;
    observed: number;
    p_value: ProbabilityJson;
    pmf_at_observed: ProbabilityJson;
    v: number[];
}

export interface UploadResponse {
    session_id: string;
    n: number;
    k: number;
    features: string[];
    column_sums: number[];
}

export interface FindingNode {
    id: number;
    intent: string[];
    extent_size: number;
    n: number;
    v: number[];
    observed: number;
    p_value: ProbabilityJson;
}

export interface FindingsResponse {
    total: number;
    offset: number;
    limit: number;
    nodes: FindingNode[];
    edges: [number, number][];
}

export interface SeriesPoint {
    i: number;
    pmf: ProbabilityJson;
    tail: ProbabilityJson;
}

export interface DistributionResponse {
    n: number;
    v: number[];
    support: [number, number];
    series: SeriesPoint[];
}

export interface SelectionResponse {
    features: string[];
    observed: number;
    test: TestResultJson;
}

export interface HealthResponse {
    status: string;
    sessions: number;
}

/** Non-2xx response; `body` is the decoded JSON error payload. */
export class ApiError extends Error {
    readonly status: number;
    readonly body: Record<string, unknown>;

    constructor(status: number, body: Record<string, unknown>) {
        super(`HTTP ${status}: ${JSON.stringify(body)}`);
        this.name = "ApiError";
        this.status = status;
        this.body = body;
    }
}

async function decode<T>(response: Response): Promise<T> {
    let payload: unknown = null;
    try {
        payload = await response.json();
    } catch {
        payload = { detail: response.statusText };
    }
    if (!response.ok) {
        throw new ApiError(response.status, payload as Record<string, unknown>);
    }
    return payload as T;
}

/**
 * Typed client for the cooccur HTTP service.  Every number shown in
 * the UI originates from one of these responses; the client never
 * post-processes a probability.
 */
export class ApiClient {
    private baseUrl: string;

    constructor(baseUrl: string) {
        this.baseUrl = baseUrl.replace(/\/+$/, "");
    }

    async health(): Promise<HealthResponse> {
        return decode(await fetch(`${this.baseUrl}/healthz`));
    }

    async uploadContext(data: Blob, filename: string): Promise<UploadResponse> {
        const form = new FormData();
        form.append("file", data, filename);
        const response = await fetch(`${this.baseUrl}/contexts`, {
            method: "POST",
            body: form,
        });
        return decode(response);
    }

    async getFindings(
        sessionId: string,
        filters: FilterState,
        page?: { limit?: number; offset?: number },
    ): Promise<FindingsResponse> {
        const params = filtersToSearchParams(filters);
        if (page?.limit !== undefined) params.set("limit", String(page.limit));
        if (page?.offset !== undefined) params.set("offset", String(page.offset));
        const url = `${this.baseUrl}/contexts/${sessionId}/findings?${params}`;
        return decode(await fetch(url));
    }

    async getDistribution(
        sessionId: string,
        v: number[],
        points?: number,
    ): Promise<DistributionResponse> {
        const params = new URLSearchParams();
        for (const count of v) params.append("v", String(count));
        if (points !== undefined) params.set("points", String(points));
        const url = `${this.baseUrl}/contexts/${sessionId}/distribution?${params}`;
        return decode(await fetch(url));
    }

    async testSelection(sessionId: string, features: string[]): Promise<SelectionResponse> {
        const response = await fetch(`${this.baseUrl}/contexts/${sessionId}/selection`, {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify({ features }),
        });
        return decode(response);
    }

    async runTest(n: number, v: number[], i: number): Promise<TestResultJson> {
        const response = await fetch(`${this.baseUrl}/test`, {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify({ n, v, i }),
        });
        return decode(response);
    }
}
