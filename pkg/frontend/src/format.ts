/**
 * Every user-visible string in the UI is produced here, from service
 * responses, so tests can assert on exactly what the page displays.
 * Probability strings are passed through verbatim; the UI never
 * re-renders a number the service already rendered.
 */

import {
    FindingNode,
    ProbabilityJson,
    SelectionResponse,
    UploadResponse,
} from "./api.js";

export function formatUploadSummary(upload: UploadResponse): string {
    return `${upload.n} samples, ${upload.k} features`;
}

/** One line per feature: name plus how many samples carry it. */
export function featureFrequencyLines(upload: UploadResponse): string[] {
    return upload.features.map(
        (name, j) => `${name}: ${upload.column_sums[j]} of ${upload.n}`,
    );
}

function formatLog10(p: ProbabilityJson): string {
    if (p.log10 === null) return "exactly 0";
    return `log10 = ${p.log10.toFixed(2)}`;
}

/** Exact ratios can run to hundreds of digits; summarize the long ones. */
export function formatExactRatio(p: ProbabilityJson): string {
    if (p.num.length + p.den.length <= 40) {
        return `${p.num}/${p.den}`;
    }
    return `${p.num.length}-digit / ${p.den.length}-digit ratio`;
}

export interface NodeDetail {
    title: string;
    lines: string[];
}

export function formatNodeDetail(node: FindingNode): NodeDetail {
    const marginals = node.intent
        .map((name, j) => `${name}: ${node.v[j]}`)
        .join(", ");
    return {
        title: node.intent.join(" & "),
        lines: [
            `extent: ${node.extent_size} of ${node.n} samples`,
            `feature frequencies: ${marginals}`,
            `P(I >= ${node.observed}) = ${node.p_value.decimal} (${formatLog10(node.p_value)})`,
            `exact: ${formatExactRatio(node.p_value)}`,
        ],
    };
}

/** Headline result for an ad-hoc feature selection. */
export function formatSelectionResult(selection: SelectionResponse): string {
    const p = selection.test.p_value;
    return `P(I >= ${selection.observed}) = ${p.decimal}`;
}

export function formatSelectionDetail(selection: SelectionResponse): string[] {
    const test = selection.test;
    return [
        `selected: ${selection.features.join(", ")}`,
        `samples with every selected feature: ${selection.observed} of ${test.n}`,
        `${formatSelectionResult(selection)} (${formatLog10(test.p_value)})`,
        `exact: ${formatExactRatio(test.p_value)}`,
    ];
}

/** Inline message for a failed request, keyed off the HTTP status. */
export function formatApiError(status: number, body: Record<string, unknown>): string {
    const detail = describeDetail(body.detail);
    if (status === 400 && body.row !== undefined && body.column !== undefined) {
        return `Row ${body.row}, column ${body.column}: ${detail}`;
    }
    if (status === 404) {
        return "Session not found or expired. Upload the matrix again.";
    }
    if (status === 409) {
        return `${detail} Tighten the filters and retry.`;
    }
    if (status === 413) {
        const cap = body.cap !== undefined ? ` (limit: ${body.cap} cells)` : "";
        return `${detail}${cap}`;
    }
    return detail;
}

function describeDetail(detail: unknown): string {
    if (typeof detail === "string") return detail;
    if (Array.isArray(detail)) {
        // pydantic validation errors arrive as a list of {loc, msg, ...}
        const parts = detail.map((entry) => {
            if (entry && typeof entry === "object" && "msg" in entry) {
                return String((entry as { msg: unknown }).msg);
            }
            return JSON.stringify(entry);
        });
        return parts.join("; ");
    }
    if (detail === undefined || detail === null) return "Request failed.";
    return JSON.stringify(detail);
}
