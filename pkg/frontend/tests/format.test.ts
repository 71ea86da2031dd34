import { describe, expect, it } from "vitest";

import {
    FindingNode,
    ProbabilityJson,
    SelectionResponse,
    UploadResponse,
} from "../src/api.js";
import {
    featureFrequencyLines,
    formatApiError,
    formatExactRatio,
    formatNodeDetail,
    formatSelectionDetail,
    formatSelectionResult,
    formatUploadSummary,
} from "../src/format.js";

const upload: UploadResponse = {
    session_id: "abc123",
    n: 510,
    k: 6,
    features: ["g1", "g2", "g3", "g4", "g5", "g6"],
    column_sums: [101, 105, 106, 73, 69, 104],
};

function probability(decimal: string, log10: number | null, num = "1", den = "6"): ProbabilityJson {
    return { decimal, log10, num, den };
}

describe("upload summary", () => {
    it("states the matrix shape", () => {
        expect(formatUploadSummary(upload)).toBe("510 samples, 6 features");
    });

    it("lists each feature frequency", () => {
        const lines = featureFrequencyLines(upload);
        expect(lines).toHaveLength(6);
        expect(lines[0]).toBe("g1: 101 of 510");
        expect(lines[5]).toBe("g6: 104 of 510");
    });
});

describe("node detail", () => {
    const node: FindingNode = {
        id: 4,
        intent: ["m6", "m7", "m8"],
        extent_size: 78,
        n: 600,
        v: [169, 132, 125],
        observed: 78,
        p_value: probability("5.9e-78", -77.22, "123".repeat(40), "987".repeat(60)),
    };

    it("titles the concept with its intent", () => {
        expect(formatNodeDetail(node).title).toBe("m6 & m7 & m8");
    });

    it("reports extent, marginals, and the exact p verbatim", () => {
        const lines = formatNodeDetail(node).lines;
        expect(lines[0]).toBe("extent: 78 of 600 samples");
        expect(lines[1]).toBe("feature frequencies: m6: 169, m7: 132, m8: 125");
        expect(lines[2]).toBe("P(I >= 78) = 5.9e-78 (log10 = -77.22)");
        expect(lines[3]).toBe("exact: 120-digit / 180-digit ratio");
    });
});

describe("exact ratio", () => {
    it("prints short ratios in full", () => {
        expect(formatExactRatio(probability("1.6e-1", -0.778))).toBe("1/6");
    });

    it("summarizes long ratios by digit count", () => {
        const p = probability("5.1e-56", -55.29, "9".repeat(344), "1" + "0".repeat(398));
        expect(formatExactRatio(p)).toBe("344-digit / 399-digit ratio");
    });
});

describe("selection result", () => {
    const selection: SelectionResponse = {
        features: ["g1", "g2", "g3", "g4", "g5", "g6"],
        observed: 19,
        test: {
            method: "closed_form",
            n: 510,
            observed: 19,
            p_value: probability("5.1e-56", -55.29, "52", "10"),
            pmf_at_observed: probability("5.1e-56", -55.29, "52", "10"),
            v: [101, 105, 106, 73, 69, 104],
        },
    };

    it("passes the rendered probability through unchanged", () => {
        expect(formatSelectionResult(selection)).toBe("P(I >= 19) = 5.1e-56");
    });

    it("spells out the selection in the detail lines", () => {
        const lines = formatSelectionDetail(selection);
        expect(lines[0]).toBe("selected: g1, g2, g3, g4, g5, g6");
        expect(lines[1]).toBe("samples with every selected feature: 19 of 510");
        expect(lines[2]).toContain("P(I >= 19) = 5.1e-56");
    });
});

describe("error messages", () => {
    it("points at the offending cell for malformed uploads", () => {
        const message = formatApiError(400, {
            detail: "cell must be 0 or 1, got '2'",
            row: 3,
            column: 5,
        });
        expect(message).toBe("Row 3, column 5: cell must be 0 or 1, got '2'");
    });

    it("asks the user to tighten filters when the budget runs out", () => {
        const message = formatApiError(409, {
            detail: "concept enumeration exceeded its budget.",
            partial: false,
        });
        expect(message).toBe(
            "concept enumeration exceeded its budget. Tighten the filters and retry.",
        );
    });

    it("includes the cap for oversized uploads", () => {
        const message = formatApiError(413, {
            detail: "matrix exceeds the cell budget",
            cap: 1000000,
        });
        expect(message).toBe("matrix exceeds the cell budget (limit: 1000000 cells)");
    });

    it("explains an expired session", () => {
        expect(formatApiError(404, { detail: "unknown session" })).toBe(
            "Session not found or expired. Upload the matrix again.",
        );
    });

    it("passes plain 422 details through", () => {
        expect(formatApiError(422, { detail: "select at least one feature" })).toBe(
            "select at least one feature",
        );
    });

    it("flattens validation error lists", () => {
        const message = formatApiError(422, {
            detail: [
                { loc: ["body", "features"], msg: "Field required", type: "missing" },
            ],
        });
        expect(message).toBe("Field required");
    });

    it("copes with missing detail", () => {
        expect(formatApiError(500, {})).toBe("Request failed.");
    });
});
