import { describe, expect, it } from "vitest";

import {
    DEFAULT_FILTERS,
    FilterState,
    filterKey,
    filtersFromQuery,
    filtersToQuery,
    filtersToSearchParams,
} from "../src/state.js";

describe("URL round-trip", () => {
    it("serializes defaults to an empty query", () => {
        expect(filtersToQuery(DEFAULT_FILTERS)).toBe("");
    });

    it("round-trips a fully specified state", () => {
        const filters: FilterState = {
            minExtent: 60,
            maxExtent: 400,
            maxIntent: 3,
            pThreshold: "0.01",
        };
        const query = filtersToQuery(filters);
        expect(filtersFromQuery(query)).toEqual(filters);
    });

    it("round-trips through a real URLSearchParams", () => {
        const filters: FilterState = {
            minExtent: 2,
            maxExtent: null,
            maxIntent: 4,
            pThreshold: "1e-6",
        };
        const params = new URLSearchParams(filtersToQuery(filters));
        expect(filtersFromQuery(params)).toEqual(filters);
    });

    it("keeps the p threshold verbatim, ratios included", () => {
        const filters: FilterState = { ...DEFAULT_FILTERS, pThreshold: "1/20" };
        const roundTripped = filtersFromQuery(filtersToQuery(filters));
        expect(roundTripped.pThreshold).toBe("1/20");
    });

    it("falls back to defaults for malformed numbers", () => {
        const state = filtersFromQuery("min_extent=abc&max_extent=-5&max_intent=2.5");
        expect(state).toEqual(DEFAULT_FILTERS);
    });

    it("ignores unrelated parameters", () => {
        const state = filtersFromQuery("utm_source=x&min_extent=7");
        expect(state.minExtent).toBe(7);
        expect(state.maxExtent).toBeNull();
    });

    it("parses an empty query to the defaults", () => {
        expect(filtersFromQuery("")).toEqual(DEFAULT_FILTERS);
    });
});

describe("service parameters", () => {
    it("always carries min_extent and p_threshold", () => {
        const params = filtersToSearchParams(DEFAULT_FILTERS);
        expect(params.get("min_extent")).toBe("1");
        expect(params.get("p_threshold")).toBe("1");
        expect(params.get("max_extent")).toBeNull();
    });

    it("includes the caps when set", () => {
        const params = filtersToSearchParams({
            minExtent: 60,
            maxExtent: 400,
            maxIntent: 3,
            pThreshold: "0.05",
        });
        expect(params.get("max_extent")).toBe("400");
        expect(params.get("max_intent")).toBe("3");
    });
});

describe("filterKey", () => {
    it("is identical for equal states", () => {
        const a: FilterState = { minExtent: 60, maxExtent: 400, maxIntent: null, pThreshold: "1" };
        const b: FilterState = { minExtent: 60, maxExtent: 400, maxIntent: null, pThreshold: "1" };
        expect(filterKey(a)).toBe(filterKey(b));
    });

    it("distinguishes every field", () => {
        const base: FilterState = { minExtent: 1, maxExtent: 100, maxIntent: 2, pThreshold: "1" };
        const variants: FilterState[] = [
            { ...base, minExtent: 2 },
            { ...base, maxExtent: 101 },
            { ...base, maxIntent: 3 },
            { ...base, pThreshold: "0.5" },
        ];
        const keys = new Set([filterKey(base), ...variants.map(filterKey)]);
        expect(keys.size).toBe(5);
    });
});
