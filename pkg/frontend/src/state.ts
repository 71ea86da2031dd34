/**
 * Lattice filter state and its URL round-trip.
 *
 * The p threshold is kept as the verbatim string the user typed and
 * passed through to the service unchanged: the UI never parses or
 * compares probabilities itself.
 */

export interface FilterState {
    minExtent: number;
    maxExtent: number | null;
    maxIntent: number | null;
    pThreshold: string;
}

export const DEFAULT_FILTERS: FilterState = {
    minExtent: 1,
    maxExtent: null,
    maxIntent: null,
    pThreshold: "1",
};

function parsePositiveInt(raw: string | null): number | null {
    if (raw === null || raw.trim() === "") return null;
    const value = Number(raw);
    if (!Number.isInteger(value) || value < 0) return null;
    return value;
}

/** Service-side query parameters for a filter state (always complete). */
export function filtersToSearchParams(filters: FilterState): URLSearchParams {
    const params = new URLSearchParams();
    params.set("min_extent", String(filters.minExtent));
    if (filters.maxExtent !== null) params.set("max_extent", String(filters.maxExtent));
    if (filters.maxIntent !== null) params.set("max_intent", String(filters.maxIntent));
    params.set("p_threshold", filters.pThreshold);
    return params;
}

/** Address-bar query for a filter state; defaults are omitted so a fresh page has a clean URL. */
export function filtersToQuery(filters: FilterState): string {
    const params = new URLSearchParams();
    if (filters.minExtent !== DEFAULT_FILTERS.minExtent) {
        params.set("min_extent", String(filters.minExtent));
    }
    if (filters.maxExtent !== null) params.set("max_extent", String(filters.maxExtent));
    if (filters.maxIntent !== null) params.set("max_intent", String(filters.maxIntent));
    if (filters.pThreshold !== DEFAULT_FILTERS.pThreshold) {
        params.set("p_threshold", filters.pThreshold);
    }
    return params.toString();
}

/** Inverse of filtersToQuery; malformed or missing values fall back to the defaults. */
export function filtersFromQuery(query: string | URLSearchParams): FilterState {
    const params = typeof query === "string" ? new URLSearchParams(query) : query;
    const minExtent = parsePositiveInt(params.get("min_extent"));
    const pThreshold = params.get("p_threshold");
    return {
        minExtent: minExtent ?? DEFAULT_FILTERS.minExtent,
        maxExtent: parsePositiveInt(params.get("max_extent")),
        maxIntent: parsePositiveInt(params.get("max_intent")),
        pThreshold: pThreshold === null || pThreshold.trim() === ""
            ? DEFAULT_FILTERS.pThreshold
            : pThreshold,
    };
}

/** Canonical identity of a filter state, used to deduplicate in-flight fetches. */
export function filterKey(filters: FilterState): string {
    return filtersToSearchParams(filters).toString();
}
