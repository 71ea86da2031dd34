/**
 * SVG markup for the exact distribution series returned by the
 * service.  The vertical axis is log10(p), floored at 1e-60 like the
 * node coloring; the series values themselves are never recomputed,
 * only placed.
 */

import { DistributionResponse, ProbabilityJson } from "./api.js";
import { LOG10_FLOOR } from "./color.js";

const MARGIN = { top: 14, right: 16, bottom: 30, left: 48 };

function displayLog10(p: ProbabilityJson): number {
    // an exact zero has no log10; pin it to the chart floor
    return p.log10 === null ? LOG10_FLOOR : Math.max(LOG10_FLOOR, p.log10);
}

function round1(value: number): number {
    return Math.round(value * 10) / 10;
}

export function distributionChartSvg(
    dist: DistributionResponse,
    observed: number | null,
    width = 560,
    height = 230,
): string {
    const [lo, hi] = dist.support;
    const innerWidth = width - MARGIN.left - MARGIN.right;
    const innerHeight = height - MARGIN.top - MARGIN.bottom;
    const span = Math.max(1, hi - lo);

    const logs = dist.series.flatMap((point) => [
        displayLog10(point.pmf),
        displayLog10(point.tail),
    ]);
    const floor = Math.max(LOG10_FLOOR, Math.min(-1, ...logs));

    const x = (i: number): number => MARGIN.left + ((i - lo) / span) * innerWidth;
    const y = (log: number): number => {
        const clamped = Math.min(0, Math.max(floor, log));
        return MARGIN.top + (clamped / floor) * innerHeight;
    };

    const toPoints = (pick: (p: { pmf: ProbabilityJson; tail: ProbabilityJson }) => ProbabilityJson): string =>
        dist.series
            .map((point) => `${round1(x(point.i))},${round1(y(displayLog10(pick(point))))}`)
            .join(" ");

    const parts: string[] = [];
    parts.push(
        `<svg class="distribution-chart" viewBox="0 0 ${width} ${height}" ` +
            `width="${width}" height="${height}" xmlns="http://www.w3.org/2000/svg">`,
    );
    const bottom = height - MARGIN.bottom;
    const right = width - MARGIN.right;
    parts.push(
        `<line class="axis" x1="${MARGIN.left}" y1="${bottom}" x2="${right}" y2="${bottom}"/>`,
        `<line class="axis" x1="${MARGIN.left}" y1="${MARGIN.top}" x2="${MARGIN.left}" y2="${bottom}"/>`,
    );
    parts.push(
        `<text class="axis-label" x="${MARGIN.left}" y="${height - 8}">${lo}</text>`,
        `<text class="axis-label" x="${right}" y="${height - 8}" text-anchor="end">${hi}</text>`,
        `<text class="axis-label" x="${MARGIN.left - 6}" y="${MARGIN.top + 4}" text-anchor="end">1e0</text>`,
        `<text class="axis-label" x="${MARGIN.left - 6}" y="${bottom}" text-anchor="end">1e${floor}</text>`,
    );
    if (observed !== null && observed >= lo && observed <= hi) {
        const markerX = round1(x(observed));
        parts.push(
            `<line class="observed-marker" x1="${markerX}" y1="${MARGIN.top}" ` +
                `x2="${markerX}" y2="${bottom}"/>`,
            `<text class="axis-label" x="${markerX}" y="${MARGIN.top - 3}" ` +
                `text-anchor="middle">i=${observed}</text>`,
        );
    }
    parts.push(`<polyline class="series-pmf" fill="none" points="${toPoints((p) => p.pmf)}"/>`);
    parts.push(`<polyline class="series-tail" fill="none" points="${toPoints((p) => p.tail)}"/>`);
    parts.push(
        `<text class="legend legend-pmf" x="${right}" y="${MARGIN.top + 12}" text-anchor="end">pmf</text>`,
        `<text class="legend legend-tail" x="${right}" y="${MARGIN.top + 26}" text-anchor="end">tail</text>`,
    );
    parts.push("</svg>");
    return parts.join("");
}
