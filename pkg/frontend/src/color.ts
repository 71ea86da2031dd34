/**
 * Significance coloring for lattice nodes: greener means a smaller
 * tail probability, pinker means a larger one.  The scale runs over
 * log10(p) clamped to [-60, 0]; everything at or beyond 1e-60 gets
 * the full green.
 */

export const LOG10_FLOOR = -60;

const PINK: [number, number, number] = [236, 112, 170];
const GREEN: [number, number, number] = [24, 158, 86];

/** 0 at p = 1, 1 at p <= 1e-60; null log10 (an exact zero) saturates. */
export function significanceScale(log10p: number | null): number {
    if (log10p === null) return 1;
    const clamped = Math.min(0, Math.max(LOG10_FLOOR, log10p));
    return (0 - clamped) / -LOG10_FLOOR;
}

export function significanceColor(log10p: number | null): string {
    const t = significanceScale(log10p);
    const channel = (index: number): number =>
        Math.round(PINK[index] + (GREEN[index] - PINK[index]) * t);
    return `rgb(${channel(0)}, ${channel(1)}, ${channel(2)})`;
}
