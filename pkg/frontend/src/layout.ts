/**
 * Deterministic lattice layout.  Vertical position and node radius
 * both grow with extent size (general concepts sit high and large,
 * specific ones low and small); horizontal positions come from a
 * fixed number of force iterations with edge attraction, same-layer
 * repulsion, and a weak centering pull.  No randomness: the same
 * nodes and edges always produce the same picture.
 */

export interface LayoutNode {
    id: number;
    extentSize: number;
}

export interface PlacedNode {
    id: number;
    x: number;
    y: number;
    r: number;
}

const PAD_SIDE = 40;
const PAD_TOP = 30;
const PAD_BOTTOM = 30;
const MIN_RADIUS = 6;
const MAX_RADIUS = 24;
const ITERATIONS = 180;
const SPRING = 0.04;
const CENTERING = 0.006;
const SEPARATION = 12;

export function computeLayout(
    nodes: LayoutNode[],
    edges: [number, number][],
    width: number,
    height: number,
): PlacedNode[] {
    if (nodes.length === 0) return [];

    const maxExtent = Math.max(1, ...nodes.map((node) => node.extentSize));
    const innerWidth = Math.max(1, width - 2 * PAD_SIDE);
    const innerHeight = Math.max(1, height - PAD_TOP - PAD_BOTTOM);

    const xs: number[] = [];
    const ys: number[] = [];
    const rs: number[] = [];
    nodes.forEach((node, index) => {
        const share = node.extentSize / maxExtent;
        xs.push(PAD_SIDE + ((index + 0.5) * innerWidth) / nodes.length);
        ys.push(height - PAD_BOTTOM - share * innerHeight);
        rs.push(MIN_RADIUS + (MAX_RADIUS - MIN_RADIUS) * Math.sqrt(share));
    });

    const indexOf = new Map<number, number>();
    nodes.forEach((node, index) => indexOf.set(node.id, index));
    const springPairs: [number, number][] = [];
    for (const [a, b] of edges) {
        const ia = indexOf.get(a);
        const ib = indexOf.get(b);
        if (ia !== undefined && ib !== undefined) springPairs.push([ia, ib]);
    }

    for (let step = 0; step < ITERATIONS; step++) {
        for (const [ia, ib] of springPairs) {
            const pull = SPRING * (xs[ib] - xs[ia]);
            xs[ia] += pull;
            xs[ib] -= pull;
        }
        for (let i = 0; i < nodes.length; i++) {
            for (let j = i + 1; j < nodes.length; j++) {
                const minGap = rs[i] + rs[j] + SEPARATION;
                if (Math.abs(ys[i] - ys[j]) >= minGap) continue;
                const dx = xs[j] - xs[i];
                if (Math.abs(dx) >= minGap) continue;
                // overlapping neighbors push apart; ties break toward input order
                const direction = dx === 0 ? 1 : Math.sign(dx);
                const push = 0.5 * 0.3 * (minGap - Math.abs(dx)) * direction;
                xs[i] -= push;
                xs[j] += push;
            }
        }
        for (let i = 0; i < nodes.length; i++) {
            const centered = xs[i] + (width / 2 - xs[i]) * CENTERING;
            xs[i] = Math.min(width - PAD_SIDE, Math.max(PAD_SIDE, centered));
        }
    }

    return nodes.map((node, index) => ({
        id: node.id,
        x: xs[index],
        y: ys[index],
        r: rs[index],
    }));
}
