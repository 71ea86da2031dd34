import { describe, expect, it } from "vitest";

import { QueryScheduler } from "../src/query.js";

function deferred<T>() {
    let resolve!: (value: T) => void;
    let reject!: (reason: unknown) => void;
    const promise = new Promise<T>((res, rej) => {
        resolve = res;
        reject = rej;
    });
    return { promise, resolve, reject };
}

describe("QueryScheduler", () => {
    it("shares one fetch between concurrent runs with the same key", async () => {
        const scheduler = new QueryScheduler<string>();
        const gate = deferred<string>();
        let calls = 0;
        const fetcher = () => {
            calls += 1;
            return gate.promise;
        };
        const first = scheduler.run("k", fetcher);
        const second = scheduler.run("k", fetcher);
        gate.resolve("data");
        // the newer run wins; the older one reports stale
        expect(await second).toBe("data");
        expect(await first).toBeNull();
        expect(calls).toBe(1);
    });

    it("drops a response that arrives after a newer query", async () => {
        const scheduler = new QueryScheduler<string>();
        const slow = deferred<string>();
        const stale = scheduler.run("old", () => slow.promise);
        const fresh = await scheduler.run("new", () => Promise.resolve("fresh"));
        expect(fresh).toBe("fresh");
        slow.resolve("too late");
        expect(await stale).toBeNull();
    });

    it("propagates a failure from the current query", async () => {
        const scheduler = new QueryScheduler<string>();
        await expect(
            scheduler.run("k", () => Promise.reject(new Error("boom"))),
        ).rejects.toThrow("boom");
    });

    it("swallows a failure from a superseded query", async () => {
        const scheduler = new QueryScheduler<string>();
        const slow = deferred<string>();
        const stale = scheduler.run("old", () => slow.promise);
        await scheduler.run("new", () => Promise.resolve("fresh"));
        slow.reject(new Error("stale failure"));
        expect(await stale).toBeNull();
    });

    it("forgets settled fetches so the next run is fresh", async () => {
        const scheduler = new QueryScheduler<number>();
        let calls = 0;
        const fetcher = () => {
            calls += 1;
            return Promise.resolve(calls);
        };
        expect(await scheduler.run("k", fetcher)).toBe(1);
        expect(scheduler.pendingCount()).toBe(0);
        expect(await scheduler.run("k", fetcher)).toBe(2);
        expect(calls).toBe(2);
    });
});
