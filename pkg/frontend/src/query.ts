/**
 * Request coordination for the lattice view: concurrent queries with
 * the same key share one fetch, and a response that arrives after a
 * newer query has been issued is reported as stale instead of being
 * rendered over fresher data.
 */
export class QueryScheduler<T> {
    private seq = 0;
    private inflight = new Map<string, Promise<T>>();

    /** Resolves with the response, or null if a newer run() superseded this one. */
    async run(key: string, fetcher: () => Promise<T>): Promise<T | null> {
        const ticket = ++this.seq;
        let pending = this.inflight.get(key);
        if (pending === undefined) {
            pending = fetcher().finally(() => {
                this.inflight.delete(key);
            });
            this.inflight.set(key, pending);
        }
        try {
            const result = await pending;
            return ticket === this.seq ? result : null;
        } catch (error) {
            // a stale failure is not worth surfacing over fresher data
            if (ticket === this.seq) throw error;
            return null;
        }
    }

    pendingCount(): number {
        return this.inflight.size;
    }
}
