import { defineConfig } from "vitest/config";

export default defineConfig({
    test: {
        environment: "node",
        include: ["tests/**/*.test.ts"],
        // the parity suite boots the backend service once per run
        testTimeout: 60000,
        hookTimeout: 60000,
    },
});
