import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["tests/**/*.test.ts"],
    testTimeout: 60_000,
    hookTimeout: 60_000,
    // integration tests spawn one Python service each; keep them serial
    fileParallelism: false,
  },
});
