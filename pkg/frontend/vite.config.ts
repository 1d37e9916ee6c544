import { defineConfig } from "vitest/config";

export default defineConfig({
  server: {
    proxy: {
      // dev mode talks to a locally running `famex serve`
      "/api": "http://127.0.0.1:8080",
    },
  },
  build: {
    outDir: "dist",
  },
  test: {
    environment: "jsdom",
    include: ["tests/**/*.test.ts"],
  },
});
