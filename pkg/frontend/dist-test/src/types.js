/** Wire types for the dubois HTTP API (see docs/api.md in the repo root). */
export {};
