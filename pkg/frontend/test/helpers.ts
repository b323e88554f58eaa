import { readFileSync } from "node:fs";

import type { Transport } from "../src/api.js";

/** Load a pinned API response captured from the real service
 * (scripts/capture_ui_fixtures.py in the repo root regenerates them). */
export function loadFixture<T>(name: string): T {
  const url = new URL(`../../test/fixtures/${name}`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf-8")) as T;
}

export interface RecordedCall {
  url: string;
  body: unknown;
}

export interface FakeResponse {
  status: number;
  payload: unknown;
}

/** Transport double: routes by URL suffix, records every call. */
export function fakeTransport(
  routes: Record<string, (body: unknown) => FakeResponse | Promise<FakeResponse>>,
): { transport: Transport; calls: RecordedCall[] } {
  const calls: RecordedCall[] = [];
  const transport: Transport = async (url, init) => {
    const body = JSON.parse(init.body) as unknown;
    calls.push({ url, body });
    const route = Object.keys(routes).find((suffix) => url.endsWith(suffix));
    if (!route) throw new Error(`no fake route for ${url}`);
    const { status, payload } = await routes[route](body);
    return { status, json: async () => payload };
  };
  return { transport, calls };
}

export function deferred<T>(): { promise: Promise<T>; resolve: (value: T) => void } {
  let resolve!: (value: T) => void;
  const promise = new Promise<T>((r) => {
    resolve = r;
  });
  return { promise, resolve };
}

/** Let settled promise chains run without waiting on still-pending ones. */
export async function tick(times = 4): Promise<void> {
  for (let i = 0; i < times; i++) {
    await new Promise((r) => setImmediate(r));
  }
}

export const GOOD_CSV = "label,value\nalpha,10\nbeta,4\ngamma,1\n";
