import assert from "node:assert/strict";
import { test } from "node:test";

import { ApiClient } from "../src/api.js";
import { ManualScheduler } from "../src/debounce.js";
import { badgeText, UiStore } from "../src/store.js";
import type { LayoutWire, ProfileResponse } from "../src/types.js";
import { deferred, fakeTransport, GOOD_CSV, loadFixture, tick, type FakeResponse } from "./helpers.js";

const layoutFixture = loadFixture<LayoutWire>("layout_8500_t1_1000.json");
const profileAds = loadFixture<ProfileResponse>("profile_ads.json");
const profileUniform = loadFixture<ProfileResponse>("profile_uniform.json");
const profileSpike = loadFixture<ProfileResponse>("profile_spike.json");

function makeStore(
  layoutRoute: (body: unknown) => FakeResponse | Promise<FakeResponse>,
  profilePayload: ProfileResponse = profileAds,
) {
  const { transport, calls } = fakeTransport({
    "/api/layout": layoutRoute,
    "/api/profile": () => ({ status: 200, payload: profilePayload }),
  });
  const clock = new ManualScheduler();
  const store = new UiStore(new ApiClient("", transport), { scheduler: clock, debounceMs: 100 });
  return { store, calls, clock };
}

const okLayout = () => ({ status: 200, payload: layoutFixture });

function layoutCalls(calls: { url: string }[]): number {
  return calls.filter((c) => c.url.endsWith("/api/layout")).length;
}

test("a burst of slider changes issues exactly one debounced layout request", async () => {
  const { store, calls, clock } = makeStore(okLayout);
  store.setViewMode("wrapped");
  store.loadDatasetCsv(GOOD_CSV);
  await store.settled();
  const before = layoutCalls(calls);

  for (const v of [3, 4, 5, 6, 7]) store.setT1(v);
  assert.equal(layoutCalls(calls), before, "nothing fires before the debounce interval");
  clock.fireAll();
  await store.settled();
  assert.equal(layoutCalls(calls), before + 1, "exactly one request after the interval");
});

test("stale layout responses are discarded, never rendered", async () => {
  const first = deferred<FakeResponse>();
  const second = deferred<FakeResponse>();
  const pending = [first, second];
  const { store, clock } = makeStore(() => {
    const next = pending.shift();
    return next ? next.promise : okLayout();
  });
  store.setViewMode("wrapped");
  store.loadDatasetCsv(GOOD_CSV); // layout request 1 (deferred: first)
  store.setT1(5);
  clock.fireAll(); // layout request 2 (deferred: second)

  const newer = { ...layoutFixture, axis_max: 222 };
  const older = { ...layoutFixture, axis_max: 111 };
  second.resolve({ status: 200, payload: newer });
  await tick(); // first is still pending, so wait on microtasks, not settled()
  assert.equal(store.state.wrappedLayout?.axis_max, 222);

  first.resolve({ status: 200, payload: older }); // stale response arrives late
  await store.settled();
  assert.equal(store.state.wrappedLayout?.axis_max, 222, "stale response must not overwrite newer state");
});

test("recommendation badge matches /api/profile for three fixture datasets", async () => {
  for (const fixture of [profileAds, profileUniform, profileSpike]) {
    const { store } = makeStore(okLayout, fixture);
    store.loadDatasetCsv(GOOD_CSV);
    await store.settled();
    assert.deepEqual(store.state.profile, fixture);
    const expected = fixture.recommendation.use_wrapped ? "wrapped" : "standard";
    assert.equal(badgeText(store.state.profile), expected, fixture.id);
  }
});

test("layout_overflow surfaces a banner suggesting a larger t1 and keeps the last chart", async () => {
  let fail = false;
  const { store, clock } = makeStore(() =>
    fail
      ? { status: 400, payload: { code: "layout_overflow", message: "too many wraps." } }
      : okLayout(),
  );
  store.setViewMode("wrapped");
  store.loadDatasetCsv(GOOD_CSV);
  await store.settled();
  assert.ok(store.state.wrappedLayout);

  fail = true;
  store.setT1(3);
  clock.fireAll();
  await store.settled();
  assert.match(store.state.banner ?? "", /larger t1/);
  assert.equal(store.state.wrappedLayout?.axis_max, layoutFixture.axis_max, "previous chart retained");
});

test("invalid CSV shows an inline error and retains all prior state", async () => {
  const { store, calls } = makeStore(okLayout);
  store.loadDatasetCsv(GOOD_CSV, "good");
  await store.settled();
  const requestsBefore = calls.length;
  const layoutBefore = store.state.wrappedLayout;

  store.loadDatasetCsv("label,value\nonly-one,3\n", "bad");
  await store.settled();
  assert.match(store.state.datasetError ?? "", /at least 2/);
  assert.equal(store.state.dataset?.id, "good");
  assert.equal(store.state.wrappedLayout, layoutBefore);
  assert.equal(calls.length, requestsBefore, "no requests issued for an invalid dataset");
});

test("loading a dataset sets the documented slider defaults", async () => {
  const { store } = makeStore(okLayout);
  store.loadDatasetCsv("label,value\nbig,43000\nsmall,78\n");
  await store.settled();
  assert.equal(store.state.t1, 10000); // round number near 43000/4
  assert.ok(Math.abs(store.state.t1Min - 2150) < 1e-9);
  assert.ok(Math.abs(store.state.t1Max - 47300) < 1e-6);
  assert.equal(store.state.t2, 1);
});

test("side-by-side mode requests both chart kinds", async () => {
  const kinds: string[] = [];
  const { store } = makeStore((body) => {
    kinds.push((body as { chart_kind: string }).chart_kind);
    return okLayout();
  });
  store.setViewMode("side-by-side");
  store.loadDatasetCsv(GOOD_CSV);
  await store.settled();
  assert.deepEqual([...kinds].sort(), ["standard", "wrapped"]);
  assert.ok(store.state.standardLayout && store.state.wrappedLayout);
});

test("pending flag tracks in-flight requests", async () => {
  const gate = deferred<FakeResponse>();
  const { store } = makeStore(() => gate.promise);
  store.setViewMode("wrapped");
  store.loadDatasetCsv(GOOD_CSV);
  assert.equal(store.state.pending, true);
  gate.resolve(okLayout());
  await store.settled();
  assert.equal(store.state.pending, false);
});
