import assert from "node:assert/strict";
import { test } from "node:test";
import { defaultT1, formatValue, niceNumberNear, t1Range } from "../src/values.js";
test("t1 slider range is max/20 to 1.1*max", () => {
    assert.deepEqual(t1Range(43000), { min: 2150, max: 47300.00000000001 });
});
test("default t1 is a round number near a quarter of the max", () => {
    assert.equal(defaultT1(43000), 10000); // 43000/4 = 10750 -> 10000
    assert.equal(defaultT1(122), 25); // 30.5 -> 25
    assert.equal(defaultT1(1000), 250);
});
test("nice numbers snap to 1/2/2.5/5 times a power of ten", () => {
    assert.equal(niceNumberNear(2.3), 2.5);
    assert.equal(niceNumberNear(61), 50);
    assert.equal(niceNumberNear(90), 100);
    assert.equal(niceNumberNear(0.3), 0.25);
});
test("default t1 stays inside the slider range", () => {
    for (const max of [1, 7, 43, 122, 999, 43000, 1e6]) {
        const t1 = defaultT1(max);
        const range = t1Range(max);
        assert.ok(t1 >= range.min && t1 <= range.max, `max=${max}`);
    }
});
test("value formatting", () => {
    assert.equal(formatValue(8500), "8,500");
    assert.equal(formatValue(500), "500");
    assert.equal(formatValue(2.345), "2.35");
});
