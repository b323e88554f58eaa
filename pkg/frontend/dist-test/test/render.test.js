import assert from "node:assert/strict";
import { test } from "node:test";
import { layoutToSvg, tooltipText, wrapTooltip } from "../src/render.js";
import { loadFixture } from "./helpers.js";
const layout = loadFixture("layout_8500_t1_1000.json");
test("tooltip for the 8500 bar at t1=1000 reads 8 wraps + 500", () => {
    const entry = layout.labels.find((l) => l.category === "buttigieg");
    assert.equal(wrapTooltip(entry), "8 wraps + 500");
    assert.equal(tooltipText(entry, "wrapped"), "buttigieg: 8,500 (8 wraps + 500)");
});
test("unwrapped bars tooltip without wrap text", () => {
    const entry = layout.labels.find((l) => l.category === "gabbard");
    assert.equal(wrapTooltip(entry), "no wraps");
    assert.equal(tooltipText(entry, "standard"), "gabbard: 500");
});
test("svg carries one rect per segment and connector, grouped with titles", () => {
    const svg = layoutToSvg(layout);
    assert.equal(count(svg, 'class="seg"'), layout.segments.length);
    assert.equal(count(svg, 'class="conn"'), layout.connectors.length);
    assert.equal(count(svg, "<title>"), layout.labels.length);
    assert.ok(svg.includes("<title>buttigieg: 8,500 (8 wraps + 500)</title>"));
});
test("svg renders every tick with its label", () => {
    const svg = layoutToSvg(layout);
    for (const tick of layout.ticks) {
        assert.ok(svg.includes(`>${tick.label}</text>`), `missing tick ${tick.label}`);
    }
});
test("category text is escaped", () => {
    const hostile = {
        ...layout,
        segments: layout.segments.map((s) => ({ ...s, category: s.category === "buttigieg" ? "<evil>&co" : s.category })),
        connectors: [],
        labels: layout.labels.map((l) => (l.category === "buttigieg" ? { ...l, category: "<evil>&co" } : l)),
    };
    const svg = layoutToSvg(hostile);
    assert.ok(!svg.includes("<evil>"));
    assert.ok(svg.includes("&lt;evil&gt;&amp;co"));
});
test("rendering is deterministic", () => {
    assert.equal(layoutToSvg(layout), layoutToSvg(layout));
});
function count(haystack, needle) {
    return haystack.split(needle).length - 1;
}
