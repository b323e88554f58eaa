import { formatValue } from "./values.js";
import type { LabelWire, LayoutWire } from "./types.js";

export interface RenderOptions {
  barFill: string;
  background: string;
  gridColor: string;
  textColor: string;
  fontFamily: string;
  fontSizePx: number;
}

export const DEFAULT_RENDER: RenderOptions = {
  barFill: "#AD2E24",
  background: "#E9DFCE",
  gridColor: "#B8AE9C",
  textColor: "#3A3226",
  fontFamily: "Georgia, serif",
  fontSizePx: 12,
};

/** Hover text for one bar's wrap decomposition, e.g. "8 wraps + 500". */
export function wrapTooltip(entry: LabelWire): string {
  if (entry.full_segments <= 0) return "no wraps";
  const noun = entry.full_segments === 1 ? "wrap" : "wraps";
  return `${entry.full_segments} ${noun} + ${formatValue(entry.tail_value)}`;
}

export function tooltipText(entry: LabelWire, chartKind: "standard" | "wrapped"): string {
  const base = `${entry.category}: ${formatValue(entry.value)}`;
  return chartKind === "wrapped" ? `${base} (${wrapTooltip(entry)})` : base;
}

const f = (x: number): string => x.toFixed(2);

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** Build SVG markup from a layout response. Pure string assembly: all
 * geometry arrives precomputed from the server. Each category becomes a
 * <g> whose <title> carries the wrap-count tooltip. */
export function layoutToSvg(layout: LayoutWire, opts: RenderOptions = DEFAULT_RENDER): string {
  const { size, plot_box: box } = layout;
  const out: string[] = [];
  out.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${f(size.width_px)} ${f(size.height_px)}" ` +
      `width="${f(size.width_px)}" height="${f(size.height_px)}">`,
  );
  out.push(`<rect class="background" x="0" y="0" width="${f(size.width_px)}" height="${f(size.height_px)}" fill="${opts.background}"/>`);

  for (const tick of layout.ticks) {
    out.push(
      `<line class="grid" x1="${f(box.x_px)}" y1="${f(tick.y_px)}" x2="${f(box.x_px + box.width_px)}" ` +
        `y2="${f(tick.y_px)}" stroke="${opts.gridColor}" stroke-width="1"/>`,
    );
  }

  for (const entry of layout.labels) {
    const tip = tooltipText(entry, layout.chart_kind);
    out.push(`<g class="bar" data-category="${esc(entry.category)}">`);
    out.push(`<title>${esc(tip)}</title>`);
    for (const seg of layout.segments) {
      if (seg.category !== entry.category) continue;
      out.push(
        `<rect class="seg" x="${f(seg.x_px)}" y="${f(seg.y_px)}" width="${f(seg.width_px)}" ` +
          `height="${f(seg.height_px)}" fill="${opts.barFill}"/>`,
      );
    }
    for (const conn of layout.connectors) {
      if (conn.category !== entry.category) continue;
      out.push(
        `<rect class="conn" x="${f(conn.x_px)}" y="${f(conn.y_px)}" width="${f(conn.width_px)}" ` +
          `height="${f(conn.height_px)}" fill="${opts.barFill}"/>`,
      );
    }
    out.push("</g>");
  }

  const font = `font-family="${esc(opts.fontFamily)}" font-size="${f(opts.fontSizePx)}" fill="${opts.textColor}"`;
  for (const tick of layout.ticks) {
    out.push(
      `<text class="tick" x="${f(box.x_px - 6)}" y="${f(tick.y_px + opts.fontSizePx / 3)}" ` +
        `text-anchor="end" ${font}>${esc(tick.label)}</text>`,
    );
  }
  for (const entry of layout.labels) {
    out.push(
      `<text class="label" x="${f(entry.x_px)}" y="${f(entry.y_px)}" text-anchor="middle" ${font}>` +
        `${esc(entry.category)}</text>`,
    );
  }

  out.push("</svg>");
  return out.join("\n");
}
