/** Wire types for the dubois HTTP API (see docs/api.md in the repo root). */

export interface Category {
  label: string;
  value: number;
}

export interface Dataset {
  id: string;
  categories: Category[];
}

export type ChartKind = "standard" | "wrapped";
export type BarOrder = "given" | "sorted" | "shuffled";

export interface LayoutRequest {
  dataset: Dataset;
  chart_kind: ChartKind;
  t1?: number;
  t2?: number;
  plot_width_px?: number;
  plot_height_px?: number;
  margins?: { top: number; right: number; bottom: number; left: number };
  tick_count?: number;
  bar_order?: BarOrder;
  shuffle_seed?: number;
}

export interface SegmentWire {
  category: string;
  index: number;
  x_px: number;
  y_px: number;
  width_px: number;
  height_px: number;
  value_units: number;
  direction: "up" | "down";
}

export interface ConnectorWire {
  category: string;
  index: number;
  x_px: number;
  y_px: number;
  width_px: number;
  height_px: number;
}

export interface TickWire {
  value_units: number;
  y_px: number;
  label: string;
}

export interface LabelWire {
  category: string;
  value: number;
  full_segments: number;
  tail_value: number;
  x_px: number;
  y_px: number;
}

export interface LayoutWire {
  chart_kind: ChartKind;
  axis_max: number;
  wrap_unit: number | null;
  bar_width_px: number;
  size: { width_px: number; height_px: number };
  plot_box: { x_px: number; y_px: number; width_px: number; height_px: number };
  segments: SegmentWire[];
  connectors: ConnectorWire[];
  ticks: TickWire[];
  labels: LabelWire[];
}

export interface ProfileWire {
  entropy_bits: number;
  normalized_entropy: number;
  q1: number;
  median: number;
  q3: number;
  h_spread: number | "inf";
  entropy_bin: string;
  hspread_bin: string;
  quartile_method: string;
}

export interface RecommendationWire {
  use_wrapped: boolean;
  reasons: string[];
  entropy_cutoff: number;
  hspread_cutoff: number;
}

export interface ProfileResponse {
  id: string;
  profile: ProfileWire;
  recommendation: RecommendationWire;
}

export interface ApiErrorBody {
  code: string;
  message: string;
}
