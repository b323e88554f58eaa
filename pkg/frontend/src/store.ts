import { ApiClient, ApiError } from "./api.js";
import { Debouncer, Scheduler, realScheduler } from "./debounce.js";
import { parseDatasetCsv } from "./csv.js";
import { defaultT1, maxValue, t1Range } from "./values.js";
import type { Dataset, LayoutRequest, LayoutWire, ProfileResponse } from "./types.js";

export type ViewMode = "standard" | "wrapped" | "side-by-side";

export interface UiState {
  dataset: Dataset | null;
  datasetError: string | null;
  t1: number;
  t1Min: number;
  t1Max: number;
  t2: number;
  viewMode: ViewMode;
  profile: ProfileResponse | null;
  standardLayout: LayoutWire | null;
  wrappedLayout: LayoutWire | null;
  pending: boolean;
  banner: string | null;
}

export interface StoreOptions {
  plotWidthPx?: number;
  plotHeightPx?: number;
  debounceMs?: number;
  scheduler?: Scheduler;
}

export function badgeText(profile: ProfileResponse | null): string | null {
  if (!profile) return null;
  return profile.recommendation.use_wrapped ? "wrapped" : "standard";
}

/** All UI state and server traffic. The store performs no layout math:
 * every rendered rectangle originates from an /api/layout response.
 *
 * Slider changes are debounced; each chart slot (standard / wrapped) keeps a
 * monotone request sequence number and responses that arrive for a stale
 * sequence are dropped, so the rendered chart always corresponds to the most
 * recent completed response. */
export class UiStore {
  state: UiState = {
    dataset: null,
    datasetError: null,
    t1: 1,
    t1Min: 0.1,
    t1Max: 10,
    t2: 1,
    viewMode: "side-by-side",
    profile: null,
    standardLayout: null,
    wrappedLayout: null,
    pending: false,
    banner: null,
  };

  private readonly listeners = new Set<(state: UiState) => void>();
  private readonly debouncer: Debouncer;
  private readonly plotWidthPx: number;
  private readonly plotHeightPx: number;
  private readonly seq = { standard: 0, wrapped: 0, profile: 0 };
  private inflight = 0;
  private readonly tracked = new Set<Promise<unknown>>();

  constructor(
    private readonly client: ApiClient,
    options: StoreOptions = {},
  ) {
    this.plotWidthPx = options.plotWidthPx ?? 640;
    this.plotHeightPx = options.plotHeightPx ?? 360;
    this.debouncer = new Debouncer(options.debounceMs ?? 100, options.scheduler ?? realScheduler);
  }

  subscribe(listener: (state: UiState) => void): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private notify(): void {
    for (const fn of this.listeners) fn(this.state);
  }

  private patch(partial: Partial<UiState>): void {
    this.state = { ...this.state, ...partial };
    this.notify();
  }

  /** Await every request currently in flight (test helper). */
  async settled(): Promise<void> {
    while (this.tracked.size > 0) {
      await Promise.allSettled([...this.tracked]);
    }
  }

  private track(p: Promise<unknown>): void {
    this.tracked.add(p);
    void p.finally(() => this.tracked.delete(p));
  }

  /** Parse and adopt a pasted or uploaded CSV. On a parse error the message
   * is surfaced inline and every bit of prior state is retained. */
  loadDatasetCsv(text: string, id = "pasted"): void {
    let dataset: Dataset;
    try {
      dataset = parseDatasetCsv(text, id);
    } catch (err) {
      this.patch({ datasetError: (err as Error).message });
      return;
    }
    const max = maxValue(dataset.categories.map((c) => c.value));
    const range = t1Range(max);
    this.patch({
      dataset,
      datasetError: null,
      banner: null,
      profile: null,
      t1: defaultT1(max),
      t1Min: range.min,
      t1Max: range.max,
    });
    this.requestProfile(dataset);
    this.debouncer.flush(() => this.refreshLayouts());
  }

  setT1(value: number): void {
    if (!this.state.dataset) return;
    const t1 = Math.min(Math.max(value, this.state.t1Min), this.state.t1Max);
    this.patch({ t1 });
    this.debouncer.call(() => this.refreshLayouts());
  }

  setT2(value: number): void {
    if (!this.state.dataset) return;
    const t2 = Math.min(Math.max(value, 0.05), 1);
    this.patch({ t2 });
    this.debouncer.call(() => this.refreshLayouts());
  }

  setViewMode(mode: ViewMode): void {
    this.patch({ viewMode: mode });
    this.debouncer.flush(() => this.refreshLayouts());
  }

  private neededSlots(): ("standard" | "wrapped")[] {
    switch (this.state.viewMode) {
      case "standard":
        return ["standard"];
      case "wrapped":
        return ["wrapped"];
      case "side-by-side":
        return ["standard", "wrapped"];
    }
  }

  private refreshLayouts(): void {
    const dataset = this.state.dataset;
    if (!dataset) return;
    for (const slot of this.neededSlots()) {
      const request: LayoutRequest = {
        dataset,
        chart_kind: slot,
        plot_width_px: this.plotWidthPx,
        plot_height_px: this.plotHeightPx,
      };
      if (slot === "wrapped") {
        request.t1 = this.state.t1;
        request.t2 = this.state.t2;
      }
      const mySeq = ++this.seq[slot];
      this.inflight++;
      this.patch({ pending: true });
      this.track(
        this.client
          .layout(request)
          .then((layout) => {
            if (mySeq !== this.seq[slot]) return; // superseded: never render stale geometry
            if (slot === "standard") this.patch({ standardLayout: layout, banner: null });
            else this.patch({ wrappedLayout: layout, banner: null });
          })
          .catch((err) => {
            if (mySeq !== this.seq[slot]) return;
            this.patch({ banner: describeLayoutError(err) });
          })
          .finally(() => {
            this.inflight--;
            if (this.inflight === 0) this.patch({ pending: false });
          }),
      );
    }
  }

  private requestProfile(dataset: Dataset): void {
    const mySeq = ++this.seq.profile;
    this.track(
      this.client
        .profile(dataset)
        .then((profile) => {
          if (mySeq !== this.seq.profile) return;
          this.patch({ profile });
        })
        .catch((err) => {
          if (mySeq !== this.seq.profile) return;
          this.patch({ banner: (err as Error).message });
        }),
    );
  }
}

function describeLayoutError(err: unknown): string {
  if (err instanceof ApiError && err.code === "layout_overflow") {
    return `Too many wraps to fit: ${err.message} Try a larger t1.`;
  }
  return (err as Error).message ?? String(err);
}
