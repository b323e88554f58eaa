import { ApiError } from "./api.js";
import { Debouncer, realScheduler } from "./debounce.js";
import { parseDatasetCsv } from "./csv.js";
import { defaultT1, maxValue, t1Range } from "./values.js";
export function badgeText(profile) {
    if (!profile)
        return null;
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
    client;
    state = {
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
    listeners = new Set();
    debouncer;
    plotWidthPx;
    plotHeightPx;
    seq = { standard: 0, wrapped: 0, profile: 0 };
    inflight = 0;
    tracked = new Set();
    constructor(client, options = {}) {
        this.client = client;
        this.plotWidthPx = options.plotWidthPx ?? 640;
        this.plotHeightPx = options.plotHeightPx ?? 360;
        this.debouncer = new Debouncer(options.debounceMs ?? 100, options.scheduler ?? realScheduler);
    }
    subscribe(listener) {
        this.listeners.add(listener);
        return () => this.listeners.delete(listener);
    }
    notify() {
        for (const fn of this.listeners)
            fn(this.state);
    }
    patch(partial) {
        this.state = { ...this.state, ...partial };
        this.notify();
    }
    /** Await every request currently in flight (test helper). */
    async settled() {
        while (this.tracked.size > 0) {
            await Promise.allSettled([...this.tracked]);
        }
    }
    track(p) {
        this.tracked.add(p);
        void p.finally(() => this.tracked.delete(p));
    }
    /** Parse and adopt a pasted or uploaded CSV. On a parse error the message
     * is surfaced inline and every bit of prior state is retained. */
    loadDatasetCsv(text, id = "pasted") {
        let dataset;
        try {
            dataset = parseDatasetCsv(text, id);
        }
        catch (err) {
            this.patch({ datasetError: err.message });
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
    setT1(value) {
        if (!this.state.dataset)
            return;
        const t1 = Math.min(Math.max(value, this.state.t1Min), this.state.t1Max);
        this.patch({ t1 });
        this.debouncer.call(() => this.refreshLayouts());
    }
    setT2(value) {
        if (!this.state.dataset)
            return;
        const t2 = Math.min(Math.max(value, 0.05), 1);
        this.patch({ t2 });
        this.debouncer.call(() => this.refreshLayouts());
    }
    setViewMode(mode) {
        this.patch({ viewMode: mode });
        this.debouncer.flush(() => this.refreshLayouts());
    }
    neededSlots() {
        switch (this.state.viewMode) {
            case "standard":
                return ["standard"];
            case "wrapped":
                return ["wrapped"];
            case "side-by-side":
                return ["standard", "wrapped"];
        }
    }
    refreshLayouts() {
        const dataset = this.state.dataset;
        if (!dataset)
            return;
        for (const slot of this.neededSlots()) {
            const request = {
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
            this.track(this.client
                .layout(request)
                .then((layout) => {
                if (mySeq !== this.seq[slot])
                    return; // superseded: never render stale geometry
                if (slot === "standard")
                    this.patch({ standardLayout: layout, banner: null });
                else
                    this.patch({ wrappedLayout: layout, banner: null });
            })
                .catch((err) => {
                if (mySeq !== this.seq[slot])
                    return;
                this.patch({ banner: describeLayoutError(err) });
            })
                .finally(() => {
                this.inflight--;
                if (this.inflight === 0)
                    this.patch({ pending: false });
            }));
        }
    }
    requestProfile(dataset) {
        const mySeq = ++this.seq.profile;
        this.track(this.client
            .profile(dataset)
            .then((profile) => {
            if (mySeq !== this.seq.profile)
                return;
            this.patch({ profile });
        })
            .catch((err) => {
            if (mySeq !== this.seq.profile)
                return;
            this.patch({ banner: err.message });
        }));
    }
}
function describeLayoutError(err) {
    if (err instanceof ApiError && err.code === "layout_overflow") {
        return `Too many wraps to fit: ${err.message} Try a larger t1.`;
    }
    return err.message ?? String(err);
}
