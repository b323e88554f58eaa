/** Trailing-edge debouncer with an injectable clock so tests can drive time. */
export const realScheduler = {
    set: (fn, ms) => setTimeout(fn, ms),
    clear: (handle) => clearTimeout(handle),
};
export class Debouncer {
    delayMs;
    scheduler;
    handle = null;
    constructor(delayMs, scheduler = realScheduler) {
        this.delayMs = delayMs;
        this.scheduler = scheduler;
    }
    /** Schedule fn after the delay, replacing any not-yet-fired call. */
    call(fn) {
        if (this.handle !== null)
            this.scheduler.clear(this.handle);
        this.handle = this.scheduler.set(() => {
            this.handle = null;
            fn();
        }, this.delayMs);
    }
    /** Run a pending call immediately (dataset loads should not lag). */
    flush(fn) {
        if (this.handle !== null) {
            this.scheduler.clear(this.handle);
            this.handle = null;
        }
        fn();
    }
    cancel() {
        if (this.handle !== null) {
            this.scheduler.clear(this.handle);
            this.handle = null;
        }
    }
}
/** Test double: collects scheduled calls and fires them on demand. */
export class ManualScheduler {
    next = 1;
    pending = new Map();
    set(fn, _ms) {
        const id = this.next++;
        this.pending.set(id, fn);
        return id;
    }
    clear(handle) {
        this.pending.delete(handle);
    }
    /** Fire everything currently queued (like the timer elapsing). */
    fireAll() {
        const fns = [...this.pending.values()];
        this.pending.clear();
        for (const fn of fns)
            fn();
    }
}
