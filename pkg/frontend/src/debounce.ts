/** Trailing-edge debouncer with an injectable clock so tests can drive time. */

export interface Scheduler {
  set(fn: () => void, ms: number): unknown;
  clear(handle: unknown): void;
}

export const realScheduler: Scheduler = {
  set: (fn, ms) => setTimeout(fn, ms),
  clear: (handle) => clearTimeout(handle as Parameters<typeof clearTimeout>[0]),
};

export class Debouncer {
  private handle: unknown = null;

  constructor(
    private readonly delayMs: number,
    private readonly scheduler: Scheduler = realScheduler,
  ) {}

  /** Schedule fn after the delay, replacing any not-yet-fired call. */
  call(fn: () => void): void {
    if (this.handle !== null) this.scheduler.clear(this.handle);
    this.handle = this.scheduler.set(() => {
      this.handle = null;
      fn();
    }, this.delayMs);
  }

  /** Run a pending call immediately (dataset loads should not lag). */
  flush(fn: () => void): void {
    if (this.handle !== null) {
      this.scheduler.clear(this.handle);
      this.handle = null;
    }
    fn();
  }

  cancel(): void {
    if (this.handle !== null) {
      this.scheduler.clear(this.handle);
      this.handle = null;
    }
  }
}

/** Test double: collects scheduled calls and fires them on demand. */
export class ManualScheduler implements Scheduler {
  private next = 1;
  readonly pending = new Map<number, () => void>();

  set(fn: () => void, _ms: number): unknown {
    const id = this.next++;
    this.pending.set(id, fn);
    return id;
  }

  clear(handle: unknown): void {
    this.pending.delete(handle as number);
  }

  /** Fire everything currently queued (like the timer elapsing). */
  fireAll(): void {
    const fns = [...this.pending.values()];
    this.pending.clear();
    for (const fn of fns) fn();
  }
}
