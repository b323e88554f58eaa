/** Number helpers kept presentation-only: the server owns all chart math. */

const NICE_MANTISSAS = [1, 2, 2.5, 5, 10];

/** Round x to the nearest "round number" (1/2/2.5/5 times a power of ten). */
export function niceNumberNear(x: number): number {
  if (!(x > 0)) return 1;
  const exp = Math.floor(Math.log10(x));
  const base = Math.pow(10, exp);
  const mantissa = x / base;
  let best = NICE_MANTISSAS[0];
  for (const m of NICE_MANTISSAS) {
    if (Math.abs(m - mantissa) < Math.abs(best - mantissa)) best = m;
  }
  return best * base;
}

export function maxValue(values: number[]): number {
  return values.reduce((a, b) => Math.max(a, b), 0);
}

/** Slider range for the first-wrap threshold: max/20 up to 10% above max. */
export function t1Range(max: number): { min: number; max: number } {
  return { min: max / 20, max: max * 1.1 };
}

/** Default t1: a round number near a quarter of the largest value. */
export function defaultT1(max: number): number {
  const { min, max: hi } = t1Range(max);
  const nice = niceNumberNear(max / 4);
  return Math.min(Math.max(nice, min), hi);
}

export function formatValue(v: number): string {
  if (Number.isInteger(v)) return v.toLocaleString("en-US");
  return v.toLocaleString("en-US", { maximumFractionDigits: 2 });
}
