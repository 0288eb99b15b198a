/**
 * Diverging colour map for witness values, clipped to [lo, hi] with white
 * pinned at zero: the sign of the witness is the scientific content, so the
 * negative (entangled) side must read unmistakably apart from the positive
 * side regardless of how asymmetric the clip range is.
 */

export interface ColorScale {
  lo: number;
  hi: number;
  (value: number): string;
}

const NEGATIVE_END: [number, number, number] = [8, 48, 107]; // deep blue
const POSITIVE_END: [number, number, number] = [165, 15, 21]; // deep red
const ZERO: [number, number, number] = [247, 247, 247];

function mix(a: [number, number, number], b: [number, number, number], t: number): string {
  const c = a.map((v, k) => Math.round(v + (b[k] - v) * t));
  return `rgb(${c[0]},${c[1]},${c[2]})`;
}

export function makeColorScale(lo = -0.5, hi = 0.25): ColorScale {
  const scale = ((value: number): string => {
    const v = Math.min(hi, Math.max(lo, value));
    if (v < 0) return mix(ZERO, NEGATIVE_END, v / lo);
    if (v > 0) return mix(ZERO, POSITIVE_END, v / hi);
    return mix(ZERO, ZERO, 0);
  }) as ColorScale;
  scale.lo = lo;
  scale.hi = hi;
  return scale;
}

/** Band edges for quantized fills: `count` bands per sign, zero-aligned. */
export function bandEdges(scale: ColorScale, count = 12): number[] {
  const edges: number[] = [];
  for (let k = 0; k <= count; k++) edges.push((scale.lo * (count - k)) / count);
  for (let k = 1; k <= count; k++) edges.push((scale.hi * k) / count);
  return edges;
}
