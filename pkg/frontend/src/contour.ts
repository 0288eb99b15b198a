/**
 * Marching squares on node-centred samples.
 *
 * The field is sampled at grid nodes (xs[i], ys[j]); each cell is cut by
 * linear interpolation along its edges. Returns the level set as polylines
 * in data coordinates. Node-centred semantics keep the contour exactly
 * aligned with the axes, which matters here because the zero line IS the
 * result being plotted.
 */

export type Point = [number, number];

function interp(level: number, a: number, b: number, pa: number, pb: number): number {
  // a != b guaranteed by the sign change on this edge
  return pa + ((level - a) / (b - a)) * (pb - pa);
}

/**
 * Contour segments of field[j][i] (y-major) at `level`, joined into
 * polylines. Cells whose corners straddle the level contribute one or two
 * segments; shared endpoints are stitched afterwards.
 */
export function contourLines(
  xs: number[],
  ys: number[],
  field: number[][],
  level: number,
): Point[][] {
  const segments: [Point, Point][] = [];
  for (let j = 0; j + 1 < ys.length; j++) {
    for (let i = 0; i + 1 < xs.length; i++) {
      const v00 = field[j][i] - level; // bottom-left
      const v10 = field[j][i + 1] - level; // bottom-right
      const v01 = field[j + 1][i] - level; // top-left
      const v11 = field[j + 1][i + 1] - level; // top-right
      const crossings: Point[] = [];
      if (v00 === 0 && v10 === 0 && v01 === 0 && v11 === 0) continue;
      if (v00 * v10 <= 0 && !(v00 === 0 && v10 === 0)) {
        crossings.push([interp(0, v00, v10, xs[i], xs[i + 1]), ys[j]]);
      }
      if (v01 * v11 <= 0 && !(v01 === 0 && v11 === 0)) {
        crossings.push([interp(0, v01, v11, xs[i], xs[i + 1]), ys[j + 1]]);
      }
      if (v00 * v01 <= 0 && !(v00 === 0 && v01 === 0)) {
        crossings.push([xs[i], interp(0, v00, v01, ys[j], ys[j + 1])]);
      }
      if (v10 * v11 <= 0 && !(v10 === 0 && v11 === 0)) {
        crossings.push([xs[i + 1], interp(0, v10, v11, ys[j], ys[j + 1])]);
      }
      // deduplicate corner hits that appear on both adjacent edges
      const unique: Point[] = [];
      for (const p of crossings) {
        if (!unique.some((q) => q[0] === p[0] && q[1] === p[1])) unique.push(p);
      }
      if (unique.length === 2) {
        segments.push([unique[0], unique[1]]);
      } else if (unique.length === 4) {
        // saddle: pair by x order, an arbitrary but deterministic choice
        unique.sort((a, b) => a[0] - b[0] || a[1] - b[1]);
        segments.push([unique[0], unique[1]]);
        segments.push([unique[2], unique[3]]);
      } else if (unique.length === 3) {
        segments.push([unique[0], unique[1]]);
        segments.push([unique[1], unique[2]]);
      }
    }
  }
  return stitch(segments);
}

function key(p: Point): string {
  return `${p[0]},${p[1]}`;
}

/** Join segments that share endpoints into polylines. */
function stitch(segments: [Point, Point][]): Point[][] {
  const unused = new Set<number>();
  const byEnd = new Map<string, number[]>();
  segments.forEach((seg, idx) => {
    unused.add(idx);
    for (const p of seg) {
      const k = key(p);
      const list = byEnd.get(k);
      if (list) list.push(idx);
      else byEnd.set(k, [idx]);
    }
  });

  const takeFrom = (p: Point): [Point, Point] | undefined => {
    for (const idx of byEnd.get(key(p)) ?? []) {
      if (unused.has(idx)) {
        unused.delete(idx);
        return segments[idx];
      }
    }
    return undefined;
  };

  const lines: Point[][] = [];
  while (unused.size > 0) {
    const first = unused.values().next().value as number;
    unused.delete(first);
    const line: Point[] = [...segments[first]];
    // extend forward
    for (;;) {
      const tail = line[line.length - 1];
      const seg = takeFrom(tail);
      if (!seg) break;
      line.push(key(seg[0]) === key(tail) ? seg[1] : seg[0]);
    }
    // extend backward
    for (;;) {
      const head = line[0];
      const seg = takeFrom(head);
      if (!seg) break;
      line.unshift(key(seg[0]) === key(head) ? seg[1] : seg[0]);
    }
    lines.push(line);
  }
  return lines;
}
