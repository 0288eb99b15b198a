import { describe, expect, it } from "vitest";

import { contourLines } from "../src/contour.js";

function field(xs: number[], ys: number[], f: (x: number, y: number) => number): number[][] {
  return ys.map((y) => xs.map((x) => f(x, y)));
}

const range = (n: number, scale = 1): number[] => Array.from({ length: n }, (_, i) => i * scale);

describe("contourLines", () => {
  it("finds a horizontal zero line exactly where it belongs", () => {
    const xs = range(11);
    const ys = range(11);
    // zero plane at y = 4.25, independent of x
    const lines = contourLines(xs, ys, field(xs, ys, (_x, y) => y - 4.25), 0);
    expect(lines.length).toBe(1);
    for (const [, y] of lines[0]) expect(y).toBeCloseTo(4.25, 12);
    // spans the full x range
    const xsOnLine = lines[0].map((p) => p[0]);
    expect(Math.min(...xsOnLine)).toBe(0);
    expect(Math.max(...xsOnLine)).toBe(10);
  });

  it("interpolates a tilted line", () => {
    const xs = range(21, 0.5);
    const ys = range(21, 0.5);
    const lines = contourLines(xs, ys, field(xs, ys, (x, y) => y - 0.5 * x - 1.2), 0);
    expect(lines.length).toBe(1);
    for (const [x, y] of lines[0]) expect(y).toBeCloseTo(0.5 * x + 1.2, 10);
  });

  it("returns nothing when the level is never reached", () => {
    const xs = range(6);
    const ys = range(6);
    expect(contourLines(xs, ys, field(xs, ys, () => 3.0), 0)).toEqual([]);
  });

  it("closes a loop around an interior minimum", () => {
    const xs = range(41, 0.25);
    const ys = range(41, 0.25);
    const f = (x: number, y: number): number => (x - 5) ** 2 + (y - 5) ** 2 - 4;
    const lines = contourLines(xs, ys, field(xs, ys, f), 0);
    expect(lines.length).toBe(1);
    const line = lines[0];
    const [x0, y0] = line[0];
    const [x1, y1] = line[line.length - 1];
    expect(x0).toBeCloseTo(x1, 12);
    expect(y0).toBeCloseTo(y1, 12);
    // every vertex sits on the circle of radius 2 up to grid interpolation
    for (const [x, y] of line) {
      expect(Math.hypot(x - 5, y - 5)).toBeGreaterThan(1.9);
      expect(Math.hypot(x - 5, y - 5)).toBeLessThan(2.1);
    }
  });

  it("works at a nonzero level", () => {
    const xs = range(5);
    const ys = range(5);
    const lines = contourLines(xs, ys, field(xs, ys, (x) => x), 2.5);
    expect(lines.length).toBe(1);
    for (const [x] of lines[0]) expect(x).toBeCloseTo(2.5, 12);
  });
});
