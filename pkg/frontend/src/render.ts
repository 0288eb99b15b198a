/**
 * SVG renderer: witness colour map over (gamma, delta_x) with the zero
 * contour emphasized. One panel per input grid, side by side, sharing a
 * colour bar. Output is a plain SVG string; rendering the same grids with
 * the same style yields the identical string.
 */

import { bandEdges, makeColorScale } from "./color.js";
import { contourLines, type Point } from "./contour.js";
import type { PanelGrid } from "./csv.js";

export interface RenderStyle {
  panelWidth: number;
  panelHeight: number;
  marginLeft: number;
  marginRight: number;
  marginTop: number;
  marginBottom: number;
  colorbarWidth: number;
  clipLo: number;
  clipHi: number;
  bandsPerSign: number;
}

export const DEFAULT_STYLE: RenderStyle = {
  panelWidth: 420,
  panelHeight: 340,
  marginLeft: 64,
  marginRight: 14,
  marginTop: 34,
  marginBottom: 48,
  colorbarWidth: 86,
  clipLo: -0.5,
  clipHi: 0.25,
  bandsPerSign: 12,
};

export interface RenderReport {
  svg: string;
  /** one entry per panel: whether a zero contour exists */
  zeroContour: boolean[];
  warnings: string[];
}

const fmt = (x: number): string => {
  const s = x.toFixed(2);
  return s === "-0.00" ? "0.00" : s;
};

function niceTicks(lo: number, hi: number, count: number): number[] {
  const span = hi - lo;
  if (!(span > 0)) return [lo];
  const step0 = span / Math.max(1, count);
  const mag = Math.pow(10, Math.floor(Math.log10(step0)));
  const step = [1, 2, 5, 10].map((m) => m * mag).find((s) => span / s <= count) ?? 10 * mag;
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + 1e-9 * span; v += step) {
    ticks.push(v);
  }
  return ticks;
}

function escapeXml(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function panelSvg(
  grid: PanelGrid,
  style: RenderStyle,
  offsetX: number,
  report: { zero: boolean },
): string {
  const plotW = style.panelWidth - style.marginLeft - style.marginRight;
  const plotH = style.panelHeight - style.marginTop - style.marginBottom;
  const logGammas = grid.gammas.map(Math.log10);
  const xLo = logGammas[0];
  const xHi = logGammas[logGammas.length - 1];
  const yLo = grid.deltaXs[0];
  const yHi = grid.deltaXs[grid.deltaXs.length - 1];
  const xPos = (lg: number): number =>
    offsetX + style.marginLeft + ((lg - xLo) / (xHi - xLo)) * plotW;
  const yPos = (dx: number): number =>
    style.marginTop + plotH - ((dx - yLo) / (yHi - yLo)) * plotH;

  const scale = makeColorScale(style.clipLo, style.clipHi);
  const edges = bandEdges(scale, style.bandsPerSign);
  const bandOf = (v: number): number => {
    let b = 0;
    while (b + 1 < edges.length - 1 && v > edges[b + 1]) b++;
    return b;
  };

  const parts: string[] = [];

  // quantized cell fills; vertical runs of one band merge into one rect
  for (let i = 0; i + 1 < grid.gammas.length; i++) {
    const x0 = xPos(logGammas[i]);
    const x1 = xPos(logGammas[i + 1]);
    let runStart = 0;
    let runBand = -1;
    const flush = (end: number): void => {
      if (runBand < 0) return;
      const y0 = yPos(grid.deltaXs[end]);
      const y1 = yPos(grid.deltaXs[runStart]);
      const mid = 0.5 * (edges[runBand] + edges[runBand + 1]);
      parts.push(
        `<rect x="${fmt(x0)}" y="${fmt(y0)}" width="${fmt(x1 - x0)}" ` +
          `height="${fmt(y1 - y0)}" fill="${scale(mid)}"/>`,
      );
    };
    for (let j = 0; j + 1 < grid.deltaXs.length; j++) {
      const mean =
        0.25 *
        (grid.witness[j][i] +
          grid.witness[j][i + 1] +
          grid.witness[j + 1][i] +
          grid.witness[j + 1][i + 1]);
      const band = bandOf(Math.min(style.clipHi, Math.max(style.clipLo, mean)));
      if (band !== runBand) {
        flush(j);
        runStart = j;
        runBand = band;
      }
    }
    flush(grid.deltaXs.length - 1);
  }

  // zero contour, the certified-entanglement boundary
  const lines = contourLines(logGammas, grid.deltaXs, grid.witness, 0);
  report.zero = lines.length > 0;
  for (const line of lines) {
    const d = line
      .map((p: Point, k: number) => `${k === 0 ? "M" : "L"}${fmt(xPos(p[0]))} ${fmt(yPos(p[1]))}`)
      .join("");
    parts.push(
      `<path class="zero-contour" d="${d}" fill="none" stroke="#000" ` +
        `stroke-width="2.2" stroke-linejoin="round"/>`,
    );
  }

  // frame
  parts.push(
    `<rect x="${fmt(xPos(xLo))}" y="${fmt(yPos(yHi))}" width="${fmt(plotW)}" ` +
      `height="${fmt(plotH)}" fill="none" stroke="#333" stroke-width="1"/>`,
  );

  // x axis: decade ticks
  for (let e = Math.ceil(xLo); e <= Math.floor(xHi) + 1e-9; e++) {
    const x = xPos(e);
    parts.push(
      `<line x1="${fmt(x)}" y1="${fmt(yPos(yLo))}" x2="${fmt(x)}" y2="${fmt(yPos(yLo) + 5)}" stroke="#333"/>`,
      `<text x="${fmt(x)}" y="${fmt(yPos(yLo) + 19)}" text-anchor="middle" font-size="11">1e${e}</text>`,
    );
  }
  parts.push(
    `<text x="${fmt(offsetX + style.marginLeft + plotW / 2)}" y="${fmt(
      style.panelHeight - 10,
    )}" text-anchor="middle" font-size="12">decoherence rate &#947; [Hz]</text>`,
  );

  // y axis in micrometres
  for (const tick of niceTicks(yLo * 1e6, yHi * 1e6, 6)) {
    const y = yPos(tick * 1e-6);
    parts.push(
      `<line x1="${fmt(xPos(xLo) - 5)}" y1="${fmt(y)}" x2="${fmt(xPos(xLo))}" y2="${fmt(y)}" stroke="#333"/>`,
      `<text x="${fmt(xPos(xLo) - 8)}" y="${fmt(y + 4)}" text-anchor="end" font-size="11">${fmt(tick).replace(/\.00$/, "")}</text>`,
    );
  }
  parts.push(
    `<text transform="translate(${fmt(offsetX + 16)},${fmt(
      style.marginTop + plotH / 2,
    )}) rotate(-90)" text-anchor="middle" font-size="12">&#916;x [&#181;m]</text>`,
  );

  const title = `${grid.geometry}   m=${grid.massKg.toExponential(0)} kg   d_min=${(
    grid.dMinM * 1e6
  ).toPrecision(3)} µm`;
  parts.push(
    `<text x="${fmt(offsetX + style.marginLeft + plotW / 2)}" y="${fmt(
      style.marginTop - 12,
    )}" text-anchor="middle" font-size="12" font-weight="bold">${escapeXml(title)}</text>`,
  );

  return parts.join("\n");
}

function colorbarSvg(style: RenderStyle, offsetX: number): string {
  const scale = makeColorScale(style.clipLo, style.clipHi);
  const edges = bandEdges(scale, style.bandsPerSign);
  const plotH = style.panelHeight - style.marginTop - style.marginBottom;
  const x = offsetX + 18;
  const width = 16;
  const yOf = (v: number): number =>
    style.marginTop + plotH - ((v - style.clipLo) / (style.clipHi - style.clipLo)) * plotH;
  const parts: string[] = [];
  for (let b = 0; b + 1 < edges.length; b++) {
    const y1 = yOf(edges[b]);
    const y0 = yOf(edges[b + 1]);
    const mid = 0.5 * (edges[b] + edges[b + 1]);
    parts.push(
      `<rect x="${fmt(x)}" y="${fmt(y0)}" width="${width}" height="${fmt(y1 - y0)}" fill="${scale(mid)}"/>`,
    );
  }
  parts.push(
    `<rect x="${fmt(x)}" y="${fmt(yOf(style.clipHi))}" width="${width}" height="${fmt(plotH)}" fill="none" stroke="#333"/>`,
  );
  for (const v of [style.clipLo, 0, style.clipHi]) {
    const y = yOf(v);
    const emphasis = v === 0 ? ' font-weight="bold"' : "";
    parts.push(
      `<line x1="${fmt(x + width)}" y1="${fmt(y)}" x2="${fmt(x + width + 4)}" y2="${fmt(y)}" stroke="#333"/>`,
      `<text x="${fmt(x + width + 7)}" y="${fmt(y + 4)}" font-size="11"${emphasis}>${v}</text>`,
    );
  }
  parts.push(
    `<text transform="translate(${fmt(x + width + 46)},${fmt(
      style.marginTop + plotH / 2,
    )}) rotate(-90)" text-anchor="middle" font-size="12">&#9001;W&#9002;</text>`,
  );
  return parts.join("\n");
}

/** Render one or more scan grids into a single multi-panel SVG. */
export function renderPanels(
  grids: PanelGrid[],
  styleOverrides: Partial<RenderStyle> = {},
): RenderReport {
  if (grids.length === 0) throw new Error("no grids to render");
  const style: RenderStyle = { ...DEFAULT_STYLE, ...styleOverrides };
  const width = grids.length * style.panelWidth + style.colorbarWidth;
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" ` +
      `height="${style.panelHeight}" viewBox="0 0 ${width} ${style.panelHeight}" ` +
      `font-family="Helvetica, Arial, sans-serif">`,
    `<rect x="0" y="0" width="${width}" height="${style.panelHeight}" fill="#fff"/>`,
  ];
  const zeroContour: boolean[] = [];
  const warnings: string[] = [];
  grids.forEach((grid, index) => {
    const report = { zero: false };
    parts.push(panelSvg(grid, style, index * style.panelWidth, report));
    zeroContour.push(report.zero);
    if (!report.zero) {
      warnings.push(
        `panel ${index + 1} (${grid.geometry}): witness never crosses zero in this grid`,
      );
    }
  });
  parts.push(colorbarSvg(style, grids.length * style.panelWidth));
  parts.push("</svg>");
  return { svg: parts.join("\n"), zeroContour, warnings };
}
