/**
 * Figure reproduction against the real scan engine: CSVs are produced by
 * the Python CLI (the only interface this package consumes), rendered into
 * three-panel figures per mass, and the zero contours are checked against
 * the published width thresholds.
 */

import { execFileSync } from "node:child_process";
import { existsSync, mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { beforeAll, describe, expect, it } from "vitest";

import { parseScanCsv, type PanelGrid } from "../src/csv.js";
import { renderPanels } from "../src/render.js";

const FRONTEND_ROOT = join(dirname(fileURLToPath(import.meta.url)), "..");
const CLI_JS = join(FRONTEND_ROOT, "dist", "cli.js");

let workDir: string;
const grids: Record<string, PanelGrid> = {};

function scan(args: {
  name: string;
  mass: string;
  geometry: string;
  dxHi: string;
  dxPoints: number;
}): void {
  const specPath = join(workDir, `${args.name}.json`);
  const csvPath = join(workDir, `${args.name}.csv`);
  writeFileSync(
    specPath,
    JSON.stringify({
      mass: args.mass,
      d_min: "35 um",
      tau: "1 s",
      geometry: args.geometry,
      gamma: { lo: "1e-3 Hz", hi: "1e-1 Hz", points: 5 },
      delta_x: { lo: "0 um", hi: args.dxHi, points: args.dxPoints },
    }),
  );
  execFileSync("python3", ["-m", "gravwitness", "scan", "--spec", specPath, "--out", csvPath], {
    stdio: ["ignore", "ignore", "inherit"],
  });
  grids[args.name] = parseScanCsv(readFileSync(csvPath, "utf-8"));
}

/** delta_x where the witness crosses zero at the gamma grid point nearest
 * `gamma`, by linear interpolation along the width axis. */
function zeroCrossing(grid: PanelGrid, gamma: number): number | undefined {
  let best = 0;
  for (let i = 1; i < grid.gammas.length; i++) {
    if (Math.abs(Math.log(grid.gammas[i] / gamma)) < Math.abs(Math.log(grid.gammas[best] / gamma))) {
      best = i;
    }
  }
  for (let j = 0; j + 1 < grid.deltaXs.length; j++) {
    const a = grid.witness[j][best];
    const b = grid.witness[j + 1][best];
    if (a > 0 && b <= 0) {
      return grid.deltaXs[j] + (a / (a - b)) * (grid.deltaXs[j + 1] - grid.deltaXs[j]);
    }
  }
  return undefined;
}

beforeAll(() => {
  workDir = mkdtempSync(join(tmpdir(), "gravwitness-figures-"));
  if (!existsSync(CLI_JS)) {
    execFileSync(join(FRONTEND_ROOT, "node_modules", ".bin", "tsc"), [], {
      cwd: FRONTEND_ROOT,
    });
  }
  // light mass: wide superpositions needed
  scan({ name: "lin15", mass: "1e-15 kg", geometry: "linear2", dxHi: "84 um", dxPoints: 57 });
  scan({ name: "par15", mass: "1e-15 kg", geometry: "parallel2", dxHi: "84 um", dxPoints: 57 });
  scan({ name: "par3_15", mass: "1e-15 kg", geometry: "parallel3", dxHi: "84 um", dxPoints: 57 });
  // heavy mass: micron-scale superpositions
  scan({ name: "lin14", mass: "1e-14 kg", geometry: "linear2", dxHi: "20 um", dxPoints: 81 });
  scan({ name: "par14", mass: "1e-14 kg", geometry: "parallel2", dxHi: "20 um", dxPoints: 81 });
  scan({ name: "par3_14", mass: "1e-14 kg", geometry: "parallel3", dxHi: "20 um", dxPoints: 81 });
});

describe("three-panel figure per mass", () => {
  it("renders the light-mass row with consistent zero contours", () => {
    const row = [grids.lin15, grids.par15, grids.par3_15];
    const report = renderPanels(row);
    writeFileSync(join(workDir, "row_1e-15.svg"), report.svg);
    // parallel 2- and 3-qubit panels certify entanglement somewhere
    expect(report.zeroContour[1]).toBe(true);
    expect(report.zeroContour[2]).toBe(true);
    // data behind the contours matches the published thresholds at 1e-2 Hz
    const par2 = zeroCrossing(grids.par15, 1e-2);
    const par3 = zeroCrossing(grids.par3_15, 1e-2);
    expect(par2).toBeDefined();
    expect(par3).toBeDefined();
    expect(Math.abs(par2! - 70e-6)).toBeLessThan(3e-6);
    expect(Math.abs(par3! - 45e-6)).toBeLessThan(3e-6);
    // the 3-qubit contour sits below the 2-qubit one at this rate
    expect(par3!).toBeLessThan(par2!);
  });

  it("renders the heavy-mass row with micron-scale thresholds", () => {
    const row = [grids.lin14, grids.par14, grids.par3_14];
    const report = renderPanels(row);
    writeFileSync(join(workDir, "row_1e-14.svg"), report.svg);
    expect(report.zeroContour).toEqual([true, true, true]);
    const par2 = zeroCrossing(grids.par14, 1e-2);
    expect(par2).toBeDefined();
    expect(Math.abs(par2! - 4e-6)).toBeLessThan(0.5e-6);
    // linear layout needs less width than parallel at this mass and rate
    const lin = zeroCrossing(grids.lin14, 1e-2);
    expect(lin!).toBeLessThan(par2!);
  });
});

describe("render CLI", () => {
  it("renders real CSVs and exits zero", () => {
    const out = join(workDir, "cli_panel.svg");
    const stdout = execFileSync(
      "node",
      [
        CLI_JS,
        "render",
        "--csv",
        join(workDir, "lin14.csv"),
        "--csv",
        join(workDir, "par14.csv"),
        "--csv",
        join(workDir, "par3_14.csv"),
        "--out",
        out,
      ],
      { encoding: "utf-8" },
    );
    expect(stdout).toContain("3 panel(s)");
    expect(readFileSync(out, "utf-8")).toContain('class="zero-contour"');
  });

  it("rejects a schema-mismatched CSV with a nonzero exit", () => {
    const bad = join(workDir, "bad.csv");
    writeFileSync(bad, "geometry,mass,oops\nparallel2,1,2\n");
    let code = 0;
    try {
      execFileSync("node", [CLI_JS, "render", "--csv", bad, "--out", join(workDir, "x.svg")], {
        stdio: "pipe",
      });
    } catch (err) {
      code = (err as { status: number }).status;
    }
    expect(code).not.toBe(0);
  });

  it("rejects bad arguments with a nonzero exit", () => {
    let code = 0;
    try {
      execFileSync("node", [CLI_JS, "plot", "--csv", "x"], { stdio: "pipe" });
    } catch (err) {
      code = (err as { status: number }).status;
    }
    expect(code).not.toBe(0);
  });
});
