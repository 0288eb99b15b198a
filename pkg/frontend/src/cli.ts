#!/usr/bin/env node
/**
 * gravwitness-render: turn scan CSVs into a contour figure.
 *
 *   render --csv grid.csv [--csv grid2.csv ...] --out figure.svg [--style style.json]
 *
 * Exit codes: 0 success, 2 schema mismatch / bad arguments / IO failure.
 * A grid whose witness never crosses zero still renders, with a warning on
 * stderr and no zero-contour path in the figure.
 */

import { readFileSync, writeFileSync } from "node:fs";
import process from "node:process";
import { pathToFileURL } from "node:url";

import { EmptyGrid, parseScanCsv, SchemaMismatch } from "./csv.js";
import { renderPanels, type RenderStyle } from "./render.js";

interface CliArgs {
  csvPaths: string[];
  outPath: string;
  stylePath?: string;
}

function parseArgs(argv: string[]): CliArgs {
  if (argv[0] !== "render") {
    throw new Error(`unknown command "${argv[0] ?? ""}"; expected "render"`);
  }
  const csvPaths: string[] = [];
  let outPath: string | undefined;
  let stylePath: string | undefined;
  for (let i = 1; i < argv.length; i++) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (flag === "--csv" && value) {
      csvPaths.push(value);
      i++;
    } else if (flag === "--out" && value) {
      outPath = value;
      i++;
    } else if (flag === "--style" && value) {
      stylePath = value;
      i++;
    } else {
      throw new Error(`unexpected argument "${flag}"`);
    }
  }
  if (csvPaths.length === 0 || !outPath) {
    throw new Error("usage: render --csv PATH [--csv PATH ...] --out PATH [--style STYLE.json]");
  }
  return { csvPaths, outPath, stylePath };
}

export function main(argv: string[]): number {
  let args: CliArgs;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 2;
  }
  try {
    const style = args.stylePath
      ? (JSON.parse(readFileSync(args.stylePath, "utf-8")) as Partial<RenderStyle>)
      : {};
    const grids = args.csvPaths.map((p) => parseScanCsv(readFileSync(p, "utf-8")));
    const report = renderPanels(grids, style);
    for (const warning of report.warnings) console.warn(`warning: ${warning}`);
    writeFileSync(args.outPath, report.svg);
    console.log(`wrote ${args.outPath} (${grids.length} panel(s))`);
    return 0;
  } catch (err) {
    if (err instanceof SchemaMismatch || err instanceof EmptyGrid) {
      console.error(`error: ${err.constructor.name}: ${err.message}`);
    } else {
      console.error(`error: ${(err as Error).message}`);
    }
    return 2;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === pathToFileURL(process.argv[1]).href;
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
