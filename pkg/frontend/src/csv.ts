/**
 * Strict reader for the scan-engine CSV contract:
 *
 *   geometry,mass_kg,d_min_m,tau_s,gamma_hz,delta_x_m,witness
 *
 * Rows are gamma-major with delta_x ascending. Anything that deviates from
 * the contract is rejected; this tool never guesses about its input.
 */

export const SCAN_HEADER = "geometry,mass_kg,d_min_m,tau_s,gamma_hz,delta_x_m,witness";

export class SchemaMismatch extends Error {}
export class EmptyGrid extends Error {}

export interface PanelGrid {
  geometry: string;
  massKg: number;
  dMinM: number;
  tauS: number;
  /** ascending decoherence rates, Hz (grid columns) */
  gammas: number[];
  /** ascending superposition widths, m (grid rows) */
  deltaXs: number[];
  /** witness[j][i] at (deltaXs[j], gammas[i]) */
  witness: number[][];
}

function parseFinite(field: string, line: number, name: string): number {
  const value = Number(field);
  if (field.trim() === "" || !Number.isFinite(value)) {
    throw new SchemaMismatch(`line ${line}: ${name} is not a finite number: "${field}"`);
  }
  return value;
}

/** Parse and validate one scan CSV into a rectangular grid. */
export function parseScanCsv(text: string): PanelGrid {
  const lines = text.split("\n");
  if (lines.length > 0 && lines[lines.length - 1] === "") lines.pop();
  if (lines.length === 0 || lines[0] !== SCAN_HEADER) {
    throw new SchemaMismatch(
      `header mismatch: expected "${SCAN_HEADER}", got "${lines[0] ?? ""}"`,
    );
  }
  if (lines.length === 1) throw new EmptyGrid("no data rows");

  let geometry = "";
  let massKg = NaN;
  let dMinM = NaN;
  let tauS = NaN;
  const gammas: number[] = [];
  const deltaXs: number[] = [];
  const values: number[] = [];

  for (let k = 1; k < lines.length; k++) {
    const fields = lines[k].split(",");
    if (fields.length !== 7) {
      throw new SchemaMismatch(`line ${k + 1}: expected 7 fields, got ${fields.length}`);
    }
    const mass = parseFinite(fields[1], k + 1, "mass_kg");
    const dMin = parseFinite(fields[2], k + 1, "d_min_m");
    const tau = parseFinite(fields[3], k + 1, "tau_s");
    if (k === 1) {
      geometry = fields[0];
      massKg = mass;
      dMinM = dMin;
      tauS = tau;
    } else if (fields[0] !== geometry || mass !== massKg || dMin !== dMinM || tau !== tauS) {
      throw new SchemaMismatch(`line ${k + 1}: metadata differs from the first row`);
    }
    const gamma = parseFinite(fields[4], k + 1, "gamma_hz");
    const deltaX = parseFinite(fields[5], k + 1, "delta_x_m");
    if (gammas.length === 0 || gamma !== gammas[gammas.length - 1]) gammas.push(gamma);
    if (gammas.length === 1) deltaXs.push(deltaX);
    values.push(parseFinite(fields[6], k + 1, "witness"));
  }

  const nG = gammas.length;
  const nD = deltaXs.length;
  if (values.length !== nG * nD) {
    throw new SchemaMismatch(
      `ragged grid: ${values.length} rows != ${nG} gammas x ${nD} widths`,
    );
  }
  if (nG < 2 || nD < 2) {
    throw new EmptyGrid(`grid needs at least 2 points per axis, got ${nG} x ${nD}`);
  }
  for (let i = 1; i < nG; i++) {
    if (!(gammas[i] > gammas[i - 1])) {
      throw new SchemaMismatch("gamma values must be strictly ascending");
    }
  }
  for (let j = 1; j < nD; j++) {
    if (!(deltaXs[j] > deltaXs[j - 1])) {
      throw new SchemaMismatch("delta_x values must be strictly ascending");
    }
  }

  // transpose gamma-major row order into witness[deltaX][gamma]
  const witness: number[][] = [];
  for (let j = 0; j < nD; j++) {
    const row = new Array<number>(nG);
    for (let i = 0; i < nG; i++) row[i] = values[i * nD + j];
    witness.push(row);
  }
  return { geometry, massKg, dMinM, tauS, gammas, deltaXs, witness };
}
