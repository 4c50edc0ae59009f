// View state and the pure helpers behind the UI. No rule knowledge lives
// here: legality comes from the service, these functions only do arithmetic
// a history reader could check by hand.

import { Hint, MoveRecord, SessionSnapshot, Verdict } from './types.js';

export interface ViewState {
  session: SessionSnapshot | null;
  verdict: Verdict | null; // last rejection, cleared on accepted move
  hint: Hint | null; // present while the overlay is open
  error: string | null; // network / input problems, rendered inline
  busy: boolean;
}

export const initialState = (): ViewState => ({
  session: null,
  verdict: null,
  hint: null,
  error: null,
  busy: false,
});

export const formatVector = (v: number[]): string => `(${v.join(', ')})`;

export type ParsedAmounts =
  | { ok: true; amounts: number[] }
  | { ok: false; error: string };

// Form sanity only (integers, in range, not all zero); whether the
// subtraction is *legal* is the server's call.
export function parseAmounts(raw: string[], position: number[]): ParsedAmounts {
  const amounts: number[] = [];
  for (let i = 0; i < position.length; i++) {
    const text = (raw[i] ?? '').trim();
    const value = text === '' ? 0 : Number(text);
    if (!Number.isInteger(value) || value < 0) {
      return { ok: false, error: `heap ${i + 1}: not a non-negative integer` };
    }
    const heap = position[i] ?? 0;
    if (value > heap) {
      return { ok: false, error: `heap ${i + 1}: exceeds heap` };
    }
    amounts.push(value);
  }
  if (amounts.every((a) => a === 0)) {
    return { ok: false, error: 'enter at least one token to remove' };
  }
  return { ok: true, amounts };
}

export type Replay =
  | { ok: true; positions: number[][] }
  | { ok: false; error: string };

// Chain the recorded subtractions from the start position and confirm each
// intermediate matches what the service logged. positions[0] is the start,
// positions[n] the position after move n.
export function replayHistory(start: number[], history: MoveRecord[]): Replay {
  const positions: number[][] = [start.slice()];
  let current = start.slice();
  for (let n = 0; n < history.length; n++) {
    const record = history[n]!;
    if (record.subtraction.length !== current.length) {
      return { ok: false, error: `move ${n + 1}: wrong dimension` };
    }
    const next = current.map((x, i) => x - (record.subtraction[i] ?? 0));
    if (next.some((x) => x < 0)) {
      return { ok: false, error: `move ${n + 1}: subtraction exceeds position` };
    }
    if (next.length !== record.position.length || next.some((x, i) => x !== record.position[i])) {
      return {
        ok: false,
        error: `move ${n + 1}: replay gives ${formatVector(next)}, log says ${formatVector(record.position)}`,
      };
    }
    positions.push(next);
    current = next;
  }
  return { ok: true, positions };
}

export const movesAlternate = (history: MoveRecord[], engineFirst: boolean): boolean =>
  history.every(
    (record, n) => record.mover === (n % 2 === (engineFirst ? 0 : 1) ? 'engine' : 'human'),
  );
