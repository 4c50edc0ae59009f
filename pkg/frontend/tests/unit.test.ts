import { describe, expect, it } from 'vitest';

import { formatVector, movesAlternate, parseAmounts, replayHistory } from '../src/state.js';
import {
  isHint,
  isMoveResponse,
  isSessionSnapshot,
  isVerdict,
  MoveRecord,
  SessionSnapshot,
} from '../src/types.js';

const snapshot = (over: Partial<SessionSnapshot> = {}): SessionSnapshot => ({
  id: 'abc',
  d: 3,
  position: [1, 3, 7],
  turn: 'human',
  status: 'ongoing',
  engine_style: 'optimal',
  history: [],
  ...over,
});

describe('parseAmounts', () => {
  it('accepts a plain subtraction and treats blanks as zero', () => {
    expect(parseAmounts(['0', '1', '3'], [1, 3, 7])).toEqual({ ok: true, amounts: [0, 1, 3] });
    expect(parseAmounts(['', '', '2'], [1, 3, 7])).toEqual({ ok: true, amounts: [0, 0, 2] });
  });

  it('rejects amounts exceeding a heap with the heap named', () => {
    const parsed = parseAmounts(['0', '9', '0'], [1, 3, 7]);
    expect(parsed).toEqual({ ok: false, error: 'heap 2: exceeds heap' });
  });

  it('rejects non-integers, negatives, and the all-zero move', () => {
    expect(parseAmounts(['0.5', '0', '0'], [1, 3, 7]).ok).toBe(false);
    expect(parseAmounts(['-1', '0', '0'], [1, 3, 7]).ok).toBe(false);
    expect(parseAmounts(['x', '0', '0'], [1, 3, 7]).ok).toBe(false);
    expect(parseAmounts(['0', '0', '0'], [1, 3, 7]).ok).toBe(false);
  });
});

describe('replayHistory', () => {
  const history: MoveRecord[] = [
    { mover: 'human', subtraction: [0, 1, 3], position: [1, 2, 4] },
    { mover: 'engine', subtraction: [0, 0, 1], position: [1, 2, 3] },
  ];

  it('chains subtractions from the start and matches the log', () => {
    const replay = replayHistory([1, 3, 7], history);
    expect(replay).toEqual({
      ok: true,
      positions: [
        [1, 3, 7],
        [1, 2, 4],
        [1, 2, 3],
      ],
    });
  });

  it('flags a corrupted record instead of trusting it', () => {
    const corrupt = [history[0]!, { ...history[1]!, position: [1, 2, 2] }];
    const replay = replayHistory([1, 3, 7], corrupt);
    expect(replay.ok).toBe(false);
    if (!replay.ok) expect(replay.error).toContain('move 2');
  });

  it('rejects oversubtraction and wrong dimensions', () => {
    expect(replayHistory([0, 0, 1], history).ok).toBe(false);
    expect(replayHistory([1, 3], history).ok).toBe(false);
  });
});

describe('movesAlternate', () => {
  const records = (...movers: ('human' | 'engine')[]): MoveRecord[] =>
    movers.map((mover) => ({ mover, subtraction: [1], position: [0] }));

  it('checks strict alternation from either starter', () => {
    expect(movesAlternate(records('human', 'engine', 'human'), false)).toBe(true);
    expect(movesAlternate(records('engine', 'human', 'engine'), true)).toBe(true);
    expect(movesAlternate(records('human', 'human'), false)).toBe(false);
    expect(movesAlternate(records('human'), true)).toBe(false);
  });
});

describe('wire type guards', () => {
  it('accepts real payload shapes', () => {
    expect(isSessionSnapshot(snapshot())).toBe(true);
    expect(
      isMoveResponse({ accepted: true, verdict: null, session: snapshot({ position: [1, 2, 4] }) }),
    ).toBe(true);
    expect(
      isMoveResponse({
        accepted: false,
        verdict: {
          status: 'ForbiddenB',
          message: 'forbidden: condition b (proper shortcut)',
          witness: ['s_3 = 7 = 0 (mod 2^3-1)'],
        },
        session: snapshot(),
      }),
    ).toBe(true);
    expect(isHint({ status: 'P', subtraction: null, target: null, rat_index: null })).toBe(true);
    expect(isHint({ status: 'N', subtraction: [0, 1, 3], target: [1, 2, 4], rat_index: 1 })).toBe(true);
  });

  it('rejects malformed payloads', () => {
    expect(isSessionSnapshot(snapshot({ position: [1, 3] }))).toBe(false); // length != d
    expect(isSessionSnapshot({ ...snapshot(), turn: 'nobody' })).toBe(false);
    expect(isSessionSnapshot({ ...snapshot(), history: [{ mover: 'human' }] })).toBe(false);
    expect(isMoveResponse({ accepted: false, verdict: null, session: snapshot() })).toBe(false);
    expect(isHint({ status: 'N', subtraction: null, target: null, rat_index: null })).toBe(false);
    expect(isVerdict({ status: 'ForbiddenA', message: 'x', witness: [1] })).toBe(false);
  });
});

describe('formatVector', () => {
  it('prints the service notation', () => {
    expect(formatVector([1, 2, 4])).toBe('(1, 2, 4)');
  });
});
