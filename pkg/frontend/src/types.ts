// Wire types for the game service. The server is the referee: nothing here
// evaluates rules, it only checks that payloads have the advertised shape.

export type Turn = 'human' | 'engine';
export type GameStatus = 'ongoing' | 'human_won' | 'engine_won';
export type EngineStyle = 'optimal' | 'teasing';

export interface MoveRecord {
  mover: Turn;
  subtraction: number[];
  position: number[]; // position after the move
}

export interface SessionSnapshot {
  id: string;
  d: number;
  position: number[];
  turn: Turn;
  status: GameStatus;
  engine_style: EngineStyle;
  history: MoveRecord[];
}

export interface Verdict {
  status: string; // ForbiddenA | ForbiddenB | ForbiddenZero
  message: string; // "forbidden: condition b (proper shortcut)"
  witness: string[];
}

export interface MoveResponse {
  accepted: boolean;
  verdict: Verdict | null;
  session: SessionSnapshot;
}

export interface Hint {
  status: 'P' | 'N';
  subtraction: number[] | null;
  target: number[] | null;
  rat_index: number | null;
}

export interface ErrorBody {
  code: string;
  message: string;
  detail?: unknown;
}

export interface NewGameOptions {
  d: number;
  start: number[];
  engineMovesFirst: boolean;
  engineStyle: EngineStyle;
}

const isIntVector = (v: unknown): v is number[] =>
  Array.isArray(v) && v.every((x) => typeof x === 'number' && Number.isInteger(x) && x >= 0);

export const isMoveRecord = (v: unknown): v is MoveRecord => {
  if (typeof v !== 'object' || v === null) return false;
  const r = v as Record<string, unknown>;
  return (
    (r.mover === 'human' || r.mover === 'engine') &&
    isIntVector(r.subtraction) &&
    isIntVector(r.position)
  );
};

export const isSessionSnapshot = (v: unknown): v is SessionSnapshot => {
  if (typeof v !== 'object' || v === null) return false;
  const r = v as Record<string, unknown>;
  return (
    typeof r.id === 'string' &&
    typeof r.d === 'number' &&
    isIntVector(r.position) &&
    r.position.length === r.d &&
    (r.turn === 'human' || r.turn === 'engine') &&
    (r.status === 'ongoing' || r.status === 'human_won' || r.status === 'engine_won') &&
    (r.engine_style === 'optimal' || r.engine_style === 'teasing') &&
    Array.isArray(r.history) &&
    r.history.every(isMoveRecord)
  );
};

export const isVerdict = (v: unknown): v is Verdict => {
  if (typeof v !== 'object' || v === null) return false;
  const r = v as Record<string, unknown>;
  return (
    typeof r.status === 'string' &&
    typeof r.message === 'string' &&
    Array.isArray(r.witness) &&
    r.witness.every((w) => typeof w === 'string')
  );
};

export const isMoveResponse = (v: unknown): v is MoveResponse => {
  if (typeof v !== 'object' || v === null) return false;
  const r = v as Record<string, unknown>;
  if (typeof r.accepted !== 'boolean' || !isSessionSnapshot(r.session)) return false;
  return r.accepted ? r.verdict == null : isVerdict(r.verdict);
};

export const isHint = (v: unknown): v is Hint => {
  if (typeof v !== 'object' || v === null) return false;
  const r = v as Record<string, unknown>;
  if (r.status === 'P') return r.subtraction === null && r.target === null;
  if (r.status !== 'N') return false;
  return isIntVector(r.subtraction) && isIntVector(r.target);
};

export const isErrorBody = (v: unknown): v is ErrorBody => {
  if (typeof v !== 'object' || v === null) return false;
  const r = v as Record<string, unknown>;
  return typeof r.code === 'string' && typeof r.message === 'string';
};
