// Thin fetch client for the game service. Every response is shape-checked
// before it reaches the UI; a bad payload is a bug, not something to render.

import {
  Hint,
  MoveResponse,
  NewGameOptions,
  SessionSnapshot,
  isErrorBody,
  isHint,
  isMoveResponse,
  isSessionSnapshot,
} from './types.js';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly detail?: unknown,
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

async function parseBody(response: Response): Promise<unknown> {
  try {
    return await response.json();
  } catch {
    throw new ApiError(response.status, 'bad_payload', 'service returned non-JSON');
  }
}

export class GameClient {
  constructor(readonly baseUrl: string) {}

  private async request(method: string, path: string, body?: unknown): Promise<unknown> {
    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, {
        method,
        headers: body === undefined ? undefined : { 'Content-Type': 'application/json' },
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (err) {
      throw new ApiError(0, 'network', `cannot reach service at ${this.baseUrl}: ${err}`);
    }
    const payload = await parseBody(response);
    if (!response.ok) {
      if (isErrorBody(payload)) {
        throw new ApiError(response.status, payload.code, payload.message, payload.detail);
      }
      throw new ApiError(response.status, 'unknown', `service error ${response.status}`);
    }
    return payload;
  }

  async createGame(options: NewGameOptions): Promise<SessionSnapshot> {
    const payload = await this.request('POST', '/games', {
      d: options.d,
      start: options.start,
      engine_moves_first: options.engineMovesFirst,
      engine_style: options.engineStyle,
    });
    if (!isSessionSnapshot(payload)) throw new ApiError(0, 'bad_payload', 'malformed session');
    return payload;
  }

  async getGame(id: string): Promise<SessionSnapshot> {
    const payload = await this.request('GET', `/games/${id}`);
    if (!isSessionSnapshot(payload)) throw new ApiError(0, 'bad_payload', 'malformed session');
    return payload;
  }

  async submitMove(id: string, subtraction: number[]): Promise<MoveResponse> {
    const payload = await this.request('POST', `/games/${id}/moves`, { subtraction });
    if (!isMoveResponse(payload)) throw new ApiError(0, 'bad_payload', 'malformed move response');
    return payload;
  }

  async hint(id: string): Promise<Hint> {
    const payload = await this.request('GET', `/games/${id}/hint`);
    if (!isHint(payload)) throw new ApiError(0, 'bad_payload', 'malformed hint');
    return payload;
  }
}
