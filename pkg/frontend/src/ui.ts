// DOM client. The whole page re-renders from ViewState after every service
// response; the board never shows a position the service did not confirm.

import { ApiError, GameClient } from './api.js';
import { ViewState, formatVector, initialState, parseAmounts, replayHistory } from './state.js';
import { EngineStyle } from './types.js';

const MAX_D = 8;
const TOKENS_SHOWN = 20; // tall heaps get a "+n" tail instead of a scrollbar

type Child = Node | string;

function el(tag: string, attrs: Record<string, string> = {}, children: Child[] = []): HTMLElement {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  for (const child of children) node.append(child);
  return node;
}

export class App {
  state: ViewState = initialState();
  start: number[] = [];
  engineFirst = false;

  constructor(
    readonly client: GameClient,
    readonly root: HTMLElement,
  ) {}

  mount(): void {
    this.root.innerHTML = '';
    this.root.append(
      el('section', { id: 'setup' }),
      el('div', { id: 'status' }),
      el('div', { id: 'banner' }),
      el('div', { id: 'hint-overlay', hidden: '' }),
      el('section', { id: 'board' }),
      el('section', { id: 'history' }),
    );
    this.renderSetup();
    this.render();
  }

  // --- setup form -------------------------------------------------------

  private renderSetup(): void {
    const setup = this.root.querySelector('#setup')!;
    setup.innerHTML = '';
    const dSelect = el('select', { id: 'd-select' });
    for (let d = 2; d <= MAX_D; d++) {
      dSelect.append(el('option', { value: String(d) }, [String(d)]));
    }
    (dSelect as HTMLSelectElement).value = '3';
    dSelect.addEventListener('change', () => this.renderStartInputs());

    const styleSelect = el('select', { id: 'style-select' }, []);
    styleSelect.append(el('option', { value: 'optimal' }, ['optimal']));
    styleSelect.append(el('option', { value: 'teasing' }, ['teasing']));

    const startButton = el('button', { id: 'start-button', type: 'button' }, ['start game']);
    startButton.addEventListener('click', () => void this.onStart());

    setup.append(
      el('label', {}, ['heaps ', dSelect]),
      el('span', { id: 'start-inputs' }),
      el('label', {}, [el('input', { id: 'engine-first', type: 'checkbox' }), ' engine moves first']),
      el('label', {}, ['engine style ', styleSelect]),
      startButton,
    );
    this.renderStartInputs();
  }

  private renderStartInputs(): void {
    const holder = this.root.querySelector('#start-inputs')!;
    const d = Number((this.root.querySelector('#d-select') as HTMLSelectElement).value);
    holder.innerHTML = '';
    for (let i = 0; i < d; i++) {
      holder.append(el('input', { class: 'start-heap', type: 'number', min: '0', value: '1' }));
    }
  }

  async onStart(): Promise<void> {
    const d = Number((this.root.querySelector('#d-select') as HTMLSelectElement).value);
    const inputs = [...this.root.querySelectorAll<HTMLInputElement>('.start-heap')];
    const start = inputs.map((input) => Number(input.value || '0'));
    if (start.some((x) => !Number.isInteger(x) || x < 0)) {
      this.state.error = 'starting heaps must be non-negative integers';
      this.render();
      return;
    }
    this.engineFirst = (this.root.querySelector('#engine-first') as HTMLInputElement).checked;
    const style = (this.root.querySelector('#style-select') as HTMLSelectElement)
      .value as EngineStyle;
    this.state = initialState();
    this.state.busy = true;
    this.render();
    try {
      this.state.session = await this.client.createGame({
        d,
        start,
        engineMovesFirst: this.engineFirst,
        engineStyle: style,
      });
      this.start = start;
    } catch (err) {
      this.state.error = err instanceof ApiError ? err.message : String(err);
    }
    this.state.busy = false;
    this.render();
  }

  // --- moves ------------------------------------------------------------

  async onSubmit(): Promise<void> {
    const session = this.state.session;
    if (!session || session.status !== 'ongoing') return;
    const raw = [...this.root.querySelectorAll<HTMLInputElement>('.amount')].map((i) => i.value);
    const parsed = parseAmounts(raw, session.position);
    this.state.verdict = null;
    this.state.hint = null;
    if (!parsed.ok) {
      this.state.error = parsed.error;
      this.render();
      return;
    }
    this.state.error = null;
    this.state.busy = true;
    this.render();
    try {
      const response = await this.client.submitMove(session.id, parsed.amounts);
      this.state.session = response.session;
      this.state.verdict = response.verdict;
    } catch (err) {
      this.state.error = err instanceof ApiError ? err.message : String(err);
    }
    this.state.busy = false;
    this.render();
  }

  async onHint(): Promise<void> {
    const session = this.state.session;
    if (!session) return;
    if (this.state.hint) {
      this.state.hint = null; // toggle off
      this.render();
      return;
    }
    if (session.status !== 'ongoing') {
      this.render(); // overlay shows "game over" from session status
      this.showOverlay('game over');
      return;
    }
    try {
      this.state.hint = await this.client.hint(session.id);
    } catch (err) {
      this.state.error = err instanceof ApiError ? err.message : String(err);
    }
    this.render();
  }

  // --- rendering ---------------------------------------------------------

  private showOverlay(text: string): void {
    const overlay = this.root.querySelector('#hint-overlay') as HTMLElement;
    overlay.hidden = false;
    overlay.textContent = text;
  }

  render(): void {
    const session = this.state.session;
    this.renderStatus();
    this.renderBanner();
    this.renderHint();
    this.renderBoard();
    this.renderHistory();
    const setup = this.root.querySelector('#setup') as HTMLElement;
    setup.hidden = session !== null && session.status === 'ongoing';
  }

  private renderStatus(): void {
    const status = this.root.querySelector('#status')!;
    const session = this.state.session;
    if (!session) {
      status.textContent = this.state.busy ? 'starting...' : 'no game yet';
      return;
    }
    status.textContent = {
      ongoing: this.state.busy ? 'engine thinking...' : 'your turn',
      human_won: 'you won',
      engine_won: 'engine won',
    }[session.status];
  }

  private renderBanner(): void {
    const banner = this.root.querySelector('#banner')!;
    banner.innerHTML = '';
    banner.className = '';
    if (this.state.error) {
      banner.className = 'error';
      banner.textContent = this.state.error;
      return;
    }
    if (this.state.verdict) {
      banner.className = 'forbidden';
      banner.append(el('strong', {}, [this.state.verdict.message]));
      const witness = el('ul', { class: 'witness' });
      for (const line of this.state.verdict.witness) witness.append(el('li', {}, [line]));
      banner.append(witness);
      return;
    }
    const history = this.state.session?.history ?? [];
    const last = history[history.length - 1];
    if (last && last.mover === 'engine') {
      banner.className = 'reply';
      banner.textContent = `engine removed ${formatVector(last.subtraction)}`;
    }
  }

  private renderHint(): void {
    const overlay = this.root.querySelector('#hint-overlay') as HTMLElement;
    const hint = this.state.hint;
    if (!hint) {
      overlay.hidden = true;
      overlay.textContent = '';
      return;
    }
    overlay.hidden = false;
    overlay.innerHTML = '';
    if (hint.status === 'P') {
      overlay.append(el('span', { class: 'badge badge-p' }, ['P']), ' every move loses');
    } else {
      overlay.append(
        el('span', { class: 'badge badge-n' }, ['N']),
        ` subtract ${formatVector(hint.subtraction!)} leaving ${formatVector(hint.target!)}`,
      );
    }
  }

  private renderBoard(): void {
    const board = this.root.querySelector('#board')!;
    board.innerHTML = '';
    const session = this.state.session;
    if (!session) return;
    const winning = this.state.hint?.subtraction ?? null;
    session.position.forEach((count, i) => {
      const tokens = el('div', { class: 'tokens' });
      for (let t = 0; t < Math.min(count, TOKENS_SHOWN); t++) {
        tokens.append(el('span', { class: 'token' }));
      }
      if (count > TOKENS_SHOWN) tokens.append(el('span', { class: 'more' }, [`+${count - TOKENS_SHOWN}`]));
      const classes = ['heap-col'];
      if (winning && (winning[i] ?? 0) > 0) classes.push('hint-heap');
      const column = el('div', { class: classes.join(' ') }, [
        el('div', { class: 'heap-label' }, [`heap ${i + 1}`]),
        tokens,
        el('div', { class: 'heap-count' }, [String(count)]),
        el('input', { class: 'amount', type: 'number', min: '0', max: String(count), value: '' }),
      ]);
      board.append(column);
    });
    if (session.status === 'ongoing') {
      const moveButton = el('button', { id: 'move-button', type: 'button' }, ['remove tokens']);
      moveButton.addEventListener('click', () => void this.onSubmit());
      const hintButton = el('button', { id: 'hint-button', type: 'button' }, ['hint']);
      hintButton.addEventListener('click', () => void this.onHint());
      board.append(el('div', { class: 'controls' }, [moveButton, hintButton]));
    }
  }

  private renderHistory(): void {
    const panel = this.root.querySelector('#history')!;
    panel.innerHTML = '';
    const session = this.state.session;
    if (!session || session.history.length === 0) return;
    const list = el('ol', { id: 'history-list' });
    for (const record of session.history) {
      list.append(
        el('li', {}, [
          `${record.mover} removed ${formatVector(record.subtraction)} leaving ${formatVector(record.position)}`,
        ]),
      );
    }
    panel.append(el('h2', {}, ['history']), list);
    const replay = replayHistory(this.start, session.history);
    const line = el('div', { id: 'replay-check' });
    if (replay.ok) {
      const final = replay.positions[replay.positions.length - 1]!;
      line.textContent = `replay ok: history reproduces ${formatVector(final)}`;
    } else {
      line.className = 'error';
      line.textContent = `replay mismatch: ${replay.error}`;
    }
    panel.append(line);
  }
}
