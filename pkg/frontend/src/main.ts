// Entry point: mount the app against the service named by ?api=, defaulting
// to the local dev service.

import { GameClient } from './api.js';
import { App } from './ui.js';

const DEFAULT_API = 'http://127.0.0.1:8777';

const api = new URLSearchParams(window.location.search).get('api') ?? DEFAULT_API;
const root = document.querySelector<HTMLElement>('#app');
if (!root) throw new Error('missing #app element');

new App(new GameClient(api), root).mount();
