// Controller: wires the form, board clicks, and server replies together.
// UI state is a pure function of the last server reply; this file only
// shuttles data between the client and the renderers.

import { BackendError, SessionClient } from "./api.js";
import { appendHistory, renderBanner, renderBoard, renderStatus } from "./dom.js";
import { AttackReply, Cell, SessionState } from "./protocol.js";
import { boardView, historyEntry } from "./view.js";

interface Elements {
  board: HTMLElement;
  banner: HTMLElement;
  status: HTMLElement;
  history: HTMLElement;
  form: HTMLFormElement;
}

export class App {
  private client: SessionClient | null = null;
  private state: SessionState | null = null;
  private last: AttackReply | null = null;
  private step = 0;

  constructor(private readonly els: Elements, private readonly baseUrl: string) {}

  bind(): void {
    this.els.form.addEventListener("submit", (ev) => {
      ev.preventDefault();
      const data = new FormData(this.els.form);
      void this.start(String(data.get("dims")), String(data.get("strategy")));
    });
    this.els.board.addEventListener("click", (ev) => {
      const target = ev.target as HTMLElement;
      if (!target.dataset.x) return;
      void this.attack([Number(target.dataset.x), Number(target.dataset.y)]);
    });
  }

  private paint(): void {
    if (!this.state) return;
    const vm = boardView(this.state, this.last);
    renderBoard(this.els.board, vm);
    renderBanner(this.els.banner, vm);
    renderStatus(this.els.status, vm);
  }

  private showError(err: unknown): void {
    const msg = err instanceof BackendError ? err.message : String(err);
    this.els.banner.textContent = `${msg}${err instanceof BackendError && err.retriable ? " — retry when the backend is up" : ""}`;
    this.els.banner.className = "banner error";
  }

  async start(dims: string, strategy: string): Promise<void> {
    this.client = new SessionClient(this.baseUrl);
    try {
      const reply = await this.client.start(dims, strategy);
      this.state = reply.state;
      this.last = null;
      this.step = 0;
      this.els.history.replaceChildren();
      this.paint();
    } catch (err) {
      this.showError(err);
    }
  }

  async attack(cell: Cell): Promise<void> {
    if (!this.client) return;
    try {
      const reply = await this.client.attack(cell);
      this.state = reply.state;
      this.last = reply;
      this.step += 1;
      appendHistory(this.els.history, historyEntry(this.step, reply));
      this.paint();
    } catch (err) {
      this.showError(err);
    }
  }
}

export function mount(baseUrl: string): App {
  const els: Elements = {
    board: document.getElementById("board")!,
    banner: document.getElementById("banner")!,
    status: document.getElementById("status")!,
    history: document.getElementById("history")!,
    form: document.getElementById("setup") as HTMLFormElement,
  };
  const app = new App(els, baseUrl);
  app.bind();
  return app;
}
