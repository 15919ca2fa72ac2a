// Session client.  One request in flight per session; clicks made during
// a pending attack are queued and sent in order.

import { AttackReply, Cell, StartReply } from "./protocol.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class BackendError extends Error {
  constructor(message: string, readonly retriable: boolean) {
    super(message);
  }
}

export class SessionClient {
  private sessionId: number | null = null;
  private chain: Promise<unknown> = Promise.resolve();

  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (u, i) => fetch(u, i),
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    let resp: Response;
    try {
      resp = await this.fetchImpl(`${this.baseUrl}${path}`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
      });
    } catch (err) {
      throw new BackendError(`backend unreachable: ${String(err)}`, true);
    }
    if (!resp.ok) {
      const detail = await resp.text();
      throw new BackendError(`backend rejected request (${resp.status}): ${detail}`, false);
    }
    return (await resp.json()) as T;
  }

  async start(dims: string, strategy: string): Promise<StartReply> {
    const reply = await this.post<StartReply>("/session", { dims, strategy });
    this.sessionId = reply.session_id;
    return reply;
  }

  /** Queue an attack; resolves in click order, one request at a time. */
  attack(cell: Cell): Promise<AttackReply> {
    if (this.sessionId === null) {
      return Promise.reject(new BackendError("no active session", false));
    }
    const sid = this.sessionId;
    const next = this.chain.then(
      () => this.post<AttackReply>(`/session/${sid}/attack`, { vertex: cell }),
      () => this.post<AttackReply>(`/session/${sid}/attack`, { vertex: cell }),
    );
    this.chain = next.catch(() => undefined);
    return next;
  }
}
