/**
 * Typed fetch wrapper for the session gateway. Enforces the one-in-flight
 * rule: a second action posted while one is pending is queued behind it, so
 * the server always sees this client's actions in order.
 */

import type { Action, ActionResponse, SessionResponse } from "./protocol.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: unknown,
  ) {
    super(`gateway returned ${status}`);
  }
}

export class ApiClient {
  private sessionId: string | null = null;
  private queue: Promise<unknown> = Promise.resolve();
  private pendingCount = 0;

  constructor(
    readonly baseUrl: string,
    private readonly onBusyChange: (busy: boolean) => void = () => {},
  ) {}

  get session(): string {
    if (this.sessionId === null) throw new Error("no session yet");
    return this.sessionId;
  }

  get busy(): boolean {
    return this.pendingCount > 0;
  }

  private async request<T>(method: string, path: string, body?: string, contentType?: string): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method,
      body,
      headers: contentType ? { "Content-Type": contentType } : undefined,
    });
    const text = await response.text();
    const parsed = text.startsWith("{") ? JSON.parse(text) : text;
    if (!response.ok) throw new ApiError(response.status, parsed);
    return parsed as T;
  }

  /** Serialize calls: each waits for the previous one to settle. */
  private enqueue<T>(task: () => Promise<T>): Promise<T> {
    this.pendingCount += 1;
    this.onBusyChange(true);
    const run = this.queue.then(task);
    this.queue = run.catch(() => undefined).finally(() => {
      this.pendingCount -= 1;
      if (this.pendingCount === 0) this.onBusyChange(false);
    });
    return run;
  }

  /** Resolves once the queue has fully drained, including work enqueued meanwhile. */
  async idle(): Promise<void> {
    while (this.pendingCount > 0) {
      await this.queue;
    }
  }

  async createSession(seed = 0): Promise<SessionResponse> {
    const body = await this.enqueue(() =>
      this.request<SessionResponse>("POST", "/sessions", JSON.stringify({ seed }), "application/json"),
    );
    this.sessionId = body.session_id;
    return body;
  }

  getSnapshot(): Promise<SessionResponse> {
    return this.enqueue(() => this.request<SessionResponse>("GET", `/sessions/${this.session}`));
  }

  postAction(action: Action): Promise<ActionResponse> {
    return this.enqueue(() =>
      this.request<ActionResponse>(
        "POST",
        `/sessions/${this.session}/actions`,
        JSON.stringify({ action }),
        "application/json",
      ),
    );
  }

  exportEdgelist(): Promise<string> {
    return this.enqueue(() => this.request<string>("GET", `/sessions/${this.session}/edgelist`));
  }

  importEdgelist(text: string): Promise<ActionResponse> {
    return this.enqueue(() =>
      this.request<ActionResponse>("PUT", `/sessions/${this.session}/edgelist`, text, "text/plain"),
    );
  }
}
