/**
 * Application shell: owns the client, the latest snapshot, and ephemeral UI
 * state; every server response re-renders the whole page from scratch.
 */

import { ApiClient, ApiError } from "./client.js";
import type { Action, ActionResponse, Snapshot } from "./protocol.js";
import { deriveViewModel, initialEphemeral, type Ephemeral } from "./viewmodel.js";
import { render, type Handlers } from "./view.js";

export class App {
  readonly client: ApiClient;
  snapshot: Snapshot | null = null;
  ephemeral: Ephemeral = { ...initialEphemeral };
  readonly ready: Promise<void>;

  constructor(
    private readonly root: HTMLElement,
    baseUrl: string,
    seed = 0,
  ) {
    this.client = new ApiClient(baseUrl, (busy) => this.setBusy(busy));
    this.ready = this.client.createSession(seed).then((body) => {
      this.snapshot = body.snapshot;
      this.render();
    });
  }

  private setBusy(busy: boolean): void {
    // single in-flight action: inputs are disabled while a request runs
    this.root.querySelectorAll("button, input, textarea").forEach((node) => {
      (node as HTMLButtonElement).disabled = busy;
    });
  }

  private handlers(): Handlers {
    return {
      // failures are surfaced via ephemeral.notice inside act()
      act: (action) => {
        this.act(action).catch(() => undefined);
      },
      toggleLabels: () => {
        this.ephemeral.showFlowLabels = !this.ephemeral.showFlowLabels;
        this.render();
      },
    };
  }

  /** Resolves once every queued request has settled; for scripted sessions. */
  flush(): Promise<void> {
    return this.client.idle();
  }

  async act(action: Action): Promise<ActionResponse> {
    let response: ActionResponse;
    try {
      response = await this.client.postAction(action);
    } catch (error) {
      if (error instanceof ApiError) {
        const body = error.body as { message?: string };
        this.ephemeral.notice = `request failed (${error.status}): ${body?.message ?? "unknown error"}`;
        this.render();
      }
      throw error;
    }
    this.snapshot = response.snapshot;
    this.ephemeral.findings = response.findings;
    this.ephemeral.lastAccepted = response.accepted;
    this.ephemeral.notice = null;
    if (response.accepted) this.ephemeral.highlightedArcs = [];
    const data = response.data ?? {};
    if (action.type === "export_graph" && typeof data["edgelist"] === "string") {
      this.ephemeral.exportText = data["edgelist"];
    }
    if (action.type === "highlight_bottleneck" && Array.isArray(data["arcs"])) {
      this.ephemeral.highlightedArcs = (data["arcs"] as Array<{ tail: string; head: string }>).map((a) => [
        a.tail,
        a.head,
      ]);
      this.ephemeral.notice = `bottleneck residual capacity: ${data["bottleneck"]}`;
    }
    if (action.type === "confirm_max_flow" && response.accepted) {
      this.ephemeral.notice = `maximum flow of value ${data["value"]} confirmed`;
    }
    if (action.type === "validate_cut" && response.accepted) {
      this.ephemeral.notice = "congratulations: that is a minimum cut";
    }
    if (action.type === "find_min_cut" && response.accepted) {
      this.ephemeral.notice = `smallest min cut: S = {${(data["s_side"] as string[]).join(", ")}}, capacity ${data["capacity"]}`;
    }
    this.render();
    return response;
  }

  async importText(text: string): Promise<ActionResponse> {
    return this.act({ type: "import_graph", text });
  }

  render(): void {
    if (!this.snapshot) return;
    render(this.root, deriveViewModel(this.snapshot, this.ephemeral), this.handlers());
  }
}

export function mountApp(root: HTMLElement, baseUrl: string, seed = 0): App {
  return new App(root, baseUrl, seed);
}

declare global {
  interface Window {
    flowtutorApp?: App;
  }
}

if (typeof document !== "undefined") {
  const root = document.getElementById("app");
  if (root) {
    const api = new URLSearchParams(window.location.search).get("api") ?? "";
    window.flowtutorApp = mountApp(root, api);
  }
}
