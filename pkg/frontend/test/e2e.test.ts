/**
 * Scripted browser session against the real gateway: builds the diamond
 * network through the UI controls, performs three manual augmentations with
 * hand-entered residual edits (including one mistake to see the feedback),
 * confirms the maximum flow, validates the {t} cut, and round-trips the
 * exported edgelist through a fresh session.
 */

import { beforeAll, describe, expect, inject, it } from "vitest";

import { mountApp, App } from "../src/main.js";
import type { Action, ActionResponse, Snapshot } from "../src/protocol.js";

const base = inject("apiBase");

function q<T extends HTMLElement = HTMLElement>(testId: string): T {
  const node = document.querySelector(`[data-testid="${testId}"]`) as T | null;
  if (!node) throw new Error(`no element with data-testid=${testId}`);
  return node;
}

function present(testId: string): boolean {
  return document.querySelector(`[data-testid="${testId}"]`) !== null;
}

async function click(app: App, testId: string): Promise<void> {
  q(testId).dispatchEvent(new MouseEvent("click", { bubbles: true }));
  await app.flush();
}

function type(testId: string, value: string): void {
  q<HTMLInputElement>(testId).value = value;
}

async function addNode(app: App, id: string): Promise<void> {
  type("input-node-id", id);
  await click(app, "btn-add-node");
}

async function addEdge(app: App, tail: string, head: string, capacity: number): Promise<void> {
  type("input-edge-tail", tail);
  type("input-edge-head", head);
  type("input-edge-capacity", String(capacity));
  await click(app, "btn-add-edge");
}

async function editResidual(app: App, tail: string, head: string, capacity: number): Promise<void> {
  type("input-residual-tail", tail);
  type("input-residual-head", head);
  type("input-residual-capacity", String(capacity));
  await click(app, "btn-edit-residual");
}

function stage(): string {
  return document.querySelector(".app")?.getAttribute("data-stage") ?? "";
}

function findingsText(): string {
  return q("findings").textContent ?? "";
}

describe("scripted session in the browser DOM", () => {
  let root: HTMLElement;

  beforeAll(() => {
    document.body.innerHTML = "";
    root = document.createElement("div");
    document.body.append(root);
  });

  it("builds the diamond, augments by hand, confirms flow 5, validates {t}, round-trips the file", async () => {
    const app = mountApp(root, base, 0);
    await app.ready;
    expect(stage()).toBe("graph_creation");

    // --- stage 1: build the diamond through the controls
    for (const id of ["s", "a", "b", "t"]) await addNode(app, id);
    await addEdge(app, "s", "a", 3);
    await addEdge(app, "s", "b", 2);
    await addEdge(app, "a", "b", 1);
    await addEdge(app, "a", "t", 2);
    await addEdge(app, "b", "t", 3);
    type("input-node-id", "s");
    await click(app, "btn-set-source");
    type("input-node-id", "t");
    await click(app, "btn-set-sink");
    await click(app, "btn-layout-layered");
    await click(app, "btn-confirm-graph");
    expect(stage()).toBe("iterative");
    expect(document.querySelector(".app")?.getAttribute("data-phase")).toBe("select_path");

    // --- iteration 1: s -> a -> t, amount 2, residual edited by hand
    await click(app, "arc-s-a");
    await click(app, "arc-a-t");
    await click(app, "btn-validate-path");
    expect(document.querySelector(".app")?.getAttribute("data-phase")).toBe("choose_amount");

    type("input-amount", "5"); // deliberate mistake: over the bottleneck
    await click(app, "btn-confirm-amount");
    expect(findingsText()).toContain("bottleneck residual capacity 2");

    type("input-amount", "2");
    await click(app, "btn-confirm-amount");
    expect(document.querySelector(".app")?.getAttribute("data-phase")).toBe("update_residual");

    await editResidual(app, "s", "a", 1);
    await editResidual(app, "a", "s", 2);
    await editResidual(app, "a", "t", 0);
    await editResidual(app, "t", "a", 2);
    await click(app, "btn-validate-residual");
    expect(q("flow-value").textContent).toBe("2");
    expect(q("history").querySelectorAll("li")).toHaveLength(1);

    // --- iteration 2: s -> b -> t, amount 2
    await click(app, "arc-s-b");
    await click(app, "arc-b-t");
    await click(app, "btn-validate-path");
    type("input-amount", "2");
    await click(app, "btn-confirm-amount");
    await editResidual(app, "s", "b", 0);
    await editResidual(app, "b", "s", 2);
    await editResidual(app, "b", "t", 1);
    await editResidual(app, "t", "b", 2);
    await click(app, "btn-validate-residual");
    expect(q("flow-value").textContent).toBe("4");

    // --- iteration 3: s -> a -> b -> t, amount 1
    await click(app, "arc-s-a");
    await click(app, "arc-a-b");
    await click(app, "arc-b-t");
    await click(app, "btn-validate-path");
    type("input-amount", "1");
    await click(app, "btn-confirm-amount");
    await editResidual(app, "s", "a", 0);
    await editResidual(app, "a", "s", 3);
    await editResidual(app, "a", "b", 0);
    await editResidual(app, "b", "a", 1);
    await editResidual(app, "b", "t", 0);
    await editResidual(app, "t", "b", 3);
    await click(app, "btn-validate-residual");
    expect(q("flow-value").textContent).toBe("5");
    expect(q("history").querySelectorAll("li")).toHaveLength(3);

    // --- finalization: confirm the value, then validate the {t} cut
    type("input-max-flow-value", "5");
    await click(app, "btn-confirm-max-flow");
    expect(stage()).toBe("finalized");
    expect(q("notice").textContent).toContain("maximum flow of value 5 confirmed");

    await click(app, "node-t");
    await click(app, "btn-validate-cut");
    expect(q("notice").textContent).toContain("congratulations");

    // --- export, then re-import into a fresh session and compare
    await click(app, "btn-export");
    const exported = q<HTMLTextAreaElement>("export-output").textContent ?? "";
    expect(exported).toContain("source s");
    expect(exported).toContain("a b 1");
    expect(exported).toContain("pos a ");

    root.replaceChildren();
    const second = mountApp(root, base, 0);
    await second.ready;
    q<HTMLTextAreaElement>("input-import").value = exported;
    await click(second, "btn-import");
    await click(second, "btn-export");
    const reExported = q<HTMLTextAreaElement>("export-output").textContent ?? "";
    expect(reExported).toBe(exported);
    // the file persists the graph, not the flow in progress
    const structure = (s: Snapshot | null) =>
      s?.edges.map((e) => [e.tail, e.head, e.capacity]);
    expect(structure(second.snapshot)).toEqual(structure(app.snapshot));
  });
});

describe("bottleneck highlighting", () => {
  it("visually emphasizes the limiting arc of the chosen path", async () => {
    document.body.innerHTML = "";
    const div = document.createElement("div");
    document.body.append(div);
    const app = mountApp(div, base, 0);
    await app.ready;

    const zigzag = [
      "source s",
      "sink t",
      "s a 1000",
      "s b 1000",
      "a b 1",
      "a t 1000",
      "b t 1000",
    ].join("\n");
    q<HTMLTextAreaElement>("input-import").value = zigzag;
    await click(app, "btn-import");
    await click(app, "btn-confirm-graph");

    await click(app, "arc-s-a");
    await click(app, "arc-a-b");
    await click(app, "arc-b-t");
    await click(app, "btn-validate-path");
    await click(app, "btn-highlight-bottleneck");

    expect(q("notice").textContent).toContain("bottleneck residual capacity: 1");
    const emphasized = "#e67e22";
    expect(q("arc-label-a-b").getAttribute("fill")).toBe(emphasized);
    expect(q("arc-label-s-a").getAttribute("fill")).not.toBe(emphasized);
    expect(q("arc-label-b-t").getAttribute("fill")).not.toBe(emphasized);
    div.remove();
  });
});

describe("thin-client law", () => {
  async function rawDrive(actions: Action[]): Promise<Snapshot> {
    const created = await fetch(`${base}/sessions`, {
      method: "POST",
      body: JSON.stringify({ seed: 0 }),
      headers: { "Content-Type": "application/json" },
    });
    const { session_id } = (await created.json()) as { session_id: string };
    let last: ActionResponse | null = null;
    for (const action of actions) {
      const response = await fetch(`${base}/sessions/${session_id}/actions`, {
        method: "POST",
        body: JSON.stringify({ action }),
        headers: { "Content-Type": "application/json" },
      });
      last = (await response.json()) as ActionResponse;
      expect(last.accepted).toBe(true);
    }
    return last!.snapshot;
  }

  const script: Action[] = [
    { type: "add_node", id: "s" },
    { type: "add_node", id: "t" },
    { type: "add_edge", tail: "s", head: "t", capacity: 5 },
    { type: "set_source", id: "s" },
    { type: "set_sink", id: "t" },
    { type: "confirm_graph" },
    { type: "auto_path", strategy: "shortest" },
    { type: "confirm_amount", amount: 5 },
    { type: "auto_residual" },
    { type: "confirm_max_flow", value: 5 },
    { type: "find_min_cut" },
  ];

  it("the UI-driven session ends in exactly the snapshot raw requests produce", async () => {
    document.body.innerHTML = "";
    const div = document.createElement("div");
    document.body.append(div);
    const app = mountApp(div, base, 0);
    await app.ready;
    for (const action of script) {
      const response = await app.act(action);
      expect(response.accepted).toBe(true);
    }
    const viaUi = app.snapshot;
    const viaFetch = await rawDrive(script);
    expect(viaUi).toEqual(viaFetch);
    div.remove();
  });
});
